#ifndef GROEBNER_POLY_HPP
#define GROEBNER_POLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "groebner/order.hpp"
#include "groebner/rational.hpp"

namespace groebner {

/// Sparse multivariate polynomial over the rationals: a finite map from
/// exponent vector to nonzero coefficient. The zero polynomial is the empty
/// map, so equality is structural. Storage order is the structural key order,
/// independent of any monomial order; order-dependent queries take a
/// MonomialOrderSpec argument.
class MvPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    MvPoly() = default;

    static MvPoly constant(const Rational& c);
    static MvPoly monomial(const ExponentVector& e, const Rational& c);
    static MvPoly variable(VarIndex v);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const ExponentVector& e) const;

    MvPoly& operator+=(const MvPoly& q);
    MvPoly& operator-=(const MvPoly& q);
    MvPoly operator-() const;

    /// p += c * x^shift * q. The workhorse of division and S-polynomials.
    void add_scaled(const Rational& c, const ExponentVector& shift, const MvPoly& q);

    friend MvPoly operator+(MvPoly a, const MvPoly& b) { a += b; return a; }
    friend MvPoly operator-(MvPoly a, const MvPoly& b) { a -= b; return a; }
    friend MvPoly operator*(const MvPoly& a, const MvPoly& b);
    friend MvPoly operator*(const Rational& c, const MvPoly& p);

    friend bool operator==(const MvPoly& a, const MvPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MvPoly& a, const MvPoly& b) { return !(a == b); }

private:
    void add_term(const ExponentVector& e, const Rational& c);

    TermMap terms_;
};

/// Exponent vectors of support(p), descending under the given order.
std::vector<ExponentVector> support_descending(const MonomialOrderSpec& order,
                                               const MvPoly& p);

/// Degree with deg(0) = bottom.
DegreeOrBottom with_bot_degree(const MonomialOrderSpec& order, const MvPoly& p);
/// Degree with deg(0) = zero vector.
ExponentVector degree(const MonomialOrderSpec& order, const MvPoly& p);

MvPoly leading_term(const MonomialOrderSpec& order, const MvPoly& p);
Rational leading_coeff(const MonomialOrderSpec& order, const MvPoly& p);
MvPoly leading_monomial(const MonomialOrderSpec& order, const MvPoly& p);

bool is_monic(const MonomialOrderSpec& order, const MvPoly& p);
MvPoly make_monic(const MonomialOrderSpec& order, const MvPoly& p); // p != 0

/// Coefficient-cleared S-polynomial,
///   x^{truncSub(deg g, deg f)} LC(g) f - x^{truncSub(deg f, deg g)} LC(f) g.
/// Total: truncated subtraction keeps the zero cases well-defined. For
/// nonzero f, g this is LC(f) LC(g) times the classical S-polynomial.
MvPoly s_polynomial(const MonomialOrderSpec& order, const MvPoly& f, const MvPoly& g);

} // namespace groebner

#endif

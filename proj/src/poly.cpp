#include "groebner/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace groebner {

MvPoly MvPoly::constant(const Rational& c) {
    return monomial(ExponentVector(), c);
}

MvPoly MvPoly::monomial(const ExponentVector& e, const Rational& c) {
    MvPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

MvPoly MvPoly::variable(VarIndex v) {
    return monomial(ExponentVector::single(v), Rational(1));
}

Rational MvPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void MvPoly::add_term(const ExponentVector& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MvPoly& MvPoly::operator+=(const MvPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& q) {
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

MvPoly MvPoly::operator-() const {
    MvPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

void MvPoly::add_scaled(const Rational& c, const ExponentVector& shift, const MvPoly& q) {
    if (c.is_zero()) return;
    if (&q == this) {
        MvPoly copy(q);
        add_scaled(c, shift, copy);
        return;
    }
    for (const auto& [e, qc] : q.terms_) add_term(sum(shift, e), c * qc);
}

MvPoly operator*(const MvPoly& a, const MvPoly& b) {
    MvPoly r;
    for (const auto& [e, c] : a.terms()) r.add_scaled(c, e, b);
    return r;
}

MvPoly operator*(const Rational& c, const MvPoly& p) {
    MvPoly r;
    r.add_scaled(c, ExponentVector(), p);
    return r;
}

std::vector<ExponentVector> support_descending(const MonomialOrderSpec& order,
                                               const MvPoly& p) {
    std::vector<ExponentVector> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.push_back(e);
    std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) {
        return order.compare(a, b) == Ordering::GT;
    });
    return out;
}

DegreeOrBottom with_bot_degree(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) return DegreeOrBottom::bottom();
    return DegreeOrBottom::of(degree(order, p));
}

ExponentVector degree(const MonomialOrderSpec& order, const MvPoly& p) {
    ExponentVector best;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first || order.compare(e, best) == Ordering::GT) best = e;
        first = false;
    }
    return best;
}

MvPoly leading_term(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) return MvPoly();
    ExponentVector d = degree(order, p);
    return MvPoly::monomial(d, p.coeff(d));
}

Rational leading_coeff(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) return Rational();
    return p.coeff(degree(order, p));
}

MvPoly leading_monomial(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) return MvPoly();
    return MvPoly::monomial(degree(order, p), Rational(1));
}

bool is_monic(const MonomialOrderSpec& order, const MvPoly& p) {
    return leading_coeff(order, p).is_one();
}

MvPoly make_monic(const MonomialOrderSpec& order, const MvPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
    return leading_coeff(order, p).inverse() * p;
}

MvPoly s_polynomial(const MonomialOrderSpec& order, const MvPoly& f, const MvPoly& g) {
    ExponentVector df = degree(order, f), dg = degree(order, g);
    MvPoly r;
    r.add_scaled(leading_coeff(order, g), trunc_sub(dg, df), f);
    r.add_scaled(-leading_coeff(order, f), trunc_sub(df, dg), g);
    return r;
}

} // namespace groebner

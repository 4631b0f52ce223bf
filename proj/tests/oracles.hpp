#ifndef GROEBNER_TESTS_ORACLES_HPP
#define GROEBNER_TESTS_ORACLES_HPP

// Independent reference implementations used to derive expected values.
// Everything here works on dense fixed-arity exponent vectors with its own
// comparison and arithmetic code, so a bug in the library cannot hide by
// being used on both sides of an assertion.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "groebner/poly.hpp"
#include "groebner/text_format.hpp"

namespace testutil {

using groebner::ExponentVector;
using groebner::MvPoly;
using groebner::OrderKind;
using groebner::Rational;

using Dense = std::vector<std::uint64_t>;

inline Dense to_dense(const ExponentVector& e, std::size_t arity) {
    Dense d(arity, 0);
    for (const auto& [var, exp] : e.entries()) d.at(var) = exp;
    return d;
}

inline ExponentVector from_dense(const Dense& d) {
    std::vector<ExponentVector::Entry> entries;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) entries.emplace_back(i, d[i]);
    return ExponentVector(std::move(entries));
}

// Comparators straight from the definitions, default precedence x0 > x1 > ...
// Return -1, 0, 1 for a < b, a = b, a > b.

inline int lex_cmp(const Dense& a, const Dense& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline int total_cmp(const Dense& a, const Dense& b) {
    unsigned __int128 ta = 0, tb = 0;
    for (std::uint64_t v : a) ta += v;
    for (std::uint64_t v : b) tb += v;
    return ta < tb ? -1 : (ta == tb ? 0 : 1);
}

inline int grlex_cmp(const Dense& a, const Dense& b) {
    int t = total_cmp(a, b);
    return t != 0 ? t : lex_cmp(a, b);
}

inline int grevlex_cmp(const Dense& a, const Dense& b) {
    int t = total_cmp(a, b);
    if (t != 0) return t;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline int dense_cmp(OrderKind kind, const Dense& a, const Dense& b) {
    switch (kind) {
    case OrderKind::lex: return lex_cmp(a, b);
    case OrderKind::grlex: return grlex_cmp(a, b);
    case OrderKind::grevlex: return grevlex_cmp(a, b);
    }
    return 0;
}

inline groebner::Ordering oracle_compare(OrderKind kind, const ExponentVector& a,
                                         const ExponentVector& b, std::size_t arity) {
    int c = dense_cmp(kind, to_dense(a, arity), to_dense(b, arity));
    return c < 0   ? groebner::Ordering::LT
           : c > 0 ? groebner::Ordering::GT
                   : groebner::Ordering::EQ;
}

// Dense polynomial arithmetic with its own term bookkeeping.

using DensePoly = std::map<Dense, Rational>;

inline DensePoly dp_from(const MvPoly& p, std::size_t arity) {
    DensePoly out;
    for (const auto& [e, c] : p.terms()) out[to_dense(e, arity)] = c;
    return out;
}

inline void dp_add_term(DensePoly& p, const Dense& e, const Rational& c) {
    Rational& slot = p[e];
    slot += c;
    if (slot.is_zero()) p.erase(e);
}

inline DensePoly dp_add(const DensePoly& a, const DensePoly& b) {
    DensePoly out = a;
    for (const auto& [e, c] : b) dp_add_term(out, e, c);
    return out;
}

inline DensePoly dp_mul(const DensePoly& a, const DensePoly& b) {
    DensePoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Dense e(ea.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            dp_add_term(out, e, ca * cb);
        }
    }
    return out;
}

// Leading data by direct max-scan with the dense comparator.

inline Dense oracle_degree(OrderKind kind, const MvPoly& p, std::size_t arity) {
    Dense best(arity, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Dense d = to_dense(e, arity);
        if (first || dense_cmp(kind, d, best) > 0) best = d;
        first = false;
    }
    return best;
}

inline Rational oracle_leading_coeff(OrderKind kind, const MvPoly& p, std::size_t arity) {
    if (p.is_zero()) return Rational();
    return p.coeff(from_dense(oracle_degree(kind, p, arity)));
}

// Classical textbook S-polynomial (x^g/LT f) f - (x^g/LT g) g for nonzero
// inputs, g = componentwise max of the leading exponents.
inline MvPoly classical_spoly(OrderKind kind, const MvPoly& f, const MvPoly& g,
                              std::size_t arity) {
    Dense df = oracle_degree(kind, f, arity), dg = oracle_degree(kind, g, arity);
    Dense top(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) top[i] = std::max(df[i], dg[i]);
    Dense sf(arity, 0), sg(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) {
        sf[i] = top[i] - df[i];
        sg[i] = top[i] - dg[i];
    }
    MvPoly lhs = MvPoly::monomial(from_dense(sf),
                                  oracle_leading_coeff(kind, f, arity).inverse()) *
                 f;
    MvPoly rhs = MvPoly::monomial(from_dense(sg),
                                  oracle_leading_coeff(kind, g, arity).inverse()) *
                 g;
    return lhs - rhs;
}

// Deterministic random instances.

inline ExponentVector random_ev(std::mt19937_64& rng, std::uint64_t max_var,
                                std::uint64_t max_exp) {
    std::uniform_int_distribution<std::uint64_t> var_exp(0, max_exp);
    std::vector<ExponentVector::Entry> entries;
    for (std::uint64_t v = 0; v <= max_var; ++v) {
        std::uint64_t e = var_exp(rng);
        if (e != 0) entries.emplace_back(v, e);
    }
    return ExponentVector(std::move(entries));
}

/// Random polynomial over x0..x_{max_var} with per-term total degree at most
/// max_deg and integer coefficients in [-coeff_bound, coeff_bound].
inline MvPoly random_poly(std::mt19937_64& rng, std::uint64_t max_var,
                          std::uint64_t max_deg, std::size_t max_terms,
                          long coeff_bound) {
    std::uniform_int_distribution<std::size_t> term_count(0, max_terms);
    std::uniform_int_distribution<long> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<std::uint64_t> var(0, max_var);
    std::uniform_int_distribution<std::uint64_t> deg(0, max_deg);
    MvPoly p;
    std::size_t terms = term_count(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        std::uint64_t budget = deg(rng);
        std::vector<ExponentVector::Entry> entries;
        while (budget > 0) {
            std::uint64_t v = var(rng);
            std::uint64_t e = std::uniform_int_distribution<std::uint64_t>(1, budget)(rng);
            entries.emplace_back(v, e);
            budget -= e;
        }
        p += MvPoly::monomial(ExponentVector(std::move(entries)), Rational(coeff(rng)));
    }
    return p;
}

inline MvPoly nonzero_random_poly(std::mt19937_64& rng, std::uint64_t max_var,
                                  std::uint64_t max_deg, std::size_t max_terms,
                                  long coeff_bound) {
    for (;;) {
        MvPoly p = random_poly(rng, max_var, max_deg, max_terms, coeff_bound);
        if (!p.is_zero()) return p;
    }
}

inline MvPoly P(const std::string& text) { return groebner::parse_poly(text); }

inline bool contains_poly(const std::vector<MvPoly>& set, const MvPoly& p) {
    for (const MvPoly& q : set)
        if (q == p) return true;
    return false;
}

inline bool same_poly_set(const std::vector<MvPoly>& a, const std::vector<MvPoly>& b) {
    if (a.size() != b.size()) return false;
    for (const MvPoly& p : a)
        if (!contains_poly(b, p)) return false;
    return true;
}

} // namespace testutil

#endif

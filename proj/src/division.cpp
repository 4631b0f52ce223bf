#include "groebner/division.hpp"

#include <stdexcept>

namespace groebner {

DivisionResult divide(const MonomialOrderSpec& order, const MvPoly& f,
                      const std::vector<MvPoly>& divisors) {
    struct Divisor {
        std::size_t index;
        ExponentVector lead;
        Rational lc;
    };
    std::vector<Divisor> active;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (divisors[i].is_zero()) continue;
        active.push_back({i, degree(order, divisors[i]), leading_coeff(order, divisors[i])});
    }

    DivisionResult result;
    result.quotients.assign(divisors.size(), MvPoly());
    MvPoly work = f;
    while (!work.is_zero()) {
        ExponentVector lead = degree(order, work);
        Rational lc = work.coeff(lead);
        const Divisor* hit = nullptr;
        for (const Divisor& d : active) {
            if (divides(d.lead, lead)) {
                hit = &d;
                break;
            }
        }
        if (!hit) {
            MvPoly t = MvPoly::monomial(lead, lc);
            result.remainder += t;
            work -= t;
            continue;
        }
        Rational c = lc / hit->lc;
        ExponentVector shift = trunc_sub(lead, hit->lead);
        result.quotients[hit->index] += MvPoly::monomial(shift, c);
        work.add_scaled(-c, shift, divisors[hit->index]);
    }
    return result;
}

bool check_remainder_witness(const MonomialOrderSpec& order, const MvPoly& f,
                             const std::vector<MvPoly>& divisors,
                             const std::vector<MvPoly>& quotients,
                             const MvPoly& remainder) {
    if (divisors.size() != quotients.size())
        throw std::invalid_argument("witness quotient count does not match divisor count");

    MvPoly acc = remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i)
        acc += quotients[i] * divisors[i];
    if (acc != f) return false;

    DegreeOrBottom df = with_bot_degree(order, f);
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        DegreeOrBottom bound = add(with_bot_degree(order, divisors[i]),
                                   with_bot_degree(order, quotients[i]));
        if (compare(order, bound, df) == Ordering::GT) return false;
    }

    return is_fully_reduced(order, remainder, divisors);
}

bool is_fully_reduced(const MonomialOrderSpec& order, const MvPoly& r,
                      const std::vector<MvPoly>& divisors) {
    for (const MvPoly& b : divisors) {
        if (b.is_zero()) continue;
        ExponentVector lead = degree(order, b);
        for (const auto& [e, c] : r.terms())
            if (divides(lead, e)) return false;
    }
    return true;
}

} // namespace groebner

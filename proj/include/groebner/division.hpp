#ifndef GROEBNER_DIVISION_HPP
#define GROEBNER_DIVISION_HPP

#include <vector>

#include "groebner/poly.hpp"

namespace groebner {

/// Outcome of dividing f by an indexed family of divisors:
///   f = sum_i quotients[i] * divisors[i] + remainder,
/// with the degree bound deg(divisors[i]) + deg(quotients[i]) <= deg(f)
/// (bottom absorbing) and no remainder term divisible by the leading
/// monomial of a nonzero divisor.
struct DivisionResult {
    std::vector<MvPoly> quotients; // one per divisor, zero when unused
    MvPoly remainder;
};

/// Multivariate division. Repeatedly reduces the leading term of the working
/// polynomial by the first divisor (in sequence order) whose leading monomial
/// divides it; leading terms divisible by no divisor move to the remainder.
/// Zero divisors are skipped. Terminates because the working degree strictly
/// decreases in a well-founded order.
DivisionResult divide(const MonomialOrderSpec& order, const MvPoly& f,
                      const std::vector<MvPoly>& divisors);

/// Pure check of the three remainder conditions for a supplied witness; no
/// search. Throws std::invalid_argument when quotients and divisors disagree
/// in length.
bool check_remainder_witness(const MonomialOrderSpec& order, const MvPoly& f,
                             const std::vector<MvPoly>& divisors,
                             const std::vector<MvPoly>& quotients,
                             const MvPoly& remainder);

/// The witness-free part: no term of r divisible by LM(b) for nonzero b in B.
bool is_fully_reduced(const MonomialOrderSpec& order, const MvPoly& r,
                      const std::vector<MvPoly>& divisors);

} // namespace groebner

#endif

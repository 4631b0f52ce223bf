#ifndef GROEBNER_GROEBNER_HPP
#define GROEBNER_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groebner/division.hpp"
#include "groebner/poly.hpp"

namespace groebner {

enum class Provenance { Claimed, Verified };

/// A (claimed or verified) Groebner basis together with the generators it
/// came from. Verified means: produced by buchberger, so every S-pair
/// reduces to 0 over `elements` and the span equals the span of
/// `generators`. Each element carries its cofactor row over the generators
/// (elements[k] = sum_i element_cofactors[k][i] * generators[i]); cofactors
/// in the other direction are recovered by division on demand.
struct GroebnerBasis {
    MonomialOrderSpec order;
    std::vector<MvPoly> elements;
    Provenance provenance = Provenance::Claimed;
    std::vector<MvPoly> generators;
    std::vector<std::vector<MvPoly>> element_cofactors;
};

/// Witness that sPolynomial(basis[i], basis[j]) has remainder 0 over the
/// basis: positions i < j plus one quotient per basis element.
struct SPairCertificate {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<MvPoly> quotients;
};

/// Division witness for a membership claim: p = sum quotients[k]*G[k] + r
/// with the remainder fully reduced. Member iff remainder is zero.
struct MembershipCertificate {
    std::vector<MvPoly> quotients;
    MvPoly remainder;
};

struct CriterionReport {
    bool ok = false;
    std::vector<SPairCertificate> certificates; // populated when ok
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    MvPoly failing_remainder;
};

enum class PairStrategy { normal, fifo };

std::optional<PairStrategy> strategy_from_string(const std::string& name);

struct BuchbergerOptions {
    PairStrategy strategy = PairStrategy::normal;
    /// Skip pairs whose leading monomials are coprime (Buchberger's first
    /// criterion). Off by default; the reduced result must not depend on it.
    bool coprime_skip = false;
    /// Maximum S-pair reductions before BudgetExceededError.
    std::uint64_t budget = 100000;
};

/// Buchberger's algorithm. Keeps the nonzero generators as-is, appends monic
/// S-pair remainders until every pair reduces to zero. Throws
/// BudgetExceededError when options.budget reductions are exhausted.
GroebnerBasis buchberger(const MonomialOrderSpec& order,
                         const std::vector<MvPoly>& generators,
                         const BuchbergerOptions& options = {});

/// Divides every S-polynomial of pairs of G by G. True iff all remainders
/// vanish; certificates cover all pairs in that case, otherwise the first
/// failing pair and its remainder are reported.
CriterionReport check_buchberger_criterion(const MonomialOrderSpec& order,
                                           const std::vector<MvPoly>& G);

/// Monic elements, no leading monomial dividing another's. Requires a
/// Verified basis; the result is still verified (dropping an element whose
/// leading monomial is covered keeps the leading-term ideal).
GroebnerBasis minimalize(const GroebnerBasis& G);

/// Tail-reduces each element against the others. Requires a minimal basis;
/// leading monomials are untouched, so one pass reaches the fixed point.
GroebnerBasis inter_reduce(const GroebnerBasis& G);

/// buchberger, minimalize, inter_reduce, then elements sorted descending by
/// leading monomial: the unique reduced basis of the ideal.
GroebnerBasis reduced_groebner(const MonomialOrderSpec& order,
                               const std::vector<MvPoly>& generators,
                               const BuchbergerOptions& options = {});

/// All elements monic and no leading monomial divides another element's.
bool is_minimal_basis(const MonomialOrderSpec& order, const std::vector<MvPoly>& G);
/// Minimal, and no monomial of any element is divisible by another element's
/// leading monomial.
bool is_reduced_basis(const MonomialOrderSpec& order, const std::vector<MvPoly>& G);

/// Membership via division by a verified basis: member iff remainder zero.
/// The certificate is the division witness either way.
std::pair<bool, MembershipCertificate> member_of_ideal(const GroebnerBasis& G,
                                                       const MvPoly& p);

using CoeffMatrix = std::vector<std::vector<Rational>>;

/// Cancellation lemma: given items (c_i, p_i) where every nonzero p_i has
/// degree exactly d and deg(sum c_i p_i) < d, returns a matrix c' with
///   sum_i c_i p_i = sum_{i,j} c'[i][j] * sPolynomial(p_i, p_j),
/// built by telescoping partial sums of leading coefficients. Throws
/// std::invalid_argument when the degree precondition fails.
CoeffMatrix cancellation_decompose(const MonomialOrderSpec& order,
                                   const ExponentVector& d,
                                   const std::vector<std::pair<Rational, MvPoly>>& items);

/// Everything an external checker needs: the claimed basis, S-pair witnesses
/// covering all pairs, a zero-remainder witness for every generator over the
/// basis, and a cofactor row over the generators for every basis element.
struct CertificateBundle {
    MonomialOrderSpec order;
    std::vector<MvPoly> generators;
    std::vector<MvPoly> basis;
    std::vector<SPairCertificate> spair_certs;
    std::vector<MembershipCertificate> generator_certs;
    std::vector<std::vector<MvPoly>> basis_certs;
};

CertificateBundle make_certificate_bundle(const GroebnerBasis& G);

enum class VerifyStatus {
    ok,        // all certificates check
    invalid,   // well-formed but some identity fails
    malformed, // structurally unusable (bad index, wrong coverage, size mismatch)
};

struct VerifyResult {
    VerifyStatus status = VerifyStatus::ok;
    std::string detail; // names the failing pair/element when not ok
};

/// Pure certificate verification; never recomputes a basis. Checks, in
/// order: structure (malformed on failure), S-pair witnesses against zero,
/// generator membership witnesses, basis-over-generator span identities.
VerifyResult verify_certificates(const CertificateBundle& bundle);

} // namespace groebner

#endif

#ifndef GROEBNER_EMBEDDING_HPP
#define GROEBNER_EMBEDDING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "groebner/groebner.hpp"

namespace groebner {

/// Injective map between variable index sets: either an affine shift
/// i -> i+k with total domain, or an explicit finite map with the listed
/// sources as its domain. Injectivity of finite maps is validated on
/// construction; both forms carry an inverse rule.
class VarInjection {
public:
    static VarInjection shift(std::uint64_t k);
    static VarInjection identity() { return shift(0); }
    /// pairs are (source, target); throws std::invalid_argument on repeated
    /// sources or repeated targets.
    static VarInjection finite_map(std::vector<std::pair<VarIndex, VarIndex>> pairs);

    bool is_shift() const { return shift_.has_value(); }
    std::uint64_t shift_amount() const;
    const std::vector<std::pair<VarIndex, VarIndex>>& pairs() const { return pairs_; }

    /// Image of v; empty when v is outside a finite map's domain. A shift
    /// throws OverflowError when v + k leaves the index range.
    std::optional<VarIndex> apply(VarIndex v) const;
    /// Source of v; empty when v is not in the image.
    std::optional<VarIndex> preimage(VarIndex v) const;

private:
    VarInjection() = default;
    std::optional<std::uint64_t> shift_;
    std::vector<std::pair<VarIndex, VarIndex>> pairs_; // sorted by source
};

/// Pushes every variable of e along the injection. Throws
/// std::invalid_argument when some variable is outside the domain.
ExponentVector lift_exponent(const VarInjection& inj, const ExponentVector& e);

/// Ring homomorphism renaming variables along the injection; coefficients
/// unchanged.
MvPoly rename_poly(const VarInjection& inj, const MvPoly& p);

/// The kill-complement: substitutes 0 for every variable outside the image,
/// then pulls the surviving exponents back along the inverse.
/// restrict_poly(inj, rename_poly(inj, p)) = p.
MvPoly restrict_poly(const VarInjection& inj, const MvPoly& p);

/// Pullback of the target order along the injection: the same kind with the
/// precedence any source variables inherit from their images, so that
/// compare(induced, u, v) = compare(target, lift u, lift v).
MonomialOrderSpec induced_order(const MonomialOrderSpec& target, const VarInjection& inj);

struct OrderEmbedding {
    VarInjection injection;
    MonomialOrderSpec source_order;
    MonomialOrderSpec target_order;

    static OrderEmbedding of_injective(const MonomialOrderSpec& target,
                                       const VarInjection& inj) {
        return OrderEmbedding{inj, induced_order(target, inj), target};
    }
};

/// Exhaustive monotonicity check over the sample set: comparisons agree with
/// comparisons of lifted vectors for every pair.
bool check_order_embedding(const OrderEmbedding& emb,
                           const std::vector<ExponentVector>& samples);

/// Remainder invariance on a concrete instance. Requires a source-side
/// witness (p = sum quotients*divisors + remainder). Checks the witness on
/// the source side, its image under rename_poly on the target side, and that
/// an independently computed target-side witness restricts to a valid
/// source-side one.
bool check_remainder_invariance(const OrderEmbedding& emb, const MvPoly& p,
                                const std::vector<MvPoly>& divisors,
                                const DivisionResult& witness);

/// Groebner-basis invariance: G passes the Buchberger criterion and spans
/// the generators on the source side iff the renamed data does on the target
/// side. Returns whether the two verdicts agree.
bool check_gb_invariance(const OrderEmbedding& emb, const std::vector<MvPoly>& G,
                         const std::vector<MvPoly>& generators);

/// Reduced basis for finitely many generators over unbounded variable
/// indices: compacts the used variables to 0..m-1, computes there under the
/// induced order, and lifts the result back. The lifted basis passes
/// check_gb_invariance by construction.
GroebnerBasis finite_gb_over_unbounded_vars(const MonomialOrderSpec& target_order,
                                            const std::vector<MvPoly>& generators,
                                            const BuchbergerOptions& options = {});

/// Generators of span(generators) intersected with the subring on x0..x_{n-1},
/// by the elimination theorem under a lex order ranking the eliminated
/// variables x_n, x_{n+1}, ... above the kept ones.
std::vector<MvPoly> eliminate_above(VarIndex n, const std::vector<MvPoly>& generators,
                                    const BuchbergerOptions& options = {});

/// One liminf run: reduced bases of the prefix contractions, their
/// union-of-intersections over the given ascending prefixes (a concrete
/// stand-in for the cofinite filter), and the comparison against the
/// directly computed reduced basis of the full ideal.
struct LiminfResult {
    enum class Verdict { confirmed, inconclusive, mismatch };

    std::vector<std::uint64_t> prefixes;
    std::vector<std::vector<MvPoly>> per_prefix; // G_n for each prefix n
    std::vector<MvPoly> liminf;
    std::vector<MvPoly> direct;
    bool stabilized = false;
    Verdict verdict = Verdict::inconclusive;
};

/// Computes G_n = reduced basis of span(generators) ∩ k[x0..x_{n-1}] for each
/// prefix size (default-precedence order of the given kind), assembles the
/// liminf over the given prefixes, and compares it with the direct reduced
/// basis. Verdict is confirmed only when the prefixes at and beyond the
/// variable count agree and the liminf matches; a missing or unstable tail is
/// inconclusive, never confirmed.
LiminfResult liminf_reduced_gb(OrderKind kind, const std::vector<MvPoly>& generators,
                               const std::vector<std::uint64_t>& prefixes,
                               const BuchbergerOptions& options = {});

} // namespace groebner

#endif

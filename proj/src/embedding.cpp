#include "groebner/embedding.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace groebner {

VarInjection VarInjection::shift(std::uint64_t k) {
    VarInjection inj;
    inj.shift_ = k;
    return inj;
}

VarInjection VarInjection::finite_map(std::vector<std::pair<VarIndex, VarIndex>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); ++i)
        if (pairs[i].first == pairs[i - 1].first)
            throw std::invalid_argument("variable map with repeated source");
    std::set<VarIndex> targets;
    for (const auto& [s, t] : pairs)
        if (!targets.insert(t).second)
            throw std::invalid_argument("variable map is not injective");
    VarInjection inj;
    inj.pairs_ = std::move(pairs);
    return inj;
}

std::uint64_t VarInjection::shift_amount() const {
    if (!shift_) throw std::logic_error("shift_amount on a finite map");
    return *shift_;
}

std::optional<VarIndex> VarInjection::apply(VarIndex v) const {
    if (shift_) {
        if (v > std::numeric_limits<VarIndex>::max() - *shift_)
            throw OverflowError("shifted variable index overflows 64 bits");
        return v + *shift_;
    }
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), v,
                               [](const auto& e, VarIndex x) { return e.first < x; });
    if (it != pairs_.end() && it->first == v) return it->second;
    return std::nullopt;
}

std::optional<VarIndex> VarInjection::preimage(VarIndex v) const {
    if (shift_) {
        if (v < *shift_) return std::nullopt;
        return v - *shift_;
    }
    for (const auto& [s, t] : pairs_)
        if (t == v) return s;
    return std::nullopt;
}

ExponentVector lift_exponent(const VarInjection& inj, const ExponentVector& e) {
    std::vector<ExponentVector::Entry> out;
    out.reserve(e.entries().size());
    for (const auto& [var, exp] : e.entries()) {
        std::optional<VarIndex> image = inj.apply(var);
        if (!image)
            throw std::invalid_argument("variable x" + std::to_string(var) +
                                        " outside injection domain");
        out.emplace_back(*image, exp);
    }
    return ExponentVector(std::move(out));
}

MvPoly rename_poly(const VarInjection& inj, const MvPoly& p) {
    MvPoly out;
    for (const auto& [e, c] : p.terms()) out += MvPoly::monomial(lift_exponent(inj, e), c);
    return out;
}

MvPoly restrict_poly(const VarInjection& inj, const MvPoly& p) {
    MvPoly out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<ExponentVector::Entry> pulled;
        bool killed = false;
        for (const auto& [var, exp] : e.entries()) {
            std::optional<VarIndex> source = inj.preimage(var);
            if (!source) {
                killed = true;
                break;
            }
            pulled.emplace_back(*source, exp);
        }
        if (!killed) out += MvPoly::monomial(ExponentVector(std::move(pulled)), c);
    }
    return out;
}

MonomialOrderSpec induced_order(const MonomialOrderSpec& target, const VarInjection& inj) {
    if (inj.is_shift()) {
        std::uint64_t k = inj.shift_amount();
        std::vector<VarIndex> listed;
        for (VarIndex j : target.precedence())
            if (j >= k) listed.push_back(j - k);
        return MonomialOrderSpec(target.kind(), std::move(listed));
    }
    std::vector<std::pair<VarIndex, VarIndex>> pairs = inj.pairs();
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        return target.precedes(a.second, b.second);
    });
    std::vector<VarIndex> listed;
    listed.reserve(pairs.size());
    for (const auto& [s, t] : pairs) listed.push_back(s);
    return MonomialOrderSpec(target.kind(), std::move(listed));
}

bool check_order_embedding(const OrderEmbedding& emb,
                           const std::vector<ExponentVector>& samples) {
    for (const ExponentVector& u : samples) {
        ExponentVector lu = lift_exponent(emb.injection, u);
        for (const ExponentVector& v : samples) {
            ExponentVector lv = lift_exponent(emb.injection, v);
            if (emb.source_order.compare(u, v) != emb.target_order.compare(lu, lv))
                return false;
        }
    }
    return true;
}

namespace {

std::vector<MvPoly> rename_all(const VarInjection& inj, const std::vector<MvPoly>& ps) {
    std::vector<MvPoly> out;
    out.reserve(ps.size());
    for (const MvPoly& p : ps) out.push_back(rename_poly(inj, p));
    return out;
}

std::vector<MvPoly> restrict_all(const VarInjection& inj, const std::vector<MvPoly>& ps) {
    std::vector<MvPoly> out;
    out.reserve(ps.size());
    for (const MvPoly& p : ps) out.push_back(restrict_poly(inj, p));
    return out;
}

} // namespace

bool check_remainder_invariance(const OrderEmbedding& emb, const MvPoly& p,
                                const std::vector<MvPoly>& divisors,
                                const DivisionResult& witness) {
    const MonomialOrderSpec& src = emb.source_order;
    const MonomialOrderSpec& tgt = emb.target_order;
    if (!check_remainder_witness(src, p, divisors, witness.quotients, witness.remainder))
        return false;

    MvPoly tp = rename_poly(emb.injection, p);
    std::vector<MvPoly> tdiv = rename_all(emb.injection, divisors);
    std::vector<MvPoly> tquo = rename_all(emb.injection, witness.quotients);
    MvPoly trem = rename_poly(emb.injection, witness.remainder);
    if (!check_remainder_witness(tgt, tp, tdiv, tquo, trem)) return false;

    // Independent target-side witness, pulled back through the inverse.
    DivisionResult own = divide(tgt, tp, tdiv);
    std::vector<MvPoly> back_quo = restrict_all(emb.injection, own.quotients);
    MvPoly back_rem = restrict_poly(emb.injection, own.remainder);
    return check_remainder_witness(src, p, divisors, back_quo, back_rem);
}

bool check_gb_invariance(const OrderEmbedding& emb, const std::vector<MvPoly>& G,
                         const std::vector<MvPoly>& generators) {
    auto verdict = [](const MonomialOrderSpec& order, const std::vector<MvPoly>& basis,
                      const std::vector<MvPoly>& gens) {
        if (!check_buchberger_criterion(order, basis).ok) return false;
        for (const MvPoly& g : gens)
            if (!divide(order, g, basis).remainder.is_zero()) return false;
        return true;
    };
    bool source = verdict(emb.source_order, G, generators);
    bool target = verdict(emb.target_order, rename_all(emb.injection, G),
                          rename_all(emb.injection, generators));
    return source == target;
}

namespace {

std::optional<VarIndex> max_used_var(const std::vector<MvPoly>& ps) {
    std::optional<VarIndex> best;
    for (const MvPoly& p : ps)
        for (const auto& [e, c] : p.terms())
            if (!e.is_zero() && (!best || e.max_var() > *best)) best = e.max_var();
    return best;
}

std::vector<VarIndex> used_vars_ascending(const std::vector<MvPoly>& ps) {
    std::set<VarIndex> vars;
    for (const MvPoly& p : ps)
        for (const auto& [e, c] : p.terms())
            for (const auto& [var, exp] : e.entries()) vars.insert(var);
    return std::vector<VarIndex>(vars.begin(), vars.end());
}

bool contains_poly(const std::vector<MvPoly>& set, const MvPoly& p) {
    return std::any_of(set.begin(), set.end(), [&](const MvPoly& q) { return q == p; });
}

bool same_poly_set(const std::vector<MvPoly>& a, const std::vector<MvPoly>& b) {
    if (a.size() != b.size()) return false;
    for (const MvPoly& p : a)
        if (!contains_poly(b, p)) return false;
    return true;
}

} // namespace

GroebnerBasis finite_gb_over_unbounded_vars(const MonomialOrderSpec& target_order,
                                            const std::vector<MvPoly>& generators,
                                            const BuchbergerOptions& options) {
    std::vector<VarIndex> used = used_vars_ascending(generators);
    std::vector<std::pair<VarIndex, VarIndex>> pairs;
    pairs.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i)
        pairs.emplace_back(static_cast<VarIndex>(i), used[i]);
    VarInjection inj = VarInjection::finite_map(std::move(pairs));

    MonomialOrderSpec small_order = induced_order(target_order, inj);
    GroebnerBasis small =
        reduced_groebner(small_order, restrict_all(inj, generators), options);

    GroebnerBasis out;
    out.order = target_order;
    out.provenance = Provenance::Verified;
    out.generators = generators;
    out.elements = rename_all(inj, small.elements);
    for (const auto& row : small.element_cofactors)
        out.element_cofactors.push_back(rename_all(inj, row));
    return out;
}

std::vector<MvPoly> eliminate_above(VarIndex n, const std::vector<MvPoly>& generators,
                                    const BuchbergerOptions& options) {
    std::optional<VarIndex> top = max_used_var(generators);
    if (!top || *top < n) {
        std::vector<MvPoly> kept;
        for (const MvPoly& g : generators)
            if (!g.is_zero()) kept.push_back(g);
        return kept;
    }
    // Lex with the eliminated variables highest: a leading monomial free of
    // them forces the whole polynomial free of them.
    std::vector<VarIndex> precedence;
    for (VarIndex v = n; v <= *top; ++v) precedence.push_back(v);
    for (VarIndex v = 0; v < n; ++v) precedence.push_back(v);
    MonomialOrderSpec elim_order(OrderKind::lex, std::move(precedence));

    GroebnerBasis G = reduced_groebner(elim_order, generators, options);
    std::vector<MvPoly> kept;
    for (const MvPoly& g : G.elements) {
        bool inside = true;
        for (const auto& [e, c] : g.terms())
            if (!e.is_zero() && e.max_var() >= n) inside = false;
        if (inside) kept.push_back(g);
    }
    return kept;
}

LiminfResult liminf_reduced_gb(OrderKind kind, const std::vector<MvPoly>& generators,
                               const std::vector<std::uint64_t>& prefixes,
                               const BuchbergerOptions& options) {
    for (std::size_t i = 1; i < prefixes.size(); ++i)
        if (prefixes[i] <= prefixes[i - 1])
            throw std::invalid_argument("prefix sizes must be strictly ascending");

    MonomialOrderSpec order(kind);
    LiminfResult result;
    result.prefixes = prefixes;

    std::optional<VarIndex> top = max_used_var(generators);
    std::uint64_t v = top ? *top + 1 : 0;

    for (std::uint64_t n : prefixes) {
        std::vector<MvPoly> contraction =
            n >= v ? generators : eliminate_above(n, generators, options);
        result.per_prefix.push_back(reduced_groebner(order, contraction, options).elements);
    }

    // liminf over the listed prefixes: union over k of the intersection of
    // all G_n from position k on.
    const std::size_t count = result.per_prefix.size();
    for (std::size_t k = 0; k < count; ++k) {
        for (const MvPoly& p : result.per_prefix[k]) {
            bool in_all = true;
            for (std::size_t j = k + 1; j < count && in_all; ++j)
                in_all = contains_poly(result.per_prefix[j], p);
            if (in_all && !contains_poly(result.liminf, p)) result.liminf.push_back(p);
        }
    }
    std::sort(result.liminf.begin(), result.liminf.end(),
              [&](const MvPoly& a, const MvPoly& b) {
                  return order.compare(degree(order, a), degree(order, b)) == Ordering::GT;
              });

    result.direct = reduced_groebner(order, generators, options).elements;

    bool have_tail = false;
    result.stabilized = true;
    const std::vector<MvPoly>* tail = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
        if (prefixes[i] < v) continue;
        if (!tail) {
            tail = &result.per_prefix[i];
            have_tail = true;
        } else if (!same_poly_set(*tail, result.per_prefix[i])) {
            result.stabilized = false;
        }
    }
    if (!have_tail) result.stabilized = false;

    if (!result.stabilized)
        result.verdict = LiminfResult::Verdict::inconclusive;
    else if (same_poly_set(result.liminf, result.direct))
        result.verdict = LiminfResult::Verdict::confirmed;
    else
        result.verdict = LiminfResult::Verdict::mismatch;
    return result;
}

} // namespace groebner

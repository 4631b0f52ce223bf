#ifndef GROEBNER_ORDER_HPP
#define GROEBNER_ORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groebner/errors.hpp"

namespace groebner {

/// Variable identifier. Ids are unbounded naturals; no fixed arity is
/// assumed anywhere. By default a smaller id means higher precedence
/// (x0 > x1 > x2).
using VarIndex = std::uint64_t;

enum class Ordering { LT, EQ, GT };

/// Exponent vector of a monomial: a finitely supported map from variable
/// index to a positive natural. Zero exponents are never stored, so equality
/// is structural. Exponents are 64-bit naturals; arithmetic that would wrap
/// raises OverflowError instead.
class ExponentVector {
public:
    using Entry = std::pair<VarIndex, std::uint64_t>;

    ExponentVector() = default;

    /// Normalizing constructor: sorts by variable, merges duplicates with a
    /// checked add, erases zero exponents.
    explicit ExponentVector(std::vector<Entry> entries);

    static ExponentVector single(VarIndex v, std::uint64_t e = 1);

    bool is_zero() const { return entries_.empty(); }
    std::uint64_t exponent(VarIndex v) const;
    const std::vector<Entry>& entries() const { return entries_; }

    /// Sum of all exponents. 128-bit so it cannot overflow for any
    /// representable vector.
    unsigned __int128 total_degree() const;

    VarIndex max_var() const; // throws std::invalid_argument when zero

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
        return !(a == b);
    }
    /// Structural comparison, used only as a container key; unrelated to any
    /// monomial order.
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<Entry> entries_; // sorted by variable, values >= 1
};

ExponentVector sum(const ExponentVector& a, const ExponentVector& b);
/// Componentwise max(0, a - b).
ExponentVector trunc_sub(const ExponentVector& a, const ExponentVector& b);
/// Componentwise max.
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// Whether a(i) <= b(i) for all i, i.e. x^a divides x^b.
bool divides(const ExponentVector& a, const ExponentVector& b);

enum class OrderKind { lex, grlex, grevlex };

std::string to_string(OrderKind kind);
std::optional<OrderKind> order_kind_from_string(const std::string& name);

/// A total order on exponent vectors: one of the three built-in kinds plus an
/// optional explicit variable precedence list (first entry = highest
/// precedence). Variables outside the list rank below every listed variable,
/// ordered among themselves by ascending id. An empty list gives the default
/// precedence x0 > x1 > x2 > ...
///
/// Each built-in kind is a well-order compatible with addition and with 0
/// minimal; the axioms are exercised by property tests rather than checked at
/// runtime.
class MonomialOrderSpec {
public:
    MonomialOrderSpec() : kind_(OrderKind::lex) {}
    explicit MonomialOrderSpec(OrderKind kind, std::vector<VarIndex> precedence = {});

    OrderKind kind() const { return kind_; }
    const std::vector<VarIndex>& precedence() const { return precedence_; }

    /// True when a strictly precedes b (a is compared first).
    bool precedes(VarIndex a, VarIndex b) const;

    Ordering compare(const ExponentVector& a, const ExponentVector& b) const;
    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == Ordering::LT;
    }
    bool leq(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) != Ordering::GT;
    }

    friend bool operator==(const MonomialOrderSpec& a, const MonomialOrderSpec& b) {
        return a.kind_ == b.kind_ && a.precedence_ == b.precedence_;
    }
    friend bool operator!=(const MonomialOrderSpec& a, const MonomialOrderSpec& b) {
        return !(a == b);
    }

private:
    // Rank of a variable: position in the explicit list, or list size +
    // (relative id rank) for unlisted ones. Lower rank = higher precedence.
    bool listed_rank(VarIndex v, std::size_t& rank) const;

    OrderKind kind_;
    std::vector<VarIndex> precedence_;
};

/// Degree value extended with a bottom element that sits strictly below every
/// exponent vector and absorbs addition. The degree of the zero polynomial.
class DegreeOrBottom {
public:
    static DegreeOrBottom bottom() { return DegreeOrBottom(); }
    static DegreeOrBottom of(ExponentVector e) {
        DegreeOrBottom d;
        d.value_ = std::move(e);
        return d;
    }

    bool is_bottom() const { return !value_.has_value(); }
    const ExponentVector& get() const {
        if (!value_) throw std::invalid_argument("degree is bottom");
        return *value_;
    }

    friend bool operator==(const DegreeOrBottom& a, const DegreeOrBottom& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const DegreeOrBottom& a, const DegreeOrBottom& b) {
        return !(a == b);
    }

private:
    DegreeOrBottom() = default;
    std::optional<ExponentVector> value_;
};

/// Bottom absorbs: bottom + d = bottom.
DegreeOrBottom add(const DegreeOrBottom& a, const DegreeOrBottom& b);
Ordering compare(const MonomialOrderSpec& order, const DegreeOrBottom& a,
                 const DegreeOrBottom& b);

} // namespace groebner

#endif

#include "groebner/order.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace groebner {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw OverflowError("exponent addition overflows 64 bits");
    return a + b;
}

} // namespace

ExponentVector::ExponentVector(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    for (const auto& [var, exp] : entries) {
        if (exp == 0) continue;
        if (!entries_.empty() && entries_.back().first == var)
            entries_.back().second = checked_add(entries_.back().second, exp);
        else
            entries_.emplace_back(var, exp);
    }
}

ExponentVector ExponentVector::single(VarIndex v, std::uint64_t e) {
    ExponentVector r;
    if (e != 0) r.entries_.emplace_back(v, e);
    return r;
}

std::uint64_t ExponentVector::exponent(VarIndex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarIndex x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

unsigned __int128 ExponentVector::total_degree() const {
    unsigned __int128 d = 0;
    for (const auto& [var, exp] : entries_) d += exp;
    return d;
}

VarIndex ExponentVector::max_var() const {
    if (entries_.empty()) throw std::invalid_argument("constant monomial has no variable");
    return entries_.back().first;
}

ExponentVector sum(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r;
    std::vector<ExponentVector::Entry> out;
    out.reserve(a.entries().size() + b.entries().size());
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, checked_add(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return ExponentVector(std::move(out));
}

ExponentVector trunc_sub(const ExponentVector& a, const ExponentVector& b) {
    std::vector<ExponentVector::Entry> out;
    for (const auto& [var, exp] : a.entries()) {
        std::uint64_t sub = b.exponent(var);
        if (exp > sub) out.emplace_back(var, exp - sub);
    }
    return ExponentVector(std::move(out));
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    std::vector<ExponentVector::Entry> out;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia;
            ++ib;
        }
    }
    return ExponentVector(std::move(out));
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (const auto& [var, exp] : a.entries())
        if (b.exponent(var) < exp) return false;
    return true;
}

std::string to_string(OrderKind kind) {
    switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
    }
    throw std::logic_error("unreachable");
}

std::optional<OrderKind> order_kind_from_string(const std::string& name) {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "grevlex") return OrderKind::grevlex;
    return std::nullopt;
}

MonomialOrderSpec::MonomialOrderSpec(OrderKind kind, std::vector<VarIndex> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    for (std::size_t i = 0; i < precedence_.size(); ++i)
        for (std::size_t j = i + 1; j < precedence_.size(); ++j)
            if (precedence_[i] == precedence_[j])
                throw std::invalid_argument("duplicate variable in precedence list");
}

bool MonomialOrderSpec::listed_rank(VarIndex v, std::size_t& rank) const {
    auto it = std::find(precedence_.begin(), precedence_.end(), v);
    if (it == precedence_.end()) return false;
    rank = static_cast<std::size_t>(it - precedence_.begin());
    return true;
}

bool MonomialOrderSpec::precedes(VarIndex a, VarIndex b) const {
    if (a == b) return false;
    std::size_t ra = 0, rb = 0;
    bool la = listed_rank(a, ra), lb = listed_rank(b, rb);
    if (la && lb) return ra < rb;
    if (la != lb) return la; // listed variables outrank unlisted ones
    return a < b;
}

namespace {

// Variables occurring in a or b, highest precedence first.
std::vector<VarIndex> support_by_precedence(const MonomialOrderSpec& order,
                                            const ExponentVector& a,
                                            const ExponentVector& b) {
    std::vector<VarIndex> vars;
    for (const auto& [var, exp] : a.entries()) vars.push_back(var);
    for (const auto& [var, exp] : b.entries()) vars.push_back(var);
    std::sort(vars.begin(), vars.end(),
              [&](VarIndex x, VarIndex y) { return order.precedes(x, y); });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

int cmp128(unsigned __int128 a, unsigned __int128 b) {
    return a < b ? -1 : (a == b ? 0 : 1);
}

} // namespace

Ordering MonomialOrderSpec::compare(const ExponentVector& a, const ExponentVector& b) const {
    if (a == b) return Ordering::EQ;
    if (kind_ != OrderKind::lex) {
        int c = cmp128(a.total_degree(), b.total_degree());
        if (c < 0) return Ordering::LT;
        if (c > 0) return Ordering::GT;
    }
    auto vars = support_by_precedence(*this, a, b);
    if (kind_ == OrderKind::grevlex) {
        // Ties broken by the lowest-precedence variable with differing
        // exponent; the *smaller* exponent there wins.
        for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
            std::uint64_t ea = a.exponent(*it), eb = b.exponent(*it);
            if (ea != eb) return ea > eb ? Ordering::LT : Ordering::GT;
        }
    } else {
        for (VarIndex v : vars) {
            std::uint64_t ea = a.exponent(v), eb = b.exponent(v);
            if (ea != eb) return ea < eb ? Ordering::LT : Ordering::GT;
        }
    }
    return Ordering::EQ; // unreachable: a != b implies some exponent differs
}

DegreeOrBottom add(const DegreeOrBottom& a, const DegreeOrBottom& b) {
    if (a.is_bottom() || b.is_bottom()) return DegreeOrBottom::bottom();
    return DegreeOrBottom::of(sum(a.get(), b.get()));
}

Ordering compare(const MonomialOrderSpec& order, const DegreeOrBottom& a,
                 const DegreeOrBottom& b) {
    if (a.is_bottom() && b.is_bottom()) return Ordering::EQ;
    if (a.is_bottom()) return Ordering::LT;
    if (b.is_bottom()) return Ordering::GT;
    return order.compare(a.get(), b.get());
}

} // namespace groebner

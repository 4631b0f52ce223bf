#include "groebner/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace groebner {

namespace {

using Row = std::vector<MvPoly>;

// dst += factor * src, componentwise.
void row_axpy(Row& dst, const MvPoly& factor, const Row& src) {
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += factor * src[k];
}

void row_scale(Row& row, const Rational& c) {
    for (MvPoly& p : row) p = c * p;
}

std::vector<MvPoly> with_index_zeroed(const std::vector<MvPoly>& v, std::size_t i) {
    std::vector<MvPoly> out = v;
    out[i] = MvPoly();
    return out;
}

} // namespace

std::optional<PairStrategy> strategy_from_string(const std::string& name) {
    if (name == "normal") return PairStrategy::normal;
    if (name == "fifo") return PairStrategy::fifo;
    return std::nullopt;
}

GroebnerBasis buchberger(const MonomialOrderSpec& order,
                         const std::vector<MvPoly>& generators,
                         const BuchbergerOptions& options) {
    GroebnerBasis G;
    G.order = order;
    G.generators = generators;

    std::vector<ExponentVector> degs;
    std::vector<Rational> lcs;
    auto append = [&](MvPoly p, Row row) {
        degs.push_back(degree(order, p));
        lcs.push_back(leading_coeff(order, p));
        G.elements.push_back(std::move(p));
        G.element_cofactors.push_back(std::move(row));
    };

    const std::size_t m = generators.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (generators[i].is_zero()) continue;
        Row row(m);
        row[i] = MvPoly::constant(Rational(1));
        append(generators[i], std::move(row));
    }

    std::deque<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < G.elements.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.emplace_back(i, j);

    std::uint64_t reductions = 0;
    while (!pending.empty()) {
        std::size_t pick = 0;
        if (options.strategy == PairStrategy::normal) {
            ExponentVector best = lcm(degs[pending[0].first], degs[pending[0].second]);
            for (std::size_t k = 1; k < pending.size(); ++k) {
                ExponentVector cand = lcm(degs[pending[k].first], degs[pending[k].second]);
                Ordering c = order.compare(cand, best);
                if (c == Ordering::LT || (c == Ordering::EQ && pending[k] < pending[pick])) {
                    pick = k;
                    best = cand;
                }
            }
        }
        auto [i, j] = pending[pick];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

        if (options.coprime_skip && lcm(degs[i], degs[j]) == sum(degs[i], degs[j]))
            continue;

        if (reductions >= options.budget)
            throw BudgetExceededError("S-pair reduction budget exceeded (" +
                                      std::to_string(options.budget) + ")");
        ++reductions;

        MvPoly s = s_polynomial(order, G.elements[i], G.elements[j]);
        DivisionResult div = divide(order, s, G.elements);
        if (div.remainder.is_zero()) continue;

        // Cofactor row of the remainder over the generators:
        //   r = spoly(e_i, e_j) - sum_k q_k e_k
        Row row(m);
        row_axpy(row, MvPoly::monomial(trunc_sub(degs[j], degs[i]), lcs[j]),
                 G.element_cofactors[i]);
        row_axpy(row, MvPoly::monomial(trunc_sub(degs[i], degs[j]), -lcs[i]),
                 G.element_cofactors[j]);
        for (std::size_t k = 0; k < G.elements.size(); ++k) {
            if (div.quotients[k].is_zero()) continue;
            row_axpy(row, -div.quotients[k], G.element_cofactors[k]);
        }
        Rational inv = leading_coeff(order, div.remainder).inverse();
        row_scale(row, inv);

        std::size_t fresh = G.elements.size();
        for (std::size_t k = 0; k < fresh; ++k) pending.emplace_back(k, fresh);
        append(inv * div.remainder, std::move(row));
    }

    G.provenance = Provenance::Verified;
    return G;
}

CriterionReport check_buchberger_criterion(const MonomialOrderSpec& order,
                                           const std::vector<MvPoly>& G) {
    CriterionReport report;
    for (std::size_t j = 1; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            MvPoly s = s_polynomial(order, G[i], G[j]);
            DivisionResult div = divide(order, s, G);
            if (!div.remainder.is_zero()) {
                report.ok = false;
                report.certificates.clear();
                report.failing_pair = {i, j};
                report.failing_remainder = div.remainder;
                return report;
            }
            report.certificates.push_back({i, j, std::move(div.quotients)});
        }
    }
    report.ok = true;
    return report;
}

GroebnerBasis minimalize(const GroebnerBasis& G) {
    if (G.provenance != Provenance::Verified)
        throw std::invalid_argument("minimalize requires a verified basis");
    const MonomialOrderSpec& order = G.order;
    const std::size_t n = G.elements.size();

    std::vector<ExponentVector> degs;
    degs.reserve(n);
    for (const MvPoly& p : G.elements) degs.push_back(degree(order, p));

    std::vector<char> dropped(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || dropped[j]) continue;
            if (divides(degs[j], degs[i])) {
                dropped[i] = 1;
                break;
            }
        }
    }

    GroebnerBasis out;
    out.order = order;
    out.provenance = Provenance::Verified;
    out.generators = G.generators;
    for (std::size_t i = 0; i < n; ++i) {
        if (dropped[i]) continue;
        Rational inv = leading_coeff(order, G.elements[i]).inverse();
        out.elements.push_back(inv * G.elements[i]);
        Row row = G.element_cofactors[i];
        row_scale(row, inv);
        out.element_cofactors.push_back(std::move(row));
    }
    return out;
}

GroebnerBasis inter_reduce(const GroebnerBasis& G) {
    if (G.provenance != Provenance::Verified)
        throw std::invalid_argument("inter_reduce requires a verified basis");
    if (!is_minimal_basis(G.order, G.elements))
        throw std::invalid_argument("inter_reduce requires a minimal basis");

    GroebnerBasis out = G;
    const std::size_t n = out.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
        // Leading monomials are pairwise non-dividing, so dividing e_i by the
        // others only rewrites its tail and keeps it monic.
        std::vector<MvPoly> divisors = with_index_zeroed(out.elements, i);
        DivisionResult div = divide(out.order, out.elements[i], divisors);
        for (std::size_t k = 0; k < n; ++k) {
            if (div.quotients[k].is_zero()) continue;
            row_axpy(out.element_cofactors[i], -div.quotients[k], out.element_cofactors[k]);
        }
        out.elements[i] = std::move(div.remainder);
    }
    return out;
}

GroebnerBasis reduced_groebner(const MonomialOrderSpec& order,
                               const std::vector<MvPoly>& generators,
                               const BuchbergerOptions& options) {
    GroebnerBasis G = inter_reduce(minimalize(buchberger(order, generators, options)));

    std::vector<std::size_t> perm(G.elements.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return G.order.compare(degree(G.order, G.elements[a]),
                               degree(G.order, G.elements[b])) == Ordering::GT;
    });

    GroebnerBasis out;
    out.order = G.order;
    out.provenance = Provenance::Verified;
    out.generators = G.generators;
    for (std::size_t k : perm) {
        out.elements.push_back(std::move(G.elements[k]));
        out.element_cofactors.push_back(std::move(G.element_cofactors[k]));
    }
    return out;
}

bool is_minimal_basis(const MonomialOrderSpec& order, const std::vector<MvPoly>& G) {
    for (const MvPoly& p : G)
        if (!is_monic(order, p)) return false;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size(); ++j)
            if (i != j && divides(degree(order, G[j]), degree(order, G[i]))) return false;
    return true;
}

bool is_reduced_basis(const MonomialOrderSpec& order, const std::vector<MvPoly>& G) {
    if (!is_minimal_basis(order, G)) return false;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!is_fully_reduced(order, G[i], with_index_zeroed(G, i))) return false;
    return true;
}

std::pair<bool, MembershipCertificate> member_of_ideal(const GroebnerBasis& G,
                                                       const MvPoly& p) {
    if (G.provenance != Provenance::Verified)
        throw std::invalid_argument("member_of_ideal requires a verified basis");
    DivisionResult div = divide(G.order, p, G.elements);
    bool member = div.remainder.is_zero();
    return {member, MembershipCertificate{std::move(div.quotients), std::move(div.remainder)}};
}

CoeffMatrix cancellation_decompose(const MonomialOrderSpec& order,
                                   const ExponentVector& d,
                                   const std::vector<std::pair<Rational, MvPoly>>& items) {
    const std::size_t m = items.size();
    MvPoly total;
    for (const auto& [c, p] : items) {
        if (!p.is_zero() && !(degree(order, p) == d))
            throw std::invalid_argument("cancellation_decompose: item degree is not d");
        total += c * p;
    }
    if (compare(order, with_bot_degree(order, total), DegreeOrBottom::of(d)) != Ordering::LT)
        throw std::invalid_argument("cancellation_decompose: leading terms do not cancel");

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
        if (!items[i].first.is_zero() && !items[i].second.is_zero()) idx.push_back(i);

    // Telescoping: with P_i = p_i/LC(p_i), the partial sums of c_i LC(p_i)
    // weight the differences P_t - P_{t+1} = spoly(p_t, p_{t+1}) / (LC_t LC_{t+1});
    // the full sum of c_i LC(p_i) is the coefficient of x^d in total, which
    // vanished, so the last partial needs no term.
    CoeffMatrix out(m, std::vector<Rational>(m));
    Rational partial;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        Rational lc_t = leading_coeff(order, items[idx[t]].second);
        partial += items[idx[t]].first * lc_t;
        if (t + 1 < idx.size()) {
            Rational lc_n = leading_coeff(order, items[idx[t + 1]].second);
            out[idx[t]][idx[t + 1]] = partial / (lc_t * lc_n);
        }
    }
    return out;
}

CertificateBundle make_certificate_bundle(const GroebnerBasis& G) {
    if (G.provenance != Provenance::Verified)
        throw std::invalid_argument("certificate bundle requires a verified basis");
    CertificateBundle bundle;
    bundle.order = G.order;
    bundle.generators = G.generators;
    bundle.basis = G.elements;
    bundle.basis_certs = G.element_cofactors;

    for (std::size_t j = 1; j < bundle.basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            MvPoly s = s_polynomial(G.order, bundle.basis[i], bundle.basis[j]);
            DivisionResult div = divide(G.order, s, bundle.basis);
            if (!div.remainder.is_zero())
                throw Error("internal: S-pair of a verified basis did not reduce to zero");
            bundle.spair_certs.push_back({i, j, std::move(div.quotients)});
        }
    }
    for (const MvPoly& g : G.generators) {
        DivisionResult div = divide(G.order, g, bundle.basis);
        if (!div.remainder.is_zero())
            throw Error("internal: generator does not reduce to zero over a verified basis");
        bundle.generator_certs.push_back({std::move(div.quotients), std::move(div.remainder)});
    }
    return bundle;
}

namespace {

VerifyResult verdict(VerifyStatus status, std::string detail) {
    return VerifyResult{status, std::move(detail)};
}

} // namespace

VerifyResult verify_certificates(const CertificateBundle& bundle) {
    const std::size_t n = bundle.basis.size();
    const std::size_t m = bundle.generators.size();
    const MonomialOrderSpec& order = bundle.order;

    std::vector<char> seen(n * n, 0);
    for (const SPairCertificate& cert : bundle.spair_certs) {
        if (cert.j >= n || cert.i >= cert.j)
            return verdict(VerifyStatus::malformed,
                           "S-pair certificate indices (" + std::to_string(cert.i) + "," +
                               std::to_string(cert.j) + ") out of range or not ascending");
        if (cert.quotients.size() != n)
            return verdict(VerifyStatus::malformed,
                           "S-pair certificate (" + std::to_string(cert.i) + "," +
                               std::to_string(cert.j) + ") has wrong quotient count");
        char& flag = seen[cert.i * n + cert.j];
        if (flag)
            return verdict(VerifyStatus::malformed,
                           "duplicate S-pair certificate (" + std::to_string(cert.i) + "," +
                               std::to_string(cert.j) + ")");
        flag = 1;
    }
    if (bundle.spair_certs.size() != (n == 0 ? 0 : n * (n - 1) / 2))
        return verdict(VerifyStatus::malformed, "S-pair coverage incomplete");
    if (bundle.generator_certs.size() != m)
        return verdict(VerifyStatus::malformed, "generator certificate count mismatch");
    for (std::size_t k = 0; k < m; ++k)
        if (bundle.generator_certs[k].quotients.size() != n)
            return verdict(VerifyStatus::malformed,
                           "generator certificate " + std::to_string(k) +
                               " has wrong quotient count");
    if (bundle.basis_certs.size() != n)
        return verdict(VerifyStatus::malformed, "basis certificate count mismatch");
    for (std::size_t k = 0; k < n; ++k)
        if (bundle.basis_certs[k].size() != m)
            return verdict(VerifyStatus::malformed,
                           "basis certificate " + std::to_string(k) +
                               " has wrong cofactor count");

    for (const SPairCertificate& cert : bundle.spair_certs) {
        MvPoly s = s_polynomial(order, bundle.basis[cert.i], bundle.basis[cert.j]);
        if (!check_remainder_witness(order, s, bundle.basis, cert.quotients, MvPoly()))
            return verdict(VerifyStatus::invalid,
                           "S-pair certificate (" + std::to_string(cert.i) + "," +
                               std::to_string(cert.j) + ") fails");
    }
    for (std::size_t k = 0; k < m; ++k) {
        const MembershipCertificate& cert = bundle.generator_certs[k];
        if (!cert.remainder.is_zero())
            return verdict(VerifyStatus::invalid,
                           "generator " + std::to_string(k) + " certificate has nonzero remainder");
        if (!check_remainder_witness(order, bundle.generators[k], bundle.basis,
                                     cert.quotients, cert.remainder))
            return verdict(VerifyStatus::invalid,
                           "generator " + std::to_string(k) + " membership witness fails");
    }
    for (std::size_t k = 0; k < n; ++k) {
        MvPoly acc;
        for (std::size_t i = 0; i < m; ++i)
            acc += bundle.basis_certs[k][i] * bundle.generators[i];
        if (acc != bundle.basis[k])
            return verdict(VerifyStatus::invalid,
                           "basis element " + std::to_string(k) + " span identity fails");
    }
    return verdict(VerifyStatus::ok, "");
}

} // namespace groebner

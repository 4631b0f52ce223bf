#include "groebner/json_format.hpp"

#include <charconv>

namespace groebner {

namespace {

constexpr std::uint64_t kFormatVersion = 1;

using nlohmann::json;

const json& field(const json& j, const char* name) {
    if (!j.is_object())
        throw MalformedCertificateError(std::string("expected object with field \"") + name +
                                        "\"");
    auto it = j.find(name);
    if (it == j.end())
        throw MalformedCertificateError(std::string("missing field \"") + name + "\"");
    return *it;
}

std::uint64_t as_u64(const json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw MalformedCertificateError(std::string(what) + " must be an unsigned integer");
    return j.get<std::uint64_t>();
}

const json& as_array(const json& j, const char* what) {
    if (!j.is_array())
        throw MalformedCertificateError(std::string(what) + " must be an array");
    return j;
}

std::size_t parse_position_key(const std::string& key) {
    std::size_t idx = 0;
    auto [p, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
    if (ec != std::errc() || p != key.data() + key.size() || key.empty() ||
        (key.size() > 1 && key[0] == '0'))
        throw MalformedCertificateError("bad position key \"" + key + "\"");
    return idx;
}

std::vector<MvPoly> sparse_row_from_json(const json& j, std::size_t n, const char* what) {
    if (!j.is_object())
        throw MalformedCertificateError(std::string(what) + " must be an object");
    std::vector<MvPoly> out(n);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t idx = parse_position_key(it.key());
        if (idx >= n)
            throw MalformedCertificateError(std::string(what) + " position " + it.key() +
                                            " out of range");
        out[idx] = poly_from_json(it.value());
    }
    return out;
}

json sparse_row_to_json(const MonomialOrderSpec& order, const std::vector<MvPoly>& row) {
    json j = json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
        if (!row[i].is_zero()) j[std::to_string(i)] = poly_to_json(order, row[i]);
    return j;
}

std::vector<MvPoly> polys_from_json(const json& j, const char* what) {
    std::vector<MvPoly> out;
    for (const json& e : as_array(j, what)) out.push_back(poly_from_json(e));
    return out;
}

json polys_to_json(const MonomialOrderSpec& order, const std::vector<MvPoly>& ps) {
    json j = json::array();
    for (const MvPoly& p : ps) j.push_back(poly_to_json(order, p));
    return j;
}

} // namespace

json order_to_json(const MonomialOrderSpec& order) {
    json j;
    j["kind"] = to_string(order.kind());
    j["precedence"] = order.precedence();
    return j;
}

MonomialOrderSpec order_from_json(const json& j) {
    const json& kind_j = field(j, "kind");
    if (!kind_j.is_string())
        throw MalformedCertificateError("order kind must be a string");
    std::optional<OrderKind> kind = order_kind_from_string(kind_j.get<std::string>());
    if (!kind)
        throw MalformedCertificateError("unknown order kind \"" +
                                        kind_j.get<std::string>() + "\"");
    std::vector<VarIndex> precedence;
    for (const json& v : as_array(field(j, "precedence"), "order precedence"))
        precedence.push_back(as_u64(v, "precedence entry"));
    try {
        return MonomialOrderSpec(*kind, std::move(precedence));
    } catch (const std::invalid_argument& e) {
        throw MalformedCertificateError(e.what());
    }
}

json poly_to_json(const MonomialOrderSpec& order, const MvPoly& p) {
    json terms = json::array();
    for (const ExponentVector& e : support_descending(order, p)) {
        json entries = json::array();
        for (const auto& [var, exp] : e.entries())
            entries.push_back(json::array({var, exp}));
        terms.push_back(json::array({entries, p.coeff(e).to_fraction_string()}));
    }
    return terms;
}

MvPoly poly_from_json(const json& j) {
    MvPoly p;
    for (const json& term : as_array(j, "polynomial")) {
        if (!term.is_array() || term.size() != 2)
            throw MalformedCertificateError("term must be [entries, coefficient]");
        std::vector<ExponentVector::Entry> entries;
        for (const json& entry : as_array(term[0], "term exponent")) {
            if (!entry.is_array() || entry.size() != 2)
                throw MalformedCertificateError("exponent entry must be [var, exp]");
            entries.emplace_back(as_u64(entry[0], "variable"), as_u64(entry[1], "exponent"));
        }
        if (!term[1].is_string())
            throw MalformedCertificateError("coefficient must be a string");
        try {
            p += MvPoly::monomial(ExponentVector(std::move(entries)),
                                  Rational::from_string(term[1].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw MalformedCertificateError(e.what());
        } catch (const OverflowError& e) {
            throw MalformedCertificateError(e.what());
        }
    }
    return p;
}

json bundle_to_json(const CertificateBundle& bundle) {
    const MonomialOrderSpec& order = bundle.order;
    json j;
    j["format_version"] = kFormatVersion;
    j["order"] = order_to_json(order);
    j["generators"] = polys_to_json(order, bundle.generators);
    j["basis"] = polys_to_json(order, bundle.basis);

    json spairs = json::array();
    for (const SPairCertificate& cert : bundle.spair_certs) {
        json c;
        c["i"] = cert.i;
        c["j"] = cert.j;
        c["quotients"] = sparse_row_to_json(order, cert.quotients);
        spairs.push_back(std::move(c));
    }
    j["spair_certs"] = std::move(spairs);

    json gens = json::array();
    for (const MembershipCertificate& cert : bundle.generator_certs) {
        json c;
        c["quotients"] = sparse_row_to_json(order, cert.quotients);
        c["remainder"] = poly_to_json(order, cert.remainder);
        gens.push_back(std::move(c));
    }
    j["generator_certs"] = std::move(gens);

    json rows = json::array();
    for (const std::vector<MvPoly>& row : bundle.basis_certs)
        rows.push_back(sparse_row_to_json(order, row));
    j["basis_certs"] = std::move(rows);
    return j;
}

CertificateBundle bundle_from_json(const json& j) {
    if (as_u64(field(j, "format_version"), "format_version") != kFormatVersion)
        throw MalformedCertificateError("unsupported format_version");

    CertificateBundle bundle;
    bundle.order = order_from_json(field(j, "order"));
    bundle.generators = polys_from_json(field(j, "generators"), "generators");
    bundle.basis = polys_from_json(field(j, "basis"), "basis");
    const std::size_t n = bundle.basis.size();
    const std::size_t m = bundle.generators.size();

    for (const json& c : as_array(field(j, "spair_certs"), "spair_certs")) {
        SPairCertificate cert;
        cert.i = as_u64(field(c, "i"), "pair index");
        cert.j = as_u64(field(c, "j"), "pair index");
        cert.quotients = sparse_row_from_json(field(c, "quotients"), n, "quotients");
        bundle.spair_certs.push_back(std::move(cert));
    }
    for (const json& c : as_array(field(j, "generator_certs"), "generator_certs")) {
        MembershipCertificate cert;
        cert.quotients = sparse_row_from_json(field(c, "quotients"), n, "quotients");
        cert.remainder = poly_from_json(field(c, "remainder"));
        bundle.generator_certs.push_back(std::move(cert));
    }
    for (const json& row : as_array(field(j, "basis_certs"), "basis_certs"))
        bundle.basis_certs.push_back(sparse_row_from_json(row, m, "basis cofactors"));
    return bundle;
}

std::string serialize_bundle(const CertificateBundle& bundle) {
    return bundle_to_json(bundle).dump(2) + "\n";
}

CertificateBundle parse_bundle(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedCertificateError(std::string("certificate JSON: ") + e.what());
    }
    return bundle_from_json(j);
}

} // namespace groebner

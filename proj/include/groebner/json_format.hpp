#ifndef GROEBNER_JSON_FORMAT_HPP
#define GROEBNER_JSON_FORMAT_HPP

#include <string>

#include <json.hpp>

#include "groebner/groebner.hpp"

namespace groebner {

/// Wire format of a certificate bundle (format_version 1):
///   order: {"kind": "lex"|"grlex"|"grevlex", "precedence": [ids]}
///   polynomials: list of terms [[ [var,exp], ... ], "num/den"], terms
///     descending under the bundle's order, exponent entries ascending by
///     variable, coefficients in lowest terms with positive denominator
///   quotient maps and cofactor rows: objects keyed by decimal position,
///     zero entries omitted
/// Serialization is deterministic, so parse followed by serialize reproduces
/// the bytes exactly.

nlohmann::json order_to_json(const MonomialOrderSpec& order);
MonomialOrderSpec order_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const MonomialOrderSpec& order, const MvPoly& p);
MvPoly poly_from_json(const nlohmann::json& j);

nlohmann::json bundle_to_json(const CertificateBundle& bundle);
/// Throws MalformedCertificateError on any structural defect: wrong version,
/// missing or mistyped field, bad coefficient string, quotient key out of
/// range.
CertificateBundle bundle_from_json(const nlohmann::json& j);

std::string serialize_bundle(const CertificateBundle& bundle);
CertificateBundle parse_bundle(const std::string& text);

} // namespace groebner

#endif

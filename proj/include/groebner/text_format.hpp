#ifndef GROEBNER_TEXT_FORMAT_HPP
#define GROEBNER_TEXT_FORMAT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groebner/poly.hpp"

namespace groebner {

/// Parses a polynomial expression. Grammar:
///
///   poly   := [sign] term (sign term)*
///   term   := factor ('*' factor)*
///   factor := number ['/' number] | 'x' id ['^' number]
///
/// Whitespace is insignificant between tokens. Numeric factors multiply into
/// the coefficient; exponents of repeated variables add. When `allowed` is
/// non-null, a variable outside it is an error. Failures throw ParseError
/// with 1-based line and column.
MvPoly parse_poly(const std::string& text,
                  const std::vector<VarIndex>* allowed = nullptr);

/// Prints terms descending under the order, each monomial's variables in
/// descending precedence: "x1^2 + x1*x2 - 3/2". parse_poly inverts this for
/// every polynomial.
std::string print_poly(const MonomialOrderSpec& order, const MvPoly& p);

/// Line-based problem description:
///
///   # comment
///   order: lex
///   vars: x0 x1 x2
///   poly f1 = x0 + x1 + x2
///   basis: f1 f2 f3
///
/// Header lines (`order:`, `vars:`) must precede the first declaration. A
/// `vars:` line restricts every later polynomial to the listed variables and
/// fixes their precedence (first = highest). Any other `key: value` line is
/// a query field interpreted by the command; duplicate keys are errors.
struct ProblemFile {
    std::optional<OrderKind> order;
    std::vector<VarIndex> vars;
    std::vector<std::pair<std::string, MvPoly>> decls;
    std::map<std::string, std::string> fields;

    const MvPoly* find(const std::string& name) const;
};

ProblemFile parse_problem_file(const std::string& text);

/// Splits on whitespace and commas, dropping empties.
std::vector<std::string> split_tokens(const std::string& text);

/// Parses "x<id>", e.g. "x12". Throws ParseError on anything else.
VarIndex parse_var_name(const std::string& token);

} // namespace groebner

#endif

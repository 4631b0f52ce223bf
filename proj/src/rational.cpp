#include "groebner/rational.hpp"

#include <cctype>
#include <ostream>

namespace groebner {

Rational Rational::from_string(const std::string& text) {
    auto bad = [&]() -> Rational {
        throw std::invalid_argument("malformed rational \"" + text + "\"");
    };
    if (text.empty()) return bad();

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::size_t num_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) return bad();
    mpz_class num(text.substr(num_begin, pos - num_begin));

    mpz_class den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') return bad();
        ++pos;
        std::size_t den_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_begin || pos != text.size()) return bad();
        den = mpz_class(text.substr(den_begin, pos - den_begin));
        if (den == 0) return bad();
    }

    mpq_class q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_str();
}

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace groebner

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "groebner/division.hpp"
#include "oracles.hpp"

using namespace groebner;
using namespace testutil;

namespace {

const MonomialOrderSpec kLex(OrderKind::lex);

MvPoly expand(const std::vector<MvPoly>& quotients, const std::vector<MvPoly>& divisors,
              const MvPoly& remainder) {
    MvPoly acc = remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) acc += quotients[i] * divisors[i];
    return acc;
}

std::vector<MvPoly> reduced_cyclic3() {
    return {P("x0 + x1 + x2"), P("x1^2 + x1*x2 + x2^2"), P("x2^3 - 1")};
}

} // namespace

TEST_CASE("the running S-polynomial reduces to zero with the known witness") {
    auto G = reduced_cyclic3();
    MvPoly s = P("-x0*x1*x2 - x0*x2^2 + x1^3 + x1^2*x2");

    DivisionResult r = divide(kLex, s, G);
    CHECK(r.remainder.is_zero());
    CHECK(expand(r.quotients, G, r.remainder) == s);
    CHECK(check_remainder_witness(kLex, s, G, r.quotients, r.remainder));

    // the witness can also be written down independently of divide
    std::vector<MvPoly> quotients = {P("-x1*x2 - x2^2"), P("x1 + x2"), MvPoly()};
    CHECK(check_remainder_witness(kLex, s, G, quotients, MvPoly()));
}

TEST_CASE("division by the empty family returns the dividend") {
    MvPoly f = P("x0^2*x1 - 3");
    DivisionResult r = divide(kLex, f, {});
    CHECK(r.quotients.empty());
    CHECK(r.remainder == f);
    CHECK(check_remainder_witness(kLex, f, {}, {}, f));
}

TEST_CASE("single divisor leaves an irreducible remainder") {
    MvPoly f = P("x0^2*x1");
    MvPoly g1 = P("x0 + x1 + x2");
    DivisionResult r = divide(kLex, f, {g1});
    CHECK(check_remainder_witness(kLex, f, {g1}, r.quotients, r.remainder));
    for (const ExponentVector& e : support_descending(kLex, r.remainder))
        CHECK(e.exponent(0) == 0);
}

TEST_CASE("zero divisors are skipped but keep their quotient slot") {
    MvPoly f = P("x1^2 + 1");
    std::vector<MvPoly> divisors = {MvPoly(), P("x1^2 + x1*x2 + x2^2")};
    DivisionResult r = divide(kLex, f, divisors);
    CHECK(r.quotients.size() == 2);
    CHECK(r.quotients[0].is_zero());
    CHECK(r.quotients[1] == P("1"));
    CHECK(r.remainder == P("-x1*x2 - x2^2 + 1"));
    CHECK(check_remainder_witness(kLex, f, divisors, r.quotients, r.remainder));
}

TEST_CASE("witness checking is exact, not heuristic") {
    auto G = reduced_cyclic3();
    MvPoly s = P("-x0*x1*x2 - x0*x2^2 + x1^3 + x1^2*x2");
    std::vector<MvPoly> good = {P("-x1*x2 - x2^2"), P("x1 + x2"), MvPoly()};

    SUBCASE("perturbing one cofactor breaks the identity") {
        std::vector<MvPoly> bad = good;
        bad[1] += P("1");
        CHECK_FALSE(check_remainder_witness(kLex, s, G, bad, MvPoly()));
    }
    SUBCASE("perturbing the remainder breaks the identity") {
        CHECK_FALSE(check_remainder_witness(kLex, s, G, good, P("1")));
    }
    SUBCASE("a remainder term divisible by a leading monomial is rejected") {
        // x1^2 = 1*g2 + (-x1*x2 - x2^2) is fine, but x1^2 = 0*g2 + x1^2 is not
        std::vector<MvPoly> g2 = {P("x1^2 + x1*x2 + x2^2")};
        CHECK(check_remainder_witness(kLex, P("x1^2"), g2, {P("1")},
                                      P("-x1*x2 - x2^2")));
        CHECK_FALSE(check_remainder_witness(kLex, P("x1^2"), g2, {MvPoly()}, P("x1^2")));
    }
    SUBCASE("quotient count must match the divisor count") {
        CHECK_THROWS_AS(check_remainder_witness(kLex, s, G, {MvPoly()}, s),
                        std::invalid_argument);
    }
}

TEST_CASE("the degree bound is checked on its own") {
    // x0^2 = x0*(x1^2 + x0) - x0*x1^2 holds as an identity with remainder 0,
    // but under grlex the summand degrees (1,2) exceed deg(x0^2) = (2,0).
    MonomialOrderSpec grlex(OrderKind::grlex);
    MvPoly f = P("x0^2");
    std::vector<MvPoly> divisors = {P("x1^2 + x0"), P("x1^2")};
    std::vector<MvPoly> quotients = {P("x0"), P("-x0")};
    CHECK(expand(quotients, divisors, MvPoly()) == f);
    CHECK(is_fully_reduced(grlex, MvPoly(), divisors));
    CHECK_FALSE(check_remainder_witness(grlex, f, divisors, quotients, MvPoly()));
    // under lex the same data satisfies the bound: (1,2) < (2,0)
    CHECK(check_remainder_witness(kLex, f, divisors, quotients, MvPoly()));
}

TEST_CASE("zero-quotient witnesses characterize full reduction") {
    auto G = reduced_cyclic3();
    std::vector<MvPoly> zeros(G.size());
    CHECK(check_remainder_witness(kLex, P("x1*x2 + 1"), G, zeros, P("x1*x2 + 1")));
    CHECK(check_remainder_witness(kLex, MvPoly(), G, zeros, MvPoly()));
    CHECK_FALSE(check_remainder_witness(kLex, P("x1^2"), G, zeros, P("x1^2")));
}

TEST_CASE("is_fully_reduced examples") {
    auto G = reduced_cyclic3();
    CHECK(is_fully_reduced(kLex, P("x1*x2 + 1"), G));
    CHECK(is_fully_reduced(kLex, MvPoly(), G));
    CHECK_FALSE(is_fully_reduced(kLex, P("x1^2"), {P("x1^2 + x1*x2 + x2^2")}));
    CHECK_FALSE(is_fully_reduced(kLex, P("x0*x2 + x1"), G));
    CHECK(is_fully_reduced(kLex, P("x0"), {MvPoly()}));
    CHECK(is_fully_reduced(kLex, P("x0"), {}));
}

TEST_CASE("division satisfies its own witness on random instances") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::size_t> divisor_count(0, 3);
    int nonzero_remainders = 0;
    for (OrderKind kind : {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex}) {
        MonomialOrderSpec order(kind);
        for (int i = 0; i < 400; ++i) {
            MvPoly f = random_poly(rng, 2, 4, 5, 5);
            std::vector<MvPoly> divisors;
            std::size_t n = divisor_count(rng);
            for (std::size_t k = 0; k < n; ++k)
                divisors.push_back(random_poly(rng, 2, 3, 3, 5));
            DivisionResult r = divide(order, f, divisors);
            REQUIRE(r.quotients.size() == divisors.size());
            CHECK(check_remainder_witness(order, f, divisors, r.quotients, r.remainder));
            if (!r.remainder.is_zero()) ++nonzero_remainders;
        }
    }
    CHECK(nonzero_remainders > 0);
}

TEST_CASE("remainders depend on divisor sequence order") {
    // classic two-variable example, lex with x0 > x1
    MvPoly f = P("x0^2*x1 + x0*x1^2 + x1^2");
    MvPoly a = P("x0*x1 - 1");
    MvPoly b = P("x1^2 - 1");

    DivisionResult r1 = divide(kLex, f, {a, b});
    CHECK(r1.remainder == P("x0 + x1 + 1"));
    CHECK(r1.quotients[0] == P("x0 + x1"));
    CHECK(r1.quotients[1] == P("1"));
    CHECK(check_remainder_witness(kLex, f, {a, b}, r1.quotients, r1.remainder));

    DivisionResult r2 = divide(kLex, f, {b, a});
    CHECK(r2.remainder == P("2*x0 + 1"));
    CHECK(check_remainder_witness(kLex, f, {b, a}, r2.quotients, r2.remainder));

    CHECK(r1.remainder != r2.remainder);
}

TEST_CASE("zero remainder yields an explicit span representation") {
    std::mt19937_64 rng(67);
    auto G = reduced_cyclic3();
    for (int i = 0; i < 100; ++i) {
        // an element of the span: random cofactor combination
        MvPoly f;
        for (const MvPoly& g : G) f += random_poly(rng, 2, 2, 3, 4) * g;
        DivisionResult r = divide(kLex, f, G);
        CHECK(r.remainder.is_zero());
        CHECK(expand(r.quotients, G, r.remainder) == f);
    }
}

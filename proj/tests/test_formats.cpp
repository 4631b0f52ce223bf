#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groebner/json_format.hpp"
#include "groebner/text_format.hpp"
#include "oracles.hpp"

using namespace groebner;
using namespace testutil;

namespace {

const MonomialOrderSpec kLex(OrderKind::lex);

CertificateBundle cyclic3_bundle() {
    std::vector<MvPoly> gens = {P("x0 + x1 + x2"), P("x0*x1 + x1*x2 + x2*x0"),
                                P("x0*x1*x2 - 1")};
    return make_certificate_bundle(reduced_groebner(kLex, gens));
}

} // namespace

TEST_CASE("polynomial parsing") {
    CHECK(parse_poly("x0*x1*x2 - 1") ==
          MvPoly::monomial(ExponentVector({{0, 1}, {1, 1}, {2, 1}}), Rational(1)) +
              MvPoly::constant(Rational(-1)));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("3/2*x2 - x2^1 + 1/2*x2") == MvPoly::variable(2));
    CHECK(parse_poly("x0^0") == MvPoly::constant(Rational(1)));
    CHECK(parse_poly("7/3") == MvPoly::constant(Rational(7, 3)));
    CHECK(parse_poly("-x0") == -MvPoly::variable(0));
    CHECK(parse_poly("+x0 - 0") == MvPoly::variable(0));
    CHECK(parse_poly("2*3*x0") == Rational(6) * MvPoly::variable(0));
    CHECK(parse_poly("x0*x0") == parse_poly("x0^2"));
    CHECK(parse_poly("x0*2") == parse_poly("2*x0"));
    CHECK(parse_poly(" \t x0   +\n x1 ") == parse_poly("x0 + x1"));
    CHECK(parse_poly("x0^18446744073709551615").term_count() == 1);
    CHECK(parse_poly("x18446744073709551615") == MvPoly::variable(~VarIndex(0)));
}

TEST_CASE("parse errors carry positions") {
    auto position = [](const std::string& text) {
        try {
            parse_poly(text);
        } catch (const ParseError& e) {
            return std::pair<std::size_t, std::size_t>(e.line(), e.column());
        }
        return std::pair<std::size_t, std::size_t>(0, 0);
    };
    CHECK(position("x0 + @") == std::pair<std::size_t, std::size_t>(1, 6));
    CHECK(position("x0 +\n @") == std::pair<std::size_t, std::size_t>(2, 2));

    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0^18446744073709551616"), ParseError);
    CHECK(parse_poly("18446744073709551616") ==
          parse_poly("2") * parse_poly("9223372036854775808"));
    CHECK_THROWS_AS(parse_poly("x0 +"), ParseError);
    CHECK_THROWS_AS(parse_poly("*x0"), ParseError);

    std::vector<VarIndex> allowed = {0, 1};
    CHECK_THROWS_AS(parse_poly("x2", &allowed), ParseError);
    CHECK(parse_poly("x0*x1", &allowed) == parse_poly("x0*x1"));
}

TEST_CASE("printing is the inverse of parsing") {
    CHECK(print_poly(kLex, P("x1^2 + x1*x2 + x2^2")) == "x1^2 + x1*x2 + x2^2");
    CHECK(print_poly(kLex, P("-x0*x1*x2 - x0*x2^2 + x1^3 + x1^2*x2")) ==
          "-x0*x1*x2 - x0*x2^2 + x1^3 + x1^2*x2");
    CHECK(print_poly(kLex, MvPoly()) == "0");
    CHECK(print_poly(kLex, P("-3/2")) == "-3/2");
    CHECK(print_poly(kLex, P("x0 - 1")) == "x0 - 1");
    CHECK(print_poly(kLex, P("-x0 + x1")) == "-x0 + x1");
    CHECK(print_poly(kLex, P("1")) == "1");
    CHECK(print_poly(kLex, P("2*x0^3")) == "2*x0^3");

    // terms and variables follow the order's precedence
    MonomialOrderSpec listed(OrderKind::lex, {2, 0, 1});
    CHECK(print_poly(listed, P("x1^2 + x1*x2 + x2^2")) == "x2^2 + x2*x1 + x1^2");

    std::mt19937_64 rng(137);
    for (OrderKind kind : {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex}) {
        MonomialOrderSpec order(kind);
        for (int i = 0; i < 150; ++i) {
            MvPoly p = random_poly(rng, 3, 4, 6, 9);
            CHECK(parse_poly(print_poly(order, p)) == p);
        }
    }
}

TEST_CASE("problem files") {
    ProblemFile pf = parse_problem_file("# the running example\n"
                                        "order: lex\n"
                                        "vars: x0 x1 x2\n"
                                        "\n"
                                        "poly f1 = x0 + x1 + x2\n"
                                        "poly f2 = x0*x1 + x1*x2 + x2*x0\n"
                                        "poly f3 = x0*x1*x2 - 1\n"
                                        "basis: f1 f2 f3\n"
                                        "dividend: f3\n");
    CHECK(pf.order == OrderKind::lex);
    CHECK(pf.vars == std::vector<VarIndex>{0, 1, 2});
    REQUIRE(pf.decls.size() == 3);
    CHECK(pf.decls[0].first == "f1");
    CHECK(*pf.find("f3") == P("x0*x1*x2 - 1"));
    CHECK(pf.find("zzz") == nullptr);
    CHECK(pf.fields.at("basis") == "f1 f2 f3");
    CHECK(pf.fields.at("dividend") == "f3");

    ProblemFile bare = parse_problem_file("poly p = x5^2 - x9\n");
    CHECK_FALSE(bare.order.has_value());
    CHECK(bare.vars.empty());
    CHECK(*bare.find("p") == P("x5^2 - x9"));
}

TEST_CASE("problem file errors") {
    CHECK_THROWS_AS(parse_problem_file("order: weird\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("order: lex\norder: lex\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("vars: x0\nvars: x1\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("vars: x0 x0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("vars: y1\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("vars:\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("poly p = x0\norder: lex\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("poly p = x0\nvars: x0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("poly p = x0\npoly p = x1\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("poly = x0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("poly p x0\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("what is this\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("basis: a\nbasis: b\n"), ParseError);
    CHECK_THROWS_AS(parse_problem_file("vars: x0\npoly p = x1\n"), ParseError);

    // positions point into the embedded expression
    try {
        parse_problem_file("order: lex\npoly p = x0 + @\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 15);
    }
}

TEST_CASE("token splitting and variable names") {
    CHECK(split_tokens(" a,b  c ,,d ") == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(split_tokens("") == std::vector<std::string>{});
    CHECK(parse_var_name("x0") == VarIndex(0));
    CHECK(parse_var_name("x123") == VarIndex(123));
    CHECK_THROWS_AS(parse_var_name("x"), ParseError);
    CHECK_THROWS_AS(parse_var_name("y2"), ParseError);
    CHECK_THROWS_AS(parse_var_name("x2b"), ParseError);
    CHECK_THROWS_AS(parse_var_name("x-1"), ParseError);
}

TEST_CASE("order and polynomial JSON round trips") {
    MonomialOrderSpec listed(OrderKind::grevlex, {2, 0});
    MonomialOrderSpec back = order_from_json(order_to_json(listed));
    CHECK(back.kind() == OrderKind::grevlex);
    CHECK(back.precedence() == std::vector<VarIndex>{2, 0});

    std::mt19937_64 rng(139);
    for (int i = 0; i < 100; ++i) {
        MvPoly p = random_poly(rng, 3, 4, 6, 9);
        CHECK(poly_from_json(poly_to_json(kLex, p)) == p);
    }
}

TEST_CASE("bundle serialization is deterministic and bit-exact") {
    CertificateBundle bundle = cyclic3_bundle();
    std::string text = serialize_bundle(bundle);
    CertificateBundle reparsed = parse_bundle(text);
    CHECK(serialize_bundle(reparsed) == text);
    CHECK(verify_certificates(reparsed).status == VerifyStatus::ok);

    // the reparsed bundle is the same object, field by field
    CHECK(reparsed.generators == bundle.generators);
    CHECK(reparsed.basis == bundle.basis);
    REQUIRE(reparsed.spair_certs.size() == bundle.spair_certs.size());
    for (std::size_t k = 0; k < bundle.spair_certs.size(); ++k) {
        CHECK(reparsed.spair_certs[k].i == bundle.spair_certs[k].i);
        CHECK(reparsed.spair_certs[k].j == bundle.spair_certs[k].j);
        CHECK(reparsed.spair_certs[k].quotients == bundle.spair_certs[k].quotients);
    }
    CHECK(reparsed.basis_certs == bundle.basis_certs);
}

TEST_CASE("malformed bundles are rejected at decode time") {
    nlohmann::json good = bundle_to_json(cyclic3_bundle());
    CHECK_NOTHROW(bundle_from_json(good));

    auto expect_malformed = [](nlohmann::json j) {
        CHECK_THROWS_AS(bundle_from_json(j), MalformedCertificateError);
    };

    nlohmann::json j = good;
    j["format_version"] = 2;
    expect_malformed(j);

    j = good;
    j.erase("basis");
    expect_malformed(j);

    j = good;
    j["order"]["kind"] = "deglex";
    expect_malformed(j);

    j = good;
    j["order"]["precedence"] = nlohmann::json::array({0, 0});
    expect_malformed(j);

    j = good;
    j["spair_certs"][0]["i"] = -1;
    expect_malformed(j);

    j = good;
    j["spair_certs"][0]["quotients"]["03"] = nlohmann::json::array();
    expect_malformed(j);

    j = good;
    j["spair_certs"][0]["quotients"]["9"] = nlohmann::json::array();
    expect_malformed(j);

    j = good;
    j["spair_certs"][0]["quotients"]["x"] = nlohmann::json::array();
    expect_malformed(j);

    j = good;
    j["basis"][0][0][1] = "1.5";
    expect_malformed(j);

    j = good;
    j["basis"][0][0][1] = 15;
    expect_malformed(j);

    j = good;
    j["basis"][0][0][0][0][1] = -3;
    expect_malformed(j);

    j = good;
    j["generator_certs"][0].erase("remainder");
    expect_malformed(j);

    CHECK_THROWS_AS(parse_bundle("not json at all"), MalformedCertificateError);
    CHECK_THROWS_AS(parse_bundle("{}"), MalformedCertificateError);
}

TEST_CASE("decode errors versus verification errors") {
    // a bundle can decode cleanly yet fail verification; decoding alone
    // never inspects the mathematics
    nlohmann::json j = bundle_to_json(cyclic3_bundle());
    j["basis"][2] = poly_to_json(kLex, P("x2^3 + 1"));
    CertificateBundle tampered = bundle_from_json(j);
    CHECK(verify_certificates(tampered).status == VerifyStatus::invalid);
}

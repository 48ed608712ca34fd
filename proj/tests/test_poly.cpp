#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corack/poly.hpp"

#include <random>

using namespace corack;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

MultiPoly rand_poly(std::mt19937 &rng, const VarListPtr &vars, const Field &f,
                    int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-4, 4);
    MultiPoly p(vars, f);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(vars->size());
        for (auto &x : e)
            x = deg(rng);
        p.add_term(e, FieldElem::from_int(f, coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic basics") {
    auto vars = make_vars({"x", "y"});
    auto parse = [&](const std::string &s) { return MultiPoly::parse(vars, Q, s); };

    CHECK(parse("(x+1)*(x-1)") == parse("x^2-1"));
    CHECK(parse("x^2+x*y") + MultiPoly(vars, Q) == parse("x^2+x*y"));

    auto vars2 = make_vars({"x", "y"});
    auto f2 = [&](const std::string &s) { return MultiPoly::parse(vars2, F2, s); };
    CHECK(f2("(x+y)^2") == f2("x^2+y^2"));
}

TEST_CASE("mismatched variable lists rejected") {
    auto a = MultiPoly::parse(make_vars({"x"}), Q, "x");
    auto b = MultiPoly::parse(make_vars({"y"}), Q, "y");
    CHECK_THROWS_AS(a + b, PolyError);
    auto c = MultiPoly::parse(make_vars({"x"}), F2, "x");
    CHECK_THROWS_AS(a * c, PolyError);
}

TEST_CASE("substitution") {
    auto vars = make_vars({"x", "y"});
    auto tvars = make_vars({"u", "v", "y"});
    auto p = MultiPoly::parse(vars, Q, "x^2");
    std::map<std::string, MultiPoly> sigma{
        {"x", MultiPoly::parse(tvars, Q, "y+1")},
        {"y", MultiPoly::parse(tvars, Q, "y")}};
    CHECK(p.substitute(sigma) == MultiPoly::parse(tvars, Q, "y^2+2*y+1"));

    auto q = MultiPoly::parse(vars, Q, "x*y");
    std::map<std::string, MultiPoly> unit{{"x", MultiPoly::parse(tvars, Q, "1")},
                                          {"y", MultiPoly::parse(tvars, Q, "y")}};
    CHECK(q.substitute(unit) == MultiPoly::parse(tvars, Q, "y"));

    auto r = MultiPoly::parse(vars, Q, "x+y");
    std::map<std::string, MultiPoly> cancel{
        {"x", MultiPoly::parse(tvars, Q, "u*v")},
        {"y", MultiPoly::parse(tvars, Q, "-u*v")}};
    CHECK(r.substitute(cancel).is_zero());

    std::map<std::string, MultiPoly> missing{{"x", MultiPoly::parse(tvars, Q, "u")}};
    CHECK_THROWS_AS(r.substitute(missing), PolyError);
}

TEST_CASE("partial derivatives") {
    auto vars = make_vars({"x"});
    CHECK(MultiPoly::parse(vars, Q, "x^3").partial("x") ==
          MultiPoly::parse(vars, Q, "3*x^2"));

    auto m = make_vars({"a", "b", "c", "d"});
    CHECK(MultiPoly::parse(m, Q, "a*d-b*c").partial("a") ==
          MultiPoly::parse(m, Q, "d"));

    CHECK(MultiPoly::parse(vars, F2, "x^2").partial("x").is_zero());
    CHECK_THROWS_AS(MultiPoly::parse(vars, Q, "x").partial("z"), PolyError);
}

TEST_CASE("evaluation") {
    auto m = make_vars({"a", "b", "c", "d"});
    std::map<std::string, FieldElem> id{{"a", FieldElem::one(Q)},
                                        {"b", FieldElem::zero(Q)},
                                        {"c", FieldElem::zero(Q)},
                                        {"d", FieldElem::one(Q)}};
    CHECK(MultiPoly::parse(m, Q, "a*d-b*c").eval(id) == FieldElem::one(Q));

    auto xy = make_vars({"x", "y"});
    std::map<std::string, FieldElem> pt{{"x", FieldElem::parse(Q, "1/2")},
                                        {"y", FieldElem::parse(Q, "1/3")}};
    CHECK(MultiPoly::parse(xy, Q, "x+y").eval(pt) == FieldElem::parse(Q, "5/6"));

    auto x = make_vars({"x"});
    std::map<std::string, FieldElem> one{{"x", FieldElem::one(F2)}};
    CHECK(MultiPoly::parse(x, F2, "x^2+x").eval(one).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (const Field &f : {Q, F2, Field::prime(5)}) {
        auto vars = make_vars({"x", "y", "z"});
        for (int i = 0; i < 40; ++i) {
            auto a = rand_poly(rng, vars, f);
            auto b = rand_poly(rng, vars, f);
            auto c = rand_poly(rng, vars, f);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            // Leibniz rule for formal partials
            CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
        }
    }
}

TEST_CASE("substitution commutes with evaluation") {
    std::mt19937 rng(11);
    auto vars = make_vars({"x", "y"});
    auto tvars = make_vars({"u", "v"});
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < 30; ++i) {
        auto p = rand_poly(rng, vars, Q);
        std::vector<MultiPoly> sigma{rand_poly(rng, tvars, Q, 3, 2),
                                     rand_poly(rng, tvars, Q, 3, 2)};
        std::vector<FieldElem> pt{FieldElem::from_int(Q, coef(rng)),
                                  FieldElem::from_int(Q, coef(rng))};
        std::vector<FieldElem> pushed{sigma[0].eval(pt), sigma[1].eval(pt)};
        CHECK(p.substitute(sigma).eval(pt) == p.eval(pushed));
    }
}

TEST_CASE("canonical text round-trip") {
    auto vars = make_vars({"s11", "t_1", "x"});
    for (const char *s : {"s11^2*t_1 - 2*x + 1", "-1/2*x^3 + s11", "0", "x"}) {
        auto p = MultiPoly::parse(vars, Q, s);
        CHECK(p.to_string() == s);
        CHECK(MultiPoly::parse(vars, Q, p.to_string()) == p);
    }
}

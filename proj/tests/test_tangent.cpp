#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corack/finite.hpp"
#include "corack/tangent.hpp"

#include <random>

using namespace corack;

namespace {

const Field Q = Field::rationals();

PresPtr free_algebra(std::vector<std::string> names) {
    std::vector<FieldElem> eps(names.size(), FieldElem::zero(Q));
    return Presentation::make(Q, std::move(names), {}, std::nullopt,
                              std::move(eps));
}

Vec unit_vec(std::size_t n, std::size_t i, const Field &f) {
    Vec v(n, FieldElem::zero(f));
    v[i] = FieldElem::one(f);
    return v;
}

// commutator of the 2x2 matrices encoded row-major in u and v
Vec mat_commutator(const Vec &u, const Vec &v) {
    const Field &f = u[0].field();
    Vec w(4, FieldElem::zero(f));
    auto at = [](const Vec &m, std::size_t r, std::size_t c) {
        return m[2 * r + c];
    };
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t k = 0; k < 2; ++k)
                w[2 * r + c] = w[2 * r + c] + at(u, r, k) * at(v, k, c) -
                               at(v, r, k) * at(u, k, c);
    return w;
}

} // namespace

TEST_CASE("derivation bases") {
    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto B = derivation_basis(gl2);
    REQUIRE(B.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(B[i].values == unit_vec(4, i, Q));

    auto sl2 = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    auto S = derivation_basis(sl2);
    REQUIRE(S.size() == 3);
    for (const auto &D : S)
        CHECK((D.values[0] + D.values[3]).is_zero()); // traceless
    CHECK(S[0].values == Vec{FieldElem::one(Q), FieldElem::zero(Q),
                             FieldElem::zero(Q), -FieldElem::one(Q)});
    CHECK(S[1].values == unit_vec(4, 1, Q));
    CHECK(S[2].values == unit_vec(4, 2, Q));

    // functions on a finite rack are reduced: no tangent vectors at all
    auto d3 = dual_corack(conj_of_group(symmetric_group(3)), Q);
    CHECK(derivation_basis(d3).empty());

    // values with nonzero trace violate the SL_2 relation to first order
    CHECK_THROWS_AS(make_derivation(sl2.A, unit_vec(4, 0, Q)), TangentError);
}

TEST_CASE("derive handles products and denominator powers") {
    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto B = derivation_basis(gl2);
    // d/ds11 of det^-1 at the identity is -1
    AlgElem det_inv = AlgElem::one(gl2.A);
    det_inv.den_pow = 1;
    CHECK(derive(B[0], det_inv) == -FieldElem::one(Q));
    CHECK(derive(B[1], det_inv).is_zero());
    CHECK(derive(B[3], det_inv) == -FieldElem::one(Q));
    CHECK(derive(B[0], AlgElem::one(gl2.A)).is_zero());

    auto ol1 = ol_corack(1, Q);
    auto ob = derivation_basis(ol1);
    REQUIRE(ob.size() == 2);
    auto st = AlgElem::parse(ol1.A, "s11*t1");
    CHECK(derive(ob[1], st) == FieldElem::one(Q)); // product rule at (1, 0)

    CHECK_THROWS_AS(derive(ob[0], AlgElem::one(gl2.A)), TangentError);
}

TEST_CASE("psi contracts the first tensor leg") {
    auto triv = trivial_corack(free_algebra({"x", "y"}));
    auto tb = derivation_basis(triv);
    REQUIRE(tb.size() == 2);
    for (const auto &D : tb)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(psi(triv, D, AlgElem::generator(triv.A, i))
                      .is_structural_zero());

    auto ol1 = ol_corack(1, Q);
    auto ob = derivation_basis(ol1);
    auto t = AlgElem::parse(ol1.A, "t1");
    CHECK(elem_equal(psi(ol1, ob[0], t), t)); // nabla t = s (x) t, X(s) = 1
    CHECK(psi(ol1, ob[1], t).is_structural_zero());
    CHECK(psi(ol1, ob[0], AlgElem::one(ol1.A)).is_structural_zero());
}

TEST_CASE("brackets against hand and matrix oracles") {
    auto ol1 = ol_corack(1, Q);
    auto ob = derivation_basis(ol1);
    CHECK(bracket(ol1, ob[0], ob[1]).values == ob[1].values); // [X,V] = V
    for (const auto &z : bracket(ol1, ob[1], ob[0]).values)
        CHECK(z.is_zero()); // [V,X] = 0

    auto triv = trivial_corack(free_algebra({"x", "y"}));
    auto tb = derivation_basis(triv);
    for (const auto &D : tb)
        for (const auto &E : tb)
            for (const auto &z : bracket(triv, D, E).values)
                CHECK(z.is_zero());

    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto B = derivation_basis(gl2);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(bracket(gl2, B[i], B[j]).values ==
                  mat_commutator(B[i].values, B[j].values));
}

TEST_CASE("structure constants") {
    auto gl1 = conj_corack(stock_hopf(StockGroup::GL, 1, Q));
    auto g1 = structure_constants(gl1);
    REQUIRE(g1.dim == 1);
    CHECK(g1.basis == std::vector<std::string>{"s11"});
    CHECK(g1.c[0][0][0].is_zero());

    auto ol1 = structure_constants(ol_corack(1, Q));
    REQUIRE(ol1.dim == 2);
    CHECK(ol1.basis == std::vector<std::string>{"s11", "t1"});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                bool expect = i == 0 && j == 1 && k == 1; // [X,V] = V only
                CHECK(ol1.c[i][j][k].is_zero() == !expect);
            }

    // SL_2: expand matrix commutators of the tangent basis in the same basis
    auto sl2C = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    auto S = derivation_basis(sl2C);
    auto g = structure_constants(sl2C);
    REQUIRE(g.dim == 3);
    CHECK(g.basis == std::vector<std::string>{"s11", "s12", "s21"});
    Mat rows;
    std::vector<std::size_t> pivots{0, 1, 2};
    for (const auto &D : S)
        rows.push_back(D.values);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto coords = rowspace_coords(
                rows, pivots, mat_commutator(S[i].values, S[j].values));
            REQUIRE(coords.has_value());
            CHECK(g.c[i][j] == *coords);
        }
}

TEST_CASE("dual-number points") {
    auto ol1 = ol_corack(1, Q);
    auto ob = derivation_basis(ol1);
    auto zero_d = make_derivation(ol1.A, Vec(2, FieldElem::zero(Q)));
    auto pt0 = lift_point(zero_d);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(pt0[i].a == ol1.A->counit[i]);
        CHECK(pt0[i].b.is_zero());
    }
    auto ptX = lift_point(ob[0]); // s -> 1 + delta, t -> 0
    CHECK(ptX[0].a.is_one());
    CHECK(ptX[0].b.is_one());
    CHECK(ptX[1].a.is_zero());
    CHECK(ptX[1].b.is_zero());

    // relations really are re-checked over dual numbers
    auto sl2 = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    Derivation bad{sl2.A, unit_vec(4, 0, Q)};
    CHECK_THROWS_AS(lift_point(bad), TangentError);
    for (const auto &D : derivation_basis(sl2))
        CHECK(lift_point(D).size() == 4);
}

TEST_CASE("left translation by a dual point") {
    auto triv = trivial_corack(free_algebra({"x", "y"}));
    auto tb = derivation_basis(triv);
    auto x = AlgElem::generator(triv.A, 0);
    auto L = l_sharp(triv, tb[0], x);
    CHECK(elem_equal(L.a, x));
    CHECK(L.b.is_structural_zero());

    auto ol1 = ol_corack(1, Q);
    auto ob = derivation_basis(ol1);
    auto t = AlgElem::parse(ol1.A, "t1");
    auto Lt = l_sharp(ol1, ob[0], t); // (1 + delta) t
    CHECK(elem_equal(Lt.a, t));
    CHECK(elem_equal(Lt.b, t));
    auto Lone = l_sharp(ol1, ob[0], AlgElem::one(ol1.A));
    CHECK(elem_equal(Lone.a, AlgElem::one(ol1.A)));
    CHECK(Lone.b.is_structural_zero());
}

TEST_CASE("l_sharp equals (a, psi(a)) on random low-degree elements") {
    std::vector<CorackAlgebra> cs;
    cs.push_back(trivial_corack(free_algebra({"x", "y"})));
    cs.push_back(ol_corack(1, Q));
    cs.push_back(conj_corack(stock_hopf(StockGroup::Heis, 0, Q)));
    cs.push_back(conj_corack(stock_hopf(StockGroup::SL, 2, Q)));
    cs.push_back(conj_corack(stock_hopf(StockGroup::GL, 2, Q)));
    std::mt19937 rng(20240817);
    for (const auto &C : cs) {
        auto B = derivation_basis(C);
        if (B.empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick_gen(
            0, C.A->ngens() - 1);
        std::uniform_int_distribution<std::size_t> pick_d(0, B.size() - 1);
        std::uniform_int_distribution<int> pick_deg(1, 3);
        for (int trial = 0; trial < 3; ++trial) {
            AlgElem a = AlgElem::one(C.A);
            int deg = pick_deg(rng);
            for (int d = 0; d < deg; ++d)
                a = a * AlgElem::generator(C.A, pick_gen(rng));
            const auto &D = B[pick_d(rng)];
            auto L = l_sharp(C, D, a);
            CHECK(elem_equal(L.a, a));
            CHECK(elem_equal(L.b, psi(C, D, a)));
        }
    }
}

TEST_CASE("adjoint action through dual numbers equals the bracket") {
    std::vector<CorackAlgebra> cs;
    cs.push_back(ol_corack(1, Q));
    cs.push_back(conj_corack(stock_hopf(StockGroup::Heis, 0, Q)));
    cs.push_back(conj_corack(stock_hopf(StockGroup::SL, 2, Q)));
    cs.push_back(conj_corack(stock_hopf(StockGroup::GL, 2, Q)));
    for (const auto &C : cs) {
        auto B = derivation_basis(C);
        for (const auto &D : B)
            for (const auto &E : B)
                CHECK(ad_via_dual(C, D, E).values ==
                      bracket(C, D, E).values);
    }
}

TEST_CASE("Heisenberg conjugation gives the Heisenberg Lie algebra") {
    auto heis = conj_corack(stock_hopf(StockGroup::Heis, 0, Q));
    auto g = structure_constants(heis);
    REQUIRE(g.dim == 3);
    CHECK(g.basis == std::vector<std::string>{"x", "y", "z"});
    CHECK(g.c[0][1] == unit_vec(3, 2, Q)); // [Dx, Dy] = Dz
    CHECK(g.c[1][0] == lb_bracket(g, unit_vec(3, 1, Q), unit_vec(3, 0, Q)));
    for (const auto &v : g.c[1][0])
        CHECK((v.is_zero() || v == -FieldElem::one(Q)));
    for (std::size_t j = 0; j < 3; ++j) {
        for (const auto &v : g.c[2][j])
            CHECK(v.is_zero()); // z is central
        for (const auto &v : g.c[j][2])
            CHECK(v.is_zero());
    }
}

TEST_CASE("differentials of corack morphisms") {
    auto ol1 = ol_corack(1, Q);
    std::vector<AlgElem> id_imgs;
    for (std::size_t i = 0; i < ol1.A->ngens(); ++i)
        id_imgs.push_back(AlgElem::generator(ol1.A, i));
    auto ident = make_hom(ol1.A, ol1.A, id_imgs);
    for (const auto &D : derivation_basis(ol1))
        CHECK(differential(ident, D).values == D.values);

    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto gm = conj_corack(stock_hopf(StockGroup::Gm, 0, Q));
    auto phi = make_hom(gl2.A, gm.A,
                        {AlgElem::parse(gm.A, "s"), AlgElem::zero(gm.A),
                         AlgElem::zero(gm.A), AlgElem::parse(gm.A, "s")});
    auto Ds = derivation_basis(gm);
    REQUIRE(Ds.size() == 1);
    // the scalar direction maps to the identity matrix direction
    CHECK(differential(phi, Ds[0]).values ==
          Vec{FieldElem::one(Q), FieldElem::zero(Q), FieldElem::zero(Q),
              FieldElem::one(Q)});

    auto sl2 = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    std::vector<AlgElem> res;
    for (std::size_t i = 0; i < gl2.A->ngens(); ++i)
        res.push_back(AlgElem::generator(sl2.A, i));
    auto rho = make_hom(gl2.A, sl2.A, res, AlgElem::one(sl2.A));
    auto S = derivation_basis(sl2);
    for (const auto &D : S)
        CHECK(differential(rho, D).values == D.values);
    // bracket preservation on all 9 pairs
    for (const auto &D : S)
        for (const auto &E : S)
            CHECK(differential(rho, bracket(sl2, D, E)).values ==
                  bracket(gl2, differential(rho, D), differential(rho, E))
                      .values);
}

TEST_CASE("differential of a composite is the composite of differentials") {
    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto sl2 = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    auto gm = conj_corack(stock_hopf(StockGroup::Gm, 0, Q));

    std::vector<AlgElem> res;
    for (std::size_t i = 0; i < gl2.A->ngens(); ++i)
        res.push_back(AlgElem::generator(sl2.A, i));
    auto rho = make_hom(gl2.A, sl2.A, res, AlgElem::one(sl2.A));

    // diagonal torus (s, 1/s) inside SL_2
    AlgElem s_inv = AlgElem::one(gm.A);
    s_inv.den_pow = 1;
    auto sigma = make_hom(sl2.A, gm.A,
                          {AlgElem::parse(gm.A, "s"), AlgElem::zero(gm.A),
                           AlgElem::zero(gm.A), s_inv});
    CHECK(hom_verify(sigma, true).all_pass());
    CHECK(corack_hom_verify(sigma, sl2, gm).all_pass());

    auto Ds = derivation_basis(gm)[0];
    auto through_sl2 = differential(rho, differential(sigma, Ds));
    CHECK(differential(sigma, Ds).values ==
          Vec{FieldElem::one(Q), FieldElem::zero(Q), FieldElem::zero(Q),
              -FieldElem::one(Q)}); // the coroot direction H
    auto composite = hom_compose(sigma, rho);
    CHECK(differential(composite, Ds).values == through_sl2.values);
}

TEST_CASE("co-left distributivity splits into the two bracket sums") {
    std::vector<CorackAlgebra> cs;
    cs.push_back(ol_corack(1, Q));
    cs.push_back(conj_corack(stock_hopf(StockGroup::Heis, 0, Q)));
    cs.push_back(conj_corack(stock_hopf(StockGroup::SL, 2, Q)));
    for (const auto &C : cs) {
        auto B = derivation_basis(C);
        std::vector<AlgElem> samples;
        for (std::size_t i = 0; i < C.A->ngens(); ++i)
            samples.push_back(AlgElem::generator(C.A, i));
        for (const auto &X : B)
            for (const auto &Y : B)
                for (const auto &Z : B) {
                    auto xy_z = bracket(C, bracket(C, X, Y), Z);
                    auto y_xz = bracket(C, Y, bracket(C, X, Z));
                    for (const auto &f : samples) {
                        auto s = jacobi_sums(C, X, Y, Z, f);
                        CHECK(s.S == s.S1 + s.S2);
                        CHECK(s.S1 == derive(xy_z, f));
                        CHECK(s.S2 == derive(y_xz, f));
                    }
                }
    }
    // a denominator-bearing sample on GL_2
    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto B = derivation_basis(gl2);
    AlgElem det_inv = AlgElem::one(gl2.A);
    det_inv.den_pow = 1;
    for (const auto &f : {AlgElem::parse(gl2.A, "s12"), det_inv}) {
        auto s = jacobi_sums(gl2, B[0], B[1], B[2], f);
        CHECK(s.S == s.S1 + s.S2);
        CHECK(s.S1 == derive(bracket(gl2, bracket(gl2, B[0], B[1]), B[2]), f));
        CHECK(s.S2 == derive(bracket(gl2, B[1], bracket(gl2, B[0], B[2])), f));
    }
}

TEST_CASE("involutory coracks in odd characteristic have zero bracket") {
    auto triv = trivial_corack(free_algebra({"x", "y"}));
    auto p = corack_predicates(triv);
    REQUIRE(p.involutory.has_value());
    CHECK(*p.involutory);
    for (const auto &D : derivation_basis(triv))
        for (std::size_t i = 0; i < triv.A->ngens(); ++i)
            CHECK(psi(triv, D, AlgElem::generator(triv.A, i))
                      .is_structural_zero());
    CHECK(check_identities(structure_constants(triv)).abelian);

    // over F_2 involutory does not force the bracket to vanish
    auto heis2 = conj_corack(stock_hopf(StockGroup::Heis, 0, Field::prime(2)));
    auto p2 = corack_predicates(heis2);
    REQUIRE(p2.involutory.has_value());
    CHECK(*p2.involutory);
    auto g2 = structure_constants(heis2);
    CHECK_FALSE(check_identities(g2).abelian);
    CHECK(g2.c[0][1][2].is_one());
}

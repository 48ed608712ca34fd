#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corack/corack.hpp"

using namespace corack;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

PresPtr poly_line(const Field &f, const VarList &names) {
    std::vector<FieldElem> eps(names.size(), FieldElem::zero(f));
    return Presentation::make(f, names, {}, std::nullopt, eps);
}

} // namespace

TEST_CASE("trivial corack") {
    auto A = poly_line(Q, {"x", "y"});
    auto C = trivial_corack(A);
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(A, "x^2+1")),
                     AlgElem::parse(C.A2, "x@2^2+1")));
    CHECK(elem_equal(nabla_apply(C, AlgElem::one(A)), AlgElem::one(C.A2)));
    CHECK(corack_check(C).all_pass());
    auto p = corack_predicates(C);
    CHECK(p.quandle);
    REQUIRE(p.involutory.has_value());
    CHECK(*p.involutory);
    CHECK(p.coassociative);
    CHECK_FALSE(p.cocommutative);
}

TEST_CASE("trivial corack on a non-reduced algebra") {
    auto vars = make_vars({"x"});
    auto A = Presentation::make(Q, {"x"}, {MultiPoly::parse(vars, Q, "x^2")},
                                std::nullopt, {FieldElem::zero(Q)});
    auto C = trivial_corack(A);
    CHECK(corack_check(C).all_pass());
}

TEST_CASE("singleton corack") {
    auto C = ol_corack(0, Q);
    CHECK(corack_check(C).all_pass());
    auto p = corack_predicates(C);
    CHECK(p.quandle);
    CHECK(p.cocommutative);
    CHECK(p.coassociative);
}

TEST_CASE("operation must respect relations") {
    auto vars = make_vars({"x"});
    auto A = Presentation::make(Q, {"x"}, {MultiPoly::parse(vars, Q, "x^2")},
                                std::nullopt, {FieldElem::zero(Q)});
    auto A2 = tensor_power(A, 2);
    // x -> x@2 + x@1 maps x^2 to 2*x@1*x@2 != 0
    CHECK_THROWS_AS(make_corack(A, {AlgElem::parse(A2, "x@1+x@2")},
                                std::nullopt),
                    AlgebraError);
}

TEST_CASE("conjugation of the multiplicative and additive groups") {
    for (auto which : {StockGroup::Gm, StockGroup::Ga}) {
        auto H = stock_hopf(which, 0, Q);
        auto C = conj_corack(H);
        // abelian conjugation: nabla g = 1 (x) g
        for (std::size_t i = 0; i < C.A->ngens(); ++i)
            CHECK(elem_equal(C.nabla.images[i],
                             embed_legs(AlgElem::generator(C.A, i), C.A2, {2})));
        CHECK(corack_check(C).all_pass());
        auto p = corack_predicates(C);
        CHECK(p.quandle);
        CHECK(p.coassociative);
    }
}

TEST_CASE("Heisenberg conjugation") {
    auto H = stock_hopf(StockGroup::Heis, 0, Q);
    auto C = conj_corack(H);
    auto A2 = C.A2;
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "z")),
                     AlgElem::parse(A2, "z@2 + x@1*y@2 - y@1*x@2")));
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "z"), NablaKind::inv),
                     AlgElem::parse(A2, "z@1 + x@1*y@2 - y@1*x@2")));
    CHECK(corack_check(C).all_pass());
    auto p = corack_predicates(C);
    CHECK(p.quandle);
    REQUIRE(p.involutory.has_value());
    CHECK_FALSE(*p.involutory);
    CHECK_FALSE(p.coassociative);

    auto C2 = conj_corack(stock_hopf(StockGroup::Heis, 0, F2));
    CHECK(corack_check(C2).all_pass());
    auto p2 = corack_predicates(C2);
    REQUIRE(p2.involutory.has_value());
    CHECK(*p2.involutory);
}

TEST_CASE("GL_2 Hopf algebra data") {
    auto H = stock_hopf(StockGroup::GL, 2, Q);
    // 2x2 inverse: S(s11) = s22/det
    AlgElem expected{H.A, MultiPoly::parse(H.A->gens, Q, "s22"), 1};
    CHECK(elem_equal(H.antipode.images[0], expected));
    AlgElem s12{H.A, MultiPoly::parse(H.A->gens, Q, "-s12"), 1};
    CHECK(elem_equal(H.antipode.images[1], s12));
    CHECK(elem_equal(H.delta.images[0],
                     AlgElem::parse(H.A2, "s11@1*s11@2 + s12@1*s21@2")));
}

TEST_CASE("GL_1 and GL_2 conjugation coracks pass the axioms") {
    auto C1 = conj_corack(stock_hopf(StockGroup::GL, 1, Q));
    CHECK(corack_check(C1).all_pass());
    CHECK(corack_predicates(C1).quandle);

    auto C2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    // det is conjugation-invariant
    CHECK(elem_equal(
        nabla_apply(C2, AlgElem::parse(C2.A, "s11*s22-s12*s21")),
        AlgElem::parse(C2.A2, "s11@2*s22@2-s12@2*s21@2")));
    CHECK(corack_check(C2).all_pass());
    auto p = corack_predicates(C2);
    CHECK(p.quandle);
    REQUIRE(p.involutory.has_value());
    CHECK_FALSE(p.coassociative);
}

TEST_CASE("SL_2 conjugation corack") {
    auto C = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    CHECK(corack_check(C).all_pass());
    CHECK(corack_predicates(C).quandle);
}

TEST_CASE("linear rack corack at n = 1") {
    auto C = ol_corack(1, Q);
    CHECK(*C.A->gens == VarList{"s11", "t1"});
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "s11")),
                     AlgElem::parse(C.A2, "s11@2")));
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t1")),
                     AlgElem::parse(C.A2, "s11@1*t1@2")));
    // inverse action divides by the matrix entry
    AlgElem inv_t{C.A2, MultiPoly::parse(C.A2->gens, Q, "s11@1*t1@1"), 1};
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t1"), NablaKind::inv),
                     inv_t));
    CHECK(corack_check(C).all_pass());
    auto p = corack_predicates(C);
    CHECK_FALSE(p.quandle);
    CHECK_FALSE(p.coassociative);
}

TEST_CASE("linear rack corack at n = 2") {
    auto C = ol_corack(2, Q);
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t1")),
                     AlgElem::parse(C.A2, "s11@1*t1@2 + s12@1*t2@2")));
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t2")),
                     AlgElem::parse(C.A2, "s21@1*t1@2 + s22@1*t2@2")));
    // inverse vector legs carry the inverse-matrix ROW (s^-1)_1i = S(s_1i):
    // nabla_inv t1 = t1 (x) s22/det - t2 (x) s12/det
    auto det2_inv = leg_denominator_inverse(C.A2, 2);
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t1"), NablaKind::inv),
                     AlgElem::parse(C.A2, "t1@1*s22@2 - t2@1*s12@2") *
                         det2_inv));
    CHECK(elem_equal(nabla_apply(C, AlgElem::parse(C.A, "t2"), NablaKind::inv),
                     AlgElem::parse(C.A2, "t2@1*s11@2 - t1@1*s21@2") *
                         det2_inv));
    CHECK_FALSE(corack_predicates(C).quandle);
}

TEST_CASE("corrupted operation is caught by the axiom check") {
    auto good = ol_corack(1, Q);
    auto A2 = good.A2;
    std::vector<AlgElem> bad{good.nabla.images[0],
                             AlgElem::parse(A2, "t1@1*t1@2")};
    auto C = make_corack(good.A, std::move(bad), std::nullopt);
    auto rep = corack_check(C);
    CHECK_FALSE(rep.all_pass());
    bool c4_t_failed = false;
    for (const auto &e : rep.entries)
        if (e.item == "C4(t1)" && !e.pass)
            c4_t_failed = true;
    CHECK(c4_t_failed);
}

TEST_CASE("corack morphism checks") {
    auto ol1 = ol_corack(1, Q);
    std::vector<AlgElem> id_imgs;
    for (std::size_t i = 0; i < ol1.A->ngens(); ++i)
        id_imgs.push_back(AlgElem::generator(ol1.A, i));
    auto ident = make_hom(ol1.A, ol1.A, id_imgs);
    CHECK(corack_hom_verify(ident, ol1, ol1).all_pass());

    // scalars inside GL_2: pull back along s11,s22 -> s; s12,s21 -> 0
    auto gl2 = conj_corack(stock_hopf(StockGroup::GL, 2, Q));
    auto gm = conj_corack(stock_hopf(StockGroup::Gm, 0, Q));
    auto phi = make_hom(gl2.A, gm.A,
                        {AlgElem::parse(gm.A, "s"), AlgElem::zero(gm.A),
                         AlgElem::zero(gm.A), AlgElem::parse(gm.A, "s")});
    CHECK(hom_verify(phi, true).all_pass());
    CHECK(corack_hom_verify(phi, gl2, gm).all_pass());

    // restriction to SL_2: same generator names, det becomes 1
    auto sl2 = conj_corack(stock_hopf(StockGroup::SL, 2, Q));
    std::vector<AlgElem> res;
    for (std::size_t i = 0; i < gl2.A->ngens(); ++i)
        res.push_back(AlgElem::generator(sl2.A, i));
    auto rho = make_hom(gl2.A, sl2.A, res, AlgElem::one(sl2.A));
    CHECK(hom_verify(rho, true).all_pass());
    CHECK(corack_hom_verify(rho, gl2, sl2).all_pass());
}

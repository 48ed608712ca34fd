#include "corack/corack.hpp"

#include <algorithm>
#include <numeric>

namespace corack {

namespace {

AlgElem gen_in_leg(const PresPtr &base, const PresPtr &tensor, std::size_t i,
                   int leg) {
    return embed_legs(AlgElem::generator(base, i), tensor, {leg});
}

std::optional<AlgElem> mul_opt(const std::optional<AlgElem> &a,
                               const std::optional<AlgElem> &b) {
    if (!a || !b)
        return std::nullopt;
    return *a * *b;
}

std::optional<AlgElem> embed_opt(const std::optional<AlgElem> &a,
                                 const PresPtr &target,
                                 const std::vector<int> &leg_map) {
    if (!a)
        return std::nullopt;
    return embed_legs(*a, target, leg_map);
}

/// Inverse of 1/(eps(d) * d) in A, or nullopt when A is not localized.
std::optional<AlgElem> scaled_den_inverse(const PresPtr &A) {
    if (!A->denominator)
        return std::nullopt;
    FieldElem ed = A->counit_of_poly(*A->denominator);
    return AlgElem{A, MultiPoly::constant(A->gens, ed.inverse()), 1};
}

std::string eq_detail(const AlgElem &lhs, const AlgElem &rhs) {
    return "lhs = " + lhs.reduced().to_string() +
           "; rhs = " + rhs.reduced().to_string();
}

void check_entry(CheckReport &rep, const std::string &item, const AlgElem &lhs,
                 const AlgElem &rhs) {
    bool ok = elem_equal(lhs, rhs);
    rep.entries.push_back({item, ok, ok ? "" : eq_detail(lhs, rhs)});
}

/// Builds a hom out of tensor_power(A, 2) from per-leg image tables.
AlgebraHom hom_on_square(const PresPtr &A, const PresPtr &A2,
                         const PresPtr &tgt,
                         const std::vector<AlgElem> &leg1,
                         const std::vector<AlgElem> &leg2,
                         std::optional<AlgElem> witness) {
    std::vector<AlgElem> images(leg1);
    images.insert(images.end(), leg2.begin(), leg2.end());
    (void)A;
    return make_hom(A2, tgt, std::move(images), std::move(witness));
}

/// The multiplication-flavoured homs A (x) A -> A used by C4, C5 and the
/// quandle predicate: leg i maps a generator g to scale_i(g).
std::vector<AlgElem> counit_leg(const PresPtr &A) {
    std::vector<AlgElem> out;
    for (std::size_t i = 0; i < A->ngens(); ++i)
        out.push_back(AlgElem::one(A).scaled(A->counit[i]));
    return out;
}

std::vector<AlgElem> identity_leg(const PresPtr &A) {
    std::vector<AlgElem> out;
    for (std::size_t i = 0; i < A->ngens(); ++i)
        out.push_back(AlgElem::generator(A, i));
    return out;
}

} // namespace

PresPtr CorackAlgebra::A3() const {
    if (!a3_)
        a3_ = tensor_power(A, 3);
    return a3_;
}

CorackAlgebra make_corack(PresPtr A, std::vector<AlgElem> nabla_images,
                          std::optional<std::vector<AlgElem>> inv_images) {
    CorackAlgebra C;
    C.A = A;
    C.A2 = tensor_power(A, 2);
    C.nabla = make_hom(A, C.A2, std::move(nabla_images));
    auto rep = hom_verify(C.nabla, false);
    if (!rep.all_pass())
        throw AlgebraError("corack operation does not respect the relations: " +
                           rep.entries.front().item);
    if (inv_images) {
        C.nabla_inv = make_hom(A, C.A2, std::move(*inv_images));
        auto irep = hom_verify(*C.nabla_inv, false);
        if (!irep.all_pass())
            throw AlgebraError(
                "inverse corack operation does not respect the relations: " +
                irep.entries.front().item);
    }
    return C;
}

AlgElem nabla_apply(const CorackAlgebra &C, const AlgElem &a, NablaKind which) {
    if (which == NablaKind::fwd)
        return hom_apply(C.nabla, a);
    if (!C.nabla_inv)
        throw AlgebraError("corack algebra has no inverse operation");
    return hom_apply(*C.nabla_inv, a);
}

CheckReport corack_check(const CorackAlgebra &C) {
    CheckReport rep;
    const PresPtr &A = C.A;
    const PresPtr &A2 = C.A2;
    const auto &gnames = *A->gens;

    // C1: the maps (f (x) g -> nabla(f) * (g (x) 1)) and
    // (f (x) g -> (1 (x) f) * nabla_inv(g)) must be mutually inverse
    // endomorphisms of A (x) A.
    if (C.nabla_inv) {
        auto z1 = mul_opt(C.nabla.den_inverse,
                          A->denominator
                              ? std::optional<AlgElem>(leg_denominator_inverse(A2, 1))
                              : std::nullopt);
        auto z2 = mul_opt(A->denominator
                              ? std::optional<AlgElem>(leg_denominator_inverse(A2, 2))
                              : std::nullopt,
                          C.nabla_inv->den_inverse);
        std::vector<AlgElem> to_first, to_second;
        for (std::size_t i = 0; i < A->ngens(); ++i) {
            to_first.push_back(gen_in_leg(A, A2, i, 1));
            to_second.push_back(gen_in_leg(A, A2, i, 2));
        }
        auto T1 = hom_on_square(A, A2, A2, C.nabla.images, to_first, z1);
        auto T2 = hom_on_square(A, A2, A2, to_second, C.nabla_inv->images, z2);
        for (std::size_t v = 0; v < A2->ngens(); ++v) {
            auto g = AlgElem::generator(A2, v);
            auto a = hom_apply(T1, hom_apply(T2, g));
            auto b = hom_apply(T2, hom_apply(T1, g));
            bool ok = elem_equal(a, g) && elem_equal(b, g);
            rep.entries.push_back(
                {"C1(" + (*A2->gens)[v] + ")", ok,
                 ok ? "" : eq_detail(a, g) + " / " + eq_detail(b, g)});
        }
    } else {
        rep.entries.push_back({"C1", true, "skipped: no inverse operation"});
    }

    PresPtr A3 = C.A3();
    auto z_n = C.nabla.den_inverse;

    // C2: (id (x) nabla) o nabla = fused right side, applied to nabla(g).
    {
        std::vector<AlgElem> l1, l2, r1, r2;
        for (std::size_t i = 0; i < A->ngens(); ++i) {
            l1.push_back(gen_in_leg(A, A3, i, 1));
            l2.push_back(embed_legs(C.nabla.images[i], A3, {2, 3}));
            r1.push_back(embed_legs(C.nabla.images[i], A3, {1, 2}));
            r2.push_back(embed_legs(C.nabla.images[i], A3, {1, 3}));
        }
        auto lhs_w =
            mul_opt(A->denominator
                        ? std::optional<AlgElem>(leg_denominator_inverse(A3, 1))
                        : std::nullopt,
                    embed_opt(z_n, A3, {2, 3}));
        auto rhs_w = mul_opt(embed_opt(z_n, A3, {1, 2}),
                             embed_opt(z_n, A3, {1, 3}));
        auto lhs = hom_on_square(A, A2, A3, l1, l2, lhs_w);
        auto rhs = hom_on_square(A, A2, A3, r1, r2, rhs_w);
        for (std::size_t i = 0; i < A->ngens(); ++i)
            check_entry(rep, "C2(" + gnames[i] + ")",
                        hom_apply(lhs, C.nabla.images[i]),
                        hom_apply(rhs, C.nabla.images[i]));
    }

    // C3: (nabla_inv (x) id) o nabla_inv = fused right side.
    if (C.nabla_inv) {
        auto z_i = C.nabla_inv->den_inverse;
        std::vector<AlgElem> l1, l2, r1, r2;
        for (std::size_t i = 0; i < A->ngens(); ++i) {
            l1.push_back(embed_legs(C.nabla_inv->images[i], A3, {1, 2}));
            l2.push_back(gen_in_leg(A, A3, i, 3));
            r1.push_back(embed_legs(C.nabla_inv->images[i], A3, {1, 3}));
            r2.push_back(embed_legs(C.nabla_inv->images[i], A3, {2, 3}));
        }
        auto lhs_w =
            mul_opt(embed_opt(z_i, A3, {1, 2}),
                    A->denominator
                        ? std::optional<AlgElem>(leg_denominator_inverse(A3, 3))
                        : std::nullopt);
        auto rhs_w = mul_opt(embed_opt(z_i, A3, {1, 3}),
                             embed_opt(z_i, A3, {2, 3}));
        auto lhs = hom_on_square(A, A2, A3, l1, l2, lhs_w);
        auto rhs = hom_on_square(A, A2, A3, r1, r2, rhs_w);
        for (std::size_t i = 0; i < A->ngens(); ++i)
            check_entry(rep, "C3(" + gnames[i] + ")",
                        hom_apply(lhs, C.nabla_inv->images[i]),
                        hom_apply(rhs, C.nabla_inv->images[i]));
    } else {
        rep.entries.push_back({"C3", true, "skipped: no inverse operation"});
    }

    // C4: (eps (x) id) o nabla = id; C5: (id (x) eps) o nabla = unit o eps.
    {
        auto zw = scaled_den_inverse(A);
        auto e4 = hom_on_square(A, A2, A, counit_leg(A), identity_leg(A), zw);
        auto e5 = hom_on_square(A, A2, A, identity_leg(A), counit_leg(A), zw);
        for (std::size_t i = 0; i < A->ngens(); ++i) {
            check_entry(rep, "C4(" + gnames[i] + ")",
                        hom_apply(e4, C.nabla.images[i]),
                        AlgElem::generator(A, i));
            check_entry(rep, "C5(" + gnames[i] + ")",
                        hom_apply(e5, C.nabla.images[i]),
                        AlgElem::one(A).scaled(A->counit[i]));
        }
    }
    return rep;
}

CorackPredicates corack_predicates(const CorackAlgebra &C) {
    CorackPredicates p;
    const PresPtr &A = C.A;
    const PresPtr &A2 = C.A2;

    std::optional<AlgElem> mu_w;
    if (A->denominator)
        mu_w = AlgElem{A, MultiPoly::constant(A->gens, FieldElem::one(A->field)), 2};
    auto mu = hom_on_square(A, A2, A, identity_leg(A), identity_leg(A), mu_w);
    p.quandle = true;
    for (std::size_t i = 0; i < A->ngens(); ++i)
        if (!elem_equal(hom_apply(mu, C.nabla.images[i]),
                        AlgElem::generator(A, i)))
            p.quandle = false;

    p.cocommutative = true;
    for (std::size_t i = 0; i < A->ngens(); ++i)
        if (!elem_equal(swap_legs(C.nabla.images[i], 1, 2), C.nabla.images[i]))
            p.cocommutative = false;
    if (A->ngens() == 0)
        p.cocommutative = true;

    if (C.nabla_inv) {
        bool inv = true;
        for (std::size_t i = 0; i < A->ngens(); ++i)
            if (!elem_equal(C.nabla_inv->images[i],
                            swap_legs(C.nabla.images[i], 1, 2)))
                inv = false;
        p.involutory = inv;
    }

    PresPtr A3 = C.A3();
    auto z_n = C.nabla.den_inverse;
    std::vector<AlgElem> l1, l2, r1, r2;
    for (std::size_t i = 0; i < A->ngens(); ++i) {
        l1.push_back(gen_in_leg(A, A3, i, 1));
        l2.push_back(embed_legs(C.nabla.images[i], A3, {2, 3}));
        r1.push_back(embed_legs(C.nabla.images[i], A3, {1, 2}));
        r2.push_back(gen_in_leg(A, A3, i, 3));
    }
    auto lhs_w = mul_opt(A->denominator
                             ? std::optional<AlgElem>(leg_denominator_inverse(A3, 1))
                             : std::nullopt,
                         embed_opt(z_n, A3, {2, 3}));
    auto rhs_w = mul_opt(embed_opt(z_n, A3, {1, 2}),
                         A->denominator
                             ? std::optional<AlgElem>(leg_denominator_inverse(A3, 3))
                             : std::nullopt);
    auto lhs = hom_on_square(A, A2, A3, l1, l2, lhs_w);
    auto rhs = hom_on_square(A, A2, A3, r1, r2, rhs_w);
    p.coassociative = true;
    for (std::size_t i = 0; i < A->ngens(); ++i)
        if (!elem_equal(hom_apply(lhs, C.nabla.images[i]),
                        hom_apply(rhs, C.nabla.images[i])))
            p.coassociative = false;
    return p;
}

// ---------------------------------------------------------------------------
// Hopf algebras

HopfAlgebra make_hopf(PresPtr A, std::vector<AlgElem> delta_images,
                      std::vector<AlgElem> antipode_images) {
    HopfAlgebra H;
    H.A = A;
    H.A2 = tensor_power(A, 2);
    H.delta = make_hom(A, H.A2, std::move(delta_images));
    H.antipode = make_hom(A, A, std::move(antipode_images));
    for (const auto *phi : {&H.delta, &H.antipode}) {
        auto rep = hom_verify(*phi, false);
        if (!rep.all_pass())
            throw AlgebraError("Hopf structure map does not respect the "
                               "relations: " +
                               rep.entries.front().item);
    }
    auto zw = scaled_den_inverse(A);
    auto counit_side =
        hom_on_square(A, H.A2, A, counit_leg(A), identity_leg(A), zw);
    auto antipode_side =
        hom_on_square(A, H.A2, A, H.antipode.images, identity_leg(A),
                      std::nullopt);
    for (std::size_t i = 0; i < A->ngens(); ++i) {
        if (!elem_equal(hom_apply(counit_side, H.delta.images[i]),
                        AlgElem::generator(A, i)))
            throw AlgebraError("counit law fails on generator " +
                               (*A->gens)[i]);
        if (!elem_equal(hom_apply(antipode_side, H.delta.images[i]),
                        AlgElem::one(A).scaled(A->counit[i])))
            throw AlgebraError("antipode law fails on generator " +
                               (*A->gens)[i]);
    }
    return H;
}

namespace {

std::vector<std::vector<MultiPoly>> generic_matrix(const VarListPtr &vars,
                                                   const Field &f, int n) {
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i].push_back(
                MultiPoly::variable(vars, f, static_cast<std::size_t>(i * n + j)));
    return m;
}

MultiPoly matrix_det(const std::vector<std::vector<MultiPoly>> &m,
                     const std::vector<int> &rows, const std::vector<int> &cols,
                     const VarListPtr &vars, const Field &f) {
    if (rows.empty())
        return MultiPoly::constant(vars, FieldElem::one(f));
    MultiPoly acc(vars, f);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != c)
                sub_cols.push_back(cols[k]);
        auto minor = matrix_det(m, sub_rows, sub_cols, vars, f);
        auto term = m[rows[0]][cols[c]] * minor;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MultiPoly full_det(const std::vector<std::vector<MultiPoly>> &m,
                   const VarListPtr &vars, const Field &f) {
    std::vector<int> idx(m.size());
    std::iota(idx.begin(), idx.end(), 0);
    return matrix_det(m, idx, idx, vars, f);
}

/// Cofactor C_ij = (-1)^(i+j) * det of the matrix with row i, column j removed.
MultiPoly cofactor(const std::vector<std::vector<MultiPoly>> &m, int i, int j,
                   const VarListPtr &vars, const Field &f) {
    std::vector<int> rows, cols;
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
        if (r != i)
            rows.push_back(r);
    for (int c = 0; c < static_cast<int>(m.size()); ++c)
        if (c != j)
            cols.push_back(c);
    auto d = matrix_det(m, rows, cols, vars, f);
    return ((i + j) % 2 == 0) ? d : -d;
}

HopfAlgebra matrix_group_hopf(int n, const Field &field, bool special) {
    if (n < 1 || n > 3)
        throw AlgebraError("matrix group size out of range (1..3)");
    VarList names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back("s" + std::to_string(i) + std::to_string(j));
    auto vars = make_vars(names);
    auto m = generic_matrix(vars, field, n);
    auto det = full_det(m, vars, field);
    std::vector<FieldElem> eps;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            eps.push_back(i == j ? FieldElem::one(field)
                                 : FieldElem::zero(field));
    PresPtr A;
    if (special) {
        auto one = MultiPoly::constant(vars, FieldElem::one(field));
        A = Presentation::make(field, names, {det - one}, std::nullopt, eps);
    } else {
        A = Presentation::make(field, names, {}, det, eps);
    }
    auto A2 = tensor_power(A, 2);
    std::vector<AlgElem> delta, antipode;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            AlgElem d = AlgElem::zero(A2);
            for (int a = 0; a < n; ++a)
                d = d + gen_in_leg(A, A2, static_cast<std::size_t>(i * n + a), 1) *
                            gen_in_leg(A, A2, static_cast<std::size_t>(a * n + j), 2);
            delta.push_back(d);
            // (inverse matrix)_ij = C_ji / det
            auto cof = cofactor(m, j, i, vars, field).transport(A->gens);
            antipode.push_back(AlgElem::from_poly(A, cof, special ? 0 : 1));
        }
    return make_hopf(A, std::move(delta), std::move(antipode));
}

} // namespace

HopfAlgebra stock_hopf(StockGroup which, int n, const Field &field) {
    switch (which) {
    case StockGroup::GL:
        return matrix_group_hopf(n, field, false);
    case StockGroup::SL:
        return matrix_group_hopf(n, field, true);
    case StockGroup::Ga: {
        auto A = Presentation::make(field, {"x"}, {}, std::nullopt,
                                    {FieldElem::zero(field)});
        auto A2 = tensor_power(A, 2);
        auto x1 = gen_in_leg(A, A2, 0, 1), x2 = gen_in_leg(A, A2, 0, 2);
        return make_hopf(A, {x1 + x2}, {-AlgElem::generator(A, 0)});
    }
    case StockGroup::Gm: {
        auto vars = make_vars({"s"});
        auto A = Presentation::make(field, {"s"}, {},
                                    MultiPoly::variable(vars, field, 0),
                                    {FieldElem::one(field)});
        auto A2 = tensor_power(A, 2);
        auto s1 = gen_in_leg(A, A2, 0, 1), s2 = gen_in_leg(A, A2, 0, 2);
        AlgElem s_inv{A, MultiPoly::constant(A->gens, FieldElem::one(field)), 1};
        return make_hopf(A, {s1 * s2}, {s_inv});
    }
    case StockGroup::Heis: {
        auto A = Presentation::make(field, {"x", "y", "z"}, {}, std::nullopt,
                                    {FieldElem::zero(field),
                                     FieldElem::zero(field),
                                     FieldElem::zero(field)});
        auto A2 = tensor_power(A, 2);
        auto leg = [&](std::size_t i, int l) { return gen_in_leg(A, A2, i, l); };
        auto x = AlgElem::generator(A, 0);
        auto y = AlgElem::generator(A, 1);
        auto z = AlgElem::generator(A, 2);
        std::vector<AlgElem> delta{leg(0, 1) + leg(0, 2), leg(1, 1) + leg(1, 2),
                                   leg(2, 1) + leg(2, 2) + leg(0, 1) * leg(1, 2)};
        std::vector<AlgElem> antipode{-x, -y, -z + x * y};
        return make_hopf(A, std::move(delta), std::move(antipode));
    }
    }
    throw AlgebraError("unknown stock group");
}

// ---------------------------------------------------------------------------
// Builders

CorackAlgebra conj_corack(const HopfAlgebra &H) {
    const PresPtr &A = H.A;
    const PresPtr &A2 = H.A2;
    PresPtr A3 = tensor_power(A, 3);

    // (Delta (x) id): A2 -> A3
    std::vector<AlgElem> d1, d2;
    for (std::size_t i = 0; i < A->ngens(); ++i) {
        d1.push_back(embed_legs(H.delta.images[i], A3, {1, 2}));
        d2.push_back(gen_in_leg(A, A3, i, 3));
    }
    auto theta_w = mul_opt(embed_opt(H.delta.den_inverse, A3, {1, 2}),
                           A->denominator
                               ? std::optional<AlgElem>(leg_denominator_inverse(A3, 3))
                               : std::nullopt);
    auto theta = hom_on_square(A, A2, A3, d1, d2, theta_w);

    // Contractions A3 -> A2 for the two conjugation directions.
    std::vector<AlgElem> fwd_imgs, inv_imgs;
    {
        std::vector<AlgElem> imgs;
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(gen_in_leg(A, A2, i, 1));
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(gen_in_leg(A, A2, i, 2));
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(embed_legs(H.antipode.images[i], A2, {1}));
        auto xi = make_hom(A3, A2, imgs);
        for (std::size_t i = 0; i < A->ngens(); ++i)
            fwd_imgs.push_back(
                hom_apply(xi, hom_apply(theta, H.delta.images[i])));
    }
    {
        std::vector<AlgElem> imgs;
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(embed_legs(H.antipode.images[i], A2, {2}));
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(gen_in_leg(A, A2, i, 1));
        for (std::size_t i = 0; i < A->ngens(); ++i)
            imgs.push_back(gen_in_leg(A, A2, i, 2));
        auto xi = make_hom(A3, A2, imgs);
        for (std::size_t i = 0; i < A->ngens(); ++i)
            inv_imgs.push_back(
                hom_apply(xi, hom_apply(theta, H.delta.images[i])));
    }
    return make_corack(A, std::move(fwd_imgs), std::move(inv_imgs));
}

CorackAlgebra ol_corack(int n, const Field &field) {
    if (n < 0 || n > 3)
        throw AlgebraError("ol_corack size out of range (0..3)");
    if (n == 0) {
        auto A = Presentation::make(field, {}, {}, std::nullopt, {});
        return make_corack(A, {}, std::vector<AlgElem>{});
    }
    auto gl = stock_hopf(StockGroup::GL, n, field);
    auto conj = conj_corack(gl);

    VarList names(*gl.A->gens);
    for (int k = 1; k <= n; ++k)
        names.push_back("t" + std::to_string(k));
    auto vars = make_vars(names);
    std::vector<FieldElem> eps(gl.A->counit);
    for (int k = 0; k < n; ++k)
        eps.push_back(FieldElem::zero(field));
    auto det = gl.A->denominator->transport(vars);
    auto A = Presentation::make(field, names, {}, det, eps);
    auto A2 = tensor_power(A, 2);

    auto transported = [&](const AlgElem &e) {
        return AlgElem::from_poly(A2, e.num.transport(A2->gens), e.den_pow);
    };
    auto s_idx = [&](int i, int j) {
        return static_cast<std::size_t>((i - 1) * n + (j - 1));
    };
    auto t_idx = [&](int k) {
        return static_cast<std::size_t>(n * n + k - 1);
    };

    std::vector<AlgElem> fwd, inv;
    for (std::size_t i = 0; i < gl.A->ngens(); ++i) {
        fwd.push_back(transported(conj.nabla.images[i]));
        inv.push_back(transported(conj.nabla_inv->images[i]));
    }
    for (int k = 1; k <= n; ++k) {
        AlgElem f = AlgElem::zero(A2);
        AlgElem g = AlgElem::zero(A2);
        for (int i = 1; i <= n; ++i) {
            f = f + gen_in_leg(A, A2, s_idx(k, i), 1) *
                        gen_in_leg(A, A2, t_idx(i), 2);
            // second factor of the inverse image: (s^-1)_ki = S(s_ki)
            auto sk = AlgElem::from_poly(
                A, gl.antipode.images[s_idx(k, i)].num.transport(A->gens),
                gl.antipode.images[s_idx(k, i)].den_pow);
            g = g + gen_in_leg(A, A2, t_idx(i), 1) * embed_legs(sk, A2, {2});
        }
        fwd.push_back(f);
        inv.push_back(g);
    }
    return make_corack(A, std::move(fwd), std::move(inv));
}

CorackAlgebra trivial_corack(const PresPtr &A) {
    auto A2 = tensor_power(A, 2);
    std::vector<AlgElem> fwd, inv;
    for (std::size_t i = 0; i < A->ngens(); ++i) {
        fwd.push_back(gen_in_leg(A, A2, i, 2));
        inv.push_back(gen_in_leg(A, A2, i, 1));
    }
    return make_corack(A, std::move(fwd), std::move(inv));
}

// ---------------------------------------------------------------------------
// Corack homomorphisms

AlgebraHom tensor_hom(const AlgebraHom &phi, int n) {
    auto S = tensor_power(phi.src, n);
    auto T = tensor_power(phi.tgt, n);
    std::vector<AlgElem> images;
    std::optional<AlgElem> witness;
    if (phi.den_inverse)
        witness = AlgElem::one(T);
    for (int l = 1; l <= n; ++l) {
        for (std::size_t i = 0; i < phi.src->ngens(); ++i)
            images.push_back(embed_legs(phi.images[i], T, {l}));
        if (witness)
            witness = *witness * embed_legs(*phi.den_inverse, T, {l});
    }
    return make_hom(S, T, std::move(images), std::move(witness));
}

CheckReport corack_hom_verify(const AlgebraHom &phi, const CorackAlgebra &src,
                              const CorackAlgebra &tgt) {
    CheckReport rep;
    auto phi2 = tensor_hom(phi, 2);
    const auto &gnames = *src.A->gens;
    for (std::size_t i = 0; i < src.A->ngens(); ++i) {
        auto lhs = hom_apply(tgt.nabla, phi.images[i]);
        auto rhs = hom_apply(phi2, src.nabla.images[i]);
        check_entry(rep, "nabla(" + gnames[i] + ")", lhs, rhs);
    }
    if (src.nabla_inv && tgt.nabla_inv) {
        for (std::size_t i = 0; i < src.A->ngens(); ++i) {
            auto lhs = hom_apply(*tgt.nabla_inv, phi.images[i]);
            auto rhs = hom_apply(phi2, src.nabla_inv->images[i]);
            check_entry(rep, "nabla_inv(" + gnames[i] + ")", lhs, rhs);
        }
    }
    for (std::size_t i = 0; i < src.A->ngens(); ++i) {
        FieldElem got = counit_eval(phi.images[i]);
        bool ok = got == src.A->counit[i];
        rep.entries.push_back({"counit(" + gnames[i] + ")", ok,
                               ok ? ""
                                  : "got " + got.to_string() + ", want " +
                                        src.A->counit[i].to_string()});
    }
    return rep;
}

} // namespace corack

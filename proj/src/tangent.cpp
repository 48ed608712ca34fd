#include "corack/tangent.hpp"

namespace corack {

namespace {

void check_same_alg(const PresPtr &a, const PresPtr &b, const char *what) {
    if (a == b)
        return;
    if (!a || !b || a->field != b->field || *a->gens != *b->gens)
        throw TangentError(std::string(what) + ": algebra mismatch");
}

/// Linearization of p at the counit against the given generator values.
FieldElem first_order(const PresPtr &A, const Vec &values, const MultiPoly &p) {
    FieldElem out = FieldElem::zero(A->field);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero())
            continue;
        out = out + p.partial(i).eval(A->counit) * values[i];
    }
    return out;
}

DualScalar dual_eval(const MultiPoly &p, const std::vector<DualScalar> &pt,
                     const Field &field) {
    DualScalar acc{FieldElem::zero(field), FieldElem::zero(field)};
    for (const auto &[e, c] : p.terms()) {
        DualScalar t{c, FieldElem::zero(field)};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = dual_mul(t, dual_pow(pt[i], e[i]));
        acc.a = acc.a + t.a;
        acc.b = acc.b + t.b;
    }
    return acc;
}

std::vector<DualScalar> dual_point(const Derivation &D) {
    std::vector<DualScalar> pt;
    pt.reserve(D.values.size());
    for (std::size_t i = 0; i < D.values.size(); ++i)
        pt.push_back({D.A->counit[i], D.values[i]});
    return pt;
}

} // namespace

DualScalar dual_mul(const DualScalar &x, const DualScalar &y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
}

DualScalar dual_inverse(const DualScalar &x) {
    FieldElem inv = x.a.inverse();
    return {inv, -(x.b * inv * inv)};
}

DualScalar dual_pow(const DualScalar &x, int e) {
    if (e < 0)
        throw TangentError("negative dual power");
    DualScalar r{FieldElem::one(x.a.field()), FieldElem::zero(x.a.field())};
    DualScalar b = x;
    while (e > 0) {
        if (e & 1)
            r = dual_mul(r, b);
        b = dual_mul(b, b);
        e >>= 1;
    }
    return r;
}

Derivation make_derivation(PresPtr A, Vec values) {
    if (values.size() != A->ngens())
        throw TangentError("derivation value count mismatch");
    for (const auto &r : A->relations)
        if (!first_order(A, values, r).is_zero())
            throw TangentError("values do not annihilate relation " +
                               r.to_string() + " to first order");
    return {std::move(A), std::move(values)};
}

std::vector<Derivation> derivation_basis(const CorackAlgebra &C) {
    const PresPtr &A = C.A;
    Mat jac;
    for (const auto &r : A->relations) {
        Vec row;
        row.reserve(A->ngens());
        for (std::size_t i = 0; i < A->ngens(); ++i)
            row.push_back(r.partial(i).eval(A->counit));
        jac.push_back(std::move(row));
    }
    std::vector<Derivation> out;
    for (auto &v : kernel_basis(jac, A->ngens(), A->field))
        out.push_back(make_derivation(A, std::move(v)));
    return out;
}

FieldElem derive(const Derivation &D, const AlgElem &a) {
    check_same_alg(D.A, a.A, "derive");
    const PresPtr &A = D.A;
    FieldElem dp = first_order(A, D.values, a.num);
    if (a.den_pow == 0)
        return dp;
    const MultiPoly &d = *A->denominator;
    FieldElem ep = a.num.eval(A->counit);
    FieldElem ed = d.eval(A->counit);
    FieldElem dd = first_order(A, D.values, d);
    FieldElem m = FieldElem::from_int(A->field, a.den_pow);
    return (dp * ed - m * ep * dd) / ed.pow(a.den_pow + 1);
}

AlgElem psi(const CorackAlgebra &C, const Derivation &D, const AlgElem &a) {
    check_same_alg(D.A, C.A, "psi");
    AlgElem na = nabla_apply(C, a);
    AlgElem acc = AlgElem::zero(C.A);
    for (const auto &t : tensor_terms(na)) {
        FieldElem v = t.coeff * derive(D, {C.A, t.legs[0], na.den_pow});
        if (v.is_zero())
            continue;
        acc = acc + AlgElem{C.A, t.legs[1], na.den_pow}.scaled(v);
    }
    return acc.reduced();
}

Derivation bracket(const CorackAlgebra &C, const Derivation &D,
                   const Derivation &E) {
    check_same_alg(D.A, C.A, "bracket");
    check_same_alg(E.A, C.A, "bracket");
    Vec values;
    for (std::size_t i = 0; i < C.A->ngens(); ++i) {
        const AlgElem &ng = C.nabla.images[i];
        FieldElem v = FieldElem::zero(C.A->field);
        for (const auto &t : tensor_terms(ng)) {
            FieldElem dv = t.coeff * derive(D, {C.A, t.legs[0], ng.den_pow});
            if (dv.is_zero())
                continue;
            v = v + dv * derive(E, {C.A, t.legs[1], ng.den_pow});
        }
        FieldElem via_psi =
            derive(E, psi(C, D, AlgElem::generator(C.A, i)));
        if (v != via_psi)
            throw TangentError("bracket disagrees with psi composition on " +
                               (*C.A->gens)[i]);
        values.push_back(std::move(v));
    }
    return make_derivation(C.A, std::move(values));
}

LeibnizAlgebra structure_constants(const CorackAlgebra &C) {
    auto B = derivation_basis(C);
    LeibnizAlgebra g;
    g.field = C.A->field;
    g.dim = B.size();
    Mat rows;
    std::vector<std::size_t> pivots;
    for (const auto &d : B) {
        std::size_t p = 0;
        while (p < d.values.size() && d.values[p].is_zero())
            ++p;
        pivots.push_back(p);
        g.basis.push_back((*C.A->gens)[p]);
        rows.push_back(d.values);
    }
    g.c.assign(g.dim, std::vector<Vec>(g.dim));
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            auto coords =
                rowspace_coords(rows, pivots, bracket(C, B[i], B[j]).values);
            if (!coords)
                throw TangentError(
                    "bracket value escapes the tangent space at (" +
                    g.basis[i] + ", " + g.basis[j] + ")");
            g.c[i][j] = std::move(*coords);
        }
    return g;
}

std::vector<DualScalar> lift_point(const Derivation &D) {
    auto pt = dual_point(D);
    for (const auto &r : D.A->relations) {
        DualScalar v = dual_eval(r, pt, D.A->field);
        if (!v.a.is_zero() || !v.b.is_zero())
            throw TangentError("dual point violates relation " + r.to_string());
    }
    return pt;
}

DualElem l_sharp(const CorackAlgebra &C, const Derivation &D,
                 const AlgElem &f) {
    check_same_alg(D.A, C.A, "l_sharp");
    const PresPtr &A = C.A;
    AlgElem na = nabla_apply(C, f);
    auto pt = dual_point(D);
    DualScalar dinv{FieldElem::one(A->field), FieldElem::zero(A->field)};
    if (na.den_pow > 0)
        dinv = dual_pow(dual_inverse(dual_eval(*A->denominator, pt, A->field)),
                        na.den_pow);
    AlgElem pa = AlgElem::zero(A);
    AlgElem pb = AlgElem::zero(A);
    for (const auto &t : tensor_terms(na)) {
        DualScalar u = dual_eval(t.legs[0], pt, A->field);
        if (na.den_pow > 0)
            u = dual_mul(u, dinv);
        u.a = u.a * t.coeff;
        u.b = u.b * t.coeff;
        AlgElem leg2{A, t.legs[1], na.den_pow};
        if (!u.a.is_zero())
            pa = pa + leg2.scaled(u.a);
        if (!u.b.is_zero())
            pb = pb + leg2.scaled(u.b);
    }
    return {pa.reduced(), pb.reduced()};
}

Derivation ad_via_dual(const CorackAlgebra &C, const Derivation &D,
                       const Derivation &E) {
    check_same_alg(E.A, C.A, "ad_via_dual");
    Vec values;
    for (std::size_t i = 0; i < C.A->ngens(); ++i) {
        DualElem l = l_sharp(C, D, AlgElem::generator(C.A, i));
        values.push_back(derive(E, l.b));
    }
    return make_derivation(C.A, std::move(values));
}

Derivation differential(const AlgebraHom &phi, const Derivation &D) {
    check_same_alg(D.A, phi.tgt, "differential");
    Vec values;
    values.reserve(phi.images.size());
    for (const auto &img : phi.images)
        values.push_back(derive(D, img));
    return make_derivation(phi.src, std::move(values));
}

JacobiSums jacobi_sums(const CorackAlgebra &C, const Derivation &X,
                       const Derivation &Y, const Derivation &Z,
                       const AlgElem &f) {
    const PresPtr &A = C.A;
    FieldElem S = FieldElem::zero(A->field);
    FieldElem S1 = S, S2 = S;
    AlgElem nf = nabla_apply(C, f);
    for (const auto &t : tensor_terms(nf)) {
        AlgElem u{A, t.legs[0], nf.den_pow};
        AlgElem v{A, t.legs[1], nf.den_pow};
        AlgElem nu = nabla_apply(C, u);
        AlgElem nv = nabla_apply(C, v);
        auto vterms = tensor_terms(nv);
        for (const auto &tu : tensor_terms(nu)) {
            FieldElem yu2 =
                tu.coeff * derive(Y, {A, tu.legs[1], nu.den_pow});
            if (yu2.is_zero())
                continue;
            AlgElem u1{A, tu.legs[0], nu.den_pow};
            for (const auto &tv : vterms) {
                FieldElem w = t.coeff * yu2 * tv.coeff *
                              derive(Z, {A, tv.legs[1], nv.den_pow});
                if (w.is_zero())
                    continue;
                AlgElem v1{A, tv.legs[0], nv.den_pow};
                S = S + w * derive(X, u1 * v1);
                S1 = S1 + w * derive(X, u1) * counit_eval(v1);
                S2 = S2 + w * counit_eval(u1) * derive(X, v1);
            }
        }
    }
    return {S, S1, S2};
}

} // namespace corack

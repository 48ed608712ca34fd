#include "corack/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace corack {

PresPtr Presentation::make(Field field, VarList gen_names,
                           std::vector<MultiPoly> relations,
                           std::optional<MultiPoly> denominator,
                           std::vector<FieldElem> counit) {
    auto p = std::make_shared<Presentation>(Private{});
    p->field = field;
    for (const auto &n : gen_names) {
        if (n.empty())
            throw AlgebraError("empty generator name");
        if (n.find('@') != std::string::npos)
            throw AlgebraError("generator name '" + n +
                               "' uses the reserved tensor-copy marker '@'");
        if (std::count(gen_names.begin(), gen_names.end(), n) != 1)
            throw AlgebraError("duplicate generator name '" + n + "'");
    }
    p->gens = make_vars(std::move(gen_names));
    if (counit.size() != p->gens->size())
        throw AlgebraError("counit needs one value per generator");
    p->counit = std::move(counit);
    for (const auto &r : relations) {
        if (*r.vars() != *p->gens)
            throw AlgebraError("relation over wrong variable list");
        if (!r.eval(p->counit).is_zero())
            throw AlgebraError("counit does not annihilate relation " +
                               r.to_string());
    }
    p->relations = std::move(relations);
    if (denominator) {
        if (*denominator->vars() != *p->gens)
            throw AlgebraError("denominator over wrong variable list");
        if (denominator->eval(p->counit).is_zero())
            throw AlgebraError("counit vanishes on the denominator");
        p->denominator = std::move(denominator);
    }
    p->gb = buchberger(p->relations);
    return p;
}

MultiPoly Presentation::leg_denominator(int leg) const {
    if (legs == 1) {
        if (!denominator)
            throw AlgebraError("presentation has no denominator");
        if (leg != 1)
            throw AlgebraError("leg out of range");
        return *denominator;
    }
    if (leg < 1 || leg > legs)
        throw AlgebraError("leg out of range");
    if (!base->denominator)
        throw AlgebraError("presentation has no denominator");
    std::vector<int> map(base_gens);
    for (std::size_t i = 0; i < base_gens; ++i)
        map[i] = static_cast<int>((leg - 1) * base_gens + i);
    return base->denominator->reindex(gens, map);
}

PresPtr tensor_power(const PresPtr &a, int n) {
    if (n < 1)
        throw AlgebraError("tensor power requires n >= 1");
    if (n == 1)
        return a;
    if (a->legs != 1)
        throw AlgebraError("tensor power of a tensor power is not supported");
    auto t = std::make_shared<Presentation>(Presentation::Private{});
    t->field = a->field;
    t->legs = n;
    t->base = a;
    t->base_gens = a->ngens();
    VarList names;
    for (int leg = 1; leg <= n; ++leg)
        for (const auto &g : *a->gens)
            names.push_back(g + "@" + std::to_string(leg));
    t->gens = make_vars(std::move(names));
    for (int leg = 1; leg <= n; ++leg) {
        std::vector<int> map(a->ngens());
        for (std::size_t i = 0; i < a->ngens(); ++i)
            map[i] = static_cast<int>((leg - 1) * a->ngens() + i);
        for (const auto &r : a->relations)
            t->relations.push_back(r.reindex(t->gens, map));
        for (const auto &c : a->counit)
            t->counit.push_back(c);
    }
    if (a->denominator) {
        MultiPoly d = MultiPoly::constant(t->gens, FieldElem::one(a->field));
        for (int leg = 1; leg <= n; ++leg)
            d = d * t->leg_denominator(leg);
        // leg_denominator needs base fields set first; recompute directly:
        t->denominator = d;
    }
    t->gb = buchberger(t->relations);
    return t;
}

// ---------------------------------------------------------------------------
// Elements

AlgElem AlgElem::zero(const PresPtr &a) {
    return {a, MultiPoly(a->gens, a->field), 0};
}

AlgElem AlgElem::one(const PresPtr &a) {
    return {a, MultiPoly::constant(a->gens, FieldElem::one(a->field)), 0};
}

AlgElem AlgElem::from_poly(const PresPtr &a, MultiPoly p, int den_pow) {
    if (*p.vars() != *a->gens)
        throw AlgebraError("element polynomial over wrong variable list");
    if (den_pow < 0)
        throw AlgebraError("negative denominator power");
    if (den_pow > 0 && !a->denominator)
        throw AlgebraError("denominator power on an unlocalized presentation");
    return {a, std::move(p), den_pow};
}

AlgElem AlgElem::generator(const PresPtr &a, std::size_t idx) {
    return {a, MultiPoly::variable(a->gens, a->field, idx), 0};
}

AlgElem AlgElem::parse(const PresPtr &a, const std::string &text, int den_pow) {
    return from_poly(a, MultiPoly::parse(a->gens, a->field, text), den_pow);
}

static void check_same_algebra(const AlgElem &a, const AlgElem &b) {
    if (a.A == b.A)
        return;
    if (a.A->field != b.A->field || *a.A->gens != *b.A->gens)
        throw AlgebraError("elements over different algebras");
}

AlgElem AlgElem::operator+(const AlgElem &o) const {
    check_same_algebra(*this, o);
    if (den_pow == o.den_pow)
        return {A, num + o.num, den_pow};
    int m = std::max(den_pow, o.den_pow);
    const MultiPoly &d = *A->denominator;
    return {A, num * d.pow(m - den_pow) + o.num * d.pow(m - o.den_pow), m};
}

AlgElem AlgElem::operator-(const AlgElem &o) const { return *this + (-o); }

AlgElem AlgElem::operator-() const { return {A, -num, den_pow}; }

AlgElem AlgElem::operator*(const AlgElem &o) const {
    check_same_algebra(*this, o);
    return {A, num * o.num, den_pow + o.den_pow};
}

AlgElem AlgElem::scaled(const FieldElem &c) const {
    return {A, num.scaled(c), c.is_zero() ? 0 : den_pow};
}

AlgElem AlgElem::pow(int n) const {
    if (n < 0)
        throw AlgebraError("negative element power");
    AlgElem r = one(A);
    AlgElem b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

AlgElem AlgElem::reduced() const {
    MultiPoly n = num;
    int m = den_pow;
    while (m > 0 && !n.is_zero()) {
        auto q = exact_divide(n, *A->denominator);
        if (!q)
            break;
        n = std::move(*q);
        --m;
    }
    n = A->nf(n);
    if (n.is_zero())
        m = 0;
    return {A, std::move(n), m};
}

std::string AlgElem::to_string() const {
    std::string s = num.to_string();
    if (den_pow > 0)
        s = "(" + s + ") / (" + A->denominator->to_string() + ")^" +
            std::to_string(den_pow);
    return s;
}

bool elem_equal(const AlgElem &a0, const AlgElem &b0) {
    check_same_algebra(a0, b0);
    AlgElem a = a0.den_pow > 0 ? a0.reduced() : a0;
    AlgElem b = b0.den_pow > 0 ? b0.reduced() : b0;
    MultiPoly diff(a.A->gens, a.A->field);
    if (a.den_pow == b.den_pow) {
        diff = a.num - b.num;
    } else {
        const MultiPoly &d = *a.A->denominator;
        diff = a.num * d.pow(b.den_pow) - b.num * d.pow(a.den_pow);
    }
    return a.A->nf(diff).is_zero();
}

FieldElem counit_eval(const AlgElem &a) {
    FieldElem v = a.num.eval(a.A->counit);
    if (a.den_pow > 0)
        v = v / a.A->denominator->eval(a.A->counit).pow(a.den_pow);
    return v;
}

// ---------------------------------------------------------------------------
// Tensor-leg plumbing

AlgElem embed_legs(const AlgElem &a, const PresPtr &target,
                   const std::vector<int> &leg_map) {
    int src_legs = a.A->legs;
    PresPtr src_base = src_legs == 1 ? a.A : a.A->base;
    std::size_t bg = src_legs == 1 ? a.A->ngens() : a.A->base_gens;
    if (static_cast<std::size_t>(src_legs) != leg_map.size())
        throw AlgebraError("leg map length mismatch");
    if (target->legs < src_legs)
        throw AlgebraError("target tensor power too small");
    if (*((target->base ? target->base : target)->gens) != *src_base->gens)
        throw AlgebraError("tensor bases do not match");
    std::vector<bool> used(target->legs + 1, false);
    for (int t : leg_map) {
        if (t < 1 || t > target->legs || used[t])
            throw AlgebraError("leg map must be injective into the target");
        used[t] = true;
    }
    std::vector<int> index_map(a.A->ngens());
    for (std::size_t v = 0; v < index_map.size(); ++v) {
        std::size_t leg = v / bg, i = v % bg;
        index_map[v] = static_cast<int>((leg_map[leg] - 1) * bg + i);
    }
    MultiPoly num = a.num.reindex(target->gens, index_map);
    if (a.den_pow > 0) {
        for (int j = 1; j <= target->legs; ++j)
            if (!used[j])
                num = num * target->leg_denominator(j).pow(a.den_pow);
    }
    return AlgElem::from_poly(target, std::move(num), a.den_pow);
}

AlgElem swap_legs(const AlgElem &a, int i, int j) {
    if (a.A->legs < 2)
        throw AlgebraError("swap_legs requires a tensor power");
    std::size_t bg = a.A->base_gens;
    std::vector<int> map(a.A->ngens());
    for (std::size_t v = 0; v < map.size(); ++v) {
        int leg = static_cast<int>(v / bg) + 1;
        std::size_t g = v % bg;
        int tleg = leg == i ? j : leg == j ? i : leg;
        map[v] = static_cast<int>((tleg - 1) * bg + g);
    }
    return AlgElem::from_poly(a.A, a.num.reindex(a.A->gens, map), a.den_pow);
}

AlgElem leg_denominator_inverse(const PresPtr &tensor, int leg) {
    MultiPoly num = MultiPoly::constant(tensor->gens, FieldElem::one(tensor->field));
    for (int j = 1; j <= tensor->legs; ++j)
        if (j != leg)
            num = num * tensor->leg_denominator(j);
    return AlgElem::from_poly(tensor, std::move(num), 1);
}

std::vector<TensorTerm> tensor_terms(const AlgElem &a) {
    const auto &A = a.A;
    PresPtr base = A->legs == 1 ? A : A->base;
    std::size_t bg = A->legs == 1 ? A->ngens() : A->base_gens;
    std::vector<TensorTerm> out;
    for (const auto &[e, c] : a.num.terms()) {
        TensorTerm t;
        t.coeff = c;
        t.legs.assign(A->legs, MultiPoly());
        std::vector<Exponents> per_leg(A->legs, Exponents(bg, 0));
        for (std::size_t v = 0; v < e.size(); ++v)
            per_leg[v / bg][v % bg] = e[v];
        for (int l = 0; l < A->legs; ++l)
            t.legs[l] = MultiPoly::monomial(base->gens,
                                            FieldElem::one(A->field),
                                            std::move(per_leg[l]));
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

static AlgElem apply_to_poly(const PresPtr &tgt,
                             const std::vector<AlgElem> &images,
                             const MultiPoly &p) {
    AlgElem r = AlgElem::zero(tgt);
    for (const auto &[e, c] : p.terms()) {
        AlgElem t{tgt, MultiPoly::constant(tgt->gens, c), 0};
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * images[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

static std::optional<AlgElem> search_den_inverse(const PresPtr &tgt,
                                                 const AlgElem &den_image) {
    // Candidate inverses are scalar multiples of (products of per-leg
    // denominators) / d^c. Searched in order of increasing complexity.
    std::vector<MultiPoly> units;
    if (tgt->denominator) {
        if (tgt->legs > 1)
            for (int j = 1; j <= tgt->legs; ++j)
                units.push_back(tgt->leg_denominator(j));
        else
            units.push_back(*tgt->denominator);
    }
    int bound = den_image.den_pow + std::max(0, den_image.num.degree()) + 1;
    bound = std::min(bound, 6);
    std::vector<std::vector<int>> combos;
    std::vector<int> combo(units.size() + 1, 0);
    std::function<void(std::size_t)> gen = [&](std::size_t k) {
        if (k == combo.size()) {
            combos.push_back(combo);
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            combo[k] = v;
            gen(k + 1);
        }
    };
    gen(0);
    std::stable_sort(combos.begin(), combos.end(),
                     [](const auto &a, const auto &b) {
                         return std::accumulate(a.begin(), a.end(), 0) <
                                std::accumulate(b.begin(), b.end(), 0);
                     });
    for (const auto &c : combos) {
        if (c[0] > 0 && !tgt->denominator)
            continue;
        MultiPoly num = MultiPoly::constant(tgt->gens, FieldElem::one(tgt->field));
        for (std::size_t u = 0; u < units.size(); ++u)
            if (c[u + 1] > 0)
                num = num * units[u].pow(c[u + 1]);
        AlgElem z0{tgt, num, c[0]};
        AlgElem q = z0 * den_image;
        FieldElem s = counit_eval(q);
        if (s.is_zero())
            continue;
        if (elem_equal(q, AlgElem::one(tgt).scaled(s)))
            return z0.scaled(s.inverse());
    }
    return std::nullopt;
}

AlgebraHom make_hom(PresPtr src, PresPtr tgt, std::vector<AlgElem> images,
                    std::optional<AlgElem> den_inverse) {
    if (images.size() != src->ngens())
        throw AlgebraError("hom needs one image per source generator");
    for (const auto &img : images)
        if (img.A != tgt && (*img.A->gens != *tgt->gens || img.A->field != tgt->field))
            throw AlgebraError("hom image over wrong target algebra");
    AlgebraHom phi{std::move(src), std::move(tgt), std::move(images), std::nullopt};
    if (phi.src->denominator) {
        AlgElem den_image = apply_to_poly(phi.tgt, phi.images, *phi.src->denominator);
        if (den_inverse) {
            if (!elem_equal(*den_inverse * den_image, AlgElem::one(phi.tgt)))
                throw AlgebraError(
                    "supplied denominator inverse fails z * phi(d) = 1");
            phi.den_inverse = std::move(den_inverse);
        } else {
            auto z = search_den_inverse(phi.tgt, den_image);
            if (!z)
                throw AlgebraError("denominator image " + den_image.to_string() +
                                   " is not recognizably invertible in the target");
            phi.den_inverse = std::move(z);
        }
    }
    return phi;
}

AlgElem hom_apply(const AlgebraHom &phi, const AlgElem &a) {
    if (a.A != phi.src && (*a.A->gens != *phi.src->gens || a.A->field != phi.src->field))
        throw AlgebraError("hom_apply: element not over the source algebra");
    AlgElem r = apply_to_poly(phi.tgt, phi.images, a.num);
    if (a.den_pow > 0) {
        if (!phi.den_inverse)
            throw AlgebraError("hom has no denominator inverse");
        r = r * phi.den_inverse->pow(a.den_pow);
    }
    return r.reduced();
}

AlgebraHom hom_compose(const AlgebraHom &g, const AlgebraHom &f) {
    if (f.tgt != g.src && (*f.tgt->gens != *g.src->gens || f.tgt->field != g.src->field))
        throw AlgebraError("hom_compose: middle algebras do not match");
    std::vector<AlgElem> images;
    images.reserve(f.images.size());
    for (const auto &img : f.images)
        images.push_back(hom_apply(g, img));
    std::optional<AlgElem> zinv;
    if (f.den_inverse)
        zinv = hom_apply(g, *f.den_inverse);
    return make_hom(f.src, g.tgt, std::move(images), std::move(zinv));
}

CheckReport hom_verify(const AlgebraHom &phi, bool check_counit) {
    CheckReport report;
    for (const auto &r : phi.src->relations) {
        AlgElem image = hom_apply(phi, AlgElem::from_poly(phi.src, r));
        bool ok = elem_equal(image, AlgElem::zero(phi.tgt));
        report.entries.push_back(
            {"relation " + r.to_string(), ok,
             ok ? "" : "image " + image.reduced().to_string() + " is nonzero"});
    }
    if (check_counit) {
        for (std::size_t i = 0; i < phi.src->ngens(); ++i) {
            FieldElem lhs = counit_eval(phi.images[i]);
            FieldElem rhs = phi.src->counit[i];
            bool ok = lhs == rhs;
            report.entries.push_back(
                {"counit " + (*phi.src->gens)[i], ok,
                 ok ? "" : lhs.to_string() + " != " + rhs.to_string()});
        }
    }
    return report;
}

} // namespace corack

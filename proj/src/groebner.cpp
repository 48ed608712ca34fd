#include "corack/groebner.hpp"

#include <algorithm>
#include <set>

namespace corack {

namespace {

// Top-reduction loop: divide p by the current basis until no leading term is
// divisible, moving reduced leading terms into the remainder.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly> &basis) {
    if (basis.empty() || p.is_zero())
        return p;
    MultiPoly remainder(p.vars(), p.field());
    while (!p.is_zero()) {
        bool reduced = false;
        const Exponents &lm = p.leading_monomial();
        for (const auto &g : basis) {
            if (g.is_zero())
                continue;
            if (monomial_divides(g.leading_monomial(), lm)) {
                FieldElem factor = p.leading_coeff() / g.leading_coeff();
                Exponents q = monomial_quotient(lm, g.leading_monomial());
                p = p - g * MultiPoly::monomial(p.vars(), factor, q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(p.leading_monomial(), p.leading_coeff());
            MultiPoly lt = MultiPoly::monomial(p.vars(), p.leading_coeff(),
                                               p.leading_monomial());
            p = p - lt;
        }
    }
    return remainder;
}

MultiPoly s_poly(const MultiPoly &f, const MultiPoly &g) {
    Exponents l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly mf = MultiPoly::monomial(
        f.vars(), FieldElem::one(f.field()) / f.leading_coeff(),
        monomial_quotient(l, f.leading_monomial()));
    MultiPoly mg = MultiPoly::monomial(
        g.vars(), FieldElem::one(g.field()) / g.leading_coeff(),
        monomial_quotient(l, g.leading_monomial()));
    return f * mf - g * mg;
}

} // namespace

GroebnerBasis buchberger(std::vector<MultiPoly> relations) {
    std::vector<MultiPoly> basis;
    for (auto &r : relations)
        if (!r.is_zero())
            basis.push_back(std::move(r));
    if (basis.empty())
        return {};

    struct Pair {
        Exponents lcm;
        std::size_t i, j;
    };
    auto pair_less = [](const Pair &a, const Pair &b) {
        GrevlexLess lt;
        if (lt(a.lcm, b.lcm))
            return true;
        if (lt(b.lcm, a.lcm))
            return false;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> pairs(pair_less);

    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.insert({monomial_lcm(basis[i].leading_monomial(),
                                       basis[j].leading_monomial()),
                          i, j});
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        add_pairs(j);

    while (!pairs.empty()) {
        Pair pr = *pairs.begin(); // normal strategy: smallest lcm first
        pairs.erase(pairs.begin());
        const MultiPoly &f = basis[pr.i];
        const MultiPoly &g = basis[pr.j];
        if (monomial_coprime(f.leading_monomial(), g.leading_monomial()))
            continue; // product criterion
        // Chain criterion: skip if some basis element k divides the lcm and
        // both side pairs were already handled (not pending).
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j)
                continue;
            if (!monomial_divides(basis[k].leading_monomial(), pr.lcm))
                continue;
            auto pending = [&](std::size_t a, std::size_t b) {
                if (a > b)
                    std::swap(a, b);
                Pair probe{monomial_lcm(basis[a].leading_monomial(),
                                        basis[b].leading_monomial()),
                           a, b};
                return pairs.count(probe) > 0;
            };
            if (!pending(pr.i, k) && !pending(pr.j, k))
                chained = true;
        }
        if (chained)
            continue;
        MultiPoly r = reduce_full(s_poly(f, g), basis);
        if (!r.is_zero()) {
            basis.push_back(r);
            add_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // another's, then tail-reduce and normalize monic.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (monomial_divides(basis[j].leading_monomial(),
                                 basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial())
                    redundant = j < i;
                else
                    redundant = true;
            }
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        MultiPoly r = reduce_full(minimal[i], others);
        reduced.push_back(r.scaled(FieldElem::one(r.field()) / r.leading_coeff()));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MultiPoly &a, const MultiPoly &b) {
                  return GrevlexLess{}(a.leading_monomial(), b.leading_monomial());
              });
    return {std::move(reduced)};
}

MultiPoly normal_form(const MultiPoly &p, const GroebnerBasis &g) {
    return reduce_full(p, g.gens);
}

} // namespace corack

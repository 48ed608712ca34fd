#include "corack/leibniz.hpp"

#include <sstream>

namespace corack {

// ---------------------------------------------------------------------------
// Exact linear algebra

std::vector<std::size_t> rref(Mat &m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero())
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        FieldElem inv = m[row][col].inverse();
        for (auto &x : m[row])
            x = x * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            FieldElem f = m[r][col];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = m[r][k] - f * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row); // everything below the last pivot row is zero
    return pivots;
}

std::optional<Vec> rowspace_coords(const Mat &rows,
                                   const std::vector<std::size_t> &pivots,
                                   const Vec &v) {
    Field field = v.empty() ? Field::rationals() : v[0].field();
    Vec coords(rows.size(), FieldElem::zero(field));
    Vec rest = v;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        FieldElem f = rest[pivots[r]];
        if (f.is_zero())
            continue;
        coords[r] = f;
        for (std::size_t k = 0; k < rest.size(); ++k)
            rest[k] = rest[k] - f * rows[r][k];
    }
    for (const auto &x : rest)
        if (!x.is_zero())
            return std::nullopt;
    return coords;
}

Mat kernel_basis(const Mat &m, std::size_t ncols, const Field &field) {
    Mat red = m;
    auto pivots = rref(red);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    Mat out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(ncols, FieldElem::zero(field));
        v[f] = FieldElem::one(field);
        for (std::size_t r = 0; r < red.size(); ++r)
            v[pivots[r]] = -red[r][f];
        out.push_back(std::move(v));
    }
    rref(out); // unique echelon basis of the kernel
    return out;
}

// ---------------------------------------------------------------------------
// Leibniz algebras

static std::string blabel(const LeibnizAlgebra &g, std::size_t i) {
    if (i < g.basis.size())
        return g.basis[i];
    std::ostringstream os;
    os << "b" << i;
    return os.str();
}

Vec lb_bracket(const LeibnizAlgebra &g, const Vec &u, const Vec &v) {
    if (u.size() != g.dim || v.size() != g.dim)
        throw LeibnizError("coordinate length mismatch");
    Vec out(g.dim, FieldElem::zero(g.field));
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < g.dim; ++j) {
            if (v[j].is_zero())
                continue;
            FieldElem s = u[i] * v[j];
            for (std::size_t k = 0; k < g.dim; ++k)
                out[k] = out[k] + s * g.c[i][j][k];
        }
    }
    return out;
}

LeibnizReport check_identities(const LeibnizAlgebra &g) {
    LeibnizReport rep;
    const std::size_t n = g.dim;

    bool leibniz = true;
    std::string lw;
    for (std::size_t x = 0; x < n && leibniz; ++x)
        for (std::size_t y = 0; y < n && leibniz; ++y)
            for (std::size_t z = 0; z < n && leibniz; ++z)
                for (std::size_t k = 0; k < n; ++k) {
                    FieldElem lhs = FieldElem::zero(g.field);
                    FieldElem rhs = FieldElem::zero(g.field);
                    for (std::size_t m = 0; m < n; ++m) {
                        lhs = lhs + g.c[y][z][m] * g.c[x][m][k];
                        rhs = rhs + g.c[x][y][m] * g.c[m][z][k] +
                              g.c[x][z][m] * g.c[y][m][k];
                    }
                    if (lhs != rhs) {
                        leibniz = false;
                        lw = "witness [" + blabel(g, x) + ",[" + blabel(g, y) +
                             "," + blabel(g, z) + "]]";
                        break;
                    }
                }

    bool lie = true;
    std::string liew;
    for (std::size_t i = 0; i < n && lie; ++i)
        for (std::size_t j = i; j < n; ++j) {
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k)
                if (!(g.c[i][j][k] + g.c[j][i][k]).is_zero() ||
                    (i == j && !g.c[i][i][k].is_zero()))
                    ok = false;
            if (!ok) {
                lie = false;
                liew = "witness [" + blabel(g, i) + "," + blabel(g, j) + "]";
                break;
            }
        }

    bool abelian = true;
    std::string aw;
    for (std::size_t i = 0; i < n && abelian; ++i)
        for (std::size_t j = 0; j < n && abelian; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!g.c[i][j][k].is_zero()) {
                    abelian = false;
                    aw = "witness [" + blabel(g, i) + "," + blabel(g, j) + "]";
                    break;
                }

    rep.leibniz = leibniz;
    rep.lie = lie;
    rep.abelian = abelian;
    rep.items.entries.push_back({"leibniz", leibniz, lw});
    rep.items.entries.push_back({"lie", lie, liew});
    rep.items.entries.push_back({"abelian", abelian, aw});
    return rep;
}

Subspace make_subspace(const LeibnizAlgebra &g, Mat spanning) {
    for (const auto &row : spanning)
        if (row.size() != g.dim)
            throw LeibnizError("subspace row length mismatch");
    Subspace S;
    S.ambient_dim = g.dim;
    S.rows = std::move(spanning);
    S.pivots = rref(S.rows);
    return S;
}

bool subspace_contains(const Subspace &S, const Vec &v) {
    if (v.size() != S.ambient_dim)
        throw LeibnizError("vector length mismatch");
    return rowspace_coords(S.rows, S.pivots, v).has_value();
}

Subspace left_center(const LeibnizAlgebra &g) {
    const std::size_t n = g.dim;
    // X is in the left center iff sum_i X_i c[i][j][k] = 0 for all j, k.
    Mat jac;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vec row(n, FieldElem::zero(g.field));
            for (std::size_t i = 0; i < n; ++i)
                row[i] = g.c[i][j][k];
            jac.push_back(std::move(row));
        }
    Subspace S;
    S.ambient_dim = n;
    S.rows = kernel_basis(jac, n, g.field);
    for (std::size_t r = 0; r < S.rows.size(); ++r) {
        std::size_t p = 0;
        while (p < n && S.rows[r][p].is_zero())
            ++p;
        S.pivots.push_back(p);
    }
    return S;
}

LeibnizSubClass subspace_classify(const LeibnizAlgebra &g, const Subspace &S) {
    if (S.ambient_dim != g.dim)
        throw LeibnizError("subspace over a different algebra");
    bool left_ideal = true;
    for (std::size_t i = 0; i < g.dim && left_ideal; ++i) {
        Vec ei(g.dim, FieldElem::zero(g.field));
        ei[i] = FieldElem::one(g.field);
        for (const auto &s : S.rows)
            if (!subspace_contains(S, lb_bracket(g, ei, s))) {
                left_ideal = false;
                break;
            }
    }
    if (left_ideal)
        return LeibnizSubClass::left_ideal;
    for (const auto &s : S.rows)
        for (const auto &t : S.rows)
            if (!subspace_contains(S, lb_bracket(g, s, t)))
                return LeibnizSubClass::none;
    return LeibnizSubClass::subalgebra;
}

LeibnizAlgebra omni_lie(int n, const Field &field) {
    if (n < 0 || n > 4)
        throw LeibnizError("omni_lie limited to 0 <= n <= 4");
    const std::size_t nn = static_cast<std::size_t>(n);
    const std::size_t dim = nn * nn + nn;
    LeibnizAlgebra g;
    g.field = field;
    g.dim = dim;
    auto E = [&](std::size_t i, std::size_t j) { return i * nn + j; };
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            g.basis.push_back("E" + std::to_string(i + 1) +
                              std::to_string(j + 1));
    for (std::size_t k = 0; k < nn; ++k)
        g.basis.push_back("e" + std::to_string(k + 1));
    g.c.assign(dim, std::vector<Vec>(dim, Vec(dim, FieldElem::zero(field))));
    FieldElem one = FieldElem::one(field);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t b = 0; b < nn; ++b) {
            // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
            for (std::size_t c = 0; c < nn; ++c)
                for (std::size_t d = 0; d < nn; ++d) {
                    auto &out = g.c[E(a, b)][E(c, d)];
                    if (b == c)
                        out[E(a, d)] = out[E(a, d)] + one;
                    if (d == a)
                        out[E(c, b)] = out[E(c, b)] - one;
                }
            // [E_ab, e_k] = delta_bk e_a
            g.c[E(a, b)][nn * nn + b][nn * nn + a] = one;
        }
    return g;
}

OmniEmbedding adjoint_omni_embed(const LeibnizAlgebra &g) {
    if (!check_identities(g).leibniz)
        throw LeibnizError("adjoint embedding requires a Leibniz algebra");
    const std::size_t n = g.dim;
    if (n > 4)
        throw LeibnizError("adjoint embedding limited to dimension <= 4");
    OmniEmbedding emb;
    emb.target = omni_lie(static_cast<int>(n), g.field);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row(n * n + n, FieldElem::zero(g.field));
        // ad_{b_i} as a matrix: column k is the coordinates of [b_i, b_k]
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                row[a * n + k] = g.c[i][k][a];
        row[n * n + i] = FieldElem::one(g.field);
        emb.images.push_back(std::move(row));
    }
    Mat copy = emb.images;
    if (rref(copy).size() != n)
        throw LeibnizError("adjoint embedding is not injective");
    if (!hom_check(emb.images, g, emb.target))
        throw LeibnizError("adjoint embedding does not preserve brackets");
    return emb;
}

bool hom_check(const Mat &psi, const LeibnizAlgebra &g,
               const LeibnizAlgebra &h) {
    if (psi.size() != g.dim)
        throw LeibnizError("map has wrong number of rows");
    for (const auto &row : psi)
        if (row.size() != h.dim)
            throw LeibnizError("map has wrong row length");
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            Vec lhs(h.dim, FieldElem::zero(h.field));
            for (std::size_t k = 0; k < g.dim; ++k) {
                if (g.c[i][j][k].is_zero())
                    continue;
                for (std::size_t m = 0; m < h.dim; ++m)
                    lhs[m] = lhs[m] + g.c[i][j][k] * psi[k][m];
            }
            Vec rhs = lb_bracket(h, psi[i], psi[j]);
            if (lhs != rhs)
                return false;
        }
    return true;
}

} // namespace corack

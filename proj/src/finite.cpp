#include "corack/finite.hpp"

#include <algorithm>
#include <numeric>

namespace corack {

namespace {

void check_table(const std::vector<std::vector<int>> &t, int n,
                 const char *what) {
    if (static_cast<int>(t.size()) != n)
        throw FiniteError(std::string(what) + " table has wrong row count");
    for (const auto &row : t) {
        if (static_cast<int>(row.size()) != n)
            throw FiniteError(std::string(what) + " table has a ragged row");
        for (int v : row)
            if (v < 0 || v >= n)
                throw FiniteError(std::string(what) +
                                  " table entry out of range");
    }
}

std::optional<std::vector<int>> invert_permutation(const std::vector<int> &row) {
    std::vector<int> inv(row.size(), -1);
    for (std::size_t y = 0; y < row.size(); ++y) {
        int v = row[y];
        if (inv[v] != -1)
            return std::nullopt;
        inv[v] = static_cast<int>(y);
    }
    return inv;
}

std::string triple(int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + ")";
}

} // namespace

FiniteRack make_rack(int size, int unit, std::vector<std::vector<int>> op,
                     std::optional<std::vector<std::vector<int>>> op_inv) {
    if (size < 1)
        throw FiniteError("rack size must be positive");
    if (unit < 0 || unit >= size)
        throw FiniteError("rack unit out of range");
    check_table(op, size, "op");
    FiniteRack R;
    R.size = size;
    R.unit = unit;
    R.op = std::move(op);
    if (op_inv) {
        check_table(*op_inv, size, "op_inv");
        R.op_inv = std::move(*op_inv);
    } else {
        // op_inv[y][x] = L_x^-1(y)
        R.op_inv.assign(size, std::vector<int>(size, 0));
        for (int x = 0; x < size; ++x) {
            auto inv = invert_permutation(R.op[x]);
            if (!inv)
                throw FiniteError("row " + std::to_string(x) +
                                  " is not a bijection; supply op_inv "
                                  "explicitly");
            for (int y = 0; y < size; ++y)
                R.op_inv[y][x] = (*inv)[y];
        }
    }
    return R;
}

RackAxiomReport rack_axioms_check(const FiniteRack &R) {
    RackAxiomReport rep;
    const int n = R.size;
    auto add = [&](const std::string &axiom, bool ok, const std::string &w) {
        rep.axioms.entries.push_back({axiom, ok, ok ? "" : "witness " + w});
    };

    bool q1 = true;
    std::string w1;
    for (int x = 0; x < n && q1; ++x)
        for (int y = 0; y < n && q1; ++y) {
            if (R.op_inv[R.op[x][y]][x] != y ||
                R.op[x][R.op_inv[y][x]] != y) {
                q1 = false;
                w1 = triple(x, y, -1);
            }
        }
    add("Q1 invertibility", q1, w1);

    bool q2 = true;
    std::string w2;
    for (int x = 0; x < n && q2; ++x)
        for (int y = 0; y < n && q2; ++y)
            for (int z = 0; z < n; ++z)
                if (R.op[x][R.op[y][z]] != R.op[R.op[x][y]][R.op[x][z]]) {
                    q2 = false;
                    w2 = triple(x, y, z);
                    break;
                }
    add("Q2 left distributivity", q2, w2);

    bool q3 = true;
    std::string w3;
    for (int x = 0; x < n && q3; ++x)
        for (int y = 0; y < n && q3; ++y)
            for (int z = 0; z < n; ++z)
                if (R.op_inv[R.op_inv[x][y]][z] !=
                    R.op_inv[R.op_inv[x][z]][R.op_inv[y][z]]) {
                    q3 = false;
                    w3 = triple(x, y, z);
                    break;
                }
    add("Q3 right distributivity", q3, w3);

    bool q4 = true;
    std::string w4;
    for (int x = 0; x < n; ++x)
        if (R.op[R.unit][x] != x) {
            q4 = false;
            w4 = std::to_string(x);
            break;
        }
    add("Q4 fixing", q4, w4);

    bool q5 = true;
    std::string w5;
    for (int x = 0; x < n; ++x)
        if (R.op[x][R.unit] != R.unit) {
            q5 = false;
            w5 = std::to_string(x);
            break;
        }
    add("Q5 fixedness", q5, w5);

    rep.involutory = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (R.op[x][R.op[x][y]] != y)
                rep.involutory = false;
    rep.quandle = true;
    for (int x = 0; x < n; ++x)
        if (R.op[x][x] != x)
            rep.quandle = false;
    return rep;
}

FiniteGroup make_group(std::vector<std::vector<int>> mul) {
    FiniteGroup G;
    G.size = static_cast<int>(mul.size());
    if (G.size < 1)
        throw FiniteError("group must be nonempty");
    check_table(mul, G.size, "mul");
    G.mul = std::move(mul);
    G.id = -1;
    for (int e = 0; e < G.size; ++e) {
        bool ok = true;
        for (int x = 0; x < G.size; ++x)
            if (G.mul[e][x] != x || G.mul[x][e] != x)
                ok = false;
        if (ok) {
            G.id = e;
            break;
        }
    }
    if (G.id < 0)
        throw FiniteError("no identity element");
    G.inv.assign(G.size, -1);
    for (int x = 0; x < G.size; ++x) {
        for (int y = 0; y < G.size; ++y)
            if (G.mul[x][y] == G.id && G.mul[y][x] == G.id)
                G.inv[x] = y;
        if (G.inv[x] < 0)
            throw FiniteError("element " + std::to_string(x) +
                              " has no inverse");
    }
    for (int x = 0; x < G.size; ++x)
        for (int y = 0; y < G.size; ++y)
            for (int z = 0; z < G.size; ++z)
                if (G.mul[G.mul[x][y]][z] != G.mul[x][G.mul[y][z]])
                    throw FiniteError("multiplication is not associative at " +
                                      triple(x, y, z));
    return G;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw FiniteError("cyclic group order must be positive");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[i][j] = (i + j) % n;
    return make_group(std::move(mul));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1)
        throw FiniteError("dihedral parameter must be positive");
    // elements 0..n-1: rotations r^i; n..2n-1: reflections s r^i
    int m = 2 * n;
    auto code = [&](int flip, int rot) { return flip * n + rot; };
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int fa = a / n, ra = a % n;
            int fb = b / n, rb = b % n;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa+fb) r^(ra' + rb) with
            // r^ra s = s r^-ra
            int rot = fb == 0 ? (ra + rb) % n : ((n - ra) % n + rb) % n;
            mul[a][b] = code((fa + fb) % 2, rot);
        }
    return make_group(std::move(mul));
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4)
        throw FiniteError("symmetric group supported for n <= 4");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int> &q) {
        return static_cast<int>(
            std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> q(n);
            for (int i = 0; i < n; ++i)
                q[i] = perms[a][perms[b][i]];
            mul[a][b] = index_of(q);
        }
    return make_group(std::move(mul));
}

FiniteRack conj_of_group(const FiniteGroup &G) {
    int n = G.size;
    std::vector<std::vector<int>> op(n, std::vector<int>(n));
    std::vector<std::vector<int>> op_inv(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            op[x][y] = G.mul[G.mul[x][y]][G.inv[x]];
            op_inv[x][y] = G.mul[G.mul[G.inv[y]][x]][y];
        }
    return make_rack(n, G.id, std::move(op), std::move(op_inv));
}

std::vector<int> center(const FiniteRack &R) {
    std::vector<int> out;
    for (int x = 0; x < R.size; ++x) {
        bool ident = true;
        for (int y = 0; y < R.size; ++y)
            if (R.op[x][y] != y)
                ident = false;
        if (ident)
            out.push_back(x);
    }
    return out;
}

SubsetClass subset_classify(const FiniteRack &R, const std::vector<int> &S) {
    std::vector<bool> in(R.size, false);
    for (int s : S) {
        if (s < 0 || s >= R.size)
            throw FiniteError("subset element out of range");
        in[s] = true;
    }
    if (!in[R.unit])
        throw FiniteError("subset must contain the unit");
    bool left_ideal = true;
    for (int x = 0; x < R.size && left_ideal; ++x)
        for (int s : S)
            if (!in[R.op[x][s]]) {
                left_ideal = false;
                break;
            }
    if (left_ideal)
        return SubsetClass::left_ideal;
    bool subrack = true;
    for (int r : S) {
        for (int s : S)
            if (!in[R.op[r][s]] || !in[R.op_inv[s][r]])
                subrack = false;
    }
    return subrack ? SubsetClass::subrack : SubsetClass::not_subrack;
}

std::vector<FiniteRack> enumerate_racks(int n, RackFilter filter) {
    if (n < 1 || n > 4)
        throw FiniteError("enumeration supported for 1 <= n <= 4");
    // Q4 forces row 0 = id; Q5 forces every row to fix 0; Q1 forces rows to
    // be bijections. Enumerate permutations of {1..n-1} for each row.
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> rows; // candidate rows fixing 0
    std::vector<int> tail(base.begin() + 1, base.end());
    std::sort(tail.begin(), tail.end());
    do {
        std::vector<int> row{0};
        row.insert(row.end(), tail.begin(), tail.end());
        rows.push_back(row);
    } while (std::next_permutation(tail.begin(), tail.end()));

    std::vector<FiniteRack> out;
    std::vector<int> choice(n, 0); // choice[0] unused: row 0 is the identity
    while (true) {
        std::vector<std::vector<int>> op(n);
        op[0] = base;
        for (int x = 1; x < n; ++x)
            op[x] = rows[choice[x]];
        bool left_dist = true;
        for (int x = 0; x < n && left_dist; ++x)
            for (int y = 0; y < n && left_dist; ++y)
                for (int z = 0; z < n; ++z)
                    if (op[x][op[y][z]] != op[op[x][y]][op[x][z]]) {
                        left_dist = false;
                        break;
                    }
        if (left_dist) {
            auto R = make_rack(n, 0, op);
            bool keep = true;
            switch (filter) {
            case RackFilter::all:
                break;
            case RackFilter::quandle:
                keep = rack_axioms_check(R).quandle;
                break;
            case RackFilter::coassociative_dual: {
                for (int x = 0; x < n && keep; ++x)
                    for (int y = 0; y < n && keep; ++y)
                        for (int z = 0; z < n; ++z)
                            if (op[x][op[y][z]] != op[op[x][y]][z]) {
                                keep = false;
                                break;
                            }
                break;
            }
            case RackFilter::cocommutative_dual: {
                for (int x = 0; x < n && keep; ++x)
                    for (int y = 0; y < n; ++y)
                        if (op[x][y] != op[y][x]) {
                            keep = false;
                            break;
                        }
                break;
            }
            }
            if (keep)
                out.push_back(std::move(R));
        }
        int k = n - 1;
        while (k >= 1 && choice[k] + 1 == static_cast<int>(rows.size()))
            choice[k--] = 0;
        if (k < 1)
            break;
        ++choice[k];
    }
    return out;
}

namespace {

PresPtr function_presentation(int n, int unit, const Field &field) {
    VarList names;
    for (int i = 0; i < n; ++i)
        names.push_back("e" + std::to_string(i));
    auto vars = make_vars(names);
    std::vector<MultiPoly> rels;
    auto one = MultiPoly::constant(vars, FieldElem::one(field));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Exponents e(n, 0);
            e[i] = 1;
            e[j] = 1;
            rels.push_back(MultiPoly::monomial(vars, FieldElem::one(field), e));
        }
    for (int i = 0; i < n; ++i) {
        auto ei = MultiPoly::variable(vars, field, i);
        rels.push_back(ei * ei - ei);
    }
    MultiPoly sum(vars, field);
    for (int i = 0; i < n; ++i)
        sum = sum + MultiPoly::variable(vars, field, i);
    rels.push_back(sum - one);
    std::vector<FieldElem> eps;
    for (int i = 0; i < n; ++i)
        eps.push_back(i == unit ? FieldElem::one(field)
                                : FieldElem::zero(field));
    return Presentation::make(field, names, std::move(rels), std::nullopt,
                              std::move(eps));
}

} // namespace

CorackAlgebra dual_corack(const FiniteRack &R, const Field &field) {
    auto A = function_presentation(R.size, R.unit, field);
    auto A2 = tensor_power(A, 2);
    std::vector<AlgElem> fwd(static_cast<std::size_t>(R.size),
                             AlgElem::zero(A2));
    std::vector<AlgElem> inv(static_cast<std::size_t>(R.size),
                             AlgElem::zero(A2));
    for (int x = 0; x < R.size; ++x)
        for (int y = 0; y < R.size; ++y) {
            auto term = embed_legs(AlgElem::generator(A, x), A2, {1}) *
                        embed_legs(AlgElem::generator(A, y), A2, {2});
            fwd[R.op[x][y]] = fwd[R.op[x][y]] + term;
            inv[R.op_inv[x][y]] = inv[R.op_inv[x][y]] + term;
        }
    return make_corack(A, std::move(fwd), std::move(inv));
}

HopfAlgebra function_hopf(const FiniteGroup &G, const Field &field) {
    auto A = function_presentation(G.size, G.id, field);
    auto A2 = tensor_power(A, 2);
    std::vector<AlgElem> delta(static_cast<std::size_t>(G.size),
                               AlgElem::zero(A2));
    std::vector<AlgElem> antipode;
    for (int a = 0; a < G.size; ++a)
        for (int b = 0; b < G.size; ++b) {
            auto term = embed_legs(AlgElem::generator(A, a), A2, {1}) *
                        embed_legs(AlgElem::generator(A, b), A2, {2});
            delta[G.mul[a][b]] = delta[G.mul[a][b]] + term;
        }
    for (int g = 0; g < G.size; ++g)
        antipode.push_back(AlgElem::generator(A, G.inv[g]));
    return make_hopf(A, std::move(delta), std::move(antipode));
}

} // namespace corack

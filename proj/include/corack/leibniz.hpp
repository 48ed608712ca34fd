#ifndef CORACK_LEIBNIZ_HPP
#define CORACK_LEIBNIZ_HPP

#include "corack/algebra.hpp"

namespace corack {

struct LeibnizError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>;

/// Reduces m to reduced row echelon form in place (exact arithmetic, zero
/// rows dropped) and returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Mat &m);

/// Coordinates of v in the row space of an rref matrix, or nullopt when v is
/// outside the span.
std::optional<Vec> rowspace_coords(const Mat &rows,
                                   const std::vector<std::size_t> &pivots,
                                   const Vec &v);

/// Echelon row basis of { x : m x = 0 } for an ncols-column matrix.
Mat kernel_basis(const Mat &m, std::size_t ncols, const Field &field);

/// A finite-dimensional algebra with a bilinear bracket given by structure
/// constants: [b_i, b_j] = sum_k c[i][j][k] b_k.
struct LeibnizAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> c; // c[i][j] is the coordinate vector of [b_i, b_j]
};

/// The bracket of two coordinate vectors, by bilinear contraction.
Vec lb_bracket(const LeibnizAlgebra &g, const Vec &u, const Vec &v);

struct LeibnizReport {
    CheckReport items; // entries "leibniz", "lie", "abelian" with witnesses
    bool leibniz = false;
    bool lie = false;
    bool abelian = false;
};

/// Leibniz identity on all basis triples; Lie = alternating bracket
/// (c_ii = 0 and c_ij + c_ji = 0, robust in characteristic 2); abelian =
/// all constants zero.
LeibnizReport check_identities(const LeibnizAlgebra &g);

/// A subspace of the coordinate space of g, stored as an echelon-reduced
/// independent row basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    Mat rows;
    std::vector<std::size_t> pivots;
};

Subspace make_subspace(const LeibnizAlgebra &g, Mat spanning);
bool subspace_contains(const Subspace &S, const Vec &v);

/// { X : [X, g] = 0 }, by exact kernel computation.
Subspace left_center(const LeibnizAlgebra &g);

enum class LeibnizSubClass { none, subalgebra, left_ideal };

/// Strongest label that the exhaustive bracket tests support: left_ideal when
/// [g, S] stays in S, otherwise subalgebra when [S, S] does, otherwise none.
LeibnizSubClass subspace_classify(const LeibnizAlgebra &g, const Subspace &S);

/// gl_n + k^n with [(X,v),(Y,w)] = (XY - YX, Xw); basis E_11..E_nn row-major
/// followed by e_1..e_n. n <= 4.
LeibnizAlgebra omni_lie(int n, const Field &field);

/// The map b -> (ad_b, b) of g into omni_lie(dim g), one image row per basis
/// vector. Verified injective and bracket-preserving; throws LeibnizError
/// otherwise (a failure signals a non-Leibniz input).
struct OmniEmbedding {
    LeibnizAlgebra target;
    Mat images; // dim(g) rows of length dim^2 + dim
};

OmniEmbedding adjoint_omni_embed(const LeibnizAlgebra &g);

/// Exhaustive basis-pair test that psi (rows = images of g's basis in h's
/// coordinates) intertwines the brackets.
bool hom_check(const Mat &psi, const LeibnizAlgebra &g, const LeibnizAlgebra &h);

} // namespace corack

#endif

#ifndef CORACK_TANGENT_HPP
#define CORACK_TANGENT_HPP

#include "corack/corack.hpp"
#include "corack/leibniz.hpp"

namespace corack {

struct TangentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point derivation at the counit, stored by its generator values. The
/// values must annihilate every relation to first order; the value on the
/// inverted denominator is recomputed on demand by the quotient rule.
struct Derivation {
    PresPtr A;
    Vec values; // one scalar per generator
};

/// Validates the first-order invariant; throws TangentError on failure.
Derivation make_derivation(PresPtr A, Vec values);

/// Echelon-ordered basis of the space of derivations at the counit: the
/// kernel of the relation Jacobian evaluated at the counit, as the unique
/// reduced-echelon row basis (each row's first nonzero value is 1, at a
/// distinct generator, rows ordered by that generator).
std::vector<Derivation> derivation_basis(const CorackAlgebra &C);

/// D(a): the Leibniz-rule extension on the numerator and the quotient rule
/// (D(p) e(d) - m e(p) D(d)) / e(d)^{m+1} for the denominator power.
FieldElem derive(const Derivation &D, const AlgElem &a);

/// (D (x) id)(nabla a), contracted back to an element of A.
AlgElem psi(const CorackAlgebra &C, const Derivation &D, const AlgElem &a);

/// The convolution bracket: [D,E](g) = (D (x) E)(nabla g) on each generator.
/// Cross-checked against E(psi_D(g)) and against the first-order invariant;
/// a mismatch throws TangentError.
Derivation bracket(const CorackAlgebra &C, const Derivation &D,
                   const Derivation &E);

/// The bracket on the derivation basis, expanded in that basis. Labels are
/// the pivot generator names. Throws TangentError if some bracket value
/// falls outside the span (impossible when the corack axioms hold).
LeibnizAlgebra structure_constants(const CorackAlgebra &C);

/// A scalar dual number a + delta b, delta^2 = 0.
struct DualScalar {
    FieldElem a, b;
};

DualScalar dual_mul(const DualScalar &x, const DualScalar &y);
DualScalar dual_inverse(const DualScalar &x); // requires a != 0
DualScalar dual_pow(const DualScalar &x, int e);

/// The algebra map A -> k[delta] of the tangent vector of D: generator ->
/// (e(g), D(g)). Each relation is re-evaluated over dual numbers and must
/// map to 0 + delta 0; a violation throws TangentError.
std::vector<DualScalar> lift_point(const Derivation &D);

/// An element a + delta b of A[delta].
struct DualElem {
    AlgElem a, b;
};

/// (lift_point(D) (x) id)(nabla f) in A[delta], computed by dual-number
/// evaluation of the first tensor legs — independently of psi, which the
/// test suite compares it against.
DualElem l_sharp(const CorackAlgebra &C, const Derivation &D, const AlgElem &f);

/// The adjoint action through the dual-number left translation: applies E
/// delta-linearly to l_sharp(D, g) and extracts the delta coefficient.
Derivation ad_via_dual(const CorackAlgebra &C, const Derivation &D,
                       const Derivation &E);

/// Pullback of a derivation along an algebra map: phi maps A_Q to A_R,
/// D lives on A_R, the result D o phi lives on A_Q.
Derivation differential(const AlgebraHom &phi, const Derivation &D);

/// The three scalars of the co-left-distributivity expansion of
/// (X (x) Y (x) Z) against nabla applied twice to f:
///   S  = sum X(u1 v1) Y(u2) Z(v2)   (the fused composite through mu)
///   S1 = sum X(u1) e(v1) Y(u2) Z(v2)
///   S2 = sum e(u1) X(v1) Y(u2) Z(v2)
/// where nabla f = sum u (x) v, nabla u = sum u1 (x) u2, nabla v = sum v1 (x) v2.
struct JacobiSums {
    FieldElem S, S1, S2;
};

JacobiSums jacobi_sums(const CorackAlgebra &C, const Derivation &X,
                       const Derivation &Y, const Derivation &Z,
                       const AlgElem &f);

} // namespace corack

#endif

#ifndef CORACK_CORACK_HPP
#define CORACK_CORACK_HPP

#include "corack/algebra.hpp"

namespace corack {

/// A presented algebra with corack operations: algebra homs
/// nabla (and optionally nabla_inv) into the tensor square, the counit
/// coming from the presentation. Construction checks that the operations
/// respect the relations; the axioms themselves are checked by corack_check.
class CorackAlgebra {
public:
    PresPtr A;
    PresPtr A2;
    AlgebraHom nabla;
    std::optional<AlgebraHom> nabla_inv;

    /// Tensor cube, built on first use.
    PresPtr A3() const;

private:
    mutable PresPtr a3_;
};

/// Builds a corack algebra from generator images in tensor_power(A, 2).
/// Throws AlgebraError if an operation fails to kill a relation or no
/// denominator inverse can be found for it.
CorackAlgebra make_corack(PresPtr A, std::vector<AlgElem> nabla_images,
                          std::optional<std::vector<AlgElem>> inv_images);

enum class NablaKind { fwd, inv };

AlgElem nabla_apply(const CorackAlgebra &C, const AlgElem &a,
                    NablaKind which = NablaKind::fwd);

/// Checks the five corack identities on every generator. Inverse-dependent
/// items are reported as skipped (passing, with a notice) when nabla_inv is
/// absent. Failure entries carry both sides' normal forms.
CheckReport corack_check(const CorackAlgebra &C);

struct CorackPredicates {
    bool quandle = false;
    std::optional<bool> involutory; // absent without nabla_inv
    bool cocommutative = false;
    bool coassociative = false;
};

CorackPredicates corack_predicates(const CorackAlgebra &C);

/// Commutative Hopf algebra data on a presented algebra; construction checks
/// that delta and the antipode respect relations and that the counit and
/// antipode laws hold on generators.
struct HopfAlgebra {
    PresPtr A;
    PresPtr A2;
    AlgebraHom delta;    // A -> A2
    AlgebraHom antipode; // A -> A
};

HopfAlgebra make_hopf(PresPtr A, std::vector<AlgElem> delta_images,
                      std::vector<AlgElem> antipode_images);

enum class StockGroup { GL, SL, Ga, Gm, Heis };

/// Coordinate rings of the stock groups. n is the matrix size for GL/SL
/// (ignored otherwise); GL/SL limited to n <= 3.
HopfAlgebra stock_hopf(StockGroup which, int n, const Field &field);

/// Conjugation corack of a Hopf algebra: the pullbacks of
/// (u,v) -> u v u^-1 and (u,v) -> v^-1 u v.
CorackAlgebra conj_corack(const HopfAlgebra &H);

/// k[s_ij, det^-1] tensor k[t_1..t_n]: GL_n conjugating itself and acting on
/// affine n-space. n <= 3.
CorackAlgebra ol_corack(int n, const Field &field);

/// nabla f = 1 (x) f; its inverse is f (x) 1.
CorackAlgebra trivial_corack(const PresPtr &A);

/// Checks that phi intertwines the corack operations and counits of src and
/// tgt, generator by generator. phi maps src.A to tgt.A.
CheckReport corack_hom_verify(const AlgebraHom &phi, const CorackAlgebra &src,
                              const CorackAlgebra &tgt);

/// phi tensor phi ... (n copies) as a hom of tensor powers.
AlgebraHom tensor_hom(const AlgebraHom &phi, int n);

} // namespace corack

#endif

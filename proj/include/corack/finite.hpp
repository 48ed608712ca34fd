#ifndef CORACK_FINITE_HPP
#define CORACK_FINITE_HPP

#include "corack/corack.hpp"

namespace corack {

struct FiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A pointed rack on an operation table. op[x][y] = x |> y and
/// op_inv[y][x] = y |>^-1 x, the inverse of the left action of x.
struct FiniteRack {
    int size = 0;
    int unit = 0;
    std::vector<std::vector<int>> op;
    std::vector<std::vector<int>> op_inv;
};

/// Validates table shapes and value ranges; reconstructs op_inv by inverting
/// the rows of op when omitted (throws if a row is not a bijection).
/// Axiom compliance is a separate question, answered by rack_axioms_check.
FiniteRack make_rack(int size, int unit, std::vector<std::vector<int>> op,
                     std::optional<std::vector<std::vector<int>>> op_inv =
                         std::nullopt);

struct RackAxiomReport {
    CheckReport axioms; // Q1..Q5 with witnesses on failure
    bool involutory = false;
    bool quandle = false;
    bool all_pass() const { return axioms.all_pass(); }
};

RackAxiomReport rack_axioms_check(const FiniteRack &R);

struct FiniteGroup {
    int size = 0;
    std::vector<std::vector<int>> mul;
    int id = 0;
    std::vector<int> inv;
};

/// Builds a group from a multiplication table, locating the identity and
/// inverses and checking associativity. Throws FiniteError on any violation.
FiniteGroup make_group(std::vector<std::vector<int>> mul);

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 1
FiniteGroup symmetric_group(int n);  // n <= 4

/// Conjugation rack: x |> y = x y x^-1, unit = group identity.
FiniteRack conj_of_group(const FiniteGroup &G);

/// Elements whose left action is the identity permutation.
std::vector<int> center(const FiniteRack &R);

enum class SubsetClass { not_subrack, subrack, left_ideal };

/// Strongest label applicable to S (which must contain the unit):
/// subrack when every inner action preserves S, left ideal when every action
/// of the whole rack does.
SubsetClass subset_classify(const FiniteRack &R, const std::vector<int> &S);

enum class RackFilter { all, quandle, coassociative_dual, cocommutative_dual };

/// All pointed racks on {0..n-1} with unit 0, n <= 4, in lexicographic table
/// order. coassociative_dual keeps the racks whose operation is associative,
/// cocommutative_dual those whose operation is commutative.
std::vector<FiniteRack> enumerate_racks(int n, RackFilter filter);

/// The function algebra of R: idempotent orthogonal generators summing to 1,
/// with the corack operations pulled back from the rack tables.
CorackAlgebra dual_corack(const FiniteRack &R, const Field &field);

/// The function Hopf algebra of a finite group on the same presentation.
HopfAlgebra function_hopf(const FiniteGroup &G, const Field &field);

} // namespace corack

#endif

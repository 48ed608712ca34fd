#ifndef CORACK_ALGEBRA_HPP
#define CORACK_ALGEBRA_HPP

#include "corack/groebner.hpp"

#include <optional>

namespace corack {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

/// A finitely presented commutative algebra: generators, relations, an
/// optional localized denominator d (asserted nonzerodivisor modulo the
/// relations) and a counit point. The reduced Groebner basis of the relation
/// ideal is computed once at construction; everything downstream is read-only.
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    Field field;
    VarListPtr gens;
    std::vector<MultiPoly> relations;
    std::optional<MultiPoly> denominator;
    std::vector<FieldElem> counit; // one scalar per generator
    GroebnerBasis gb;

    // Tensor-power structure; legs == 1 for plain presentations.
    int legs = 1;
    PresPtr base;          // null for plain presentations
    std::size_t base_gens = 0;

    static PresPtr make(Field field, VarList gen_names,
                        std::vector<MultiPoly> relations,
                        std::optional<MultiPoly> denominator,
                        std::vector<FieldElem> counit);

    std::size_t ngens() const { return gens->size(); }
    MultiPoly nf(const MultiPoly &p) const { return normal_form(p, gb); }
    FieldElem counit_of_poly(const MultiPoly &p) const { return p.eval(counit); }
    /// The denominator polynomial of one tensor leg (1-based); for plain
    /// presentations leg must be 1.
    MultiPoly leg_denominator(int leg) const;

    struct Private {};
    explicit Presentation(Private) {}

private:
    friend PresPtr tensor_power(const PresPtr &, int);
};

/// n disjoint suffix-renamed copies `g@1`,...,`g@n`; relations are the union
/// of the renamed copies, the denominator is the product of the copies and
/// the counit is the product point. n == 1 returns the input unchanged.
PresPtr tensor_power(const PresPtr &a, int n);

/// An element num / d^den_pow of a presented algebra. Equality is semantic
/// (see elem_equal), not structural.
struct AlgElem {
    PresPtr A;
    MultiPoly num;
    int den_pow = 0;

    static AlgElem zero(const PresPtr &a);
    static AlgElem one(const PresPtr &a);
    static AlgElem from_poly(const PresPtr &a, MultiPoly p, int den_pow = 0);
    static AlgElem generator(const PresPtr &a, std::size_t idx);
    static AlgElem parse(const PresPtr &a, const std::string &text, int den_pow = 0);

    AlgElem operator+(const AlgElem &o) const;
    AlgElem operator-(const AlgElem &o) const;
    AlgElem operator*(const AlgElem &o) const;
    AlgElem operator-() const;
    AlgElem scaled(const FieldElem &c) const;
    AlgElem pow(int n) const;

    bool is_structural_zero() const { return num.is_zero(); }
    /// Numerator reduced to normal form, common denominator powers kept.
    AlgElem reduced() const;
    std::string to_string() const;
};

bool elem_equal(const AlgElem &a, const AlgElem &b);
FieldElem counit_eval(const AlgElem &a);

/// Maps an element of a (tensor power of a) base algebra into a larger tensor
/// power, sending source leg l to target leg leg_map[l-1]. Denominator powers
/// are padded with the untouched legs' denominators.
AlgElem embed_legs(const AlgElem &a, const PresPtr &target,
                   const std::vector<int> &leg_map);
/// Transposes two legs of a tensor-power element.
AlgElem swap_legs(const AlgElem &a, int i, int j);
/// The inverse of the leg-i denominator d@i inside an n-fold tensor power.
AlgElem leg_denominator_inverse(const PresPtr &tensor, int leg);

/// One monomial term of a tensor-power element, split into per-leg monomial
/// factors over the base generators. The whole element is
/// sum of coeff * (legs[0]/d^den_pow) x ... x (legs[L-1]/d^den_pow)
/// with den_pow taken from the element.
struct TensorTerm {
    FieldElem coeff;
    std::vector<MultiPoly> legs;
};

std::vector<TensorTerm> tensor_terms(const AlgElem &a);

/// An algebra homomorphism given by generator images. When the source is
/// localized at d, den_inverse holds a verified inverse of the image of d;
/// builders may pass one explicitly, otherwise construction searches for one
/// (scalar multiples of denominator/leg-denominator monomials) and fails if
/// none is found.
struct AlgebraHom {
    PresPtr src, tgt;
    std::vector<AlgElem> images;
    std::optional<AlgElem> den_inverse;
};

AlgebraHom make_hom(PresPtr src, PresPtr tgt, std::vector<AlgElem> images,
                    std::optional<AlgElem> den_inverse = std::nullopt);
AlgElem hom_apply(const AlgebraHom &phi, const AlgElem &a);
AlgebraHom hom_compose(const AlgebraHom &g, const AlgebraHom &f); // g after f

struct CheckEntry {
    std::string item;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool all_pass() const {
        for (const auto &e : entries)
            if (!e.pass)
                return false;
        return true;
    }
};

/// Checks that every source relation maps to zero and (optionally) that the
/// counits are compatible. Failures are report entries, not errors.
CheckReport hom_verify(const AlgebraHom &phi, bool check_counit);

} // namespace corack

#endif

#ifndef CORACK_GROEBNER_HPP
#define CORACK_GROEBNER_HPP

#include "corack/poly.hpp"

namespace corack {

/// A reduced Groebner basis under grevlex; generators are monic and pairwise
/// tail-reduced, so normal forms are unique.
struct GroebnerBasis {
    std::vector<MultiPoly> gens;

    bool empty() const { return gens.empty(); }
};

/// Buchberger with the normal selection strategy and the product and chain
/// criteria. Returns the reduced basis of the ideal generated by the input.
GroebnerBasis buchberger(std::vector<MultiPoly> relations);

/// Remainder of multivariate division by G; unique representative modulo the
/// ideal. With an empty basis this is the identity.
MultiPoly normal_form(const MultiPoly &p, const GroebnerBasis &g);

} // namespace corack

#endif

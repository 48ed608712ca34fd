#ifndef CORACK_IO_HPP
#define CORACK_IO_HPP

#include "corack/finite.hpp"
#include "corack/leibniz.hpp"

#include "json.hpp"

namespace corack {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Field: {"type":"Q"} or {"type":"Fp","p":N}
Json field_to_json(const Field &f);
Field field_from_json(const Json &j);

// Presentation: {"field":..., "generators":[...], "relations":[...],
//                "denominator":"poly"|null, "counit":{"gen":"scalar",...}}
Json presentation_to_json(const PresPtr &A);
PresPtr presentation_from_json(const Json &j);

// Corack: Presentation plus "nabla" (and optional "nabla_inv") tables of
// tensor-square elements, written as "poly" or "(poly)/d^m" where d stands
// for the tensor-square denominator.
Json corack_to_json(const CorackAlgebra &C);
CorackAlgebra corack_from_json(const Json &j);

// Finite rack: {"size":n, "unit":u, "op":[[...]], "op_inv":[[...]]}
Json rack_to_json(const FiniteRack &R);
FiniteRack rack_from_json(const Json &j);

// Finite group: {"size":n, "mul":[[...]]}
Json group_to_json(const FiniteGroup &G);
FiniteGroup group_from_json(const Json &j);

// Leibniz algebra: {"dim":n, "basis":[...],
//                   "constants":[{"i":i,"j":j,"k":k,"c":"a/b"},...]}
// with only the nonzero entries, sorted by (i, j, k).
Json leibniz_to_json(const LeibnizAlgebra &g);
LeibnizAlgebra leibniz_from_json(const Json &j);

Json report_to_json(const CheckReport &r);

/// Parses a file or throws IoError with the path in the message.
Json load_json(const std::string &path);

} // namespace corack

#endif

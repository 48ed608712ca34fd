#ifndef CORACK_POLY_HPP
#define CORACK_POLY_HPP

#include "corack/field.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace corack {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;
using Exponents = std::vector<int>;

struct PolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline VarListPtr make_vars(VarList names) {
    return std::make_shared<const VarList>(std::move(names));
}

/// Graded reverse lexicographic order with respect to the declared variable
/// order. Smaller-first, so the leading term of a map sits at rbegin().
struct GrevlexLess {
    bool operator()(const Exponents &a, const Exponents &b) const;
};

int total_degree(const Exponents &e);
bool monomial_divides(const Exponents &a, const Exponents &b);
Exponents monomial_quotient(const Exponents &b, const Exponents &a);
Exponents monomial_lcm(const Exponents &a, const Exponents &b);
bool monomial_coprime(const Exponents &a, const Exponents &b);

/// Sparse multivariate polynomial over an exact field. Immutable in spirit:
/// all operations return fresh values.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElem, GrevlexLess>;

    MultiPoly() = default;
    MultiPoly(VarListPtr vars, Field field);

    static MultiPoly constant(VarListPtr vars, const FieldElem &c);
    static MultiPoly variable(VarListPtr vars, Field field, std::size_t idx);
    static MultiPoly monomial(VarListPtr vars, const FieldElem &c, Exponents e);
    static MultiPoly parse(VarListPtr vars, Field field, const std::string &text);

    const VarListPtr &vars() const { return vars_; }
    const Field &field() const { return field_; }
    const TermMap &terms() const { return terms_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant coefficient (zero if absent).
    FieldElem constant_term() const;
    int degree() const; // total degree; -1 for zero

    const Exponents &leading_monomial() const;
    const FieldElem &leading_coeff() const;

    MultiPoly operator+(const MultiPoly &o) const;
    MultiPoly operator-(const MultiPoly &o) const;
    MultiPoly operator*(const MultiPoly &o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const FieldElem &c) const;
    MultiPoly pow(int e) const;
    bool operator==(const MultiPoly &o) const;
    bool operator!=(const MultiPoly &o) const { return !(*this == o); }

    void add_term(const Exponents &e, const FieldElem &c); // builder use

    /// Ring-homomorphic substitution; one image per variable, all images over
    /// a common variable list.
    MultiPoly substitute(const std::vector<MultiPoly> &images) const;
    /// Substitution by name; throws on a missing image.
    MultiPoly substitute(const std::map<std::string, MultiPoly> &images) const;

    MultiPoly partial(std::size_t idx) const;
    MultiPoly partial(const std::string &var) const;

    FieldElem eval(const std::vector<FieldElem> &point) const;
    FieldElem eval(const std::map<std::string, FieldElem> &point) const;

    /// Transplants the polynomial onto a new variable list; index_map[i] is
    /// the new index of old variable i.
    MultiPoly reindex(VarListPtr new_vars, const std::vector<int> &index_map) const;
    /// Reindex by matching names; every variable in use must exist in new_vars.
    MultiPoly transport(VarListPtr new_vars) const;

    std::string to_string() const;

private:
    VarListPtr vars_;
    Field field_;
    TermMap terms_;

    void check_compatible(const MultiPoly &o) const;
};

std::optional<std::size_t> var_index(const VarList &vars, const std::string &name);

/// Quotient of an exact polynomial division, or nullopt when den does not
/// divide num. den must be nonzero.
std::optional<MultiPoly> exact_divide(const MultiPoly &num, const MultiPoly &den);

} // namespace corack

#endif

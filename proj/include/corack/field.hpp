#ifndef CORACK_FIELD_HPP
#define CORACK_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace corack {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ground field: the rationals or a prime field F_p with p < 2^31.
struct Field {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::int64_t p = 0;

    static Field rationals() { return Field{Kind::Rational, 0}; }
    static Field prime(std::int64_t p);

    std::int64_t characteristic() const { return kind == Kind::Rational ? 0 : p; }
    bool operator==(const Field &o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field &o) const { return !(*this == o); }
    std::string to_string() const;
};

/// An exact scalar: a reduced rational or a residue in [0, p).
class FieldElem {
public:
    FieldElem() = default;
    static FieldElem zero(const Field &f);
    static FieldElem one(const Field &f);
    static FieldElem from_int(const Field &f, std::int64_t n);
    static FieldElem from_rational(const Field &f, const BigRat &r);
    /// Parses "n" or "a/b".
    static FieldElem parse(const Field &f, const std::string &s);

    const Field &field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem &o) const;
    FieldElem operator-(const FieldElem &o) const;
    FieldElem operator*(const FieldElem &o) const;
    FieldElem operator/(const FieldElem &o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::int64_t e) const;

    bool operator==(const FieldElem &o) const;
    bool operator!=(const FieldElem &o) const { return !(*this == o); }

    std::string to_string() const;

    const BigRat &rational() const { return rat_; }
    std::int64_t residue() const { return res_; }

private:
    Field field_;
    BigRat rat_;           // Rational case
    std::int64_t res_ = 0; // Prime case, always in [0, p)

    void check_same(const FieldElem &o) const;
};

} // namespace corack

#endif

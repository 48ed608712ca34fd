#include "corack/field.hpp"

namespace corack {

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw FieldError("prime must satisfy 2 <= p < 2^31");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw FieldError("modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::Prime, p};
}

std::string Field::to_string() const {
    return kind == Kind::Rational ? "Q" : "F" + std::to_string(p);
}

static std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; requires gcd(a, p) = 1.
static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw FieldError("division by zero residue");
    return mod_reduce(t, p);
}

FieldElem FieldElem::zero(const Field &f) {
    FieldElem e;
    e.field_ = f;
    return e;
}

FieldElem FieldElem::one(const Field &f) { return from_int(f, 1); }

FieldElem FieldElem::from_int(const Field &f, std::int64_t n) {
    FieldElem e;
    e.field_ = f;
    if (f.kind == Field::Kind::Rational)
        e.rat_ = n;
    else
        e.res_ = mod_reduce(n, f.p);
    return e;
}

FieldElem FieldElem::from_rational(const Field &f, const BigRat &r) {
    FieldElem e;
    e.field_ = f;
    if (f.kind == Field::Kind::Rational) {
        e.rat_ = r;
    } else {
        BigInt num = boost::multiprecision::numerator(r) % f.p;
        BigInt den = boost::multiprecision::denominator(r) % f.p;
        std::int64_t n = mod_reduce(num.convert_to<std::int64_t>(), f.p);
        std::int64_t d = mod_reduce(den.convert_to<std::int64_t>(), f.p);
        e.res_ = static_cast<std::int64_t>(
            (static_cast<__int128>(n) * mod_inverse(d, f.p)) % f.p);
    }
    return e;
}

FieldElem FieldElem::parse(const Field &f, const std::string &s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return from_rational(f, BigRat(BigInt(s)));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw FieldError("zero denominator in scalar '" + s + "'");
        return from_rational(f, BigRat(num, den));
    } catch (const std::exception &) {
        throw FieldError("bad scalar literal '" + s + "'");
    }
}

bool FieldElem::is_zero() const {
    return field_.kind == Field::Kind::Rational ? rat_ == 0 : res_ == 0;
}

bool FieldElem::is_one() const {
    return field_.kind == Field::Kind::Rational ? rat_ == 1 : res_ == 1;
}

void FieldElem::check_same(const FieldElem &o) const {
    if (field_ != o.field_)
        throw FieldError("field mismatch: " + field_.to_string() + " vs " +
                         o.field_.to_string());
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.kind == Field::Kind::Rational)
        e.rat_ = rat_ + o.rat_;
    else
        e.res_ = mod_reduce(res_ + o.res_, field_.p);
    return e;
}

FieldElem FieldElem::operator-(const FieldElem &o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.kind == Field::Kind::Rational)
        e.rat_ = rat_ - o.rat_;
    else
        e.res_ = mod_reduce(res_ - o.res_, field_.p);
    return e;
}

FieldElem FieldElem::operator*(const FieldElem &o) const {
    check_same(o);
    FieldElem e;
    e.field_ = field_;
    if (field_.kind == Field::Kind::Rational)
        e.rat_ = rat_ * o.rat_;
    else
        e.res_ = static_cast<std::int64_t>(
            (static_cast<__int128>(res_) * o.res_) % field_.p);
    return e;
}

FieldElem FieldElem::operator/(const FieldElem &o) const {
    return *this * o.inverse();
}

FieldElem FieldElem::operator-() const {
    return zero(field_) - *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero())
        throw FieldError("inverse of zero");
    FieldElem e;
    e.field_ = field_;
    if (field_.kind == Field::Kind::Rational)
        e.rat_ = 1 / rat_;
    else
        e.res_ = mod_inverse(res_, field_.p);
    return e;
}

FieldElem FieldElem::pow(std::int64_t n) const {
    if (n < 0)
        return inverse().pow(-n);
    FieldElem r = one(field_), b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem &o) const {
    if (field_ != o.field_)
        return false;
    return field_.kind == Field::Kind::Rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElem::to_string() const {
    if (field_.kind == Field::Kind::Prime)
        return std::to_string(res_);
    std::string s = boost::multiprecision::numerator(rat_).str();
    if (boost::multiprecision::denominator(rat_) != 1)
        s += "/" + boost::multiprecision::denominator(rat_).str();
    return s;
}

} // namespace corack

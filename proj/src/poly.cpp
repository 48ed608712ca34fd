#include "corack/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corack {

bool GrevlexLess::operator()(const Exponents &a, const Exponents &b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] > b[i]; // larger rightmost exponent means smaller
    }
    return false;
}

int total_degree(const Exponents &e) {
    int d = 0;
    for (int x : e)
        d += x;
    return d;
}

bool monomial_divides(const Exponents &a, const Exponents &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exponents monomial_quotient(const Exponents &b, const Exponents &a) {
    Exponents q(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        q[i] = b[i] - a[i];
    return q;
}

Exponents monomial_lcm(const Exponents &a, const Exponents &b) {
    Exponents m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

bool monomial_coprime(const Exponents &a, const Exponents &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

std::optional<std::size_t> var_index(const VarList &vars, const std::string &name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vars.begin());
}

MultiPoly::MultiPoly(VarListPtr vars, Field field)
    : vars_(std::move(vars)), field_(field) {}

MultiPoly MultiPoly::constant(VarListPtr vars, const FieldElem &c) {
    MultiPoly p(std::move(vars), c.field());
    if (!c.is_zero())
        p.terms_.emplace(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarListPtr vars, Field field, std::size_t idx) {
    if (idx >= vars->size())
        throw PolyError("variable index out of range");
    MultiPoly p(std::move(vars), field);
    Exponents e(p.nvars(), 0);
    e[idx] = 1;
    p.terms_.emplace(std::move(e), FieldElem::one(field));
    return p;
}

MultiPoly MultiPoly::monomial(VarListPtr vars, const FieldElem &c, Exponents e) {
    MultiPoly p(std::move(vars), c.field());
    if (e.size() != p.nvars())
        throw PolyError("exponent vector length mismatch");
    if (!c.is_zero())
        p.terms_.emplace(std::move(e), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

FieldElem MultiPoly::constant_term() const {
    Exponents z(nvars(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

int MultiPoly::degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

const Exponents &MultiPoly::leading_monomial() const {
    if (terms_.empty())
        throw PolyError("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const FieldElem &MultiPoly::leading_coeff() const {
    if (terms_.empty())
        throw PolyError("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

void MultiPoly::check_compatible(const MultiPoly &o) const {
    if (field_ != o.field_)
        throw PolyError("polynomial field mismatch");
    if (vars_ != o.vars_ && *vars_ != *o.vars_)
        throw PolyError("polynomial variable-list mismatch");
}

void MultiPoly::add_term(const Exponents &e, const FieldElem &c) {
    if (e.size() != nvars())
        throw PolyError("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero())
        terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly &o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto &[e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly &o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto &[e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_, field_);
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElem &s) const {
    MultiPoly r(vars_, field_);
    if (s.is_zero())
        return r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly &o) const {
    check_compatible(o);
    MultiPoly r(vars_, field_);
    Exponents e(nvars());
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(int n) const {
    if (n < 0)
        throw PolyError("negative polynomial power");
    MultiPoly r = constant(vars_, FieldElem::one(field_));
    MultiPoly b = *this;
    while (n > 0) {
        if (n & 1)
            r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly &o) const {
    if (field_ != o.field_ || *vars_ != *o.vars_)
        return false;
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly> &images) const {
    if (images.size() != nvars())
        throw PolyError("substitution needs one image per variable");
    VarListPtr tvars = images.empty() ? vars_ : images.front().vars();
    for (const auto &img : images) {
        if (img.field() != field_)
            throw PolyError("substitution images over a different field");
        images.front().check_compatible(img);
    }
    MultiPoly r(tvars, field_);
    for (const auto &[e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * images[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly> &images) const {
    std::vector<MultiPoly> vec;
    vec.reserve(nvars());
    for (const auto &name : *vars_) {
        auto it = images.find(name);
        if (it == images.end())
            throw PolyError("missing substitution image for variable '" + name + "'");
        vec.push_back(it->second);
    }
    return substitute(vec);
}

MultiPoly MultiPoly::partial(std::size_t idx) const {
    if (idx >= nvars())
        throw PolyError("partial with respect to unknown variable");
    MultiPoly r(vars_, field_);
    for (const auto &[e, c] : terms_) {
        if (e[idx] == 0)
            continue;
        Exponents d = e;
        d[idx] -= 1;
        r.add_term(d, c * FieldElem::from_int(field_, e[idx]));
    }
    return r;
}

MultiPoly MultiPoly::partial(const std::string &var) const {
    auto idx = var_index(*vars_, var);
    if (!idx)
        throw PolyError("unknown variable '" + var + "'");
    return partial(*idx);
}

FieldElem MultiPoly::eval(const std::vector<FieldElem> &point) const {
    if (point.size() != nvars())
        throw PolyError("evaluation needs one value per variable");
    FieldElem r = FieldElem::zero(field_);
    for (const auto &[e, c] : terms_) {
        FieldElem t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0)
                t = t * point[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

FieldElem MultiPoly::eval(const std::map<std::string, FieldElem> &point) const {
    std::vector<FieldElem> vec;
    vec.reserve(nvars());
    for (const auto &name : *vars_) {
        auto it = point.find(name);
        if (it == point.end())
            throw PolyError("missing value for variable '" + name + "'");
        vec.push_back(it->second);
    }
    return eval(vec);
}

MultiPoly MultiPoly::reindex(VarListPtr new_vars, const std::vector<int> &index_map) const {
    if (index_map.size() != nvars())
        throw PolyError("reindex map length mismatch");
    MultiPoly r(new_vars, field_);
    Exponents e2(new_vars->size());
    for (const auto &[e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            int j = index_map[i];
            if (j < 0 || static_cast<std::size_t>(j) >= e2.size())
                throw PolyError("reindex target out of range");
            e2[j] += e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly MultiPoly::transport(VarListPtr new_vars) const {
    std::vector<int> map(nvars(), -1);
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto idx = var_index(*new_vars, (*vars_)[i]);
        map[i] = idx ? static_cast<int>(*idx) : -1;
    }
    // Unused variables may be unmapped.
    for (const auto &[e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && map[i] < 0)
                throw PolyError("variable '" + (*vars_)[i] +
                                "' has no counterpart in target variable list");
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] < 0)
            map[i] = 0; // harmless, exponent is always zero
    return reindex(std::move(new_vars), map);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

struct Lexer {
    const std::string &s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < s.size())
            ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                s[pos] == '@'))
            ++pos;
        return s.substr(start, pos - start);
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw PolyError("expected number at position " + std::to_string(pos) +
                            " in '" + s + "'");
        return s.substr(start, pos - start);
    }
};

class Parser {
public:
    Parser(VarListPtr vars, Field field, const std::string &text)
        : vars_(std::move(vars)), field_(field), lex_{text} {}

    MultiPoly run() {
        MultiPoly p = parse_expr();
        if (lex_.peek() != '\0')
            throw PolyError("trailing input in polynomial '" + lex_.s + "'");
        return p;
    }

private:
    VarListPtr vars_;
    Field field_;
    Lexer lex_;

    MultiPoly parse_expr() {
        bool neg = false;
        if (lex_.eat('-'))
            neg = true;
        else
            lex_.eat('+');
        MultiPoly p = parse_term();
        if (neg)
            p = -p;
        while (true) {
            char c = lex_.peek();
            if (c == '+') {
                lex_.get();
                p = p + parse_term();
            } else if (c == '-') {
                lex_.get();
                p = p - parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    MultiPoly parse_term() {
        MultiPoly p = parse_factor();
        while (lex_.eat('*'))
            p = p * parse_factor();
        return p;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_base();
        if (lex_.eat('^')) {
            int e = std::stoi(lex_.digits());
            base = base.pow(e);
        }
        return base;
    }

    MultiPoly parse_base() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.get();
            MultiPoly p = parse_expr();
            if (!lex_.eat(')'))
                throw PolyError("expected ')' in polynomial '" + lex_.s + "'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lex_.digits();
            if (lex_.peek() == '/') {
                lex_.get();
                std::string den = lex_.digits();
                return MultiPoly::constant(vars_,
                                           FieldElem::parse(field_, num + "/" + den));
            }
            return MultiPoly::constant(vars_, FieldElem::parse(field_, num));
        }
        std::string name = lex_.ident();
        if (name.empty())
            throw PolyError("unexpected character '" + std::string(1, c) +
                            "' in polynomial '" + lex_.s + "'");
        auto idx = var_index(*vars_, name);
        if (!idx)
            throw PolyError("unknown variable '" + name + "' in polynomial '" +
                            lex_.s + "'");
        return MultiPoly::variable(vars_, field_, *idx);
    }
};

} // namespace

MultiPoly MultiPoly::parse(VarListPtr vars, Field field, const std::string &text) {
    return Parser(std::move(vars), field, text).run();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents &e = it->first;
        FieldElem c = it->second;
        bool negative = false;
        if (field_.kind == Field::Kind::Rational && c.rational() < 0) {
            negative = true;
            c = -c;
        }
        if (first) {
            if (negative)
                out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string varpart;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!varpart.empty())
                varpart += "*";
            varpart += (*vars_)[i];
            if (e[i] > 1)
                varpart += "^" + std::to_string(e[i]);
        }
        if (varpart.empty()) {
            out << c.to_string();
        } else if (c.is_one()) {
            out << varpart;
        } else {
            out << c.to_string() << "*" << varpart;
        }
    }
    return out.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly &num, const MultiPoly &den) {
    if (den.is_zero())
        throw PolyError("division by the zero polynomial");
    MultiPoly q(num.vars(), num.field());
    MultiPoly r = num;
    const Exponents &ld = den.leading_monomial();
    while (!r.is_zero()) {
        const Exponents &lr = r.leading_monomial();
        if (!monomial_divides(ld, lr))
            return std::nullopt;
        FieldElem c = r.leading_coeff() / den.leading_coeff();
        Exponents e = monomial_quotient(lr, ld);
        q.add_term(e, c);
        for (const auto &[de, dc] : den.terms()) {
            Exponents te(e.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                te[i] = e[i] + de[i];
            r.add_term(te, -(c * dc));
        }
    }
    return q;
}

} // namespace corack

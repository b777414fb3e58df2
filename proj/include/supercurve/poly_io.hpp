#pragma once

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace supercurve {

// Multivariate polynomial over Q in named parameters.
class ParamPoly {
public:
    using Monomial = std::map<std::string, int>;

    ParamPoly() = default;
    ParamPoly(long v) : ParamPoly(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    ParamPoly(const Rational& v) {                  // NOLINT(google-explicit-constructor)
        if (v != 0) terms_[{}] = v;
    }
    static ParamPoly variable(const std::string& name) {
        ParamPoly p;
        p.terms_[{{name, 1}}] = 1;
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const {
        auto it = terms_.find({});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    std::set<std::string> variables() const {
        std::set<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }
    Rational substitute(const std::map<std::string, Rational>& values) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) throw ParameterError("missing parameter: " + v);
                t *= qpow(it->second, e);
            }
            total += t;
        }
        return total;
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add(m, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a) {
        ParamPoly r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (const auto& [v, e] : mb) m[v] += e;
                r.add(m, ca * cb);
            }
        return r;
    }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

private:
    void add(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    std::map<Monomial, Rational> terms_;
};

using TemplatePoly = Polynomial<ParamPoly>;

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string text) : s_(std::move(text)) {}

    TemplatePoly parse() {
        TemplatePoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '$' || c == '(';
    }

    TemplatePoly expr() {
        TemplatePoly r = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                r = r + term();
            } else if (c == '-') {
                ++pos_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    TemplatePoly term() {
        TemplatePoly r = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r = r * unary();
            } else if (c == '/') {
                ++pos_;
                TemplatePoly d = unary();
                if (d.degree() != 0 || !d.leading().is_constant()) fail("division only by nonzero constants");
                Rational inv = 1 / d.leading().constant_value();
                r = ParamPoly(inv) * r;
            } else if (starts_primary()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    TemplatePoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    TemplatePoly power() {
        TemplatePoly base = primary();
        if (peek() == '^') {
            ++pos_;
            bool brace = false;
            if (peek() == '{') {
                ++pos_;
                brace = true;
            }
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 4) fail("exponent too large");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (brace) {
                if (peek() != '}') fail("expected '}'");
                ++pos_;
            }
            return pow(base, e);
        }
        return base;
    }

    TemplatePoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            TemplatePoly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return TemplatePoly::x();
        }
        if (c == '$') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            if (start == pos_) fail("expected parameter name");
            return TemplatePoly::constant(ParamPoly::variable(s_.substr(start, pos_ - start)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return TemplatePoly::constant(ParamPoly(Rational(Integer(s_.substr(start, pos_ - start)))));
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline TemplatePoly parse_template(const std::string& text) { return detail::ExprParser(text).parse(); }

inline RatPoly to_ratpoly(const TemplatePoly& t) {
    std::vector<Rational> c;
    for (const auto& v : t.coeffs()) {
        if (!v.is_constant()) throw ParseError("unexpected parameter in polynomial");
        c.push_back(v.constant_value());
    }
    return RatPoly(std::move(c));
}

inline RatPoly parse_ratpoly(const std::string& text) { return to_ratpoly(parse_template(text)); }

inline IntPoly parse_poly(const std::string& text) {
    RatPoly r = parse_ratpoly(text);
    std::vector<Integer> c;
    for (const auto& v : r.coeffs()) {
        if (v.get_den() != 1) throw ParseError("non-integer coefficient in \"" + text + "\"");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

inline RatPoly substitute(const TemplatePoly& t, const std::map<std::string, Rational>& values) {
    std::vector<Rational> c;
    for (const auto& v : t.coeffs()) c.push_back(v.substitute(values));
    return RatPoly(std::move(c));
}

inline std::set<std::string> template_parameters(const TemplatePoly& t) {
    std::set<std::string> out;
    for (const auto& v : t.coeffs())
        for (const auto& name : v.variables()) out.insert(name);
    return out;
}

template <class C>
std::string format_poly(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        C c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        C mag = neg ? C(-c) : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1) os << to_string(mag) << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace supercurve

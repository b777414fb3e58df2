#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace supercurve {

// Dense univariate polynomial; coefficient i multiplies x^i.
template <class C>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const C& v) { return Polynomial(std::vector<C>{v}); }
    static Polynomial monomial(const C& v, std::size_t deg) {
        std::vector<C> c(deg + 1, C(0));
        c[deg] = v;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(C(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    C coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return C(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const C& leading() const {
        if (c_.empty()) throw ZeroPolynomialError();
        return c_.back();
    }
    const std::vector<C>& coeffs() const { return c_; }

    Polynomial operator-() const {
        std::vector<C> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == C(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const C& s, const Polynomial& p) {
        std::vector<C> r(p.c_);
        for (auto& v : r) v = s * v;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<C> r(c_.size() - 1, C(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = C(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
    }
    std::vector<C> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

template <class C>
Polynomial<C> pow(const Polynomial<C>& p, unsigned long e) {
    Polynomial<C> r = Polynomial<C>::constant(C(1));
    Polynomial<C> b = p;
    while (e) {
        if (e & 1UL) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

struct ContentSplit {
    Rational content;
    IntPoly primitive;
};

// content * primitive == f; primitive has coprime coefficients and positive lead.
inline ContentSplit content_primitive(const RatPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    Integer den = 1;
    for (const auto& v : f.coeffs()) den = lcm(den, v.get_den());
    std::vector<Integer> ints;
    ints.reserve(f.coeffs().size());
    Integer g = 0;
    for (const auto& v : f.coeffs()) {
        Integer z = v.get_num() * (den / v.get_den());
        g = gcd(g, z);
        ints.push_back(z);
    }
    if (ints.back() < 0) g = -g;
    for (auto& z : ints) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    Rational content(g, den);
    content.canonicalize();
    return {content, IntPoly(std::move(ints))};
}

inline ContentSplit content_primitive(const IntPoly& f) { return content_primitive(to_rational(f)); }

inline IntPoly primitive_part(const IntPoly& f) { return content_primitive(f).primitive; }

// Content-free scaling of an integer polynomial by an integer.
inline IntPoly scale(const IntPoly& p, const Integer& s) { return s * p; }

inline Integer eval(const IntPoly& p, const Integer& x) {
    Integer r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * x + p.coeff(i);
    return r;
}

inline Rational eval(const RatPoly& p, const Rational& x) {
    Rational r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * x + p.coeff(i);
    return r;
}

// Value of q^deg * p(num/q) for x = num/q; zero iff p(x) == 0.
inline Integer eval_homogeneous(const IntPoly& p, const Rational& x) {
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    int d = p.degree();
    Integer r = 0, bp = 1;
    std::vector<Integer> bpow(static_cast<std::size_t>(std::max(d, 0)) + 1);
    for (int i = 0; i <= d; ++i) {
        bpow[static_cast<std::size_t>(i)] = bp;
        bp *= b;
    }
    for (int i = d; i >= 0; --i) r = r * a + p.coeff(i) * bpow[static_cast<std::size_t>(d - i)];
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomialError();
    std::vector<Integer> r = a.coeffs();
    int db = b.degree();
    const Integer& lb = b.leading();
    int da = a.degree();
    if (da < db) return a;
    int steps = da - db + 1;
    for (int k = da; k >= db; --k) {
        Integer t = r[static_cast<std::size_t>(k)];
        for (auto& v : r) v *= lb;
        if (t != 0)
            for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeff(j);
        --steps;
    }
    while (steps-- > 0)
        for (auto& v : r) v *= lb;
    return IntPoly(std::move(r));
}

// Exact quotient a / b in Z[x]; throws if the division is not exact.
inline IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw ZeroPolynomialError();
    if (a.is_zero()) return {};
    int da = a.degree(), db = b.degree();
    if (da < db) throw InvariantViolation("inexact polynomial division");
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(da - db + 1), Integer(0));
    const Integer& lb = b.leading();
    for (int k = da; k >= db; --k) {
        Integer t = r[static_cast<std::size_t>(k)];
        if (t == 0) continue;
        if (!mpz_divisible_p(t.get_mpz_t(), lb.get_mpz_t())) throw InvariantViolation("inexact polynomial division");
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), t.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(k - db)] = qk;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= qk * b.coeff(j);
    }
    for (const auto& v : r)
        if (v != 0) throw InvariantViolation("inexact polynomial division");
    return IntPoly(std::move(q));
}

// Division with remainder over Q.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ZeroPolynomialError();
    int da = a.degree(), db = b.degree();
    if (da < db) return {RatPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(da - db + 1), Rational(0));
    for (int k = da; k >= db; --k) {
        Rational t = r[static_cast<std::size_t>(k)] / b.leading();
        q[static_cast<std::size_t>(k - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= t * b.coeff(j);
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

// Primitive gcd with positive leading coefficient; gcd(0, 0) == 0.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.is_zero() ? IntPoly() : primitive_part(r);
    }
    return primitive_part(u);
}

struct SquarefreePart {
    IntPoly factor;
    unsigned long multiplicity;
};

struct SquarefreeDecomposition {
    std::vector<SquarefreePart> parts;  // ascending multiplicity
    Rational unit;

    RatPoly reconstruct() const {
        RatPoly r = RatPoly::constant(unit);
        for (const auto& p : parts) r = r * to_rational(pow(p.factor, p.multiplicity));
        return r;
    }
};

// Yun's cascade over Z on the primitive part.
inline SquarefreeDecomposition squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    ContentSplit cp = content_primitive(f);
    SquarefreeDecomposition out;
    out.unit = cp.content;
    const IntPoly& p = cp.primitive;
    if (p.degree() == 0) return out;
    IntPoly dp = p.derivative();
    IntPoly a0 = gcd(p, dp);
    IntPoly b = divexact(p, a0);
    IntPoly c = divexact(dp, a0);
    IntPoly d = c - b.derivative();
    unsigned long i = 1;
    while (b.degree() > 0) {
        IntPoly a = gcd(b, d);
        IntPoly bn = divexact(b, a);
        IntPoly cn = divexact(d, a);
        if (a.degree() > 0) out.parts.push_back({a, i});
        b = std::move(bn);
        d = cn - b.derivative();
        ++i;
    }
    // b is now a unit of Z[x]; fold its sign into the unit.
    if (!b.is_zero() && b.leading() < 0) out.unit = -out.unit;
    return out;
}

// Resultant via the subresultant algorithm.
inline Integer resultant(const IntPoly& A0, const IntPoly& B0) {
    if (A0.is_zero() || B0.is_zero()) return 0;
    IntPoly A = A0, B = B0;
    Integer s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    }
    if (B.degree() == 0) return s * ipow(B.leading(), static_cast<unsigned long>(A.degree()));
    ContentSplit ca = content_primitive(A), cb = content_primitive(B);
    // contents of integer polynomials are integers
    Integer a = ca.content.get_num(), bcont = cb.content.get_num();
    A = ca.primitive;
    B = cb.primitive;
    Integer t = ipow(a, static_cast<unsigned long>(B.degree())) * ipow(bcont, static_cast<unsigned long>(A.degree()));
    Integer g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = B;
        if (R.is_zero()) return 0;
        Integer div = g * ipow(h, static_cast<unsigned long>(delta));
        std::vector<Integer> rc = R.coeffs();
        for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        B = IntPoly(std::move(rc));
        g = A.leading();
        if (delta == 0) {
            // h^(1) * g^0 = h
        } else {
            Integer num = ipow(g, static_cast<unsigned long>(delta));
            Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (B.degree() == 0) {
            int da = A.degree();
            Integer num = ipow(B.leading(), static_cast<unsigned long>(da));
            Integer den = ipow(h, static_cast<unsigned long>(da - 1));
            Integer hh;
            mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return s * t * hh;
        }
    }
}

inline Rational discriminant(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw DegreeTooSmallError("degree too small: discriminant needs degree >= 1");
    if (d == 1) return 1;
    Integer r = resultant(f, f.derivative());
    long sign_exp = static_cast<long>(d) * (d - 1) / 2;
    Rational out(r, f.leading());
    out.canonicalize();
    return (sign_exp % 2) ? Rational(-out) : out;
}

// 2x2 integer matrix acting as x -> (a x + b) / (c x + d).
struct Mobius {
    Integer a = 1, b = 0, c = 0, d = 1;

    Integer det() const { return a * d - b * c; }
    static Mobius identity() { return {1, 0, 0, 1}; }
    static Mobius translation(const Integer& t) { return {1, t, 0, 1}; }
    static Mobius translation(const Rational& t) { return {t.get_den(), t.get_num(), 0, t.get_den()}; }
    static Mobius negation() { return {-1, 0, 0, 1}; }
    static Mobius inversion() { return {0, 1, 1, 0}; }
    static Mobius scaling(const Rational& u) { return {u.get_num(), 0, 0, u.get_den()}; }

    // Matrix product; substituting by *this then by o equals substituting by (*this) * o.
    Mobius operator*(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mobius adjugate() const { return {d, -b, -c, a}; }
    friend bool operator==(const Mobius& x, const Mobius& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// (cx + d)^weight * f((ax + b)/(cx + d)).
inline IntPoly mobius_transform(const IntPoly& f, const Mobius& m, unsigned long weight) {
    if (m.det() == 0) throw DegenerateTransformError();
    if (f.is_zero()) return {};
    if (static_cast<long>(weight) < f.degree())
        throw DegreeTooSmallError("weight smaller than the polynomial degree");
    IntPoly num({m.b, m.a}), den({m.d, m.c});
    std::vector<IntPoly> np(weight + 1), dp(weight + 1);
    np[0] = IntPoly::constant(1);
    dp[0] = IntPoly::constant(1);
    for (unsigned long i = 1; i <= weight; ++i) {
        np[i] = np[i - 1] * num;
        dp[i] = dp[i - 1] * den;
    }
    IntPoly r;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        r = r + f.coeff(i) * (np[static_cast<std::size_t>(i)] * dp[weight - static_cast<unsigned long>(i)]);
    }
    return r;
}

// Distinct rational roots in ascending order.
inline std::vector<Rational> rational_roots(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    std::vector<Rational> roots;
    IntPoly p = primitive_part(f);
    int shift = 0;
    while (p.degree() > 0 && p.coeff(shift) == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        std::vector<Integer> c(p.coeffs().begin() + shift, p.coeffs().end());
        p = IntPoly(std::move(c));
    }
    if (p.degree() >= 1) {
        if (p.degree() == 1) {
            Rational r(-p.coeff(0), p.coeff(1));
            r.canonicalize();
            roots.push_back(r);
        } else {
            auto nums = positive_divisors(p.coeff(0));
            auto dens = positive_divisors(p.leading());
            for (const auto& q : dens) {
                for (const auto& a : nums) {
                    if (gcd(a, q) != 1) continue;
                    for (int sgn : {1, -1}) {
                        Rational r(sgn * a, q);
                        r.canonicalize();
                        if (eval_homogeneous(p, r) == 0) roots.push_back(r);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace supercurve

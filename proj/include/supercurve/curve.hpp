#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "poly_io.hpp"

namespace supercurve {

struct BranchGroup {
    unsigned long multiplicity;
    unsigned long count;  // distinct roots over the algebraic closure
    unsigned long fiber;  // gcd(n, m)
    unsigned long index;  // n / gcd(n, m)
};

struct InfinityBranch {
    unsigned long fiber;
    unsigned long index;
};

struct RamificationProfile {
    std::vector<BranchGroup> affine_branches;  // ramified groups only, ascending multiplicity
    std::optional<InfinityBranch> infinity_branch;
    long ramification_degree = 0;
};

class SuperellipticCurve;
SuperellipticCurve new_curve(long n, const RatPoly& f);

// y^n = f(x), stored as content * primitive with the content free of n-th powers.
class SuperellipticCurve {
public:
    long n() const { return n_; }
    const IntPoly& f() const { return f_; }
    int degree() const { return f_.degree(); }
    const Integer& content() const { return content_; }
    const IntPoly& primitive() const { return primitive_; }
    const SquarefreeDecomposition& decomposition() const { return sqf_; }
    // Padding weight n * ceil(d / n) used by model transformations.
    unsigned long weight() const {
        long d = degree();
        return static_cast<unsigned long>(n_ * ((d + n_ - 1) / n_));
    }

    friend bool operator==(const SuperellipticCurve& a, const SuperellipticCurve& b) {
        return a.n_ == b.n_ && a.f_ == b.f_;
    }
    friend bool operator!=(const SuperellipticCurve& a, const SuperellipticCurve& b) { return !(a == b); }

private:
    friend SuperellipticCurve new_curve(long n, const RatPoly& f);
    long n_ = 2;
    IntPoly f_;
    Integer content_;
    IntPoly primitive_;
    SquarefreeDecomposition sqf_;
};

inline unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// gcd(n, all multiplicities); 1 means irreducible over the algebraic closure.
inline unsigned long multiplicity_gcd(long n, const SquarefreeDecomposition& sqf) {
    unsigned long g = static_cast<unsigned long>(n);
    for (const auto& p : sqf.parts) g = gcd_ul(g, p.multiplicity);
    return g;
}

inline bool is_irreducible(long n, const IntPoly& f) {
    if (n < 2) throw PreconditionError("n must be at least 2");
    return multiplicity_gcd(n, squarefree_decomposition(f)) == 1;
}

// Integer representative of the content class modulo n-th powers.
inline Integer normalize_content(const Rational& c, long n) {
    Integer num = c.get_num() * ipow(c.get_den(), static_cast<unsigned long>(n - 1));
    Integer core = split_nth_power(num, static_cast<unsigned long>(n)).first;
    if (n % 2 == 1 && core < 0) core = -core;
    return core;
}

inline SuperellipticCurve new_curve(long n, const RatPoly& f) {
    if (n < 2) throw PreconditionError("n must be at least 2");
    if (f.is_zero()) throw ZeroPolynomialError();
    if (f.degree() < 1) throw DegreeTooSmallError("degree too small: f must have degree >= 1");
    ContentSplit cp = content_primitive(f);
    SuperellipticCurve c;
    c.n_ = n;
    c.primitive_ = cp.primitive;
    c.content_ = normalize_content(cp.content, n);
    c.f_ = c.content_ * c.primitive_;
    c.sqf_ = squarefree_decomposition(c.f_);
    unsigned long g = multiplicity_gcd(n, c.sqf_);
    if (g != 1) throw ReducibleModelError(static_cast<long>(g));
    return c;
}

inline SuperellipticCurve new_curve(long n, const IntPoly& f) { return new_curve(n, to_rational(f)); }

inline RamificationProfile ramification_profile(const SuperellipticCurve& curve) {
    RamificationProfile prof;
    unsigned long n = static_cast<unsigned long>(curve.n());
    for (const auto& part : curve.decomposition().parts) {
        unsigned long fiber = gcd_ul(n, part.multiplicity);
        if (fiber == n) continue;
        unsigned long count = static_cast<unsigned long>(part.factor.degree());
        prof.affine_branches.push_back({part.multiplicity, count, fiber, n / fiber});
        prof.ramification_degree += static_cast<long>(count * fiber * (n / fiber - 1));
    }
    unsigned long d = static_cast<unsigned long>(curve.degree());
    unsigned long fiber = gcd_ul(n, d);
    if (fiber != n) {
        prof.infinity_branch = InfinityBranch{fiber, n / fiber};
        prof.ramification_degree += static_cast<long>(fiber * (n / fiber - 1));
    }
    return prof;
}

inline long genus(const SuperellipticCurve& curve) {
    long two_g_minus_two = -2 * curve.n() + ramification_profile(curve).ramification_degree;
    if (two_g_minus_two % 2 != 0) throw InvariantViolation("Riemann-Hurwitz sum is odd");
    long g = 1 + two_g_minus_two / 2;
    if (g < 0) throw InvariantViolation("negative genus");
    return g;
}

// Valid for squarefree f only.
inline long genus_closed_form(long n, long d) {
    if (n < 2 || d < 1) throw PreconditionError("need n >= 2 and d >= 1");
    long v = n * (d - 1) - d - gcd_long(n, d);
    return v / 2 + 1;
}

inline SuperellipticCurve apply_transform(const SuperellipticCurve& curve, const Mobius& m,
                                          const Rational& scale = Rational(1)) {
    if (scale == 0) throw PreconditionError("scale must be nonzero");
    IntPoly g = mobius_transform(curve.f(), m, curve.weight());
    RatPoly scaled = qpow(scale, curve.n()) * to_rational(g);
    SuperellipticCurve out = new_curve(curve.n(), scaled);
    if (genus(out) != genus(curve)) throw InvariantViolation("genus changed under a model transformation");
    return out;
}

inline std::string format_curve(const SuperellipticCurve& c) {
    return "y^" + std::to_string(c.n()) + " = " + format_poly(c.f());
}

// Parses "y^<n> = <polynomial>"; rational coefficients are accepted and normalized.
inline SuperellipticCurve parse_curve(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("curve must have the form y^n = f(x)");
    std::string lhs;
    for (char ch : text.substr(0, eq))
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') lhs.push_back(ch);
    if (lhs.size() < 3 || lhs[0] != 'y' || lhs[1] != '^') throw ParseError("curve must start with y^n");
    std::string ns = lhs.substr(2);
    if (ns.empty() || ns.size() > 6 || !std::all_of(ns.begin(), ns.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError("bad exponent of y: " + ns);
    long n = std::stol(ns);
    return new_curve(n, parse_ratpoly(text.substr(eq + 1)));
}

}  // namespace supercurve

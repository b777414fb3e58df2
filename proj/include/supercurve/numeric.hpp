#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace supercurve {

using Integer = mpz_class;
using Rational = mpq_class;

// Trial division limit used wherever integers are factored.
inline constexpr unsigned long kTrialDivisionLimit = 1000000UL;

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational qpow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw InvariantViolation("negative power of zero");
        Rational inv = 1 / base;
        return qpow(inv, -e);
    }
    Rational r(ipow(base.get_num(), static_cast<unsigned long>(e)),
               ipow(base.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(Rational q) {
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("not a rational number: " + text);
        return Rational(Integer(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("not a rational number: " + text);
    Integer d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator: " + text);
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact n-th root of a rational, if one exists.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long n) {
    if (n == 0) return std::nullopt;
    if (q == 0) return Rational(0);
    if (q < 0 && n % 2 == 0) return std::nullopt;
    Integer num = abs(q.get_num());
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), n) == 0) return std::nullopt;
    if (q < 0) rn = -rn;
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

// Prime factorization by trial division. A cofactor left after the limit is
// reported as a single factor; it may be composite for very large inputs.
inline std::vector<std::pair<Integer, unsigned long>> factor_integer(const Integer& value) {
    std::vector<std::pair<Integer, unsigned long>> out;
    Integer m = abs(value);
    if (m <= 1) return out;
    auto strip = [&](const Integer& p) {
        unsigned long k = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++k;
        }
        if (k) out.emplace_back(p, k);
    };
    strip(Integer(2));
    for (unsigned long p = 3; p <= kTrialDivisionLimit; p += 2) {
        Integer pp(p);
        if (pp * pp > m) break;
        strip(pp);
    }
    if (m > 1) {
        // The cofactor may still be a perfect power of a large prime.
        for (unsigned long k = 64; k >= 2; --k) {
            Integer r;
            if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k) != 0) {
                out.emplace_back(r, k);
                m = 1;
                break;
            }
        }
        if (m > 1) out.emplace_back(m, 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Splits c = core * root^n with |core| free of n-th powers (up to the trial bound).
inline std::pair<Integer, Integer> split_nth_power(const Integer& c, unsigned long n) {
    if (c == 0) throw ZeroPolynomialError();
    Integer core = c < 0 ? Integer(-1) : Integer(1);
    Integer root = 1;
    for (const auto& [p, k] : factor_integer(c)) {
        root *= ipow(p, k / n);
        core *= ipow(p, k % n);
    }
    return {core, root};
}

// Positive divisors of |a|; empty for a == 0.
inline std::vector<Integer> positive_divisors(const Integer& a) {
    std::vector<Integer> divs{Integer(1)};
    if (a == 0) return {};
    for (const auto& [p, k] : factor_integer(a)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned long e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline long gcd_long(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace supercurve

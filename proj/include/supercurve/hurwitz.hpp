#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace supercurve {

// Branched cover data (g'; e_1..e_s) of degree n. degree == 0 marks an abstract signature.
struct CoverSignature {
    long degree = 0;
    long quotient_genus = 0;
    std::vector<long> indices;

    long branch_count() const { return static_cast<long>(indices.size()); }
    friend bool operator==(const CoverSignature& a, const CoverSignature& b) {
        return a.degree == b.degree && a.quotient_genus == b.quotient_genus && a.indices == b.indices;
    }
};

// Accepts "0-(2, 4, 5)", "1-(2^6)", "0-(2^{4}, 4)" and the empty list "0-()".
inline CoverSignature parse_signature(const std::string& text, long degree = 0) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto bad = [&](const std::string& why) { return ParseError("bad signature \"" + text + "\": " + why); };
    auto dash = s.find('-');
    if (dash == std::string::npos || dash == 0) throw bad("expected <g'>-(...)");
    std::string gq = s.substr(0, dash);
    if (!std::all_of(gq.begin(), gq.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || gq.size() > 6)
        throw bad("quotient genus");
    std::string body = s.substr(dash + 1);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') throw bad("expected parenthesized indices");
    body = body.substr(1, body.size() - 2);
    CoverSignature sig;
    sig.degree = degree;
    sig.quotient_genus = std::stol(gq);
    if (body.empty()) return sig;
    std::stringstream ss(body);
    std::string item;
    auto number = [&](const std::string& t) {
        if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw bad("index \"" + t + "\"");
        return std::stol(t);
    };
    while (std::getline(ss, item, ',')) {
        auto caret = item.find('^');
        long e = number(item.substr(0, caret));
        long k = 1;
        if (caret != std::string::npos) {
            std::string ks = item.substr(caret + 1);
            if (!ks.empty() && ks.front() == '{') {
                if (ks.back() != '}') throw bad("unbalanced brace");
                ks = ks.substr(1, ks.size() - 2);
            }
            k = number(ks);
            if (k < 1) throw bad("run length");
        }
        if (e < 2) throw bad("branch index below 2");
        for (long i = 0; i < k; ++i) sig.indices.push_back(e);
    }
    return sig;
}

// Short lists are written out; from five branch points on, repeated indices use e^{k}.
inline std::string format_signature(const CoverSignature& sig) {
    std::ostringstream os;
    os << sig.quotient_genus << "-(";
    std::vector<long> idx = sig.indices;
    std::sort(idx.begin(), idx.end());
    bool powers = idx.size() >= 5;
    bool first = true;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && idx[j] == idx[i]) ++j;
        std::size_t run = j - i;
        auto emit = [&](const std::string& t) {
            os << (first ? "" : ", ") << t;
            first = false;
        };
        if (powers && run >= 2) {
            emit(std::to_string(idx[i]) + "^{" + std::to_string(run) + "}");
        } else {
            for (std::size_t r = 0; r < run; ++r) emit(std::to_string(idx[i]));
        }
        i = j;
    }
    os << ")";
    return os.str();
}

inline Rational rh_expression(const CoverSignature& sig) {
    Rational v = 2 * sig.quotient_genus - 2;
    for (long e : sig.indices) v += Rational(e - 1, e);
    v.canonicalize();
    return v;
}

inline long rh_genus_from_signature(const CoverSignature& sig) {
    if (sig.degree < 1) throw InadmissibleSignatureError("group order must be positive");
    for (long e : sig.indices)
        if (e < 2 || sig.degree % e != 0)
            throw InadmissibleSignatureError("index " + std::to_string(e) + " does not divide " + std::to_string(sig.degree));
    Rational g = 1 + Rational(sig.degree, 2) * rh_expression(sig);
    g.canonicalize();
    if (g.get_den() != 1) throw InadmissibleSignatureError("non-integral genus " + to_string(g));
    if (g < 0) throw InadmissibleSignatureError("negative genus");
    return g.get_num().get_si();
}

inline long locus_dimension(const CoverSignature& sig) {
    long dim = 3 * sig.quotient_genus - 3 + sig.branch_count();
    if (dim < 0) throw RigidStratumError();
    return dim;
}

inline long hurwitz_bound(long g) {
    if (g < 2) throw PreconditionError("Hurwitz bound needs genus >= 2");
    return 84 * (g - 1);
}

struct RhMinimum {
    Rational value;
    CoverSignature argmin;  // abstract (degree 0)
};

// Smallest strictly positive 2g'-2+sum(1-1/e) over the box; ties resolved by (g', s, indices).
inline RhMinimum minimize_rh_expression(long max_s, long max_e, long max_gq) {
    std::optional<RhMinimum> best;
    std::vector<long> idx;
    auto visit = [&](long gq) {
        CoverSignature sig{0, gq, idx};
        Rational v = rh_expression(sig);
        if (v > 0 && (!best || v < best->value)) best = RhMinimum{v, sig};
    };
    for (long gq = 0; gq <= max_gq; ++gq) {
        for (long s = 0; s <= max_s; ++s) {
            if (s == 0) {
                idx.clear();
                visit(gq);
                continue;
            }
            if (max_e < 2) break;
            idx.assign(static_cast<std::size_t>(s), 2);
            while (true) {
                visit(gq);
                long pos = s - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == max_e) --pos;
                if (pos < 0) break;
                long nv = idx[static_cast<std::size_t>(pos)] + 1;
                for (long q = pos; q < s; ++q) idx[static_cast<std::size_t>(q)] = nv;
            }
        }
    }
    if (!best) throw EmptySearchSpaceError();
    return *best;
}

}  // namespace supercurve

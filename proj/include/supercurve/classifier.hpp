#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "loci.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "poly_io.hpp"

namespace supercurve {

enum class Confidence { ExactMatch, AtLeast };

inline std::string confidence_name(Confidence c) { return c == Confidence::ExactMatch ? "exact-match" : "at-least"; }

// template == twist * mobius_transform(reduced_model, matrix, weight)
struct NormalizingTransform {
    Mobius matrix;
    unsigned long weight = 0;
    Rational twist = 1;
    long y_power = 1;
};

struct ClassificationResult {
    std::optional<int> case_no;
    std::map<std::string, Rational> fitted_params;
    std::optional<NormalizingTransform> transform;
    Confidence confidence = Confidence::AtLeast;
    IntPoly reduced_model;  // y-power model the transform applies to
    std::string reason;
};

struct StructureFlags {
    IntPoly depressed;
    std::vector<int> poly_in_power;          // f(x) = g(x^k)
    std::vector<int> x_times_poly_in_power;  // f(x) = x * g(x^k)
    bool palindromic = false;                // x^d f(1/x) = c f(u x), c, u rational
};

namespace detail {

inline IntPoly depress(const IntPoly& f) {
    int d = f.degree();
    if (d < 2) return primitive_part(f);
    Rational t(-f.coeff(d - 1), f.leading() * d);
    t.canonicalize();
    return primitive_part(mobius_transform(f, Mobius::translation(t), static_cast<unsigned long>(d)));
}

inline bool is_poly_in_power(const IntPoly& g, int k) {
    if (g.degree() < k) return false;
    for (int i = 0; i <= g.degree(); ++i)
        if (i % k != 0 && g.coeff(i) != 0) return false;
    return true;
}

inline int zero_order(const IntPoly& f) {
    int m = 0;
    while (m < f.degree() && f.coeff(m) == 0) ++m;
    return m;
}

inline IntPoly shift_down(const IntPoly& f, int m) {
    std::vector<Integer> c(f.coeffs().begin() + m, f.coeffs().end());
    return IntPoly(std::move(c));
}

// Rational k with x -> k/x preserving the root set of f (f(0) != 0), if any.
inline std::optional<Rational> palindromic_scale(const IntPoly& f) {
    int d = f.degree();
    if (d < 2 || f.coeff(0) == 0) return std::nullopt;
    Rational c(f.leading(), f.coeff(0));
    c.canonicalize();
    Rational ud(f.coeff(0) * f.coeff(0), f.leading() * f.leading());
    ud.canonicalize();
    auto root = exact_root(ud, static_cast<unsigned long>(d));
    if (!root) return std::nullopt;
    std::vector<Rational> us{*root};
    if (d % 2 == 0) us.push_back(-*root);
    for (const Rational& u : us) {
        bool ok = true;
        Rational up = 1;
        for (int i = 0; i <= d && ok; ++i) {
            if (Rational(f.coeff(d - i)) != c * f.coeff(i) * up) ok = false;
            up *= u;
        }
        if (ok) {
            Rational k = 1 / u;
            return k;
        }
    }
    return std::nullopt;
}

// Reduced-row-echelon helpers over Q.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    int rows = static_cast<int>(m.size());
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(p)]);
        auto& pr = m[static_cast<std::size_t>(row)];
        Rational inv = 1 / pr[static_cast<std::size_t>(col)];
        for (auto& v : pr) v *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row) continue;
            auto& rr = m[static_cast<std::size_t>(r)];
            Rational fct = rr[static_cast<std::size_t>(col)];
            if (fct == 0) continue;
            for (std::size_t c = 0; c < rr.size(); ++c) rr[c] -= fct * pr[c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of {v : m v = 0}.
inline std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> m, int cols) {
    std::vector<int> piv = rref(m, cols);
    std::vector<std::vector<Rational>> basis;
    std::set<int> pset(piv.begin(), piv.end());
    for (int free = 0; free < cols; ++free) {
        if (pset.count(free)) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[static_cast<std::size_t>(piv[r])] = -m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of a p = b (free variables zero), if consistent.
inline std::optional<std::vector<Rational>> solve_linear(const std::vector<std::vector<Rational>>& a,
                                                         const std::vector<Rational>& b, int cols) {
    std::vector<std::vector<Rational>> m = a;
    for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
    std::vector<int> piv = rref(m, cols + 1);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[static_cast<std::size_t>(piv[r])] = m[r][static_cast<std::size_t>(cols)];
    return x;
}

struct AuxVariable {
    int group = -1;         // symmetric group index, -1 for a plain parameter
    std::string name;       // plain parameter name
    int elementary = 0;     // degree of the elementary symmetric function
};

// Template written as base + A * aux, with aux linear unknowns.
struct LinearTemplate {
    bool ok = false;
    int degree = -1;
    std::vector<Rational> base;
    std::vector<std::vector<Rational>> matrix;  // rows: x-degree, cols: aux
    std::vector<AuxVariable> aux;
    std::vector<std::vector<std::string>> groups;
};

inline LinearTemplate linearize(const CurveFamily& fam) {
    LinearTemplate lt;
    lt.groups = fam.symmetric;
    std::map<std::string, int> group_of;
    for (std::size_t g = 0; g < lt.groups.size(); ++g)
        for (const auto& p : lt.groups[g]) group_of[p] = static_cast<int>(g);
    const TemplatePoly& t = fam.template_poly;
    lt.degree = t.degree();
    if (lt.degree < 1) return lt;
    std::map<std::tuple<int, std::string, int>, int> aux_index;
    std::map<std::pair<int, int>, std::map<int, std::pair<Rational, int>>> seen;  // (group, e) -> row -> (coef, count)
    lt.base.assign(static_cast<std::size_t>(lt.degree) + 1, Rational(0));
    std::vector<std::map<int, Rational>> rows(static_cast<std::size_t>(lt.degree) + 1);
    auto aux_of = [&](int group, const std::string& name, int e) {
        auto key = std::make_tuple(group, name, e);
        auto it = aux_index.find(key);
        if (it != aux_index.end()) return it->second;
        int idx = static_cast<int>(lt.aux.size());
        lt.aux.push_back({group, name, e});
        aux_index[key] = idx;
        return idx;
    };
    for (int k = 0; k <= lt.degree; ++k) {
        const ParamPoly ck = t.coeff(k);
        for (const auto& [mono, coef] : ck.terms()) {
            if (mono.empty()) {
                lt.base[static_cast<std::size_t>(k)] += coef;
                continue;
            }
            bool multilinear = std::all_of(mono.begin(), mono.end(), [](const auto& pe) { return pe.second == 1; });
            if (!multilinear) return lt;
            int group = -2;
            for (const auto& [v, e] : mono) {
                int g = group_of.count(v) ? group_of[v] : -1;
                if (group == -2) group = g;
                if (g != group) return lt;
            }
            int col;
            if (group == -1) {
                if (mono.size() != 1) return lt;
                col = aux_of(-1, mono.begin()->first, 0);
            } else {
                int e = static_cast<int>(mono.size());
                col = aux_of(group, "", e);
                auto& slot = seen[{group, e}][k];
                if (slot.second == 0) slot.first = coef;
                if (slot.first != coef) return lt;
                slot.second++;
            }
            if (group == -1) rows[static_cast<std::size_t>(k)][col] += coef;
            else if (rows[static_cast<std::size_t>(k)].count(col) == 0) rows[static_cast<std::size_t>(k)][col] = coef;
        }
    }
    // every elementary function must appear with all of its monomials
    for (const auto& [ge, per_row] : seen) {
        std::size_t s = lt.groups[static_cast<std::size_t>(ge.first)].size();
        long expected = 1;
        for (int i = 0; i < ge.second; ++i) expected = expected * static_cast<long>(s - static_cast<std::size_t>(i)) / (i + 1);
        for (const auto& [row, cc] : per_row)
            if (cc.second != expected) return lt;
    }
    int cols = static_cast<int>(lt.aux.size());
    lt.matrix.assign(static_cast<std::size_t>(lt.degree) + 1, std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
    for (int k = 0; k <= lt.degree; ++k)
        for (const auto& [c, v] : rows[static_cast<std::size_t>(k)])
            lt.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = v;
    // the leading coefficient must be a parameter-free anchor
    if (lt.base[static_cast<std::size_t>(lt.degree)] == 0) return lt;
    for (const auto& v : lt.matrix[static_cast<std::size_t>(lt.degree)])
        if (v != 0) return lt;
    // unknowns must be determined by the coefficients
    auto m = lt.matrix;
    if (static_cast<int>(rref(m, cols).size()) != cols) return lt;
    lt.ok = true;
    return lt;
}

// Roots of t^s - e1 t^(s-1) + e2 t^(s-2) - ..., all rational, ascending.
inline std::optional<std::vector<Rational>> roots_from_elementary(const std::vector<Rational>& e) {
    std::size_t s = e.size();
    std::vector<Rational> c(s + 1, Rational(0));
    c[s] = 1;
    for (std::size_t i = 1; i <= s; ++i) c[s - i] = (i % 2 ? -1 : 1) * e[i - 1];
    RatPoly p{std::vector<Rational>(c)};
    std::vector<Rational> roots;
    while (p.degree() > 0) {
        IntPoly ip = content_primitive(p).primitive;
        auto rr = rational_roots(ip);
        if (rr.empty()) return std::nullopt;
        Rational r = rr.front();
        roots.push_back(r);
        p = divmod(p, RatPoly({Rational(-r), Rational(1)})).first;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<long> rotation_multiset(long n, const IntPoly& model) {
    std::vector<long> out;
    SquarefreeDecomposition sq = squarefree_decomposition(model);
    for (const auto& p : sq.parts) {
        long r = static_cast<long>(p.multiplicity % static_cast<unsigned long>(n));
        if (r == 0) continue;
        for (int i = 0; i < p.factor.degree(); ++i) out.push_back(r);
    }
    long rinf = ((-static_cast<long>(model.degree())) % n + n) % n;
    if (rinf) out.push_back(rinf);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<long> rotation_class(long n, const std::vector<long>& rot) {
    std::vector<long> best;
    for (long k = 1; k < n; ++k) {
        if (gcd_long(k, n) != 1) continue;
        std::vector<long> v;
        for (long r : rot) v.push_back((r * k) % n);
        std::sort(v.begin(), v.end());
        if (best.empty() || v < best) best = v;
    }
    return best;
}

// Product of the squarefree factors raised to (k * m) mod n.
inline IntPoly power_model(long n, const SquarefreeDecomposition& sq, long k) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& p : sq.parts) {
        unsigned long e = (static_cast<unsigned long>(k) * p.multiplicity) % static_cast<unsigned long>(n);
        if (e) r = r * pow(p.factor, e);
    }
    return r;
}

// Binary quartic invariants I and J of a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4.
inline std::pair<Rational, Rational> quartic_invariants(const std::vector<Rational>& q) {
    const Rational &a = q[4], &b = q[3], &c = q[2], &d = q[1], &e = q[0];
    Rational I = 12 * a * e - 3 * b * d + c * c;
    Rational J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
    return {I, J};
}

// Scaling invariants of c9 x^9 + c6 x^6 + c3 x^3 + c0.
inline std::optional<std::vector<Rational>> cubic_composition_invariants(const IntPoly& f) {
    if (f.degree() != 9 || !is_poly_in_power(f, 3)) return std::nullopt;
    Rational c9 = f.coeff(9), c6 = f.coeff(6), c3 = f.coeff(3), c0 = f.coeff(0);
    if (c0 == 0) return std::nullopt;
    return std::vector<Rational>{c6 * c6 * c6 / (c9 * c9 * c0), c3 * c3 * c3 / (c9 * c0 * c0), c6 * c3 / (c9 * c0)};
}

inline Integer rational_height(const Rational& q) { return std::max(Integer(abs(q.get_num())), Integer(q.get_den())); }

}  // namespace detail

inline StructureFlags detect_substructure(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    StructureFlags fl;
    fl.depressed = detail::depress(f);
    const IntPoly& g = fl.depressed;
    for (int k = 2; k <= 10; ++k)
        if (detail::is_poly_in_power(g, k)) fl.poly_in_power.push_back(k);
    if (g.degree() >= 2 && g.coeff(0) == 0 && g.coeff(1) != 0) {
        IntPoly q = detail::shift_down(g, 1);
        for (int k = 2; k <= 10; ++k)
            if (detail::is_poly_in_power(q, k)) fl.x_times_poly_in_power.push_back(k);
    }
    fl.palindromic = detail::palindromic_scale(g).has_value();
    return fl;
}

class Classifier {
public:
    explicit Classifier(const LociDatabase& db) : db_(&db) {
        for (const auto* fam : db.families()) {
            Prepared p;
            p.family = fam;
            p.dim = db.locus(fam->case_no).dim;
            p.linear = detail::linearize(*fam);
            try {
                SuperellipticCurve s = instantiate_sample(db, fam->case_no);
                p.rotations = detail::rotation_multiset(fam->n, s.f());
                p.usable = p.linear.ok && !fam->generic;
                if (s.n() == 2 && s.degree() == 9) {
                    auto inv = detail::cubic_composition_invariants(s.primitive());
                    if (inv && fam->params.empty()) cubic_signatures_.push_back({fam->case_no, *inv});
                }
            } catch (const Error&) {
                p.usable = false;  // the template does not define a valid curve
            }
            prepared_.push_back(std::move(p));
        }
    }

    ClassificationResult classify(const SuperellipticCurve& curve) const {
        long g = genus(curve);
        if (g != db_->genus())
            throw PreconditionError("classification needs genus " + std::to_string(db_->genus()) + ", got " + std::to_string(g));
        long n = curve.n();
        if (n < 2 || n > 6) throw OutsideTableError(n);

        Search s;
        const auto& sq = curve.decomposition();
        std::vector<long> base_rot = detail::rotation_multiset(n, curve.f());
        std::vector<long> cls = detail::rotation_class(n, base_rot);
        for (long k = 1; k < n; ++k) {
            if (gcd_long(k, n) != 1) continue;
            IntPoly model = primitive_part(detail::power_model(n, sq, k));
            if (model.degree() < 1) continue;
            std::vector<long> rot = detail::rotation_multiset(n, model);
            unsigned long w = static_cast<unsigned long>(n * ((model.degree() + n - 1) / n));
            for (const Mobius& v : {Mobius::identity(), Mobius::negation(), Mobius::inversion(),
                                    Mobius::inversion() * Mobius::negation()}) {
                IntPoly base = primitive_part(mobius_transform(model, v, w));
                explore(s, n, k, model, w, v, base, rot, cls);
            }
        }
        fallback(s, curve, cls);
        if (!s.best) {
            ClassificationResult r;
            r.reduced_model = curve.primitive();
            r.reason = "no stored family has this ramification type";
            return r;
        }
        return s.best->result;
    }

private:
    struct Prepared {
        const CurveFamily* family = nullptr;
        long dim = 0;
        detail::LinearTemplate linear;
        std::vector<long> rotations;
        bool usable = false;
    };

    struct Candidate {
        long dim;
        int exact_rank;
        long seq;
        ClassificationResult result;
    };

    struct Search {
        std::optional<Candidate> best;
        long seq = 0;
        std::set<std::pair<long, std::vector<Integer>>> visited;
    };

    void offer(Search& s, int case_no, Confidence conf, ClassificationResult r) const {
        r.case_no = case_no;
        r.confidence = conf;
        Candidate c{db_->locus(case_no).dim, conf == Confidence::ExactMatch ? 0 : 1, s.seq++, std::move(r)};
        if (!s.best || std::tie(c.dim, c.exact_rank, c.seq) < std::tie(s.best->dim, s.best->exact_rank, s.best->seq))
            s.best = std::move(c);
    }

    void explore(Search& s, long n, long k, const IntPoly& model, unsigned long w, const Mobius& m0,
                 const IntPoly& base, const std::vector<long>& rot, const std::vector<long>& cls) const {
        std::vector<std::pair<Mobius, IntPoly>> frames;
        auto add = [&](const Mobius& m) {
            IntPoly g = primitive_part(mobius_transform(model, m, w));
            frames.emplace_back(m, g);
        };
        add(m0);
        {
            int d = base.degree();
            if (d >= 2) {
                Rational t(-base.coeff(d - 1), base.leading() * d);
                t.canonicalize();
                add(m0 * Mobius::translation(t));
            }
        }
        // branch points with rational coordinates moved to 0 and to infinity
        SquarefreeDecomposition sq = squarefree_decomposition(base);
        std::vector<Rational> pts;
        for (const auto& p : sq.parts) {
            if (p.multiplicity % static_cast<unsigned long>(n) == 0) continue;
            for (const auto& r : rational_roots(p.factor)) pts.push_back(r);
        }
        std::sort(pts.begin(), pts.end());
        for (const auto& r : pts) {
            Mobius to_zero = m0 * Mobius::translation(r);
            add(to_zero);
            add(to_zero * Mobius::inversion());
        }
        for (const auto& [m, g] : frames) {
            if (!s.visited.insert({k, g.coeffs()}).second) continue;
            fit_templates(s, n, k, model, w, m, g, rot);
            shapes(s, n, k, model, w, m, g, cls);
        }
    }

    void fit_templates(Search& s, long n, long k, const IntPoly& model, unsigned long w, const Mobius& m,
                       const IntPoly& g, const std::vector<long>& rot) const {
        for (const auto& p : prepared_) {
            if (!p.usable || p.family->n != n || p.rotations != rot || p.linear.degree != g.degree()) continue;
            auto fit = fit_one(p, g);
            if (!fit) continue;
            Mobius total = m * Mobius::scaling(fit->first);
            IntPoly h = mobius_transform(model, total, w);
            RatPoly target = substitute(p.family->template_poly, fit->second);
            if (h.degree() != target.degree()) continue;
            Rational twist = target.leading() / Rational(h.leading());
            if (target != twist * to_rational(h)) throw InvariantViolation("template fit failed verification");
            ClassificationResult r;
            r.fitted_params = fit->second;
            r.transform = NormalizingTransform{total, w, twist, k};
            r.reduced_model = model;
            r.reason = "normal form of the template";
            offer(s, p.family->case_no, Confidence::ExactMatch, std::move(r));
        }
    }

    // Returns (u, params) with template(x) proportional to g(u x).
    std::optional<std::pair<Rational, std::map<std::string, Rational>>> fit_one(const Prepared& p, const IntPoly& g) const {
        const auto& lt = p.linear;
        int D = lt.degree;
        int cols = static_cast<int>(lt.aux.size());
        Rational a = lt.base[static_cast<std::size_t>(D)];
        std::vector<Rational> alpha(static_cast<std::size_t>(D) + 1);
        for (int i = 0; i <= D; ++i) alpha[static_cast<std::size_t>(i)] = a * g.coeff(i) / Rational(g.leading());
        // b_i(w) = alpha_i w^(D-i) - base_i must lie in the column space of the matrix
        std::vector<std::vector<Rational>> at(static_cast<std::size_t>(cols), std::vector<Rational>(static_cast<std::size_t>(D) + 1));
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j < cols; ++j) at[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = lt.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto left = cols ? detail::null_space(at, D + 1) : [&] {
            std::vector<std::vector<Rational>> id;
            for (int i = 0; i <= D; ++i) {
                std::vector<Rational> v(static_cast<std::size_t>(D) + 1, Rational(0));
                v[static_cast<std::size_t>(i)] = 1;
                id.push_back(v);
            }
            return id;
        }();
        IntPoly common;
        bool any = false;
        for (const auto& nu : left) {
            std::vector<Rational> c(static_cast<std::size_t>(D) + 1, Rational(0));
            for (int i = 0; i <= D; ++i) {
                Rational v = nu[static_cast<std::size_t>(i)];
                if (v == 0) continue;
                c[static_cast<std::size_t>(D - i)] += v * alpha[static_cast<std::size_t>(i)];
                c[0] -= v * lt.base[static_cast<std::size_t>(i)];
            }
            RatPoly rp{std::vector<Rational>(c)};
            if (rp.is_zero()) continue;
            IntPoly ip = content_primitive(rp).primitive;
            common = any ? gcd(common, ip) : ip;
            any = true;
            if (common.degree() < 1) return std::nullopt;
        }
        std::vector<Rational> candidates;
        if (!any) {
            candidates.push_back(1);
        } else {
            for (const auto& r : rational_roots(common))
                if (r != 0) candidates.push_back(r);
            std::sort(candidates.begin(), candidates.end(), [](const Rational& x, const Rational& y) {
                auto kx = std::make_tuple(x < 0, detail::rational_height(x), x);
                auto ky = std::make_tuple(y < 0, detail::rational_height(y), y);
                return kx < ky;
            });
        }
        for (const auto& wv : candidates) {
            std::vector<Rational> b(static_cast<std::size_t>(D) + 1);
            Rational wp = 1;
            for (int i = D; i >= 0; --i) {
                b[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] * wp - lt.base[static_cast<std::size_t>(i)];
                wp *= wv;
            }
            std::map<std::string, Rational> params;
            if (cols) {
                auto sol = detail::solve_linear(lt.matrix, b, cols);
                if (!sol) continue;
                if (!recover(lt, *sol, params)) continue;
            } else {
                bool zero = std::all_of(b.begin(), b.end(), [](const Rational& v) { return v == 0; });
                if (!zero) continue;
            }
            return std::make_pair(Rational(1 / wv), params);
        }
        return std::nullopt;
    }

    static bool recover(const detail::LinearTemplate& lt, const std::vector<Rational>& sol,
                        std::map<std::string, Rational>& params) {
        std::map<int, std::vector<Rational>> elem;
        for (std::size_t j = 0; j < lt.aux.size(); ++j) {
            const auto& a = lt.aux[j];
            if (a.group < 0) {
                params[a.name] = sol[j];
            } else {
                auto& v = elem[a.group];
                std::size_t s = lt.groups[static_cast<std::size_t>(a.group)].size();
                if (v.empty()) v.assign(s, Rational(0));
                v[static_cast<std::size_t>(a.elementary - 1)] = sol[j];
            }
        }
        for (const auto& [gi, e] : elem) {
            // Elementary functions enter expanded products with alternating signs.
            std::vector<Rational> sym(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) sym[i] = e[i];
            auto roots = detail::roots_from_elementary(sym);
            if (!roots) return false;
            const auto& names = lt.groups[static_cast<std::size_t>(gi)];
            for (std::size_t i = 0; i < names.size(); ++i) params[names[i]] = (*roots)[i];
        }
        return true;
    }

    void shapes(Search& s, long n, long k, const IntPoly& model, unsigned long w, const Mobius& m,
                const IntPoly& g, const std::vector<long>& cls) const {
        auto at_least = [&](int case_no, const std::string& why) {
            if (!db_->has_case(case_no)) return;
            ClassificationResult r;
            r.transform = NormalizingTransform{m, w, 1, k};
            r.reduced_model = model;
            r.reason = why;
            offer(s, case_no, Confidence::AtLeast, std::move(r));
        };
        int D = g.degree();
        int z = detail::zero_order(g);
        IntPoly cof = detail::shift_down(g, z);
        auto pin = [&](int kk) { return z == 0 && detail::is_poly_in_power(g, kk); };
        auto xpin = [&](int kk) { return z == 1 && detail::is_poly_in_power(cof, kk); };
        std::vector<long> all_ones(cls.size(), 1);
        if (n == 2) {
            if (D == 10) {
                if (pin(10)) at_least(4, "x -> zeta x symmetry of order 10");
                if (pin(5)) at_least(14, "polynomial in x^5");
                if (pin(2)) at_least(37, "even polynomial");
                if (auto kk = detail::palindromic_scale(g)) {
                    int fixed = fixed_points_in_roots(g, *kk);
                    if (fixed == 0) at_least(37, "reciprocal symmetry");
                    if (fixed == 2) at_least(33, "reciprocal symmetry through branch points");
                }
            }
            if (D == 9) {
                if (xpin(8)) at_least(6, "x times a polynomial in x^8");
                if (pin(9)) at_least(8, "polynomial in x^9");
                if (xpin(4)) at_least(16, "x times a polynomial in x^4");
                if (pin(3)) {
                    at_least(27, "polynomial in x^3");
                    if (auto inv = detail::cubic_composition_invariants(g))
                        for (const auto& [c, ref] : cubic_signatures_)
                            if (*inv == ref) at_least(c, "scaling invariants of the cubic composition");
                }
                if (xpin(2)) {
                    at_least(33, "x times an even polynomial");
                    IntPoly q = half_degree(cof);
                    if (auto kk = detail::palindromic_scale(q)) {
                        int fixed = fixed_points_in_roots(q, *kk);
                        if (fixed == 2) at_least(21, "reciprocal symmetry through branch points");
                        if (fixed == 0) at_least(26, "reciprocal symmetry");
                    }
                }
            }
        } else if (n == 3 && cls == all_ones) {
            if (D == 6) {
                if (pin(6)) at_least(5, "polynomial in x^6");
                if (pin(3)) at_least(15, "polynomial in x^3");
                if (pin(2)) {
                    at_least(28, "even polynomial");
                    if (detail::palindromic_scale(g)) at_least(17, "even with reciprocal symmetry");
                }
            }
            if (D == 5) {
                if (xpin(4)) at_least(2, "x times a polynomial in x^4");
                if (pin(5)) at_least(9, "polynomial in x^5");
                if (xpin(2)) at_least(17, "odd quintic");
            }
        } else if (n == 4) {
            if (D == 5 && z == 2 && detail::is_poly_in_power(cof, 3)) at_least(10, "x^2 times a polynomial in x^3");
        }
    }

    // Number of fixed points of x -> kk/x among the roots of q (0 or 2 for invariant sets).
    static int fixed_points_in_roots(const IntPoly& q, const Rational& kk) {
        IntPoly quad = content_primitive(RatPoly({Rational(-kk), Rational(0), Rational(1)})).primitive;
        IntPoly gq = gcd(q, quad);
        return gq.degree() < 1 ? 0 : gq.degree();
    }

    static IntPoly half_degree(const IntPoly& even) {
        std::vector<Integer> c;
        for (int i = 0; i <= even.degree(); i += 2) c.push_back(even.coeff(i));
        return IntPoly(std::move(c));
    }

    void fallback(Search& s, const SuperellipticCurve& curve, const std::vector<long>& cls) const {
        long n = curve.n();
        auto count = [&](auto pred) { return std::count_if(cls.begin(), cls.end(), pred); };
        auto generic = [&](int case_no, const std::string& why) {
            if (!db_->has_case(case_no)) return;
            ClassificationResult r;
            r.reduced_model = curve.primitive();
            r.reason = why;
            offer(s, case_no, Confidence::AtLeast, std::move(r));
        };
        if (n == 2) {
            generic(41, "generic hyperelliptic");
        } else if (n == 3) {
            if (count([](long r) { return r == 1; }) == static_cast<long>(cls.size())) {
                bool rational_point = curve.degree() % 3 != 0;
                for (const auto& p : curve.decomposition().parts)
                    if (p.multiplicity % 3 != 0 && !rational_roots(p.factor).empty()) rational_point = true;
                generic(rational_point ? 34 : 35, rational_point ? "C3 cover with a rational branch point"
                                                                  : "C3 cover without rational branch points");
            } else {
                generic(35, "C3 cover of mixed rotation type");
            }
        } else if (n == 4) {
            long odd = count([](long r) { return r % 2 == 1; });
            long even = count([](long r) { return r == 2; });
            if (odd == 4 && even == 1) generic(30, "C4 cover of type 0-(2, 4^4)");
            if (odd == 2 && even == 4) generic(33, "C4 cover of type 0-(2^4, 4^2)");
        } else if (n == 5) {
            if (cls == std::vector<long>{1, 1, 1, 2}) {
                auto [I, J] = branch_quartic_invariants(curve);
                if (I == 0) generic(9, "equianharmonic branch points");
                if (J == 0) generic(11, "harmonic branch points");
                generic(23, "C5 cover of rotation type (1, 1, 1, 2)");
            }
        } else if (n == 6) {
            long units = count([](long r) { return r == 1 || r == 5; });
            long twos = count([](long r) { return r == 2 || r == 4; });
            long threes = count([](long r) { return r == 3; });
            if (units == 3 && twos == 0 && threes == 1) generic(22, "C6 cover of type 0-(2, 6^3)");
            if (units == 0 && twos == 3 && threes == 2) generic(28, "C6 cover of type 0-(2^2, 3^3)");
            if (units == 1 && twos == 1 && threes == 3) generic(27, "C6 cover of type 0-(2^3, 3, 6)");
        }
    }

    // Invariants of the binary quartic vanishing on the four branch points.
    static std::pair<Rational, Rational> branch_quartic_invariants(const SuperellipticCurve& curve) {
        IntPoly rad = IntPoly::constant(1);
        for (const auto& p : curve.decomposition().parts)
            if (p.multiplicity % static_cast<unsigned long>(curve.n()) != 0) rad = rad * p.factor;
        std::vector<Rational> q(5, Rational(0));
        if (rad.degree() > 4) throw InvariantViolation("more than four branch points");
        for (int i = 0; i <= rad.degree(); ++i) q[static_cast<std::size_t>(i)] = rad.coeff(i);
        // a branch point at infinity leaves the x^4 coefficient zero
        return detail::quartic_invariants(q);
    }

    const LociDatabase* db_;
    std::vector<Prepared> prepared_;
    std::vector<std::pair<int, std::vector<Rational>>> cubic_signatures_;
};

inline ClassificationResult classify_genus4(const LociDatabase& db, const SuperellipticCurve& curve) {
    return Classifier(db).classify(curve);
}

}  // namespace supercurve

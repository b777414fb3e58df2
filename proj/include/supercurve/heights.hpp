#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "curve.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace supercurve {

// Naive height of the primitive integral model.
inline Integer poly_height(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    Integer h = 0;
    const IntPoly prim = primitive_part(f);
    for (const auto& c : prim.coeffs()) h = std::max<Integer>(h, abs(c));
    return h;
}

inline Integer curve_height(const SuperellipticCurve& c) { return poly_height(c.f()); }

class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw PreconditionError("projective point needs at least one coordinate");
        if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; }))
            throw PreconditionError("projective point with all coordinates zero");
    }
    const std::vector<Rational>& coords() const { return coords_; }

    // Coprime integer coordinates, first nonzero coordinate positive.
    std::vector<Integer> normalized() const {
        Integer den = 1;
        for (const auto& q : coords_) den = lcm(den, Integer(q.get_den()));
        std::vector<Integer> v;
        Integer g = 0;
        for (const auto& q : coords_) {
            Integer z = q.get_num() * (den / q.get_den());
            g = gcd(g, z);
            v.push_back(z);
        }
        bool flip = false;
        for (const auto& z : v)
            if (z != 0) {
                flip = z < 0;
                break;
            }
        for (auto& z : v) {
            z /= g;
            if (flip) z = -z;
        }
        return v;
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return a.coords_.size() == b.coords_.size() && a.normalized() == b.normalized();
    }

private:
    std::vector<Rational> coords_;
};

inline Integer projective_height(const ProjectivePoint& p) {
    Integer h = 0;
    for (const auto& z : p.normalized()) h = std::max<Integer>(h, abs(z));
    return h;
}

// Accepts "(1 : 2/3 : 5)" or "1:2/3:5".
inline ProjectivePoint parse_projective_point(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ') s.push_back(ch);
    std::vector<Rational> coords;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(':', start);
        coords.push_back(parse_rational(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return ProjectivePoint(std::move(coords));
}

struct ReductionBudget {
    long translation_radius = 3;
    int bfs_depth = 2;
};

enum class MoveKind { Translate, Negate, Invert };

struct ReductionStep {
    MoveKind kind;
    long parameter = 0;  // translation amount; unused otherwise

    Mobius matrix() const {
        switch (kind) {
            case MoveKind::Translate: return Mobius::translation(Integer(parameter));
            case MoveKind::Negate: return Mobius::negation();
            case MoveKind::Invert: return Mobius::inversion();
        }
        return Mobius::identity();
    }
    std::string name() const {
        switch (kind) {
            case MoveKind::Translate: return "translate";
            case MoveKind::Negate: return "negate";
            case MoveKind::Invert: return "invert";
        }
        return "?";
    }
    friend bool operator==(const ReductionStep& a, const ReductionStep& b) {
        return a.kind == b.kind && a.parameter == b.parameter;
    }
};

struct HeightReport {
    SuperellipticCurve input_model;
    SuperellipticCurve best_model;
    Integer input_height;
    Integer best_height;
    std::vector<ReductionStep> trail;
    ReductionBudget budget;
    long nodes_visited = 0;
};

inline SuperellipticCurve replay(const SuperellipticCurve& start, const std::vector<ReductionStep>& trail) {
    SuperellipticCurve c = start;
    for (const auto& s : trail) c = apply_transform(c, s.matrix());
    return c;
}

namespace detail {

// Height first; ties go to lower degree, positive leading coefficient, smaller coefficient sum.
inline auto model_rank(const SuperellipticCurve& c) {
    std::vector<Integer> hi(c.f().coeffs().rbegin(), c.f().coeffs().rend());
    Integer l1 = 0;
    for (const auto& a : hi) l1 += abs(a);
    return std::make_tuple(curve_height(c), c.degree(), c.f().leading() < 0, l1, hi);
}

inline bool better(const SuperellipticCurve& a, const SuperellipticCurve& b) { return model_rank(a) < model_rank(b); }

}  // namespace detail

// Bounded descent: repeated breadth-first search around the current best model until nothing improves.
inline HeightReport reduce_model(const SuperellipticCurve& curve, const ReductionBudget& budget = {}) {
    if (budget.translation_radius < 1 || budget.bfs_depth < 1)
        throw PreconditionError("reduction budget bounds must be positive");
    std::vector<ReductionStep> moves;
    for (long t = -budget.translation_radius; t <= budget.translation_radius; ++t)
        if (t != 0) moves.push_back({MoveKind::Translate, t});
    moves.push_back({MoveKind::Negate, 0});
    moves.push_back({MoveKind::Invert, 0});

    HeightReport rep{curve, curve, curve_height(curve), curve_height(curve), {}, budget, 0};
    while (true) {
        struct Node {
            SuperellipticCurve model;
            std::vector<ReductionStep> path;
        };
        std::vector<Node> frontier{{rep.best_model, {}}};
        std::set<std::vector<Integer>> seen{rep.best_model.f().coeffs()};
        std::optional<Node> found;
        for (int depth = 0; depth < budget.bfs_depth; ++depth) {
            std::vector<Node> next;
            for (const auto& node : frontier) {
                for (const auto& mv : moves) {
                    SuperellipticCurve m = apply_transform(node.model, mv.matrix());
                    ++rep.nodes_visited;
                    if (!seen.insert(m.f().coeffs()).second) continue;
                    std::vector<ReductionStep> path = node.path;
                    path.push_back(mv);
                    if (detail::better(m, found ? found->model : rep.best_model)) found = Node{m, path};
                    next.push_back({std::move(m), std::move(path)});
                }
            }
            frontier = std::move(next);
        }
        if (!found) break;
        rep.best_model = found->model;
        rep.trail.insert(rep.trail.end(), found->path.begin(), found->path.end());
    }
    rep.best_height = curve_height(rep.best_model);
    return rep;
}

inline nlohmann::json to_json(const HeightReport& r) {
    nlohmann::json trail = nlohmann::json::array();
    for (const auto& s : r.trail) {
        nlohmann::json step{{"move", s.name()}};
        step["parameter"] = s.kind == MoveKind::Translate ? nlohmann::json(s.parameter) : nlohmann::json(nullptr);
        trail.push_back(step);
    }
    return {
        {"input_model", format_curve(r.input_model)},
        {"input_height", r.input_height.get_str()},
        {"best_model", format_curve(r.best_model)},
        {"best_height", r.best_height.get_str()},
        {"trail", trail},
        {"search_budget", {{"translation_radius", r.budget.translation_radius}, {"bfs_depth", r.budget.bfs_depth}}},
        {"nodes_visited", r.nodes_visited},
        {"upper_bound_only", true},
        {"twist_insensitive", true},
    };
}

}  // namespace supercurve

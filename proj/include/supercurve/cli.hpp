#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "classifier.hpp"
#include "curve.hpp"
#include "enumerator.hpp"
#include "errors.hpp"
#include "heights.hpp"
#include "loci.hpp"
#include "version.hpp"

namespace supercurve::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

using nlohmann::json;

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s;
}

inline std::string gap_text(const LocusRecord& r) {
    return "(" + std::to_string(r.gap_id.first) + "," + std::to_string(r.gap_id.second) + ")";
}

inline std::string diagram_fill(LocusColor c) {
    switch (c) {
        case LocusColor::Hyperelliptic: return "red";
        case LocusColor::Superelliptic: return "yellow";
        default: return "lightblue";
    }
}

inline json params_json(const std::map<std::string, Rational>& p) {
    json j = json::object();
    for (const auto& [k, v] : p) j[k] = to_string(v);
    return j;
}

// "5" or "5..6"
inline std::pair<int, int> parse_degree_range(const std::string& s) {
    auto bad = [&] { return ParameterError("bad degree \"" + s + "\": expected D or D1..D2"); };
    auto num = [&](const std::string& t) {
        if (t.empty() || t.size() > 4 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw bad();
        return std::stoi(t);
    };
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int d = num(s);
        return {d, d};
    }
    return {num(s.substr(0, dots)), num(s.substr(dots + 2))};
}

struct Options {
    bool json = false;
    std::string curve;
    bool dot = false;
    long radius = 3;
    int depth = 2;
    std::string target;
    long n = 0;
    std::string degree;
    long bound = 0;
    std::optional<long> genus;
    std::string out_path;
    unsigned workers = 1;
    bool squarefree = false;
    bool no_dedup = false;
    int case_no = 0;
    std::vector<std::string> params;
};

inline int cmd_genus(const Options& o, std::ostream& out) {
    SuperellipticCurve c = parse_curve(o.curve);
    long g = genus(c);
    if (o.json)
        out << json{{"curve", format_curve(c)}, {"n", c.n()}, {"degree", c.degree()}, {"genus", g}}.dump() << "\n";
    else
        out << g << "\n";
    return kOk;
}

inline int cmd_check_loci(const Options& o, std::ostream& out) {
    LociDatabase db = LociDatabase::load_default();
    std::set<int> known = db.case_numbers();
    std::vector<ValidationReport> reports;
    int valid = 0;
    for (const auto& r : db.records()) {
        reports.push_back(validate_locus(r, known, db.genus()));
        if (reports.back().ok()) ++valid;
    }
    std::string dag_error;
    try {
        containment_dag(db);
    } catch (const StructuralError& e) {
        dag_error = e.what();
    }
    SuperellipticStats st = superelliptic_stats(db);
    int total = static_cast<int>(db.records().size());
    bool ok = valid == total && dag_error.empty();
    if (o.json) {
        json failures = json::array();
        for (const auto& rep : reports)
            for (const auto& c : rep.checks)
                if (!c.passed) failures.push_back({{"case", rep.case_no}, {"check", c.name}, {"detail", c.detail}});
        out << json{{"total", total},
                    {"valid", valid},
                    {"failures", failures},
                    {"dag_error", dag_error.empty() ? json(nullptr) : json(dag_error)},
                    {"superelliptic", st.superelliptic_count},
                    {"hyperelliptic", st.hyperelliptic_count},
                    {"non_superelliptic", st.non_superelliptic_count},
                    {"diagram_non_superelliptic", st.diagram_non_superelliptic_count},
                    {"fraction", to_string(st.fraction)},
                    {"discrepancies", st.discrepancies}}
                   .dump()
            << "\n";
        return ok ? kOk : kDomainError;
    }
    std::size_t nd = st.discrepancies.size();
    out << valid << "/" << total << " loci valid; " << nd << " diagram discrepanc" << (nd == 1 ? "y" : "ies");
    if (nd) out << " (case" << (nd == 1 ? " " : "s ") << join_ints(st.discrepancies) << ")";
    out << "\n";
    for (const auto& rep : reports)
        for (const auto& c : rep.checks)
            if (!c.passed) out << "case " << rep.case_no << ": " << c.name << " failed: " << c.detail << "\n";
    if (!dag_error.empty()) out << "containment: " << dag_error << "\n";
    return ok ? kOk : kDomainError;
}

inline int cmd_loci_dag(const Options& o, std::ostream& out) {
    LociDatabase db = LociDatabase::load_default();
    ContainmentDag dag = containment_dag(db);
    if (o.json) {
        json edges = json::array();
        for (const auto& [v, ws] : dag.edges)
            for (int w : ws) edges.push_back({v, w});
        out << json{{"edges", edges}, {"topological_order", dag.topological_order}}.dump() << "\n";
    } else if (o.dot) {
        out << "digraph loci {\n  rankdir=TB;\n  node [shape=box, style=filled];\n";
        for (const auto& r : db.records()) {
            out << "  c" << r.case_no << " [label=\"" << r.case_no << "\\n" << gap_text(r) << "\", fillcolor="
                << diagram_fill(r.derived_color());
            if (r.derived_color() != color_from_diagram(r.diagram_color)) out << ", peripheries=2";
            out << "];\n";
        }
        for (const auto& [v, ws] : dag.edges)
            for (int w : ws) out << "  c" << v << " -> c" << w << ";\n";
        out << "}\n";
    } else {
        for (int v : dag.topological_order) {
            const auto& ws = dag.edges.at(v);
            if (!ws.empty()) out << v << " -> " << join_ints(ws) << "\n";
        }
    }
    return kOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
    LociDatabase db = LociDatabase::load_default();
    SuperellipticCurve c = parse_curve(o.curve);
    ClassificationResult r = Classifier(db).classify(c);
    if (o.json) {
        json j{{"curve", format_curve(c)}, {"confidence", confidence_name(r.confidence)}, {"reason", r.reason},
               {"params", params_json(r.fitted_params)}};
        if (r.case_no) {
            const auto& rec = db.locus(*r.case_no);
            j["case"] = *r.case_no;
            j["group"] = rec.group_name;
            j["gap_id"] = {rec.gap_id.first, rec.gap_id.second};
        } else {
            j["case"] = nullptr;
        }
        if (r.transform) {
            const auto& t = *r.transform;
            j["transform"] = {{"matrix", {t.matrix.a.get_str(), t.matrix.b.get_str(), t.matrix.c.get_str(), t.matrix.d.get_str()}},
                              {"weight", t.weight},
                              {"twist", to_string(t.twist)},
                              {"y_power", t.y_power}};
        }
        out << j.dump() << "\n";
        return kOk;
    }
    if (!r.case_no) {
        out << "unclassified: " << r.reason << "\n";
        return kOk;
    }
    out << "case " << *r.case_no << ", group " << gap_text(db.locus(*r.case_no)) << ", " << confidence_name(r.confidence);
    for (const auto& [k, v] : r.fitted_params) out << ", " << k << "=" << to_string(v);
    out << "\n";
    return kOk;
}

inline int cmd_reduce(const Options& o, std::ostream& out) {
    HeightReport r = reduce_model(parse_curve(o.curve), ReductionBudget{o.radius, o.depth});
    if (o.json) {
        out << to_json(r).dump() << "\n";
        return kOk;
    }
    out << format_curve(r.best_model) << "\n";
    out << "height " << r.input_height.get_str() << " -> " << r.best_height.get_str() << "\n";
    out << "trail:";
    if (r.trail.empty()) out << " (none)";
    for (const auto& s : r.trail) {
        out << " " << s.name();
        if (s.kind == MoveKind::Translate) out << "(" << s.parameter << ")";
    }
    out << "\n";
    return kOk;
}

inline int cmd_height(const Options& o, std::ostream& out) {
    bool is_curve = o.target.find('=') != std::string::npos;
    Integer h = is_curve ? curve_height(parse_curve(o.target)) : projective_height(parse_projective_point(o.target));
    if (o.json)
        out << json{{"input", o.target}, {"kind", is_curve ? "curve" : "point"}, {"height", h.get_str()}}.dump() << "\n";
    else
        out << h.get_str() << "\n";
    return kOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    EnumerationSpec spec;
    spec.n = o.n;
    std::tie(spec.degree_min, spec.degree_max) = parse_degree_range(o.degree);
    spec.bound = o.bound;
    spec.require_squarefree = o.squarefree;
    spec.target_genus = o.genus;
    spec.dedup = !o.no_dedup;
    spec.workers = o.workers;
    EnumerationResult res = enumerate_curves(spec);
    json meta = metadata_json(spec, res.stats);
    if (!o.out_path.empty()) {
        write_database(res.records, o.out_path);
        std::ofstream m(o.out_path + ".meta.json");
        m << meta.dump(2) << "\n";
        if (!m) throw IoError("cannot write " + o.out_path + ".meta.json", res.records.size());
        if (o.json)
            out << meta.dump() << "\n";
        else
            out << res.stats.emitted << " records written to " << o.out_path << "\n";
        return kOk;
    }
    if (o.json) {
        json recs = json::array();
        for (const auto& r : res.records) recs.push_back(record_to_json(r));
        meta["records"] = recs;
        out << meta.dump() << "\n";
    } else {
        write_database(res.records, out);
    }
    return kOk;
}

inline int cmd_family(const Options& o, std::ostream& out) {
    LociDatabase db = LociDatabase::load_default();
    const LocusRecord& rec = db.locus(o.case_no);
    if (!rec.family) throw ParameterError("case " + std::to_string(o.case_no) + " has no curve family");
    std::map<std::string, Rational> params;
    if (o.params.empty()) {
        params = rec.family->sample;
    } else {
        for (const auto& kv : o.params) {
            auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw ParameterError("expected name=value, got \"" + kv + "\"");
            std::string name = kv.substr(0, eq);
            if (params.count(name)) throw ParameterError("parameter given twice: " + name);
            params[name] = parse_rational(kv.substr(eq + 1));
        }
    }
    SuperellipticCurve c = instantiate_family(db, o.case_no, params);
    if (o.json)
        out << json{{"case", o.case_no}, {"template", rec.family->template_text}, {"params", params_json(params)},
                    {"curve", format_curve(c)}, {"genus", genus(c)}}
                   .dump()
            << "\n";
    else
        out << format_curve(c) << "\n";
    return kOk;
}

}  // namespace detail

// Runs one command line (without the program name). Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus-4 superelliptic curve toolkit", "supercurve"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    detail::Options o;
    int (*handler)(const detail::Options&, std::ostream&) = nullptr;

    auto add = [&](const std::string& name, const std::string& help, int (*fn)(const detail::Options&, std::ostream&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", o.json, "Emit one JSON document");
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    add("genus", "Genus of y^n = f(x)", detail::cmd_genus)->add_option("curve", o.curve, "Curve text")->required();
    add("check-loci", "Validate the loci dataset", detail::cmd_check_loci);
    add("loci-dag", "Print the containment diagram", detail::cmd_loci_dag)->add_flag("--dot", o.dot, "Graphviz output");
    add("classify", "Identify the family of a genus-4 curve", detail::cmd_classify)
        ->add_option("curve", o.curve, "Curve text")
        ->required();
    {
        auto* sub = add("reduce", "Search for a model of smaller height", detail::cmd_reduce);
        sub->add_option("curve", o.curve, "Curve text")->required();
        sub->add_option("--radius", o.radius, "Translation radius")->check(CLI::PositiveNumber);
        sub->add_option("--depth", o.depth, "Search depth")->check(CLI::PositiveNumber);
    }
    add("height", "Height of a curve model or projective point", detail::cmd_height)
        ->add_option("target", o.target, "Curve text or point (a : b : ...)")
        ->required();
    {
        auto* sub = add("enumerate", "Enumerate models of bounded height", detail::cmd_enumerate);
        sub->add_option("--n", o.n, "Exponent of y")->required()->check(CLI::Range(2L, 1000L));
        sub->add_option("--deg", o.degree, "Degree D or range D1..D2")->required();
        sub->add_option("--bound", o.bound, "Coefficient bound")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--genus", o.genus, "Keep only this genus");
        sub->add_option("--out", o.out_path, "JSON Lines output file");
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_flag("--squarefree", o.squarefree, "Require squarefree f");
        sub->add_flag("--no-dedup", o.no_dedup, "Keep every model");
    }
    {
        auto* sub = add("family", "Instantiate a family", detail::cmd_family);
        sub->add_option("case", o.case_no, "Case number")->required();
        sub->add_option("--param", o.params, "name=value")->take_all();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }
    try {
        return handler ? handler(o, out) : kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace supercurve::cli

#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curve.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "poly.hpp"
#include "poly_io.hpp"
#include "supercurve/embedded_loci.hpp"

namespace supercurve {

enum class LocusColor { Hyperelliptic, Superelliptic, NonSuperelliptic };

inline std::string color_name(LocusColor c) {
    switch (c) {
        case LocusColor::Hyperelliptic: return "hyperelliptic";
        case LocusColor::Superelliptic: return "superelliptic";
        default: return "non-superelliptic";
    }
}

// Diagram palette: red, yellow, blue.
inline LocusColor color_from_diagram(const std::string& name) {
    if (name == "red") return LocusColor::Hyperelliptic;
    if (name == "yellow") return LocusColor::Superelliptic;
    if (name == "blue") return LocusColor::NonSuperelliptic;
    throw DatasetError("unknown diagram color \"" + name + "\"");
}

struct CurveFamily {
    int case_no = 0;
    long n = 2;
    std::string template_text;
    TemplatePoly template_poly;
    std::vector<std::string> params;
    std::map<std::string, Rational> sample;
    std::vector<std::vector<std::string>> symmetric;  // interchangeable parameter groups
    bool normalized = true;
    bool generic = false;  // no normal form beyond "deg f" constraints
    std::string source_equation;
    std::string certificate;

    std::size_t param_count() const { return params.size(); }
};

struct LocusRecord {
    int case_no = 0;
    long dim = 0;
    std::string group_name;
    std::pair<long, long> gap_id{0, 0};
    std::string signature_text;
    CoverSignature signature;
    long type_code = 0;
    std::vector<int> subs;
    std::string diagram_color;
    std::optional<CurveFamily> family;

    LocusColor derived_color() const {
        if (!family) return LocusColor::NonSuperelliptic;
        return family->n == 2 ? LocusColor::Hyperelliptic : LocusColor::Superelliptic;
    }
};

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    int case_no = 0;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Discriminant of the primitive squarefree part of f.
inline Rational squarefree_discriminant(const IntPoly& f) {
    SquarefreeDecomposition sq = squarefree_decomposition(f);
    IntPoly rad = IntPoly::constant(1);
    for (const auto& p : sq.parts) rad = rad * p.factor;
    if (rad.degree() < 1) return 1;
    return discriminant(rad);
}

inline IntPoly integral_model(const RatPoly& f) {
    ContentSplit cp = content_primitive(f);
    Rational c = cp.content;
    return c.get_num() * cp.primitive;  // denominators dropped: they do not affect squarefree data
}

class LociDatabase {
public:
    static LociDatabase from_json_text(const std::string& text) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw DatasetError(std::string("dataset is not valid JSON: ") + e.what());
        }
        return from_json(doc);
    }

    static LociDatabase from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DatasetError("cannot open dataset file " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        return from_json_text(ss.str());
    }

    static LociDatabase embedded() { return from_json_text(std::string(embedded_loci_json())); }

    // SUPERCURVE_DATA, when set, names a dataset file that replaces the embedded one.
    static LociDatabase load_default() {
        const char* path = std::getenv("SUPERCURVE_DATA");
        if (path && *path) return from_file(path);
        return embedded();
    }

    static LociDatabase from_json(const nlohmann::json& doc) {
        LociDatabase db;
        try {
            if (!doc.is_object() || !doc.contains("loci") || !doc["loci"].is_array())
                throw DatasetError("dataset: missing \"loci\" array");
            db.version_ = doc.value("version", std::string("unversioned"));
            db.genus_ = doc.value("genus", 4L);
            int expected = 1;
            for (const auto& row : doc["loci"]) {
                int case_no = row.contains("case") && row["case"].is_number_integer() ? row["case"].get<int>() : -1;
                try {
                    LocusRecord rec = parse_row(row);
                    if (rec.case_no != expected)
                        throw DatasetError("case numbers must run 1..N in order; expected " + std::to_string(expected));
                    ++expected;
                    db.records_.push_back(std::move(rec));
                } catch (const DatasetError& e) {
                    throw DatasetError("dataset row " + std::to_string(case_no) + ": " + e.what());
                } catch (const Error& e) {
                    throw DatasetError("dataset row " + std::to_string(case_no) + ": " + e.what());
                } catch (const nlohmann::json::exception& e) {
                    throw DatasetError("dataset row " + std::to_string(case_no) + ": " + e.what());
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw DatasetError(std::string("dataset: ") + e.what());
        }
        return db;
    }

    const std::vector<LocusRecord>& records() const { return records_; }
    const std::string& version() const { return version_; }
    long genus() const { return genus_; }
    bool has_case(int c) const { return c >= 1 && c <= static_cast<int>(records_.size()); }
    const LocusRecord& locus(int c) const {
        if (!has_case(c)) throw ParameterError("unknown case " + std::to_string(c));
        return records_[static_cast<std::size_t>(c - 1)];
    }
    std::vector<const CurveFamily*> families() const {
        std::vector<const CurveFamily*> out;
        for (const auto& r : records_)
            if (r.family) out.push_back(&*r.family);
        return out;
    }
    std::set<int> case_numbers() const {
        std::set<int> s;
        for (const auto& r : records_) s.insert(r.case_no);
        return s;
    }

private:
    static LocusRecord parse_row(const nlohmann::json& row) {
        for (const char* key : {"case", "dim", "group", "gap_id", "signature", "type_code", "subs", "diagram_color"})
            if (!row.contains(key)) throw DatasetError(std::string("missing field \"") + key + "\"");
        LocusRecord r;
        r.case_no = row.at("case").get<int>();
        r.dim = row.at("dim").get<long>();
        r.group_name = row.at("group").get<std::string>();
        const auto& gid = row.at("gap_id");
        if (!gid.is_array() || gid.size() != 2) throw DatasetError("gap_id must be [order, index]");
        r.gap_id = {gid[0].get<long>(), gid[1].get<long>()};
        r.signature_text = row.at("signature").get<std::string>();
        r.signature = parse_signature(r.signature_text, r.gap_id.first);
        r.type_code = row.at("type_code").get<long>();
        r.subs = row.at("subs").get<std::vector<int>>();
        r.diagram_color = row.at("diagram_color").get<std::string>();
        color_from_diagram(r.diagram_color);
        if (row.contains("family")) r.family = parse_family(row.at("family"), r.case_no);
        return r;
    }

    static CurveFamily parse_family(const nlohmann::json& j, int case_no) {
        for (const char* key : {"n", "template", "params", "sample"})
            if (!j.contains(key)) throw DatasetError(std::string("family: missing field \"") + key + "\"");
        CurveFamily f;
        f.case_no = case_no;
        f.n = j.at("n").get<long>();
        if (f.n < 2) throw DatasetError("family: n must be at least 2");
        f.template_text = j.at("template").get<std::string>();
        f.template_poly = parse_template(f.template_text);
        f.params = j.at("params").get<std::vector<std::string>>();
        std::set<std::string> declared(f.params.begin(), f.params.end());
        if (declared.size() != f.params.size()) throw DatasetError("family: duplicate parameter names");
        if (declared != template_parameters(f.template_poly))
            throw DatasetError("family: declared parameters do not match the template");
        for (const auto& [k, v] : j.at("sample").items()) f.sample[k] = parse_rational(v.get<std::string>());
        std::set<std::string> sampled;
        for (const auto& [k, v] : f.sample) sampled.insert(k);
        if (sampled != declared) throw DatasetError("family: sample must bind exactly the declared parameters");
        if (j.contains("symmetric")) f.symmetric = j.at("symmetric").get<std::vector<std::vector<std::string>>>();
        for (const auto& grp : f.symmetric)
            for (const auto& p : grp)
                if (!declared.count(p)) throw DatasetError("family: symmetric group names unknown parameter " + p);
        f.normalized = j.value("normalized", true);
        f.generic = j.value("generic", false);
        f.source_equation = j.value("source_equation", std::string());
        f.certificate = j.value("certificate", std::string());
        if (!f.certificate.empty()) {
            RatPoly inst = substitute(f.template_poly, f.sample);
            if (inst.is_zero()) throw DatasetError("family: sample instantiates to zero");
            Rational disc = squarefree_discriminant(integral_model(inst));
            if (to_string(disc) != f.certificate)
                throw DatasetError("family: certificate mismatch (stored " + f.certificate + ", computed " + to_string(disc) + ")");
            if (disc == 0) throw DatasetError("family: certificate is zero");
        }
        return f;
    }

    std::vector<LocusRecord> records_;
    std::string version_;
    long genus_ = 4;
};

inline std::vector<LocusRecord> load_loci() { return LociDatabase::load_default().records(); }

inline ValidationReport validate_locus(const LocusRecord& rec, const std::set<int>& known_cases, long expected_genus = 4) {
    ValidationReport rep;
    rep.case_no = rec.case_no;
    CoverSignature sig = rec.signature;
    sig.degree = rec.gap_id.first;
    try {
        long g = rh_genus_from_signature(sig);
        rep.checks.push_back({"rh-genus", g == expected_genus, "genus " + std::to_string(g)});
    } catch (const Error& e) {
        rep.checks.push_back({"rh-genus", false, e.what()});
    }
    try {
        long dim = locus_dimension(sig);
        rep.checks.push_back({"dimension", dim == rec.dim,
                              "3g'-3+s = " + std::to_string(dim) + ", stored " + std::to_string(rec.dim)});
    } catch (const Error& e) {
        rep.checks.push_back({"dimension", false, e.what()});
    }
    rep.checks.push_back({"group-order", rec.gap_id.first == rec.signature.degree,
                          "gap order " + std::to_string(rec.gap_id.first) + ", signature degree " +
                              std::to_string(rec.signature.degree)});
    std::string bad;
    for (int s : rec.subs)
        if (!known_cases.count(s) || s == rec.case_no) bad += (bad.empty() ? "" : ", ") + std::to_string(s);
    rep.checks.push_back({"subs-integrity", bad.empty(), bad.empty() ? "ok" : "unknown or self references: " + bad});
    return rep;
}

struct ContainmentDag {
    std::map<int, std::vector<int>> edges;  // i -> cases contained in locus i
    std::vector<int> topological_order;     // parents before children

    bool reachable(int from, int to) const {
        if (from == to) return true;
        std::set<int> seen;
        std::vector<int> stack{from};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto it = edges.find(v);
            if (it == edges.end()) continue;
            for (int w : it->second) {
                if (w == to) return true;
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return false;
    }
};

inline ContainmentDag containment_dag(const LociDatabase& db) {
    ContainmentDag dag;
    for (const auto& r : db.records()) {
        dag.edges[r.case_no];
        for (int s : r.subs) {
            std::string edge = std::to_string(r.case_no) + " -> " + std::to_string(s);
            if (!db.has_case(s)) throw StructuralError("edge " + edge + ": unknown target");
            const auto& t = db.locus(s);
            if (!(t.dim < r.dim)) throw StructuralError("edge " + edge + ": dimension does not decrease");
            if (t.gap_id.first % r.gap_id.first != 0)
                throw StructuralError("edge " + edge + ": group order does not divide");
            dag.edges[r.case_no].push_back(s);
        }
    }
    // Kahn's algorithm; leftovers mean a cycle.
    std::map<int, int> indeg;
    for (const auto& [v, outs] : dag.edges) {
        indeg[v];
        for (int w : outs) indeg[w]++;
    }
    std::vector<int> ready;
    for (const auto& [v, d] : indeg)
        if (d == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::sort(ready.begin(), ready.end(), std::greater<int>());
        int v = ready.back();
        ready.pop_back();
        dag.topological_order.push_back(v);
        for (int w : dag.edges[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (dag.topological_order.size() != indeg.size()) {
        for (const auto& [v, d] : indeg)
            if (d > 0) throw StructuralError("cycle through case " + std::to_string(v));
    }
    return dag;
}

struct SuperellipticStats {
    int total = 0;
    int superelliptic_count = 0;  // every case with a family, hyperelliptic included
    int hyperelliptic_count = 0;
    int non_superelliptic_count = 0;
    int diagram_non_superelliptic_count = 0;
    Rational fraction;
    std::vector<int> discrepancies;  // derived color differs from the diagram
};

inline SuperellipticStats superelliptic_stats(const LociDatabase& db) {
    SuperellipticStats s;
    for (const auto& r : db.records()) {
        ++s.total;
        LocusColor derived = r.derived_color();
        LocusColor drawn = color_from_diagram(r.diagram_color);
        if (derived == LocusColor::NonSuperelliptic)
            ++s.non_superelliptic_count;
        else
            ++s.superelliptic_count;
        if (derived == LocusColor::Hyperelliptic) ++s.hyperelliptic_count;
        if (drawn == LocusColor::NonSuperelliptic) ++s.diagram_non_superelliptic_count;
        if (derived != drawn) s.discrepancies.push_back(r.case_no);
    }
    s.fraction = s.total ? Rational(s.superelliptic_count, s.total) : Rational(0);
    s.fraction.canonicalize();
    return s;
}

inline SuperellipticCurve instantiate_family(const LociDatabase& db, int case_no,
                                             const std::map<std::string, Rational>& params) {
    const LocusRecord& rec = db.locus(case_no);
    if (!rec.family) throw ParameterError("case " + std::to_string(case_no) + " has no curve family");
    const CurveFamily& fam = *rec.family;
    for (const auto& p : fam.params)
        if (!params.count(p)) throw ParameterError("missing parameter: " + p);
    for (const auto& [k, v] : params)
        if (std::find(fam.params.begin(), fam.params.end(), k) == fam.params.end())
            throw ParameterError("unexpected parameter: " + k);
    RatPoly f = substitute(fam.template_poly, params);
    if (f.degree() < 1) throw DegenerateInstantiationError("right-hand side is constant");
    SuperellipticCurve c = [&] {
        try {
            return new_curve(fam.n, f);
        } catch (const ReducibleModelError& e) {
            throw DegenerateInstantiationError(e.what());
        }
    }();
    long g = genus(c);
    if (g != db.genus())
        throw DegenerateInstantiationError("genus " + std::to_string(g) + " instead of " + std::to_string(db.genus()));
    return c;
}

inline SuperellipticCurve instantiate_sample(const LociDatabase& db, int case_no) {
    const LocusRecord& rec = db.locus(case_no);
    if (!rec.family) throw ParameterError("case " + std::to_string(case_no) + " has no curve family");
    return instantiate_family(db, case_no, rec.family->sample);
}

}  // namespace supercurve

#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "curve.hpp"
#include "errors.hpp"
#include "heights.hpp"
#include "numeric.hpp"
#include "poly.hpp"
#include "version.hpp"

namespace supercurve {

struct EnumerationSpec {
    long n = 2;
    int degree_min = 1;
    int degree_max = 1;
    long bound = 1;
    bool require_squarefree = false;
    std::optional<long> target_genus;
    bool dedup = true;
    unsigned workers = 1;
};

struct CurveRecord {
    long n = 2;
    IntPoly f;
    long genus = 0;
    Integer height;
    Integer disc_sqfree;
    std::string key;  // raw canonical bytes

    friend bool operator==(const CurveRecord& a, const CurveRecord& b) {
        return a.n == b.n && a.f == b.f && a.genus == b.genus && a.height == b.height &&
               a.disc_sqfree == b.disc_sqfree && a.key == b.key;
    }
};

struct EnumerationStats {
    long candidates = 0;
    long not_squarefree = 0;
    long reducible = 0;
    long genus_mismatch = 0;
    long duplicates = 0;
    long emitted = 0;
};

struct EnumerationResult {
    std::vector<CurveRecord> records;  // sorted by key
    EnumerationStats stats;
};

inline std::string to_hex(const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned char c : bytes) os << std::setw(2) << static_cast<int>(c);
    return os.str();
}

inline std::string from_hex(const std::string& hex) {
    if (hex.size() % 2) throw ParseError("odd-length hex key");
    std::string out;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        auto nib = [&](char ch) -> int {
            if (ch >= '0' && ch <= '9') return ch - '0';
            if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
            throw ParseError("bad hex digit in key");
        };
        out.push_back(static_cast<char>(nib(hex[i]) * 16 + nib(hex[i + 1])));
    }
    return out;
}

// Product of the distinct irreducible-power factors of f.
inline IntPoly radical(const IntPoly& f) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& p : squarefree_decomposition(f).parts) r = r * p.factor;
    return r;
}

inline Integer squarefree_discriminant_of(const IntPoly& f) {
    IntPoly r = radical(f);
    if (r.degree() < 1) return 1;
    Rational d = discriminant(r);
    if (d.get_den() != 1) throw InvariantViolation("non-integral discriminant");
    return d.get_num();
}

namespace detail {

inline std::vector<Integer> rank_vector(const SuperellipticCurve& c) {
    std::vector<Integer> v{Integer(c.degree()), Integer(c.f().leading() < 0 ? 1 : 0)};
    for (int i = c.degree(); i >= 0; --i) v.push_back(c.f().coeff(i));
    return v;
}

inline std::string serialize_model(const SuperellipticCurve& c) {
    std::string s = std::to_string(c.n()) + ";" + std::to_string(c.degree()) + ";";
    for (int i = c.degree(); i >= 0; --i) {
        s += c.f().coeff(i).get_str();
        if (i) s += ",";
    }
    return s;
}

}  // namespace detail

// Representative of the orbit under x -> -x, x -> 1/x and the sign change available for odd n.
inline SuperellipticCurve canonical_model(const SuperellipticCurve& c) {
    std::vector<SuperellipticCurve> orbit;
    for (const Mobius& m : {Mobius::identity(), Mobius::negation(), Mobius::inversion(),
                            Mobius::inversion() * Mobius::negation()}) {
        SuperellipticCurve t = apply_transform(c, m);
        orbit.push_back(t);
        if (c.n() % 2 == 1) orbit.push_back(new_curve(c.n(), Integer(-1) * t.f()));
    }
    const SuperellipticCurve* best = &orbit.front();
    for (const auto& t : orbit)
        if (detail::rank_vector(t) < detail::rank_vector(*best)) best = &t;
    return *best;
}

inline std::string canonical_key(const SuperellipticCurve& c) { return detail::serialize_model(canonical_model(c)); }

inline CurveRecord make_record(const SuperellipticCurve& model, const std::string& key) {
    return CurveRecord{model.n(), model.f(), genus(model), curve_height(model), squarefree_discriminant_of(model.f()), key};
}

namespace detail {

struct Stratum {
    int degree;
    long leading;
};

struct WorkerOutput {
    std::map<std::string, CurveRecord> unique;
    std::vector<CurveRecord> all;
    EnumerationStats stats;
};

inline bool square_class_equal(const Integer& a, const Integer& b) {
    if ((a == 0) != (b == 0)) return false;
    Integer p = a * b;
    if (p < 0) return false;
    return mpz_perfect_square_p(p.get_mpz_t()) != 0;
}

inline void run_stratum(const EnumerationSpec& spec, const Stratum& st, WorkerOutput& out) {
    int d = st.degree;
    long h = spec.bound;
    std::vector<long> lower(static_cast<std::size_t>(d), -h);
    std::vector<long> c = lower;  // coefficients of degree 0..d-1
    while (true) {
        ++out.stats.candidates;
        std::vector<Integer> coeffs;
        for (long v : c) coeffs.emplace_back(v);
        coeffs.emplace_back(st.leading);
        IntPoly f(std::move(coeffs));
        SquarefreeDecomposition sq = squarefree_decomposition(f);
        bool squarefree = std::all_of(sq.parts.begin(), sq.parts.end(), [](const auto& p) { return p.multiplicity == 1; });
        if (spec.require_squarefree && !squarefree) {
            ++out.stats.not_squarefree;
        } else if (multiplicity_gcd(spec.n, sq) != 1) {
            ++out.stats.reducible;
        } else {
            SuperellipticCurve curve = new_curve(spec.n, f);
            long g = genus(curve);
            if (spec.target_genus && g != *spec.target_genus) {
                ++out.stats.genus_mismatch;
            } else {
                SuperellipticCurve canon = canonical_model(curve);
                std::string key = detail::serialize_model(canon);
                if (spec.dedup) {
                    auto it = out.unique.find(key);
                    if (it == out.unique.end()) {
                        CurveRecord rec = make_record(canon, key);
                        if (rec.genus != g || !square_class_equal(rec.disc_sqfree, squarefree_discriminant_of(curve.f())))
                            throw InvariantViolation("canonical model left the isomorphism class of " + format_curve(curve));
                        out.unique.emplace(key, std::move(rec));
                    } else {
                        ++out.stats.duplicates;
                    }
                } else {
                    out.all.push_back(make_record(curve, key));
                }
            }
        }
        std::size_t i = 0;
        while (i < c.size() && c[i] == h) c[i++] = -h;
        if (i == c.size()) break;
        ++c[i];
    }
}

}  // namespace detail

inline EnumerationResult enumerate_curves(const EnumerationSpec& spec) {
    if (spec.n < 2) throw PreconditionError("n must be at least 2");
    if (spec.degree_min < 1 || spec.degree_max < spec.degree_min) throw PreconditionError("bad degree range");
    if (spec.bound < 0) throw PreconditionError("height bound must be nonnegative");
    std::vector<detail::Stratum> strata;
    for (int d = spec.degree_min; d <= spec.degree_max; ++d)
        for (long a = -spec.bound; a <= spec.bound; ++a)
            if (a != 0) strata.push_back({d, a});

    unsigned workers = std::max(1u, spec.workers);
    std::vector<detail::WorkerOutput> outputs(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto job = [&](unsigned w) {
        try {
            for (std::size_t s = w; s < strata.size(); s += workers) detail::run_stratum(spec, strata[s], outputs[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    EnumerationResult res;
    std::map<std::string, CurveRecord> merged;
    for (auto& o : outputs) {
        res.stats.candidates += o.stats.candidates;
        res.stats.not_squarefree += o.stats.not_squarefree;
        res.stats.reducible += o.stats.reducible;
        res.stats.genus_mismatch += o.stats.genus_mismatch;
        res.stats.duplicates += o.stats.duplicates;
        for (auto& [k, r] : o.unique) {
            if (!merged.emplace(k, std::move(r)).second) ++res.stats.duplicates;
        }
        for (auto& r : o.all) res.records.push_back(std::move(r));
    }
    for (auto& [k, r] : merged) res.records.push_back(std::move(r));
    std::sort(res.records.begin(), res.records.end(), [](const CurveRecord& a, const CurveRecord& b) {
        return std::tie(a.key, a.f.coeffs()) < std::tie(b.key, b.f.coeffs());
    });
    res.stats.emitted = static_cast<long>(res.records.size());
    return res;
}

inline nlohmann::json record_to_json(const CurveRecord& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["f"] = format_poly(r.f);
    j["genus"] = r.genus;
    if (r.height.fits_slong_p())
        j["height"] = r.height.get_si();
    else
        j["height"] = r.height.get_str();
    j["disc_sqfree"] = r.disc_sqfree.get_str();
    j["key"] = to_hex(r.key);
    return j;
}

inline CurveRecord record_from_json(const nlohmann::json& j) {
    CurveRecord r;
    r.n = j.at("n").get<long>();
    r.f = parse_poly(j.at("f").get<std::string>());
    r.genus = j.at("genus").get<long>();
    const auto& h = j.at("height");
    r.height = h.is_string() ? Integer(h.get<std::string>()) : Integer(h.get<long>());
    r.disc_sqfree = Integer(j.at("disc_sqfree").get<std::string>());
    r.key = from_hex(j.at("key").get<std::string>());
    return r;
}

inline long write_database(const std::vector<CurveRecord>& records, std::ostream& out) {
    long index = 0;
    for (const auto& r : records) {
        out << record_to_json(r).dump() << '\n';
        if (!out) throw IoError("write failed", static_cast<std::size_t>(index));
        ++index;
    }
    out.flush();
    if (!out) throw IoError("flush failed", static_cast<std::size_t>(index));
    return index;
}

inline long write_database(const std::vector<CurveRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path, 0);
    return write_database(records, out);
}

inline std::vector<CurveRecord> read_database(std::istream& in) {
    std::vector<CurveRecord> out;
    std::string line;
    long index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw IoError(std::string("malformed record: ") + e.what(), static_cast<std::size_t>(index));
        } catch (const Error& e) {
            throw IoError(std::string("malformed record: ") + e.what(), static_cast<std::size_t>(index));
        }
        ++index;
    }
    return out;
}

inline std::vector<CurveRecord> read_database(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path, 0);
    return read_database(in);
}

inline nlohmann::json metadata_json(const EnumerationSpec& spec, const EnumerationStats& st) {
    nlohmann::json s{{"n", spec.n},
                     {"degree_min", spec.degree_min},
                     {"degree_max", spec.degree_max},
                     {"bound", spec.bound},
                     {"require_squarefree", spec.require_squarefree},
                     {"dedup", spec.dedup}};
    s["target_genus"] = spec.target_genus ? nlohmann::json(*spec.target_genus) : nlohmann::json(nullptr);
    return {{"spec", s},
            {"tool_version", kVersion},
            {"counts",
             {{"candidates", st.candidates},
              {"not_squarefree", st.not_squarefree},
              {"reducible", st.reducible},
              {"genus_mismatch", st.genus_mismatch},
              {"duplicates", st.duplicates},
              {"emitted", st.emitted}}}};
}

}  // namespace supercurve

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "enum_oracle.hpp"
#include "oracles.hpp"
#include "supercurve/enumerator.hpp"

using namespace supercurve;

namespace {

using oracle::OracleEnumeration;

EnumerationSpec spec(long n, int dmin, int dmax, long h, std::optional<long> g = std::nullopt) {
    EnumerationSpec s;
    s.n = n;
    s.degree_min = dmin;
    s.degree_max = dmax;
    s.bound = h;
    s.require_squarefree = true;
    s.target_genus = g;
    return s;
}

std::string dump(const std::vector<CurveRecord>& recs) {
    std::ostringstream os;
    write_database(recs, os);
    return os.str();
}

}  // namespace

TEST(Keys, Examples) {
    auto a = new_curve(5, parse_poly("x*(x-1)*(x-2)"));
    auto b = new_curve(5, parse_poly("x*(x-1)*(x-3)"));
    EXPECT_NE(canonical_key(a), canonical_key(b));
    EXPECT_EQ(canonical_key(new_curve(2, parse_poly("x^5 + x + 1"))), "2;5;1,0,0,0,1,1");
    EXPECT_EQ(canonical_key(new_curve(2, parse_poly("x^6 + x^5 + x"))), "2;5;1,0,0,0,1,1");
    EXPECT_EQ(canonical_key(new_curve(2, parse_poly("x^5 + x + 1"))),
              canonical_key(new_curve(2, parse_poly("-x^5 - x + 1"))));
}

TEST(Keys, HexRoundTrip) {
    std::string k = "2;5;1,0,0,0,1,-1";
    EXPECT_EQ(from_hex(to_hex(k)), k);
    EXPECT_EQ(to_hex("2;"), "323b");
    EXPECT_THROW(from_hex("abc"), ParseError);
    EXPECT_THROW(from_hex("zz"), ParseError);
}

TEST(Keys, InvariantUnderOrbitMoves) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        long n = 2 + trial % 4;
        auto c = oracle::random_poly(rng, 3 + trial % 5, 4);
        IntPoly f(std::vector<Integer>(c.begin(), c.end()));
        if (oracle::discriminant(f.coeffs()) == 0) continue;
        auto curve = new_curve(n, f);
        std::string k = canonical_key(curve);
        EXPECT_EQ(canonical_key(apply_transform(curve, Mobius::negation())), k);
        EXPECT_EQ(canonical_key(apply_transform(curve, Mobius::inversion())), k);
    }
}

TEST(Enumerate, QuinticSexticBoundOneMatchesOracle) {
    auto res = enumerate_curves(spec(2, 5, 6, 1));
    OracleEnumeration o(2, 5, 6, 1, std::nullopt);
    EXPECT_EQ(static_cast<long>(res.records.size()), o.orbits());
    EXPECT_EQ(res.records.size(), 449u);
    EXPECT_EQ(res.stats.candidates, o.candidates);
    std::set<int> seen;
    for (const auto& r : res.records) {
        int orb = o.orbit_of(r.f);
        ASSERT_GE(orb, 0) << format_poly(r.f);
        EXPECT_TRUE(seen.insert(orb).second) << "two records in one orbit: " << format_poly(r.f);
        EXPECT_EQ(r.genus, 2);
    }
}

TEST(Enumerate, CubicGenusThreeMatchesOracle) {
    auto res = enumerate_curves(spec(3, 4, 4, 1, 3));
    OracleEnumeration o(3, 4, 4, 1, 3);
    EXPECT_EQ(static_cast<long>(res.records.size()), o.orbits());
    EXPECT_EQ(res.records.size(), 37u);
    for (const auto& r : res.records) EXPECT_EQ(r.genus, 3);
}

TEST(Enumerate, GenusFilterMatchesOracle) {
    for (long n : {2L, 3L, 4L, 5L}) {
        auto res = enumerate_curves(spec(n, 3, 5, 1, 4));
        OracleEnumeration o(n, 3, 5, 1, 4);
        EXPECT_EQ(static_cast<long>(res.records.size()), o.orbits()) << n;
    }
}

TEST(Enumerate, WorkerCountDoesNotChangeOutput) {
    auto s = spec(2, 5, 6, 1);
    std::string one = dump(enumerate_curves(s).records);
    for (unsigned w : {2u, 3u, 8u}) {
        s.workers = w;
        EXPECT_EQ(dump(enumerate_curves(s).records), one) << w;
    }
}

TEST(Enumerate, BoundZeroIsEmpty) {
    auto res = enumerate_curves(spec(2, 3, 6, 0));
    EXPECT_TRUE(res.records.empty());
    EXPECT_EQ(res.stats.candidates, 0);
}

TEST(Enumerate, MonotoneInBound) {
    std::set<std::string> prev;
    for (long h = 0; h <= 2; ++h) {
        std::set<std::string> keys;
        for (const auto& r : enumerate_curves(spec(3, 3, 4, h)).records) keys.insert(r.key);
        EXPECT_TRUE(std::includes(keys.begin(), keys.end(), prev.begin(), prev.end())) << h;
        prev = keys;
    }
}

TEST(Enumerate, NoDedupKeepsEveryModel) {
    auto s = spec(2, 5, 5, 1);
    s.dedup = false;
    auto all = enumerate_curves(s);
    s.dedup = true;
    auto unique = enumerate_curves(s);
    EXPECT_GT(all.records.size(), unique.records.size());
    std::set<std::string> keys;
    for (const auto& r : all.records) keys.insert(r.key);
    EXPECT_EQ(keys.size(), unique.records.size());
}

TEST(Enumerate, Preconditions) {
    EXPECT_THROW(enumerate_curves(spec(1, 3, 4, 1)), PreconditionError);
    EXPECT_THROW(enumerate_curves(spec(2, 4, 3, 1)), PreconditionError);
    EXPECT_THROW(enumerate_curves(spec(2, 3, 4, -1)), PreconditionError);
}

TEST(Database, JsonlRoundTrip) {
    auto recs = enumerate_curves(spec(3, 4, 4, 1, 3)).records;
    std::stringstream ss;
    EXPECT_EQ(write_database(recs, ss), static_cast<long>(recs.size()));
    EXPECT_EQ(read_database(ss), recs);

    std::string path = ::testing::TempDir() + "enum_roundtrip.jsonl";
    write_database(recs, path);
    EXPECT_EQ(read_database(path), recs);
    std::filesystem::remove(path);
}

TEST(Database, RecordJsonFields) {
    auto rec = make_record(new_curve(2, parse_poly("x^5 + x + 1")), "2;5;1,0,0,0,1,1");
    auto j = record_to_json(rec);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["genus"], 2);
    EXPECT_EQ(j["key"], to_hex("2;5;1,0,0,0,1,1"));
    EXPECT_EQ(record_from_json(j), rec);
}

TEST(Database, BadPathsAndLines) {
    EXPECT_THROW(write_database({}, "/nonexistent-dir/x.jsonl"), IoError);
    EXPECT_THROW(read_database("/nonexistent-dir/x.jsonl"), IoError);
    std::stringstream bad("{\"n\": 2}\n");
    EXPECT_ANY_THROW(read_database(bad));
}

TEST(Database, Metadata) {
    auto s = spec(2, 5, 6, 1);
    auto res = enumerate_curves(s);
    auto m = metadata_json(s, res.stats);
    EXPECT_EQ(m["counts"]["emitted"], 449);
    EXPECT_EQ(m["spec"]["bound"], 1);
    EXPECT_TRUE(m.contains("tool_version"));
}

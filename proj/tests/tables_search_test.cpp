#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "plotkin/distance.hpp"
#include "plotkin/search.hpp"

using namespace plotkin;
using namespace testing_support;

namespace {

BoundsTable parse(const std::string& text) {
    std::istringstream in(text);
    return parse_snapshot(in, "t.tbl");
}

BoundsTable fixture() { return load_snapshot(PLOTKIN_SOURCE_DIR "/fixtures/paper_sixteen.tbl"); }

}  // namespace

TEST_SUITE("tables") {

TEST_CASE("fixture entries") {
    auto t = fixture();
    auto e = t.query(4, 63, 53);
    REQUIRE(e);
    CHECK(e->d_low == 6);
    CHECK(e->d_high == 7);
    CHECK(t.query(3, 62, 46)->d_low == 8);
    CHECK(t.query(4, 63, 42)->d_low == 12);
    CHECK(t.query(4, 126, 95)->d_low == 11);
    CHECK(!t.query(4, 126, 95)->d_high);
    CHECK(!t.query(4, 10, 5));
}

TEST_CASE("snapshot validation") {
    CHECK_THROWS_WITH_AS(parse("4 10 11 2 3\n"), doctest::Contains("t.tbl:1"), DataError);
    CHECK_THROWS_WITH_AS(parse("# c\n4 10 5 2 3\n4 10 5 2 -\n"), doctest::Contains("t.tbl:3: duplicate"), DataError);
    CHECK_THROWS_AS(parse("4 10 5 7 -\n"), DataError);    // Singleton
    CHECK_THROWS_AS(parse("4 10 5 3 2\n"), DataError);    // d_high < d_low
    CHECK_THROWS_AS(parse("4 10 5 3 7\n"), DataError);    // d_high above Singleton
    CHECK_THROWS_AS(parse("4 10 5 0 -\n"), DataError);
    CHECK_THROWS_AS(parse("6 10 5 2 -\n"), DataError);
    CHECK_THROWS_AS(parse("5 131 5 2 -\n"), DataError);
    CHECK_THROWS_AS(parse("4 10 5 x -\n"), DataError);
    CHECK_THROWS_AS(parse("4 10 5 2\n"), DataError);
    CHECK_THROWS_AS(load_snapshot("/nonexistent/t.tbl"), DataError);
    CHECK(parse("# only comments\n\n").empty());
}

TEST_CASE("limits") {
    CHECK(BoundsTable::limit(2) == 256);
    CHECK(BoundsTable::limit(3) == 243);
    CHECK(BoundsTable::limit(4) == 256);
    CHECK(BoundsTable::limit(5) == 130);
    CHECK(BoundsTable::limit(7) == 100);
    CHECK(BoundsTable::limit(8) == 130);
    CHECK(BoundsTable::limit(9) == 130);
    CHECK_THROWS_AS(BoundsTable::limit(11), DataError);
}

TEST_CASE("save and load round trip") {
    auto t = fixture();
    std::stringstream ss;
    save_snapshot(ss, t);
    CHECK(ss.str().find("4 63 53 6 7\n") != std::string::npos);
    CHECK(ss.str().find("4 126 95 11 -\n") != std::string::npos);
    CHECK(parse(ss.str()) == t);

    std::mt19937_64 rng(6);
    BoundsTable r;
    for (int i = 0; i < 300; ++i) {
        const unsigned q = std::vector<unsigned>{2, 3, 4, 5, 7, 8, 9}[rng() % 7];
        const std::size_t n = 1 + rng() % BoundsTable::limit(q), k = 1 + rng() % n;
        const int s = static_cast<int>(n - k + 1), lo = 1 + static_cast<int>(rng() % s);
        std::optional<int> hi;
        if (rng() % 2) hi = lo + static_cast<int>(rng() % (s - lo + 1));
        if (!r.query(q, n, k)) r.insert({q, n, k}, {lo, hi});
    }
    std::stringstream rs;
    save_snapshot(rs, r);
    CHECK(parse(rs.str()) == r);
}

}

TEST_SUITE("search") {

TEST_CASE("fixture scan classifications") {
    auto t = fixture();
    std::set<std::tuple<unsigned, std::size_t, std::size_t>> improves, matches;
    for (unsigned q : {3u, 4u})
        for (const auto& f : scan_with_shortening(t, q)) {
            if (f.cls == Classification::Improves) improves.insert({q, f.length(), f.dimension()});
            if (f.cls == Classification::Matches) matches.insert({q, f.length(), f.dimension()});
        }
    using T = std::tuple<unsigned, std::size_t, std::size_t>;
    CHECK(improves == std::set<T>{{4, 126, 95}, {4, 128, 97}, {4, 127, 96}});
    CHECK(matches == std::set<T>{{3, 124, 78}, {3, 123, 77}, {3, 126, 79}, {4, 104, 63}, {4, 103, 62},
                                 {4, 106, 65}, {4, 105, 64}, {4, 108, 67}, {4, 107, 66}, {4, 122, 91},
                                 {4, 124, 93}, {4, 123, 92}, {4, 125, 94}});
}

TEST_CASE("scan examples") {
    auto t = fixture();
    auto f4 = plotkin_scan(t, 4);
    auto it = std::find_if(f4.begin(), f4.end(), [](const Finding& f) { return f.n == 63 && f.k1 == 53 && f.k2 == 42; });
    REQUIRE(it != f4.end());
    CHECK(it->plotkin_d == 12);
    CHECK(it->table_d_low == 11);
    CHECK(it->cls == Classification::Improves);

    auto f3 = plotkin_scan(t, 3);
    auto jt = std::find_if(f3.begin(), f3.end(), [](const Finding& f) { return f.n == 62 && f.k1 == 46 && f.k2 == 32; });
    REQUIRE(jt != f3.end());
    CHECK(jt->plotkin_d == 16);
    CHECK(jt->cls == Classification::Matches);

    CHECK(plotkin_scan(BoundsTable{}, 4).empty());
}

TEST_CASE("scan output is sorted and independent of threads") {
    auto t = fixture();
    auto a = plotkin_scan(t, 4, std::nullopt, 1);
    auto b = plotkin_scan(t, 4, std::nullopt, 8);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(), [](const Finding& x, const Finding& y) {
        return std::tie(x.n, x.k1, x.k2) < std::tie(y.n, y.k1, y.k2);
    }));
    auto c = plotkin_scan(t, 4, std::make_pair(std::size_t{60}, std::size_t{62}));
    for (const auto& f : c) CHECK((f.n >= 60 && f.n <= 62));
    CHECK(!c.empty());
}

TEST_CASE("classification rules") {
    CHECK(classify(5, std::nullopt) == Classification::NoTableEntry);
    CHECK(classify(5, Bounds{4, std::nullopt}) == Classification::Improves);
    CHECK(classify(5, Bounds{4, 5}) == Classification::Improves);
    CHECK(classify(5, Bounds{5, 6}) == Classification::Matches);
    CHECK(classify(5, Bounds{6, std::nullopt}) == Classification::Below);
    CHECK_THROWS_AS(classify(7, Bounds{5, 6}), DataError);
}

TEST_CASE("a table contradicting itself is a data error") {
    auto t = parse("2 4 1 4 4\n2 4 3 2 2\n2 8 4 3 3\n");
    CHECK_THROWS_AS(plotkin_scan(t, 2), DataError);
}

TEST_CASE("shortened findings only add cells not already reached") {
    auto t = parse("2 4 1 4 -\n2 4 3 2 -\n2 8 4 4 -\n2 7 3 3 -\n2 6 2 4 -\n");
    auto f = scan_with_shortening(t, 2);
    std::vector<Finding> derived;
    for (const auto& x : f)
        if (x.shortened) derived.push_back(x);
    REQUIRE(derived.size() == 2);
    CHECK(derived[0].length() == 6);
    CHECK(derived[0].dimension() == 2);
    CHECK(derived[0].cls == Classification::Matches);
    CHECK(derived[1].length() == 7);
    CHECK(derived[1].cls == Classification::Improves);
}

TEST_CASE("coverage denominators") {
    BoundsTable empty;
    const std::vector<std::pair<unsigned, std::uint64_t>> expect{
        {2, 16512}, {3, 14762}, {4, 16512}, {5, 4290}, {7, 2550}, {8, 4290}, {9, 4290}};
    for (auto [q, total] : expect) {
        auto s = coverage_stats(empty, q);
        CHECK(s.total_even_entries == total);
        const std::uint64_t half = BoundsTable::limit(q) / 2;
        CHECK(s.total_even_entries == half * (half + 1));
        CHECK(s.plotkin_achievable == 0);
    }
}

TEST_CASE("percent is truncated to two decimals") {
    CoverageStats s{4, 16512, 1350};
    CHECK(s.percent() == "8.17");
    CHECK(CoverageStats{2, 16512, 2676}.percent() == "16.20");
    CHECK(CoverageStats{3, 14762, 1681}.percent() == "11.38");
    CHECK(CoverageStats{5, 4290, 495}.percent() == "11.53");
    CHECK(CoverageStats{7, 2550, 354}.percent() == "13.88");
    CHECK(CoverageStats{8, 4290, 454}.percent() == "10.58");
    CHECK(CoverageStats{9, 4290, 431}.percent() == "10.04");
    CHECK(CoverageStats{2, 16512, 16512}.percent() == "100.00");
}

TEST_CASE("coverage on the fixture counts the sixteen sums minus shortened ones") {
    auto t = fixture();
    CHECK(coverage_stats(t, 4).plotkin_achievable == 7);
    CHECK(coverage_stats(t, 3).plotkin_achievable == 2);
}

TEST_CASE("scan distance equals the constructed Plotkin sum distance") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 25; ++t) {
        auto F = Field::of_order(std::vector<std::uint32_t>{2, 3, 4}[t % 3]);
        const std::size_t n = 4 + rng() % 5;
        auto c1 = random_code_of_dim(rng, F, n, 1 + rng() % 3);
        auto c2 = random_code_of_dim(rng, F, n, 1 + rng() % 3);
        if (c1.dimension() == c2.dimension()) continue;
        const int d1 = min_distance_exhaustive(c1).upper, d2 = min_distance_exhaustive(c2).upper;
        BoundsTable tb;
        const unsigned q = F->order();
        tb.insert({q, n, c1.dimension()}, {d1, std::nullopt});
        tb.insert({q, n, c2.dimension()}, {d2, std::nullopt});
        auto f = plotkin_scan(tb, q, std::make_pair(n, n));
        auto it = std::find_if(f.begin(), f.end(),
                               [&](const Finding& x) { return x.k1 == c1.dimension() && x.k2 == c2.dimension(); });
        REQUIRE(it != f.end());
        auto sum = plotkin_sum(c1.with_distance(DistanceInfo::exact(d1)), c2.with_distance(DistanceInfo::exact(d2)));
        CHECK(sum.distance() == DistanceInfo::exact(it->plotkin_d));
        CHECK(min_distance_exhaustive(sum).upper == it->plotkin_d);
    }
}

TEST_CASE("findings TSV") {
    std::vector<Finding> f{Finding{4, 63, 53, 42, 0, 12, 11, std::nullopt, Classification::Improves},
                           Finding{4, 64, 54, 43, 1, 12, 11, 13, Classification::Improves}};
    std::ostringstream out;
    write_findings_tsv(out, f);
    CHECK(out.str() ==
          "q\tlength\tk\tplotkin_d\ttable_d_low\ttable_d_high\tclass\tn\tk1\tk2\n"
          "4\t126\t95\t12\t11\t-\tImproves\t63\t53\t42\n"
          "4\t127\t96\t12\t11\t13\tImproves\t64\t54\t43\n");
}

}

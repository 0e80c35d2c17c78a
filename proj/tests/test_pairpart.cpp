#include <doctest.h>

#include "hyperoct/pairpart.hpp"

#include <algorithm>
#include <set>

using namespace hyperoct;

namespace {

SymPairPartition fig3() {
    return SymPairPartition(10, {{-1, 3}, {-3, 1}, {-2, 4}, {-4, 2}, {-6, 5}, {-5, 6}, {8, 10}, {7, 9}, {-9, -7}, {-10, -8}});
}

SymPairPartition fig4() {
    return SymPairPartition(9, {{-6, -2}, {2, 6}, {-9, -3}, {3, 9}, {-4, 1}, {-1, 4}, {5, 5}, {-5, -5}, {7, 7}, {-7, -7}, {8, 8}, {-8, -8}});
}

std::set<Block> block_set(const PointPartition& p) { return {p.blocks().begin(), p.blocks().end()}; }

// Symmetric pair/singleton partitions of [±n]: a(n) = a(n−1) + 2(n−1) a(n−2).
long long count_all(int n) {
    if (n <= 1) return 1;
    return count_all(n - 1) + 2 * (n - 1) * count_all(n - 2);
}

long long double_factorial(int n) { return n <= 0 ? 1 : n * double_factorial(n - 2); }

std::set<int> right_legs_positive(const PointPartition& p, bool hat_side) {
    std::set<int> out;
    for (const auto& [a, b] : p.blocks())
        if (a != b && (hat_side ? a > 0 : a + b > 0)) out.insert(b);
    return out;
}

std::set<int> left_legs_negative(const PointPartition& p, bool hat_side) {
    std::set<int> out;
    for (const auto& [a, b] : p.blocks())
        if (a != b && (hat_side ? b < 0 : a + b < 0)) out.insert(a);
    return out;
}

bool covers_singleton(const PointPartition& h) {
    for (const auto& [a, b] : h.blocks())
        for (int x = a + 1; x < b; ++x)
            if (x != 0 && h.is_singleton(x)) return true;
    return false;
}

std::vector<std::string> all_words(int n) {
    std::vector<std::string> out{""};
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + "1");
            next.push_back(w + "*");
        }
        out = std::move(next);
    }
    return out;
}

BivarPoly pow_poly(const BivarPoly& b, int e) { return b.pow(static_cast<unsigned>(e)); }

}  // namespace

TEST_SUITE("pairpart") {

TEST_CASE("validation") {
    CHECK_THROWS_AS(SymPairPartition(1, {{-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SymPairPartition(2, {{1, 2}, {-1, -1}, {-2, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(SymPairPartition(2, {{1, 2}, {-2, -1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SymPairPartition(3, {{1, 2}, {-1, -3}, {-2, 3}}), std::invalid_argument);
    CHECK_NOTHROW(SymPairPartition(2, {{-2, 1}, {-1, 2}}));
    auto p = fig3();
    CHECK(p.is_perfect());
    CHECK(p.mate(-1) == 3);
    CHECK(SymPairPartition::is_positive({-1, 3}));
    CHECK_FALSE(SymPairPartition::is_positive({-3, 1}));
    CHECK_FALSE(fig4().is_perfect());
    CHECK(fig4().is_singleton(-7));
}

TEST_CASE("enumeration counts") {
    for (int n = 0; n <= 7; ++n) CHECK(static_cast<long long>(enumerate(n).size()) == count_all(n));
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long long>(enumerate(2 * n, std::nullopt, true).size()) == (1LL << n) * double_factorial(2 * n - 1));
    CHECK(enumerate(3, std::nullopt, true).empty());
    CHECK(enumerate(10, std::nullopt, true).size() == 30240);
    auto all4 = enumerate(4);
    std::set<std::vector<Block>> distinct;
    for (const auto& p : all4) {
        CHECK(p.is_symmetric());
        distinct.insert(p.blocks());
    }
    CHECK(distinct.size() == all4.size());
    CHECK(enumerate(4) == all4);
}

TEST_CASE("admissibility filter") {
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate(n);
        for (const auto& w : all_words(n)) {
            auto filtered = enumerate(n, w);
            std::size_t expect = 0;
            for (const auto& p : all) {
                bool ok = true;
                for (const auto& [a, b] : p.blocks()) {
                    if (a == b && w[std::abs(a) - 1] != '*') ok = false;
                    if (a != b && a + b < 0 && (w[std::abs(b) - 1] != '*' || w[std::abs(a) - 1] != '1')) ok = false;
                }
                CHECK(p.admissible(w) == ok);
                expect += ok;
            }
            CHECK(filtered.size() == expect);
            for (const auto& p : filtered) {
                CHECK(p.admissible(w));
                for (int k = 1; k <= n; ++k)
                    if (p.is_singleton(k)) CHECK(w[k - 1] == '*');
            }
        }
    }
    CHECK(enumerate(2, std::string("11")).empty());
}

TEST_CASE("hat of the cycle example") {
    auto h = hat(fig3());
    CHECK(block_set(h) == std::set<Block>{{2, 3}, {-3, -2}, {1, 4}, {-4, -1}, {5, 6}, {-6, -5}, {8, 9}, {7, 10}, {-9, -8}, {-10, -7}});
}

TEST_CASE("hat of the semi-cycle example") {
    auto h = hat(fig4());
    CHECK(block_set(h) == std::set<Block>{{-4, -3}, {3, 4}, {8, 9}, {-9, -8}, {-6, -5}, {5, 6}, {-7, -7}, {-2, -2}, {-1, -1}, {1, 1}, {2, 2}, {7, 7}});
}

TEST_CASE("hat of all singletons is all singletons") {
    SymPairPartition s(3, {{-3, -3}, {-2, -2}, {-1, -1}, {1, 1}, {2, 2}, {3, 3}});
    auto hs = hat(s);
    for (const auto& [a, b] : hs.blocks()) CHECK(a == b);
    auto ds = decompose(s);
    CHECK(ds.semi_cycles.size() == 3);
    CHECK(ds.stats.l_sc == 0);
}

TEST_CASE("non-crossing pairs are their own hat") {
    // Each pair's mirror is negative, so the path always has up steps; here π̂ = π.
    SymPairPartition p(4, {{1, 2}, {-2, -1}, {3, 4}, {-4, -3}});
    CHECK(hat(p) == static_cast<const PointPartition&>(p));
    auto d = decompose(p);
    CHECK(d.regular);
    CHECK(d.cycles.size() == 2);
    CHECK(d.stats.c == 2);
    CHECK(d.stats.l_c == 0);
    CHECK(d.stats.c_minus == 0);
}

TEST_CASE("hat properties, exhaustive") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate(n)) {
            auto h = hat(p);
            CHECK(h.is_noncrossing());
            CHECK(h.is_symmetric());
            for (const auto& [a, b] : h.blocks()) CHECK((a > 0) == (b > 0));
            CHECK_FALSE(covers_singleton(h));
            CHECK(right_legs_positive(p, false) == right_legs_positive(h, true));
            CHECK(left_legs_negative(p, false) == left_legs_negative(h, true));
        }
}

TEST_CASE("decomposition of the cycle example") {
    auto d = decompose(fig3());
    CHECK(d.regular);
    CHECK(d.stats.c == 3);
    CHECK(d.stats.c_minus == 1);
    CHECK(d.stats.l_c == 2);
    CHECK(d.semi_cycles.empty());
    std::set<std::pair<int, std::set<int>>> got;
    for (const auto& c : d.cycles) {
        std::set<int> s(c.support.begin(), c.support.end());
        if (c.sign > 0 && s.count(-c.support.front()) == 0 && *s.begin() > 0 && s.count(7) == 0) {
            std::set<int> m;
            for (int x : s) m.insert(-x);
            s = std::min(s, m);
        }
        got.insert({c.sign * c.length, s});
    }
    std::set<int> a{-1, 3, 2, -4}, abar{1, -3, -2, 4};
    bool first = got.count({2, a}) || got.count({2, abar});
    CHECK(first);
    CHECK(got.count({2, {7, 8, 9, 10}}));
    CHECK(got.count({-1, {-6, -5, 5, 6}}));
}

TEST_CASE("decomposition of the semi-cycle example") {
    auto d = decompose(fig4());
    CHECK(d.regular);
    CHECK(d.cycles.empty());
    REQUIRE(d.semi_cycles.size() == 3);
    std::multiset<int> lengths;
    for (const auto& s : d.semi_cycles) lengths.insert(s.length);
    CHECK(lengths == std::multiset<int>{1, 2, 3});
    CHECK(d.stats.l_sc == 3);
    const auto& s1 = *std::find_if(d.semi_cycles.begin(), d.semi_cycles.end(), [](const SemiCycle& s) { return s.length == 3; });
    CHECK(s1.plus_part == std::vector<int>{-1, 4, 3, 9, 8});
    CHECK(s1.l_plus == 8);
    CHECK(s1.r_plus == -1);
    CHECK(s1.l_minus == -8);
    CHECK(s1.r_minus == 1);
    auto order = semicycle_tensor_order(d);
    std::vector<int> keys, labels;
    for (const auto& [r, l] : order) {
        keys.push_back(r);
        labels.push_back(l);
    }
    CHECK(keys == std::vector<int>{-7, -2, -1, 1, 2, 7});
    CHECK(labels == std::vector<int>{-7, -5, 8, -8, 5, 7});
    CHECK(weight(d.stats) == BivarPoly::monomial(3, 0));
}

TEST_CASE("minimal positive cycle") {
    auto d = decompose(SymPairPartition(2, {{1, 2}, {-2, -1}}));
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].sign == 1);
    CHECK(d.cycles[0].length == 1);
    CHECK(d.stats.l_c == 0);
}

TEST_CASE("decomposition accounts for every pair") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate(n)) {
            auto d = decompose(p);
            if (!d.regular) continue;
            int pairs = 0, singles = 0;
            for (const auto& [a, b] : p.blocks()) (a == b ? singles : pairs) += 1;
            int covered = 0;
            for (const auto& c : d.cycles) covered += 2 * c.length;
            for (const auto& s : d.semi_cycles) covered += 2 * (s.length - 1);
            CHECK(covered == pairs);
            CHECK(2 * static_cast<int>(d.semi_cycles.size()) == singles);
            int lc = 0;
            for (const auto& c : d.cycles) lc += c.length - 1;
            CHECK(lc == d.stats.l_c);
            CHECK(d.stats.c == static_cast<int>(d.cycles.size()));
            if (p.is_perfect()) CHECK(d.stats.l_c == n / 2 - d.stats.c);
        }
}

TEST_CASE("admissible partitions decompose regularly") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_words(n))
            for (const auto& p : enumerate(n, w)) CHECK(decompose(p).regular);
}

TEST_CASE("Wick moments") {
    Vec x{1};
    CHECK(wick_moment({x, x}) == 1 + BivarPoly::qm());
    auto qp = BivarPoly::qp(), qm = BivarPoly::qm();
    CHECK(wick_moment({x, x, x, x}) == (1 + qm) * (2 + 2 * qm + 2 * qp));
    Vec e1{1, 0}, e2{0, 1};
    CHECK(wick_moment({e1, e2}).is_zero());
    CHECK(wick_moment({e1, e2, e1, e2}) == wick_moment({e2, e1, e2, e1}));
    CHECK_THROWS_AS(wick_moment({e1, x}), std::invalid_argument);
    CHECK(dot({frac(1, 2), 3}, {4, frac(1, 3)}) == 3);
}

TEST_CASE("matchings and projection") {
    for (int n = 1; n <= 6; ++n) CHECK(static_cast<long long>(enumerate_matchings(n).size()) == double_factorial(2 * n - 1));
    CHECK(matching_cycles(Matching{2, {{1, 3}, {2, 4}}}) == 1);
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : enumerate_matchings(n)) {
            auto nc = left_aligned_noncrossing(m);
            std::set<int> lm, ln;
            for (auto [i, j] : m.pairs) lm.insert(i);
            for (auto [i, j] : nc.pairs) ln.insert(i);
            CHECK(lm == ln);
            CHECK(matching_cycles(nc) == n);
            if (nc == m) CHECK(matching_cycles(m) == n);
            auto f = fiber(m);
            CHECK(f.size() == (std::size_t{1} << n));
            for (const auto& p : f) CHECK(project(p) == m);
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& m : enumerate_matchings(n)) CHECK(fiber_identity(m));
}

TEST_CASE("pair-partition and matching sums agree") {
    auto qp = BivarPoly::qp(), qm = BivarPoly::qm();
    for (int n = 1; n <= 5; ++n) {
        BivarPoly lhs, rhs;
        for (const auto& p : enumerate(2 * n, std::nullopt, true)) {
            auto s = decompose(p).stats;
            lhs += BivarPoly::monomial(static_cast<unsigned>(s.l_c), static_cast<unsigned>(s.c_minus));
        }
        for (const auto& m : enumerate_matchings(n)) {
            int c = matching_cycles(m);
            rhs += pow_poly(1 + qm, c) * pow_poly(2 * qp, n - c);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Drake statistics") {
    auto a = drake_stats(Matching{2, {{1, 2}, {3, 4}}});
    CHECK(a.non_nested == 2);
    CHECK(a.no_right_crossing == 2);
    CHECK(drake_stats(Matching{2, {{1, 4}, {2, 3}}}).non_nested == 1);
    CHECK(drake_stats(Matching{2, {{1, 3}, {2, 4}}}).no_right_crossing == 1);
    for (int n = 1; n <= 6; ++n) {
        std::vector<long long> c(n + 1), nn(n + 1), nr(n + 1);
        for (const auto& m : enumerate_matchings(n)) {
            auto s = drake_stats(m);
            ++c[matching_cycles(m)];
            ++nn[s.non_nested];
            ++nr[s.no_right_crossing];
        }
        CHECK(c == nn);
        CHECK(c == nr);
    }
}

}

// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
#include "hyperoct/classify.hpp"
#include "hyperoct/fock.hpp"
#include "hyperoct/gram.hpp"
#include "hyperoct/group_algebra.hpp"
#include "hyperoct/hirai.hpp"
#include "hyperoct/moments.hpp"
#include "hyperoct/pairpart.hpp"
#include "hyperoct/schur_weyl.hpp"
#include "hyperoct/type_d.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace hyperoct;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = "first failure: " + what;
        ok = ok && cond;
    }
};

std::string str(const Rational& r) { return to_string(r); }

Outcome factorization_identities() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) o.require(factorization_identity(n).equal, "n=" + std::to_string(n));
    o.detail = o.ok ? "exact equality for n=1..4" : o.detail;
    return o;
}

Outcome nonmixing_factorizations() {
    Outcome o;
    long count = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_group(n)) {
            auto f = minimal_nonmixing_factorization(s);
            auto l = reflection_lengths(s);
            int shorts = 0;
            for (const auto& r : f) shorts += r.kind == Reflection::Kind::Short;
            const int longs = static_cast<int>(f.size()) - shorts;
            o.require(product(f, n) == s && is_nonmixing(f, s) && longs == l.ell_plus && shorts == l.ell_minus, s.to_string());
            ++count;
        }
    if (o.ok) o.detail = std::to_string(count) + " elements";
    return o;
}

Outcome expansion() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        auto r = verify_rozklad(n);
        o.require(r.ok, "n=" + std::to_string(n));
        if (n == 4) o.require(r.rows.size() == 20 && irreps_B(4).size() == 20, "20 classes and irreps at n=4");
    }
    if (o.ok) o.detail = "every class of B(1..4)";
    return o;
}

Outcome classification_grid() {
    Outcome o;
    const std::vector<Rational> qps{0, frac(1, 4), frac(-1, 4), frac(1, 3), frac(-1, 3), frac(1, 2), frac(-1, 2), frac(2, 5)};
    const std::vector<Rational> qms{0, frac(1, 3), frac(-1, 3), 1, -1, frac(3, 2)};
    int pd = 0, points = 0;
    for (const auto& a : qps)
        for (const auto& b : qms) {
            const std::string at = "(" + str(a) + ", " + str(b) + ")";
            auto r = classify(a, b);
            auto scan = find_negative_coefficient(a, b, 8);
            o.require(r.positive_definite() == !scan.has_value(), "classifier vs scan at " + at);
            if (!r.positive_definite()) o.require(r.witness.has_value() && r.witness->value < 0, "witness at " + at);
            bool gram_fails = false;
            for (int n = 1; n <= 3; ++n) gram_fails = gram_fails || !gram_psd(n, a, b);
            // Gram on B(n) sees exactly the irreps of B(n), so it fails iff a witness of size <= 3 exists.
            o.require(gram_fails == find_negative_coefficient(a, b, 3).has_value(), "Gram vs scan at " + at);
            if (r.positive_definite()) o.require(!gram_fails, "Gram on PD point " + at);
            pd += r.positive_definite();
            ++points;
        }
    // The smallest witness at these two points has size 4.
    for (const Rational b : {Rational(1), Rational(-1)}) {
        const std::string at = "(2/5, " + str(b) + ")";
        o.require(!classify(frac(2, 5), b).positive_definite(), "not PD at " + at);
        o.require(gram_psd(3, frac(2, 5), b) && !gram_psd(4, frac(2, 5), b), "Gram B(3) PSD, B(4) not at " + at);
    }
    if (o.ok) o.detail = std::to_string(points) + " points, " + std::to_string(pd) + " PD; Gram B(4) at (2/5, +-1)";
    return o;
}

Outcome schur_weyl() {
    Outcome o;
    int configs = 0;
    for (int M = 0; M <= 4; ++M)
        for (int N = 0; M + N <= 4; ++N) {
            if (M + N == 0) continue;
            for (int eps : {1, -1})
                for (int n = 1; n <= 3; ++n) {
                    RepConfig cfg{M, N, eps, n};
                    const std::string at = "M=" + std::to_string(M) + " N=" + std::to_string(N) +
                                           " eps=" + std::to_string(eps) + " n=" + std::to_string(n);
                    auto group = enumerate_group(n);
                    std::map<SignedPermutation, RepMatrix> mats;
                    for (const auto& g : group) mats.emplace(g, rep_matrix(g, cfg));
                    bool hom = true;
                    for (const auto& a : group)
                        for (const auto& b : group) hom = hom && mats.at(a * b) == multiply(mats.at(a), mats.at(b));
                    o.require(hom, "homomorphism " + at);
                    o.require(verify_character(cfg), "character " + at);
                    ++configs;
                }
        }
    if (o.ok) o.detail = std::to_string(configs) + " configurations, all group pairs";
    return o;
}

Outcome hirai() {
    Outcome o;
    const std::vector<std::tuple<int, int, int>> families{{1, 1, 1}, {1, 1, -1}, {2, 1, 1}, {2, 1, -1}, {3, 2, 1}};
    for (int n = 1; n <= 5; ++n) {
        for (auto [M, N, eps] : families)
            o.require(hirai_matches_phi(M, N, eps, n), "(" + std::to_string(M) + "," + std::to_string(N) + "," +
                                                           std::to_string(eps) + ") n=" + std::to_string(n));
        for (const Rational b : {Rational(0), frac(1, 2), frac(-1, 2)})
            o.require(hirai_matches_phi_degenerate(b, n), "q+=0 q-=" + str(b) + " n=" + std::to_string(n));
    }
    if (o.ok) o.detail = "8 families, n=1..5";
    return o;
}

Outcome five_routes() {
    Outcome o;
    for (const auto& rc : cross_check(10)) {
        o.require(rc.routes.size() == 5, "five routes");
        o.require(rc.equal, "2n=" + std::to_string(rc.two_n));
    }
    if (o.ok) o.detail = "jacobi, dyck, wick, matching, fock agree for 2n<=10";
    return o;
}

Vec random_vec(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 6);
    Vec v;
    do {
        v = {frac(num(rng), den(rng)), frac(num(rng), den(rng))};
    } while (v[0] == 0 && v[1] == 0);
    return v;
}

std::vector<std::vector<int>> tuples(int d, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int j = 0; j < d; ++j) {
                next.push_back(t);
                next.back().push_back(j);
            }
        out = std::move(next);
    }
    return out;
}

Outcome operator_words() {
    Outcome o;
    const auto q = symbolic();
    std::mt19937_64 rng(1);
    int words = 0;
    for (int len = 1; len <= 5; ++len)
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::string w;
            std::vector<std::pair<Vec, Vec>> pairs;
            for (int k = 0; k < len; ++k) {
                w += (mask >> k) & 1u ? '*' : '1';
                auto x = random_vec(rng);
                pairs.emplace_back(x, random_vec(rng));
            }
            o.require(apply_word(w, pairs, q) == combinatorial_word(w, pairs, q), "word " + w);
            ++words;
        }
    if (o.ok) o.detail = std::to_string(words) + " words, d=2, symbolic";
    return o;
}

Outcome commutation() {
    Outcome o;
    const auto q = symbolic();
    std::mt19937_64 rng(2);
    auto x = random_vec(rng), y = random_vec(rng), xi = random_vec(rng), eta = random_vec(rng);
    int count = 0;
    for (int n = 0; n <= 3; ++n)
        for (const auto& t : tuples(2, 2 * n)) {
            auto b = FockVector<BivarPoly>::basis(2, t);
            o.require(annihilate(x, y, create(xi, eta, b), q) == commutation_rhs(x, y, xi, eta, b, q),
                      "level " + std::to_string(n));
            ++count;
        }
    if (o.ok) o.detail = std::to_string(count) + " basis vectors, levels 0..3";
    return o;
}

Outcome exclusion() {
    Outcome o;
    for (int M = 1; M <= 3; ++M)
        for (int N = 1; N <= 2; ++N) {
            const std::string at = "M=" + std::to_string(M) + " N=" + std::to_string(N);
            auto r = exclusion_check(M, N);
            bool norms = static_cast<int>(r.norms.size()) == M + 1 && r.norms.back() == 0;
            for (int k = 0; k < M && norms; ++k) norms = r.norms[k] > 0;
            o.require(r.ok && norms, "norms " + at);
            auto m = jacobi_moments(2 * M + 2, r.q_plus, r.q_minus);
            o.require(hankel_determinant(m, M + 1) > 0 && hankel_determinant(m, M + 2) == 0, "Hankel " + at);
        }
    if (o.ok) o.detail = "M=1..3, N=1..2";
    return o;
}

Outcome specialization_values() {
    Outcome o;
    for (const auto& row : specializations(6)) {
        const std::string at = "n=" + std::to_string(row.n);
        o.require(row.semicircle_ok, "q+=0 " + at);
        o.require(row.at_2_2_ok, "(2,2) " + at);
        o.require(row.at_2_0_ok, "(2,0) " + at);
        o.require(row.pair_count_ok, "count " + at);
    }
    if (o.ok) o.detail = "n=1..6";
    return o;
}

Outcome drake() {
    Outcome o;
    for (const auto& row : specializations(6)) {
        const std::string at = "n=" + std::to_string(row.n);
        o.require(row.drake_ok, at);
        o.require(row.cycles == row.non_nested && row.cycles == row.no_right_crossing && row.cycles == row.from_moment, at);
    }
    if (o.ok) o.detail = "n=1..6";
    return o;
}

Outcome type_d() {
    Outcome o;
    std::vector<Rational> qs{0, 1, -1};
    for (long k = 2; k <= 5; ++k) {
        qs.push_back(frac(1, k));
        qs.push_back(frac(-1, k));
    }
    for (const auto& q : qs) {
        auto r = classify_D(q);
        o.require(r.positive_definite == !find_negative_coefficient_D(q, 8).has_value(), "q=" + str(q));
        if (!r.positive_definite) o.require(r.witness.has_value() && r.witness_value < 0, "witness q=" + str(q));
    }
    for (int n = 1; n <= 4; ++n) {
        std::map<std::pair<Partition, Partition>, int> count;
        for (const auto& c : classes_D(n)) ++count[{c.type.rho_plus, c.type.rho_minus}];
        for (const auto& t : padded_classes(n)) {
            if (t.rho_minus.length() % 2) continue;
            const auto& p = t.rho_plus.parts();
            const bool even_parts = t.rho_minus.empty() && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
            o.require(splits_in_D(t) == even_parts && count[{t.rho_plus, t.rho_minus}] == (even_parts ? 2 : 1),
                      "splitting " + t.to_string());
        }
    }
    if (o.ok) o.detail = std::to_string(qs.size()) + " q values; splitting for n=1..4";
    return o;
}

Outcome structural_counts() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const std::string at = "n=" + std::to_string(n);
        const auto group = enumerate_group(n);
        o.require(Integer(static_cast<unsigned long>(group.size())) == (Integer(1) << n) * factorial(n) &&
                      group_order(n) == Integer(static_cast<unsigned long>(group.size())),
                  "|B(n)| " + at);
        long refl = 0;
        for (const auto& s : group) refl += reflection_lengths(s).total() == 1;
        o.require(refl == n * n && static_cast<long>(all_reflections(n).size()) == n * n, "reflections " + at);
        Integer total = 0;
        for (const auto& t : padded_classes(n)) total += class_size(t, n);
        o.require(total == group_order(n), "class sizes " + at);
        if (n <= 4) {
            std::map<std::string, Integer> brute;
            for (const auto& cls : conjugacy_classes_bruteforce(n))
                brute[cycle_type(cls.front(), CycleType::Convention::Padded).to_string()] = static_cast<unsigned long>(cls.size());
            bool same = brute.size() == padded_classes(n).size();
            for (const auto& t : padded_classes(n)) same = same && brute[t.to_string()] == class_size(t, n);
            o.require(same, "class sizes vs orbits " + at);
        }
        o.require(Integer(static_cast<unsigned long>(enumerate(2 * n, std::nullopt, true).size())) ==
                      (Integer(1) << n) * double_factorial(2 * n - 1),
                  "pair partitions " + at);
    }
    if (o.ok) o.detail = "n=1..5";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "factorization identity", 60, factorization_identities},
        {2, "minimal non-mixing factorizations", 60, nonmixing_factorizations},
        {3, "character expansion of phi", 120, expansion},
        {4, "classification consistency", 180, classification_grid},
        {5, "Schur-Weyl realization", 120, schur_weyl},
        {6, "Hirai evaluator", 60, hirai},
        {7, "five-route moments", 120, five_routes},
        {8, "operator words", 120, operator_words},
        {9, "commutation relation", 60, commutation},
        {10, "exclusion principle", 30, exclusion},
        {11, "moment specializations", 30, specialization_values},
        {12, "Drake equidistribution", 30, drake},
        {13, "type D", 60, type_d},
        {14, "structural counts", 10, structural_counts},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            out.ok = false;
            out.detail += " (over time limit)";
        }
        failed += !out.ok;
        std::printf("%s %2d %-36s %8.2fs / %4.0fs  %s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}

#include <doctest.h>

#include "hyperoct/fock.hpp"
#include "hyperoct/gram.hpp"

using namespace hyperoct;

namespace {

using SV = FockVector<BivarPoly>;
using RV = FockVector<Rational>;

std::vector<std::vector<int>> tuples(int d, int len) {
    std::vector<std::vector<int>> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int j = 0; j < d; ++j) {
                auto u = t;
                u.push_back(j);
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

Vec V(long a, long b, long c, long e) { return {frac(a, b), frac(c, e)}; }

const std::vector<Vec> kVecs = {V(1, 2, -1, 3), V(2, 1, 1, 5), V(-3, 4, 2, 1), V(1, 1, 1, 1), V(0, 1, 3, 2),
                                V(5, 3, -2, 7), V(-1, 1, 4, 3), V(2, 3, 0, 1), V(1, 4, 1, 2), V(-2, 5, -1, 1)};

std::vector<std::pair<Vec, Vec>> word_vectors(std::size_t n) {
    std::vector<std::pair<Vec, Vec>> out;
    for (std::size_t k = 0; k < n; ++k) out.emplace_back(kVecs[(2 * k) % kVecs.size()], kVecs[(2 * k + 1) % kVecs.size()]);
    return out;
}

std::vector<std::string> words(int n) {
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

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("basic vectors") {
    auto v = SV::vacuum(2);
    CHECK(v.coefficient({}) == BivarPoly(1));
    CHECK_THROWS_AS(SV::basis(2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(SV::basis(2, {0, 2}), std::invalid_argument);
    auto t = SV::tensor(2, {V(1, 1, 1, 1), V(1, 1, 0, 1)});
    CHECK(t.coefficient({0, 0}) == BivarPoly(1));
    CHECK(t.coefficient({1, 0}) == BivarPoly(1));
    CHECK((t - t).is_zero());
    CHECK(permute_tuple(SignedPermutation({-1}), {0, 1}) == std::vector<int>{1, 0});
}

TEST_CASE("deformed inner product examples") {
    auto q = symbolic();
    auto qp = BivarPoly::qp(), qm = BivarPoly::qm();
    Vec x{1};
    auto vac = SV::vacuum(1);
    CHECK(deformed_inner(vac, vac, q) == BivarPoly(1));
    auto l1 = create(x, x, vac);
    CHECK(deformed_inner(l1, l1, q) == 1 + qm);
    CHECK(deformed_inner(l1, vac, q).is_zero());
    auto v = vac;
    BivarPoly expect(1);
    for (int n = 1; n <= 4; ++n) {
        v = create(x, x, v);
        expect = expect * (1 + 2 * (n - 1) * qp + qm);
        CHECK(deformed_inner(v, v, q) == expect);
    }
}

TEST_CASE("factorization of the symmetrizer, both orders") {
    auto q = symbolic();
    for (int n = 1; n <= 4; ++n) {
        const int d = n <= 3 ? 2 : 1;
        for (const auto& t : tuples(d, 2 * n)) {
            auto b = SV::basis(d, t);
            auto full = apply_combination(symmetrizer(n, q), b);
            auto inner = symmetrizer(n, q, n - 1);
            auto r = r_operator(n, q);
            CHECK(apply_combination(inner, apply_combination(r, b)) == full);
            CHECK(apply_combination(r, apply_combination(inner, b)) == full);
        }
    }
}

TEST_CASE("factorization of the symmetrizer at level 4, d = 2") {
    auto q = symbolic();
    auto inner = symmetrizer(4, q, 3);
    auto r = r_operator(4, q);
    auto full = symmetrizer(4, q);
    int k = 0;
    for (const auto& t : tuples(2, 8)) {
        if (k++ % 7) continue;
        auto b = SV::basis(2, t);
        CHECK(apply_combination(inner, apply_combination(r, b)) == apply_combination(full, b));
    }
}

TEST_CASE("annihilator via R agrees with the slot formula") {
    auto q = symbolic();
    for (int n = 0; n <= 4; ++n)
        for (const auto& t : tuples(2, 2 * n)) {
            auto b = SV::basis(2, t);
            for (std::size_t i = 0; i + 1 < kVecs.size(); i += 3) {
                const auto& x = kVecs[i];
                const auto& y = kVecs[i + 1];
                CHECK(annihilate(x, y, b, q) == annihilate_direct(x, y, b, q));
            }
        }
    CHECK(annihilate(kVecs[0], kVecs[1], SV::vacuum(2), symbolic()).is_zero());
}

TEST_CASE("level-one annihilation") {
    auto q = symbolic();
    const auto &x = kVecs[0], &y = kVecs[1], &xi = kVecs[2], &eta = kVecs[3];
    auto v = SV::tensor(2, {xi, eta});
    auto r = annihilate(x, y, v, q);
    BivarPoly expect = BivarPoly(dot(x, xi) * dot(y, eta)) + BivarPoly::qm() * dot(x, eta) * dot(y, xi);
    CHECK(r == SV::vacuum(2).scaled(expect));
}

TEST_CASE("creation and annihilation are adjoint") {
    auto q = symbolic();
    for (int n = 0; n <= 2; ++n) {
        std::vector<Vec> us, vs;
        for (int k = 0; k < 2 * n; ++k) us.push_back(kVecs[(k + 3) % kVecs.size()]);
        for (int k = 0; k < 2 * n + 2; ++k) vs.push_back(kVecs[(3 * k + 1) % kVecs.size()]);
        auto u = SV::tensor(2, us) + SV::tensor(2, us.empty() ? us : std::vector<Vec>(us.rbegin(), us.rend()));
        auto v = SV::tensor(2, vs);
        for (std::size_t i = 0; i + 1 < kVecs.size(); i += 2) {
            const auto& x = kVecs[i];
            const auto& y = kVecs[i + 1];
            CHECK(deformed_inner(create(x, y, u), v, q) == deformed_inner(u, annihilate(x, y, v, q), q));
        }
    }
}

TEST_CASE("commutation relation on basis vectors") {
    auto q = symbolic();
    for (int n = 0; n <= 3; ++n)
        for (const auto& t : tuples(2, 2 * n)) {
            auto b = SV::basis(2, t);
            for (std::size_t i = 0; i + 3 < kVecs.size(); i += 2) {
                const auto &x = kVecs[i], &y = kVecs[i + 1], &xi = kVecs[i + 2], &eta = kVecs[i + 3];
                CHECK(annihilate(x, y, create(xi, eta, b), q) == commutation_rhs(x, y, xi, eta, b, q));
            }
        }
}

TEST_CASE("commutation relation special cases") {
    auto q = symbolic();
    Vec x{1, 0}, y{0, 1};
    auto vac = SV::vacuum(2);
    CHECK(second_quantization(x, x, x, x, vac, q).is_zero());
    CHECK(annihilate(x, x, create(x, x, vac), q) == vac.scaled(1 + BivarPoly::qm()));
    // x ⊥ η and y ⊥ ξ: only the identity and Γ terms survive.
    auto b = SV::basis(2, {0, 1, 1, 0});
    auto lhs = annihilate(x, y, create(x, y, b), q);
    CHECK(lhs == b + second_quantization(x, x, y, y, b, q));
}

TEST_CASE("operator words match the combinatorial formula") {
    auto q = symbolic();
    CHECK(apply_word("*", word_vectors(1), q) == SV::tensor(2, {word_vectors(1)[0].first, word_vectors(1)[0].second}));
    Vec u{frac(3, 5), frac(4, 5)};
    std::vector<std::pair<Vec, Vec>> same{{u, u}, {u, u}};
    CHECK(apply_word("*1", same, q) == SV::vacuum(2).scaled(1 + BivarPoly::qm()));
    CHECK(combinatorial_word("*1", same, q) == SV::vacuum(2).scaled(1 + BivarPoly::qm()));
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : words(n)) {
            auto vs = word_vectors(static_cast<std::size_t>(n));
            CHECK_MESSAGE(apply_word(w, vs, q) == combinatorial_word(w, vs, q), w);
        }
    CHECK_THROWS_AS(apply_word("*x", word_vectors(2), q), std::invalid_argument);
}

TEST_CASE("level Gram matrices are PSD at extreme parameters") {
    for (int M = 0; M <= 3; ++M)
        for (int N = 0; M + N <= 3; ++N)
            for (int eps = -1; eps <= 1; eps += 2) {
                if (M + N == 0) continue;
                auto q = at(frac(eps, M + N), frac(M - N, M + N));
                for (int n = 1; n <= 3; ++n) {
                    auto basis = tuples(2, 2 * n);
                    RationalMatrix g(basis.size(), std::vector<Rational>(basis.size()));
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        auto pv = apply_symmetrizer(RV::basis(2, basis[j]), q);
                        for (std::size_t i = 0; i < basis.size(); ++i) g[i][j] = pv.coefficient(basis[i]);
                    }
                    CHECK(is_psd(g));
                }
            }
    // Away from the classification the form is indefinite at some level.
    auto q = at(frac(1, 3), 0);
    auto basis = tuples(2, 6);
    RationalMatrix g(basis.size(), std::vector<Rational>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto pv = apply_symmetrizer(RV::basis(2, basis[j]), q);
        for (std::size_t i = 0; i < basis.size(); ++i) g[i][j] = pv.coefficient(basis[i]);
    }
    CHECK_FALSE(is_psd(g));
}

TEST_CASE("Gaussian moments through operators") {
    auto qp = BivarPoly::qp(), qm = BivarPoly::qm();
    CHECK(gaussian_moment_operator(2) == 1 + qm);
    CHECK(gaussian_moment_operator(4) == (1 + qm) * (2 + 2 * qm + 2 * qp));
    CHECK(gaussian_moment_operator(1).is_zero());
    CHECK(gaussian_moment_operator(0) == BivarPoly(1));
    CHECK(gaussian_moment_operator(4, at(frac(1, 2), 0)) == 3);
}

TEST_CASE("exclusion principle") {
    auto r = exclusion_check(2, 1);
    CHECK(r.ok);
    CHECK(r.norms == std::vector<Rational>{frac(4, 3), frac(8, 9), 0});
    CHECK(r.product == r.norms);
    auto r11 = exclusion_check(1, 1);
    CHECK(r11.ok);
    CHECK(r11.norms.back() == 0);
    CHECK(r11.norms.size() == 2);
    auto r31 = exclusion_check(3, 1);
    CHECK(r31.ok);
    REQUIRE(r31.norms.size() == 4);
    for (int k = 0; k < 3; ++k) CHECK(r31.norms[k] > 0);
    CHECK(r31.norms[3] == 0);
    CHECK_THROWS_AS(exclusion_check(5, 1), std::invalid_argument);
}

}

#include "hyperoct/moments.hpp"

#include "hyperoct/fock.hpp"
#include "hyperoct/pairpart.hpp"

#include <functional>
#include <stdexcept>

namespace hyperoct {

BivarPoly jacobi_lambda(int k) {
    return BivarPoly(1) + BivarPoly::qp() * Rational(2 * (k - 1)) + BivarPoly::qm();
}

Rational jacobi_lambda(int k, const Rational& qp, const Rational& qm) { return 1 + 2 * (k - 1) * qp + qm; }

Rational awk_parameter(const Rational& qp, const Rational& qm) {
    if (qp == 0) throw std::invalid_argument("c is defined only for q+ != 0");
    return (1 + qm) / (2 * qp) - 1;
}

BivarPoly jacobi_moments(int two_n) {
    if (two_n % 2) return {};
    std::vector<BivarPoly> v(static_cast<std::size_t>(two_n) + 2);
    v[0] = 1;
    for (int step = 0; step < two_n; ++step) {
        std::vector<BivarPoly> w(v.size());
        for (std::size_t k = 0; k + 1 < v.size(); ++k) {
            if (v[k].is_zero()) continue;
            w[k + 1] += v[k];
            if (k > 0) w[k - 1] += v[k] * jacobi_lambda(static_cast<int>(k));
        }
        v = std::move(w);
    }
    return v[0];
}

std::vector<Rational> jacobi_moments(int max_order, const Rational& qp, const Rational& qm) {
    std::vector<Rational> out;
    for (int m = 0; m <= max_order; ++m) out.push_back(jacobi_moments(m).eval(qp, qm));
    return out;
}

std::vector<DyckPath> dyck_paths(int n) {
    std::vector<DyckPath> out;
    DyckPath cur;
    std::function<void(int, int)> rec = [&](int ups, int height) {
        if (static_cast<int>(cur.size()) == 2 * n) {
            out.push_back(cur);
            return;
        }
        if (ups < n) {
            cur.push_back(1);
            rec(ups + 1, height + 1);
            cur.pop_back();
        }
        if (height > 0) {
            cur.push_back(-1);
            rec(ups, height - 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

BivarPoly dyck_moments(int two_n) {
    if (two_n % 2) return {};
    BivarPoly total;
    for (const auto& path : dyck_paths(two_n / 2)) {
        BivarPoly w = 1;
        int h = 0;
        for (int s : path) {
            h += s;
            if (s < 0) w *= BivarPoly(1) + BivarPoly::qm() + BivarPoly::qp() * Rational(2 * h);
        }
        total += w;
    }
    return total;
}

BivarPoly matching_moments(int two_n) {
    if (two_n % 2) return {};
    const int n = two_n / 2;
    const BivarPoly x = BivarPoly(1) + BivarPoly::qm(), y = BivarPoly::qp() * Rational(2);
    BivarPoly total;
    for (const auto& m : enumerate_matchings(n)) {
        int c = matching_cycles(m);
        total += x.pow(static_cast<unsigned>(c)) * y.pow(static_cast<unsigned>(n - c));
    }
    return total;
}

BivarPoly wick_moments(int two_n) {
    return wick_moment(std::vector<Vec>(static_cast<std::size_t>(two_n), Vec{Rational(1)}));
}

std::vector<RouteComparison> cross_check(int two_n_max) {
    std::vector<RouteComparison> out;
    for (int m = 2; m <= two_n_max; m += 2) {
        RouteComparison rc{m, {}, true, std::nullopt};
        rc.routes = {{"jacobi", jacobi_moments(m)},
                     {"dyck", dyck_moments(m)},
                     {"wick", wick_moments(m)},
                     {"matching", matching_moments(m)},
                     {"fock", gaussian_moment_operator(m)}};
        for (const auto& [name, p] : rc.routes) {
            if (p != rc.routes.front().second) {
                rc.equal = false;
                if (!rc.first_difference) rc.first_difference = BivarPoly::first_difference(rc.routes.front().second, p);
            }
        }
        out.push_back(std::move(rc));
    }
    return out;
}

Integer catalan(int n) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    return b / (n + 1);
}

Integer factorial(int n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer double_factorial(int n) {
    Integer f = 1;
    for (int k = n; k > 1; k -= 2) f *= k;
    return f;
}

UniPoly as_cycle_polynomial(const BivarPoly& moment) {
    // x = t, y = 1  ⇔  q− = t − 1, q+ = 1/2.
    UniPoly out;
    const UniPoly qm = UniPoly::t() + UniPoly(Rational(-1));
    for (const auto& [e, c] : moment.terms())
        out += UniPoly(c * pow(Rational(1, 2), e.first)) * qm.pow(e.second);
    return out;
}

std::vector<SpecializationRow> specializations(int n_max) {
    std::vector<SpecializationRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        SpecializationRow r;
        r.n = n;
        const BivarPoly m = jacobi_moments(2 * n);
        const BivarPoly semicircle = m.compose(BivarPoly(0), BivarPoly::qm());
        r.semicircle_ok = semicircle == (BivarPoly(1) + BivarPoly::qm()).pow(static_cast<unsigned>(n)) * Rational(catalan(n));
        r.at_2_2 = m.eval(1, 1);
        r.at_2_2_ok = r.at_2_2 == Rational(factorial(2 * n) / factorial(n));
        r.at_2_0 = m.eval(0, 1);
        Integer two_n = 1;
        for (int k = 0; k < n; ++k) two_n *= 2;
        r.at_2_0_ok = r.at_2_0 == Rational(two_n * catalan(n));
        r.pair_count = static_cast<unsigned long>(enumerate(2 * n, std::nullopt, true).size());
        r.pair_count_ok = r.pair_count == two_n * double_factorial(2 * n - 1) && Rational(r.pair_count) == r.at_2_2;
        for (const auto& mt : enumerate_matchings(n)) {
            auto ds = drake_stats(mt);
            r.cycles += UniPoly::monomial(static_cast<unsigned>(matching_cycles(mt)));
            r.non_nested += UniPoly::monomial(static_cast<unsigned>(ds.non_nested));
            r.no_right_crossing += UniPoly::monomial(static_cast<unsigned>(ds.no_right_crossing));
        }
        r.from_moment = as_cycle_polynomial(m);
        r.drake_ok = r.cycles == r.non_nested && r.cycles == r.no_right_crossing && r.cycles == r.from_moment;
        rows.push_back(std::move(r));
    }
    return rows;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational hankel_determinant(const std::vector<Rational>& moments, int k) {
    if (static_cast<int>(moments.size()) < 2 * k - 1) throw std::invalid_argument("not enough moments for Hankel determinant");
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = moments[static_cast<std::size_t>(i + j)];
    return determinant(std::move(h));
}

}  // namespace hyperoct

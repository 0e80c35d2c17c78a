#include "hyperoct/gram.hpp"

#include "hyperoct/signed_perm.hpp"

#include <map>
#include <stdexcept>

namespace hyperoct {

bool is_psd(RationalMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("is_psd: matrix is not square");
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < live.size(); ++k)
            if (a[live[k]][live[k]] > a[live[best]][live[best]]) best = k;
        const std::size_t p = live[best];
        const Rational d = a[p][p];
        if (d < 0) return false;
        if (d == 0) {
            for (auto i : live)
                for (auto j : live)
                    if (a[i][j] != 0) return false;
            return true;
        }
        live.erase(live.begin() + static_cast<long>(best));
        Rational t;
        for (std::size_t x = 0; x < live.size(); ++x) {
            const std::size_t i = live[x];
            if (a[i][p] == 0) continue;
            const Rational li = a[i][p] / d;
            for (std::size_t y = 0; y <= x; ++y) {
                const std::size_t j = live[y];
                if (a[p][j] == 0) continue;
                t = li * a[p][j];
                a[i][j] -= t;
                if (i != j) a[j][i] = a[i][j];
            }
        }
    }
    return true;
}

RationalMatrix gram_matrix(int n, const Rational& qp, const Rational& qm) {
    auto g = enumerate_group(n);
    std::map<SignedPermutation, Rational> value;
    for (const auto& s : g) value.emplace(s, phi(cycle_type(s), qp, qm));
    RationalMatrix m(g.size(), std::vector<Rational>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            m[i][j] = value.at(g[j].inverse() * g[i]);
            m[j][i] = m[i][j];
        }
    return m;
}

bool gram_psd(int n, const Rational& qp, const Rational& qm) { return is_psd(gram_matrix(n, qp, qm)); }

}  // namespace hyperoct

#include "hyperoct/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hyperoct {

namespace {

long long char_A_rec(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t from);

std::mutex memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;

long long char_A_memo(const std::vector<int>& lam, const std::vector<int>& mu) {
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({lam, mu});
        if (it != memo.end()) return it->second;
    }
    long long v = char_A_rec(lam, mu, 0);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(lam, mu), v);
    return v;
}

long long char_A_rec(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t from) {
    if (from == mu.size()) return lam.empty() ? 1 : 0;
    if (from > 0) return char_A_memo(lam, std::vector<int>(mu.begin() + static_cast<long>(from), mu.end()));
    const int k = mu[0];
    const int l = static_cast<int>(lam.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lam[i] + (l - 1 - i);
    long long total = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[i] - k;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int between = 0;
        for (int j = 0; j < l; ++j)
            if (beta[j] > b && beta[j] < beta[i]) ++between;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> nl;
        for (int j = 0; j < l; ++j) {
            int part = nb[j] - (l - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = char_A_rec(nl, mu, 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace

long long char_A(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("char_A: size mismatch");
    return char_A_memo(lam.parts(), mu.parts());
}

long long char_B(const PartitionPair& lam, const CycleType& rho_in) {
    const int n = lam.first.size() + lam.second.size();
    if (rho_in.rho_plus.size() + rho_in.rho_minus.size() > n ||
        (rho_in.convention == CycleType::Convention::Padded &&
         rho_in.rho_plus.size() + rho_in.rho_minus.size() != n))
        throw std::invalid_argument("char_B: size mismatch");
    CycleType rho = rho_in.to_padded(n);
    std::vector<std::pair<int, bool>> parts;  // (length, negative)
    for (int p : rho.rho_plus.parts()) parts.emplace_back(p, false);
    for (int p : rho.rho_minus.parts()) parts.emplace_back(p, true);
    const std::size_t m = parts.size();
    long long total = 0;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::vector<int> xs, ys;
        int sgn = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1ul) {
                ys.push_back(parts[i].first);
                if (parts[i].second) sgn = -sgn;
            } else {
                xs.push_back(parts[i].first);
            }
        }
        Partition px(xs), py(ys);
        if (px.size() != lam.first.size() || py.size() != lam.second.size()) continue;
        total += sgn * char_A(lam.first, px) * char_A(lam.second, py);
    }
    return total;
}

std::vector<PartitionPair> irreps_B(int n) {
    std::vector<PartitionPair> out;
    for (const auto& t : padded_classes(n)) out.emplace_back(t.rho_plus, t.rho_minus);
    return out;
}

BivarPoly coefficient_B(const PartitionPair& lam) {
    const BivarPoly half_plus = (BivarPoly(1) + BivarPoly::qm()) * Rational(1, 2);
    const BivarPoly half_minus = (BivarPoly(1) - BivarPoly::qm()) * Rational(1, 2);
    BivarPoly r = 1;
    for (int c : lam.first.contents()) r *= BivarPoly::qp() * Rational(c) + half_plus;
    for (int c : lam.second.contents()) r *= BivarPoly::qp() * Rational(c) + half_minus;
    return r;
}

Rational coefficient_B(const PartitionPair& lam, const Rational& qp, const Rational& qm) {
    Rational r = 1;
    for (int c : lam.first.contents()) r *= qp * c + (1 + qm) / 2;
    for (int c : lam.second.contents()) r *= qp * c + (1 - qm) / 2;
    return r;
}

BivarPoly expansion_weight(const PartitionPair& lam) {
    Rational h(lam.first.hook_product() * lam.second.hook_product());
    return coefficient_B(lam) * (1 / h);
}

ExpansionReport verify_rozklad(int n) {
    ExpansionReport rep{n, {}, true};
    auto irreps = irreps_B(n);
    std::vector<BivarPoly> weights;
    for (const auto& l : irreps) weights.push_back(expansion_weight(l));
    for (const auto& rho : padded_classes(n)) {
        BivarPoly sum;
        for (std::size_t i = 0; i < irreps.size(); ++i) {
            long long chi = char_B(irreps[i], rho);
            if (chi) sum += weights[i] * Rational(static_cast<long>(chi));
        }
        BivarPoly target = phi(rho);
        bool ok = sum == target;
        rep.ok = rep.ok && ok;
        rep.rows.push_back({rho, std::move(sum), std::move(target), ok});
    }
    return rep;
}

Integer count_ssyt(const Partition& lam, int N) {
    const auto& p = lam.parts();
    std::vector<std::vector<int>> t;
    for (int r : p) t.emplace_back(r, 0);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < p[i]; ++j) cells.emplace_back(i, j);
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            t[i][j] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace hyperoct

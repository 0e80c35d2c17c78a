#include "hyperoct/pairpart.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

PointPartition::PointPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) throw std::invalid_argument("negative rank");
    for (auto& b : blocks_)
        if (b.first > b.second) std::swap(b.first, b.second);
    std::sort(blocks_.begin(), blocks_.end());
    mate_.assign(2 * static_cast<std::size_t>(n), 0);
    block_of_.assign(2 * static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(2 * static_cast<std::size_t>(n), false);
    auto claim = [&](int p, int m, std::size_t k) {
        if (p == 0 || std::abs(p) > n) throw std::invalid_argument("point outside [±n]");
        if (seen[index(p)]) throw std::invalid_argument("point used twice");
        seen[index(p)] = true;
        mate_[index(p)] = m;
        block_of_[index(p)] = k;
    };
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        auto [a, b] = blocks_[k];
        claim(a, b, k);
        if (a != b) claim(b, a, k);
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("blocks do not cover [±n]");
}

std::vector<int> PointPartition::points() const {
    std::vector<int> pts;
    for (int p = -n_; p <= n_; ++p)
        if (p) pts.push_back(p);
    return pts;
}

bool PointPartition::is_symmetric() const {
    for (int p : points())
        if (mate(-p) != -mate(p)) return false;
    return true;
}

bool PointPartition::is_noncrossing() const {
    for (const auto& x : blocks_)
        for (const auto& y : blocks_) {
            if (x.first == x.second || y.first == y.second) continue;
            if (x.first < y.first && y.first < x.second && x.second < y.second) return false;
        }
    return true;
}

std::string PointPartition::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k) s += ",";
        auto [a, b] = blocks_[k];
        s += a == b ? "{" + std::to_string(a) + "}" : "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    return s + "}";
}

SymPairPartition::SymPairPartition(int n, std::vector<Block> blocks) : PointPartition(n, std::move(blocks)) {
    if (!is_symmetric()) throw std::invalid_argument("partition is not bar-symmetric");
    for (const auto& b : this->blocks())
        if (b.first != b.second && b.first == -b.second) throw std::invalid_argument("pair equal to its bar-image");
}

bool SymPairPartition::is_perfect() const {
    return std::none_of(blocks().begin(), blocks().end(), [](const Block& b) { return b.first == b.second; });
}

bool SymPairPartition::admissible(const std::string& eps) const {
    if (static_cast<int>(eps.size()) != n()) return false;
    auto at = [&](int p) { return eps[static_cast<std::size_t>(std::abs(p) - 1)]; };
    for (const auto& [a, b] : blocks()) {
        if (a == b) {
            if (at(a) != '*') return false;
        } else if (!is_positive({a, b})) {
            if (at(b) != '*' || at(a) != '1') return false;
        }
    }
    return true;
}

std::vector<SymPairPartition> enumerate(int n, const std::optional<std::string>& eps, bool perfect) {
    if (eps && static_cast<int>(eps->size()) != n) throw std::invalid_argument("word length differs from n");
    std::vector<SymPairPartition> out;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::vector<Block> cur;
    std::function<void(int)> rec = [&](int i) {
        while (i <= n && used[static_cast<std::size_t>(i)]) ++i;
        if (i > n) {
            SymPairPartition p(n, cur);
            if (!eps || p.admissible(*eps)) out.push_back(std::move(p));
            return;
        }
        used[static_cast<std::size_t>(i)] = true;
        if (!perfect) {
            cur.push_back({i, i});
            cur.push_back({-i, -i});
            rec(i + 1);
            cur.resize(cur.size() - 2);
        }
        for (int j = i + 1; j <= n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            for (int s : {1, -1}) {
                cur.push_back({i, s * j});
                cur.push_back({-i, -s * j});
                rec(i + 1);
                cur.resize(cur.size() - 2);
            }
            used[static_cast<std::size_t>(j)] = false;
        }
        used[static_cast<std::size_t>(i)] = false;
    };
    rec(1);
    return out;
}

HatMatching hat(const SymPairPartition& p) {
    const int n = p.n();
    std::vector<Block> blocks;
    std::vector<int> stack;
    for (int x = -n; x <= -1; ++x) {
        int m = p.mate(x);
        bool up = m != x && x < m && !SymPairPartition::is_positive({x, m});
        if (up) {
            stack.push_back(x);
        } else if (!stack.empty()) {
            blocks.push_back({stack.back(), x});
            stack.pop_back();
        } else {
            blocks.push_back({x, x});
        }
    }
    if (!stack.empty()) throw std::logic_error("hat: unmatched up step");
    const std::size_t k = blocks.size();
    for (std::size_t i = 0; i < k; ++i) blocks.push_back({-blocks[i].second, -blocks[i].first});
    return HatMatching(n, blocks);
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool satisfies_hat_conditions(const SymPairPartition& p, const HatMatching& h) {
    if (h.n() != p.n() || !h.is_noncrossing() || !h.is_symmetric()) return false;
    std::vector<int> rp, rh, lp, lh;
    for (const auto& [a, b] : p.blocks()) {
        if (a == b) continue;
        if (SymPairPartition::is_positive({a, b})) rp.push_back(b);
        else lp.push_back(a);
    }
    for (const auto& [a, b] : h.blocks()) {
        if (a == b) continue;
        if ((a > 0) != (b > 0)) return false;
        if (a > 0) rh.push_back(b);
        else lh.push_back(a);
        for (int x = a + 1; x < b; ++x)
            if (x != 0 && h.is_singleton(x)) return false;
    }
    std::sort(rp.begin(), rp.end());
    std::sort(rh.begin(), rh.end());
    std::sort(lp.begin(), lp.end());
    std::sort(lh.begin(), lh.end());
    return rp == rh && lp == lh;
}

CycleDecomposition decompose(const SymPairPartition& p) {
    const HatMatching h = hat(p);
    const auto& blocks = p.blocks();
    DisjointSets ds(blocks.size());
    for (const auto& [u, v] : h.blocks())
        if (u != v) ds.join(p.block_of(u), p.block_of(v));

    std::map<std::size_t, std::vector<int>> comps;  // root → points, ascending
    for (int x : p.points()) comps[ds.find(p.block_of(x))].push_back(x);

    auto walk = [&](int start) {
        std::vector<int> seq{start};
        int x = start;
        bool pi_step = !p.is_singleton(start);
        while (true) {
            int y = pi_step ? p.mate(x) : h.mate(x);
            if (y == x || y == start) break;
            seq.push_back(y);
            x = y;
            pi_step = !pi_step;
        }
        return seq;
    };

    CycleDecomposition d;
    std::vector<bool> done(2 * static_cast<std::size_t>(p.n()), false);
    for (const auto& [root, pts] : comps) {
        if (done[p.index(pts.front())]) continue;
        const int x0 = pts.front();
        const bool bar_closed = std::find(pts.begin(), pts.end(), -x0) != pts.end();
        std::vector<int> mirror;
        if (!bar_closed) mirror = comps.at(ds.find(p.block_of(-x0)));
        for (int x : pts) done[p.index(x)] = true;
        for (int x : mirror) done[p.index(x)] = true;

        const bool closed = std::all_of(pts.begin(), pts.end(), [&](int x) { return !p.is_singleton(x) && !h.is_singleton(x); });
        const int pairs = static_cast<int>(pts.size()) / 2;
        if (closed) {
            // Report the half containing the point of smallest absolute value, positive first.
            const std::vector<int>* rep = &pts;
            if (!bar_closed) {
                auto key = [](const std::vector<int>& v) {
                    return *std::min_element(v.begin(), v.end(), [](int a, int b) {
                        return std::make_pair(std::abs(a), a < 0) < std::make_pair(std::abs(b), b < 0);
                    });
                };
                int ka = key(pts), kb = key(mirror);
                if (std::make_pair(std::abs(kb), kb < 0) < std::make_pair(std::abs(ka), ka < 0)) rep = &mirror;
            }
            Cycle c{bar_closed ? -1 : 1, bar_closed ? pairs / 2 : pairs, walk(rep->front())};
            d.stats.c += 1;
            if (bar_closed) d.stats.c_minus += 1;
            d.stats.l_c += c.length - 1;
            d.cycles.push_back(std::move(c));
            continue;
        }

        if (bar_closed) {
            d.regular = false;
            continue;
        }
        // Orient the chain from its hat-free end; the half ending in a positive singleton is σ⁺.
        auto chain_of = [&](const std::vector<int>& comp) {
            int start = 0;
            for (int x : comp)
                if (!p.is_singleton(x) && h.is_singleton(x)) {
                    start = x;
                    break;
                }
            if (start == 0) {
                for (int x : comp)
                    if (p.is_singleton(x)) {
                        start = x;
                        break;
                    }
            }
            return walk(start);
        };
        std::vector<int> a = chain_of(pts), b = chain_of(mirror);
        auto regular_chain = [&](const std::vector<int>& s) {
            if (s.size() == 1) return p.is_singleton(s[0]) && h.is_singleton(s[0]);
            return !p.is_singleton(s.front()) && h.is_singleton(s.front()) && p.is_singleton(s.back());
        };
        if (!regular_chain(a) || !regular_chain(b) || a.size() != b.size()) {
            d.regular = false;
            continue;
        }
        if (a.back() < 0) std::swap(a, b);
        SemiCycle sc;
        sc.length = static_cast<int>(a.size()) / 2 + 1;
        sc.l_plus = a.back();
        sc.r_plus = a.front();
        sc.l_minus = b.back();
        sc.r_minus = b.front();
        sc.plus_part = a;
        sc.minus_part = std::vector<int>(b.rbegin(), b.rend());
        d.stats.l_sc += sc.length - 1;
        d.semi_cycles.push_back(std::move(sc));
    }
    std::sort(d.semi_cycles.begin(), d.semi_cycles.end(),
              [](const SemiCycle& x, const SemiCycle& y) { return std::abs(x.r_plus) < std::abs(y.r_plus); });
    return d;
}

std::vector<std::pair<int, int>> semicycle_tensor_order(const CycleDecomposition& d) {
    std::vector<std::pair<int, int>> slots;
    for (const auto& s : d.semi_cycles) {
        slots.emplace_back(s.r_minus, s.l_minus);
        slots.emplace_back(s.r_plus, s.l_plus);
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

BivarPoly weight(const Stats& s) {
    return BivarPoly::monomial(static_cast<unsigned>(s.l_c + s.l_sc), static_cast<unsigned>(s.c_minus));
}

Rational dot(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

BivarPoly wick_moment(const std::vector<Vec>& vectors) {
    const int m = static_cast<int>(vectors.size());
    for (const auto& v : vectors)
        if (v.size() != vectors.front().size()) throw std::invalid_argument("dimension mismatch among vectors");
    if (m % 2) return {};
    BivarPoly total;
    for (const auto& p : enumerate(m, std::nullopt, true)) {
        Rational prod = 1;
        for (const auto& [a, b] : p.blocks()) prod *= dot(vectors[std::abs(a) - 1], vectors[std::abs(b) - 1]);
        if (prod == 0) continue;
        Stats s = decompose(p).stats;
        total += BivarPoly::monomial(static_cast<unsigned>(m / 2 - s.c), static_cast<unsigned>(s.c_minus), prod);
    }
    return total;
}

std::vector<Matching> enumerate_matchings(int n) {
    std::vector<Matching> out;
    std::vector<bool> used(2 * static_cast<std::size_t>(n) + 1, false);
    std::vector<std::pair<int, int>> cur;
    std::function<void(int)> rec = [&](int i) {
        while (i <= 2 * n && used[static_cast<std::size_t>(i)]) ++i;
        if (i > 2 * n) {
            out.push_back({n, cur});
            return;
        }
        used[static_cast<std::size_t>(i)] = true;
        for (int j = i + 1; j <= 2 * n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            cur.emplace_back(i, j);
            rec(i + 1);
            cur.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
        used[static_cast<std::size_t>(i)] = false;
    };
    rec(1);
    return out;
}

Matching project(const SymPairPartition& p) {
    if (!p.is_perfect() || p.n() % 2) throw std::invalid_argument("project needs a perfect partition");
    Matching m{p.n() / 2, {}};
    for (const auto& [a, b] : p.blocks()) {
        int x = std::abs(a), y = std::abs(b);
        if (x > y) std::swap(x, y);
        if (std::find(m.pairs.begin(), m.pairs.end(), std::make_pair(x, y)) == m.pairs.end()) m.pairs.emplace_back(x, y);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

Matching left_aligned_noncrossing(const Matching& m) {
    std::vector<bool> opener(2 * static_cast<std::size_t>(m.n) + 1, false);
    for (const auto& pr : m.pairs) opener[static_cast<std::size_t>(pr.first)] = true;
    Matching out{m.n, {}};
    std::vector<int> stack;
    for (int i = 1; i <= 2 * m.n; ++i) {
        if (opener[static_cast<std::size_t>(i)]) {
            stack.push_back(i);
        } else {
            out.pairs.emplace_back(stack.back(), i);
            stack.pop_back();
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

int matching_cycles(const Matching& m) {
    Matching h = left_aligned_noncrossing(m);
    const std::size_t size = 2 * static_cast<std::size_t>(m.n) + 1;
    std::vector<int> ma(size), mb(size);
    for (auto [i, j] : m.pairs) ma[static_cast<std::size_t>(i)] = j, ma[static_cast<std::size_t>(j)] = i;
    for (auto [i, j] : h.pairs) mb[static_cast<std::size_t>(i)] = j, mb[static_cast<std::size_t>(j)] = i;
    std::vector<bool> seen(size, false);
    int cycles = 0;
    for (int s = 1; s <= 2 * m.n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++cycles;
        int x = s;
        do {
            seen[static_cast<std::size_t>(x)] = true;
            int y = ma[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(y)] = true;
            x = mb[static_cast<std::size_t>(y)];
        } while (x != s);
    }
    return cycles;
}

std::vector<SymPairPartition> fiber(const Matching& m) {
    std::vector<SymPairPartition> out;
    const std::size_t k = m.pairs.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            auto [a, b] = m.pairs[i];
            int s = (mask >> i & 1ul) ? -1 : 1;
            blocks.push_back({a, s * b});
            blocks.push_back({-a, -s * b});
        }
        out.emplace_back(2 * m.n, blocks);
    }
    return out;
}

bool fiber_identity(const Matching& m) {
    BivarPoly lhs;
    for (const auto& p : fiber(m)) {
        Stats s = decompose(p).stats;
        lhs += BivarPoly::monomial(static_cast<unsigned>(m.n - s.c), static_cast<unsigned>(s.c_minus));
    }
    const int c = matching_cycles(m);
    BivarPoly rhs = (BivarPoly(1) + BivarPoly::qm()).pow(static_cast<unsigned>(c)) *
                    (BivarPoly::qp() * Rational(2)).pow(static_cast<unsigned>(m.n - c));
    return lhs == rhs;
}

DrakeStats drake_stats(const Matching& m) {
    DrakeStats s{0, 0};
    for (auto [i, j] : m.pairs) {
        bool nested = false, crossed = false;
        for (auto [a, b] : m.pairs) {
            if (a < i && j < b) nested = true;
            if (i < a && a < j && j < b) crossed = true;
        }
        if (!nested) ++s.non_nested;
        if (!crossed) ++s.no_right_crossing;
    }
    return s;
}

}  // namespace hyperoct

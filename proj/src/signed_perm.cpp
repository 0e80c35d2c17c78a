#include "hyperoct/signed_perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

SignedPermutation::SignedPermutation(std::vector<int> img) : img_(std::move(img)) {
    const int n = rank();
    std::vector<bool> seen(n + 1, false);
    for (int v : img_) {
        int a = std::abs(v);
        if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
        seen[a] = true;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return SignedPermutation(img);
}

SignedPermutation SignedPermutation::from_signed_model(const std::vector<int>& g, const std::vector<int>& tau) {
    if (g.size() != tau.size()) throw std::invalid_argument("signed model: length mismatch");
    std::vector<int> img(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
        int t = tau[k];
        if (t < 1 || t > static_cast<int>(tau.size())) throw std::invalid_argument("signed model: bad permutation");
        if (g[t - 1] != 1 && g[t - 1] != -1) throw std::invalid_argument("signed model: signs must be ±1");
        img[k] = g[t - 1] * t;
    }
    return SignedPermutation(img);
}

SignedPermutation SignedPermutation::generator(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
    auto img = identity(n).img_;
    if (i == 0) img[0] = -1;
    else std::swap(img[i - 1], img[i]);
    return SignedPermutation(img);
}

std::pair<std::vector<int>, std::vector<int>> SignedPermutation::to_signed_model() const {
    std::vector<int> g(img_.size()), tau(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) {
        tau[k] = std::abs(img_[k]);
        g[tau[k] - 1] = img_[k] > 0 ? 1 : -1;
    }
    return {g, tau};
}

std::vector<int> SignedPermutation::underlying() const {
    std::vector<int> tau(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) tau[k] = std::abs(img_[k]);
    return tau;
}

int SignedPermutation::underlying_sign() const {
    auto tau = underlying();
    std::vector<bool> seen(tau.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = tau[j] - 1) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

int SignedPermutation::negative_count() const {
    return static_cast<int>(std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t k = 0; k < img_.size(); ++k) {
        int v = img_[k];
        int pos = static_cast<int>(k) + 1;
        inv[std::abs(v) - 1] = v > 0 ? pos : -pos;
    }
    return SignedPermutation(inv);
}

SignedPermutation SignedPermutation::restrict_to(int m) const {
    for (int k = m + 1; k <= rank(); ++k)
        if (img_[k - 1] != k) throw std::invalid_argument("restrict_to: element moves a point above m");
    return SignedPermutation(std::vector<int>(img_.begin(), img_.begin() + m));
}

SignedPermutation SignedPermutation::extend_to(int m) const {
    if (m < rank()) throw std::invalid_argument("extend_to: smaller rank");
    auto img = img_;
    for (int k = rank() + 1; k <= m; ++k) img.push_back(k);
    return SignedPermutation(img);
}

std::vector<std::vector<int>> SignedPermutation::cycles() const {
    const int n = rank();
    std::vector<bool> seen(2 * n + 1, false);
    auto idx = [n](int x) { return x + n; };
    std::vector<std::vector<int>> out;
    std::vector<int> starts;
    for (int i = 1; i <= n; ++i) starts.push_back(i);
    for (int i = 1; i <= n; ++i) starts.push_back(-i);
    for (int s : starts) {
        if (seen[idx(s)]) continue;
        std::vector<int> c;
        for (int x = s; !seen[idx(x)]; x = (*this)(x)) {
            seen[idx(x)] = true;
            c.push_back(x);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string SignedPermutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i]);
    }
    return s + "]";
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
    std::vector<int> img(a.rank());
    for (int i = 1; i <= a.rank(); ++i) img[i - 1] = a(b(i));
    return SignedPermutation(img);
}

Reflection Reflection::make_long(int a, int b) {
    if (a == 0 || b == 0 || std::abs(a) == std::abs(b)) throw std::invalid_argument("long reflection needs |a| != |b|");
    if (std::abs(a) > std::abs(b)) std::swap(a, b);
    if (b < 0) {
        a = -a;
        b = -b;
    }
    return {Kind::Long, a, b};
}

Reflection Reflection::make_short(int i) {
    if (i <= 0) throw std::invalid_argument("short reflection index must be positive");
    return {Kind::Short, i, i};
}

SignedPermutation Reflection::to_permutation(int n) const {
    auto img = SignedPermutation::identity(n).word();
    auto set = [&](int x, int y) {
        if (x > 0) img[x - 1] = y;
        else img[-x - 1] = -y;
    };
    if (kind == Kind::Short) {
        set(a, -a);
    } else {
        set(a, b);
        set(b, a);
    }
    return SignedPermutation(img);
}

std::vector<int> Reflection::support() const {
    if (kind == Kind::Short) return {a, -a};
    return {a, b, -a, -b};
}

std::string Reflection::to_string() const {
    if (kind == Kind::Short) return "(" + std::to_string(-a) + " " + std::to_string(a) + ")";
    return "(" + std::to_string(a) + " " + std::to_string(b) + ")(" + std::to_string(-a) + " " + std::to_string(-b) + ")";
}

std::vector<Reflection> all_reflections(int n) {
    std::vector<Reflection> out;
    for (int b = 2; b <= n; ++b) {
        for (int a = -(b - 1); a <= b - 1; ++a)
            if (a != 0) out.push_back(Reflection::make_long(a, b));
    }
    for (int i = 1; i <= n; ++i) out.push_back(Reflection::make_short(i));
    return out;
}

CycleType CycleType::to_reduced() const {
    return {rho_plus.without_ones(), rho_minus, Convention::Reduced};
}

CycleType CycleType::to_padded(int n) const {
    int used = rho_plus.size() + rho_minus.size();
    if (convention == Convention::Padded && used != n) throw std::invalid_argument("padded cycle type has wrong size");
    if (used > n) throw std::invalid_argument("cycle type larger than rank");
    return {rho_plus.padded_to(n - rho_minus.size()), rho_minus, Convention::Padded};
}

std::string CycleType::to_string() const {
    return "(" + rho_plus.to_string() + "," + rho_minus.to_string() + ")";
}

CycleType cycle_type(const SignedPermutation& s, CycleType::Convention conv) {
    const int n = s.rank();
    std::vector<bool> seen(n + 1, false);
    std::vector<int> plus, minus;
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        int k = 0;
        for (int x = i;;) {
            x = s(x);
            ++k;
            seen[std::abs(x)] = true;
            if (x == i) {
                plus.push_back(k);
                break;
            }
            if (x == -i) {
                minus.push_back(k);
                break;
            }
        }
    }
    CycleType t{Partition(plus), Partition(minus), CycleType::Convention::Padded};
    return conv == CycleType::Convention::Padded ? t : t.to_reduced();
}

ReflectionLengths reflection_lengths(const CycleType& t) {
    return {t.rho_plus.norm() + t.rho_minus.norm(), t.rho_minus.length()};
}

ReflectionLengths reflection_lengths(const SignedPermutation& s) { return reflection_lengths(cycle_type(s)); }

BivarPoly phi(const CycleType& t) {
    auto l = reflection_lengths(t);
    return BivarPoly::monomial(static_cast<unsigned>(l.ell_plus), static_cast<unsigned>(l.ell_minus));
}

Rational phi(const CycleType& t, const Rational& qp, const Rational& qm) {
    auto l = reflection_lengths(t);
    return pow(qp, static_cast<unsigned>(l.ell_plus)) * pow(qm, static_cast<unsigned>(l.ell_minus));
}

std::vector<SignedPermutation> enumerate_group(int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 1);
    do {
        for (unsigned m = 0; m < (1u << n); ++m) {
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[i] = ((m >> (n - 1 - i)) & 1u) ? -tau[i] : tau[i];
            out.emplace_back(img);
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

Integer group_order(int n) {
    Integer f = 1;
    for (int k = 1; k <= n; ++k) f *= 2 * k;
    return f;
}

Integer class_size(const CycleType& t, int n) {
    CycleType p = t.to_padded(n);
    Integer z = 1;
    for (int j = 1; j <= n; ++j) {
        int mp = p.rho_plus.multiplicity(j), mm = p.rho_minus.multiplicity(j);
        for (int r = 0; r < mp + mm; ++r) z *= 2 * j;
        for (int r = 2; r <= mp; ++r) z *= r;
        for (int r = 2; r <= mm; ++r) z *= r;
    }
    return group_order(n) / z;
}

std::vector<CycleType> padded_classes(int n) {
    std::vector<CycleType> out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : Partition::all(k))
            for (const auto& b : Partition::all(n - k)) out.push_back({a, b, CycleType::Convention::Padded});
    return out;
}

std::vector<std::vector<SignedPermutation>> conjugacy_classes_bruteforce(int n) {
    auto g = enumerate_group(n);
    std::map<SignedPermutation, std::size_t> index;
    for (std::size_t i = 0; i < g.size(); ++i) index.emplace(g[i], i);
    std::vector<bool> done(g.size(), false);
    std::vector<std::vector<SignedPermutation>> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> orbit;
        for (const auto& h : g) {
            std::size_t j = index.at(h * g[i] * h.inverse());
            if (!done[j]) {
                done[j] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        std::vector<SignedPermutation> cls;
        for (auto j : orbit) cls.push_back(g[j]);
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace hyperoct

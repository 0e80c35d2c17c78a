#pragma once

#include "hyperoct/pairpart.hpp"
#include "hyperoct/signed_perm.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const BivarPoly& p) { return p.is_zero(); }

/// Values of q+ and q− in the scalar ring S.
template <class S>
struct Deformation {
    S qp;
    S qm;
};

inline Deformation<BivarPoly> symbolic() { return {BivarPoly::qp(), BivarPoly::qm()}; }
inline Deformation<Rational> at(const Rational& qp, const Rational& qm) { return {qp, qm}; }

template <class S>
S power(const S& x, int e) {
    S r(Rational(1));
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/// Position of slot p ∈ [±n] in a tuple ordered −n, …, −1, 1, …, n.
inline std::size_t slot(int p, int n) { return static_cast<std::size_t>(p < 0 ? p + n : p + n - 1); }

/// Graded vector of the Fock space; level n holds coefficients of tuples in {0..d−1}^{2n}.
template <class S>
class FockVector {
public:
    using Tuple = std::vector<int>;
    using Level = std::map<Tuple, S>;

    explicit FockVector(int d) : d_(d) {
        if (d < 1) throw std::invalid_argument("dimension must be positive");
    }

    static FockVector vacuum(int d) {
        FockVector v(d);
        v.add(Tuple{}, S(Rational(1)));
        return v;
    }
    static FockVector basis(int d, const Tuple& t) {
        FockVector v(d);
        v.add(t, S(Rational(1)));
        return v;
    }
    /// x_{−n} ⊗ … ⊗ x_{−1} ⊗ x_1 ⊗ … ⊗ x_n, vectors given in that slot order.
    static FockVector tensor(int d, const std::vector<Vec>& slots, const S& coeff = S(Rational(1))) {
        if (slots.size() % 2) throw std::invalid_argument("tensor needs an even number of slots");
        FockVector v(d);
        Tuple t(slots.size());
        expand(slots, 0, t, coeff, v);
        return v;
    }

    int dim() const { return d_; }
    const std::map<int, Level>& levels() const { return levels_; }
    Level level(int n) const {
        auto it = levels_.find(n);
        return it == levels_.end() ? Level{} : it->second;
    }
    S coefficient(const Tuple& t) const {
        auto it = levels_.find(static_cast<int>(t.size() / 2));
        if (it == levels_.end()) return S();
        auto jt = it->second.find(t);
        return jt == it->second.end() ? S() : jt->second;
    }
    bool is_zero() const { return levels_.empty(); }

    void add(const Tuple& t, const S& c) {
        if (hyperoct::is_zero(c)) return;
        if (t.size() % 2) throw std::invalid_argument("tuple length must be even");
        for (int j : t)
            if (j < 0 || j >= d_) throw std::invalid_argument("tuple index out of range");
        const int n = static_cast<int>(t.size() / 2);
        auto& lvl = levels_[n];
        auto [it, inserted] = lvl.emplace(t, c);
        if (!inserted) {
            it->second = it->second + c;
            if (hyperoct::is_zero(it->second)) lvl.erase(it);
        }
        if (lvl.empty()) levels_.erase(n);
    }

    FockVector& operator+=(const FockVector& o) {
        check_dim(o);
        for (const auto& [n, lvl] : o.levels_)
            for (const auto& [t, c] : lvl) add(t, c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a += b.scaled(S(Rational(-1))); }
    FockVector scaled(const S& c) const {
        FockVector out(d_);
        for (const auto& [n, lvl] : levels_)
            for (const auto& [t, v] : lvl) out.add(t, v * c);
        return out;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.d_ == b.d_ && a.levels_ == b.levels_;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    void check_dim(const FockVector& o) const {
        if (o.d_ != d_) throw std::invalid_argument("dimension mismatch");
    }

private:
    static void expand(const std::vector<Vec>& slots, std::size_t k, Tuple& t, const S& c, FockVector& out) {
        if (k == slots.size()) {
            out.add(t, c);
            return;
        }
        if (static_cast<int>(slots[k].size()) != out.d_) throw std::invalid_argument("vector dimension mismatch");
        for (int j = 0; j < out.d_; ++j) {
            const Rational& a = slots[k][static_cast<std::size_t>(j)];
            if (a == 0) continue;
            t[k] = j;
            expand(slots, k + 1, t, c * S(a), out);
        }
    }

    int d_;
    std::map<int, Level> levels_;
};

/// (σ·t)_i = t_{σ(i)} on a level-n tuple.
inline std::vector<int> permute_tuple(const SignedPermutation& s, const std::vector<int>& t) {
    const int n = s.rank();
    std::vector<int> out(t.size());
    for (int i = -n; i <= n; ++i)
        if (i) out[slot(i, n)] = t[slot(s(i), n)];
    return out;
}

/// Σ c_k σ_k applied to a FockVector; every σ_k must have the rank of the levels it meets.
template <class S>
FockVector<S> apply_combination(const std::vector<std::pair<SignedPermutation, S>>& comb, const FockVector<S>& v) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels())
        for (const auto& [t, c] : lvl)
            for (const auto& [s, w] : comb) {
                if (s.rank() != n) throw std::invalid_argument("permutation rank differs from level");
                out.add(permute_tuple(s, t), c * w);
            }
    return out;
}

template <class S>
S phi_value(const SignedPermutation& s, const Deformation<S>& q) {
    auto l = reflection_lengths(s);
    return power(q.qp, l.ell_plus) * power(q.qm, l.ell_minus);
}

/// P^{(n)} = Σ_{σ∈B(n)} φ(σ)σ, or the same sum over B(m) ⊂ B(n) when inner_rank = m < n.
template <class S>
std::vector<std::pair<SignedPermutation, S>> symmetrizer(int n, const Deformation<S>& q, int inner_rank = -1) {
    if (inner_rank < 0) inner_rank = n;
    std::vector<std::pair<SignedPermutation, S>> comb;
    if (n == 0) {
        comb.emplace_back(SignedPermutation(std::vector<int>{}), S(Rational(1)));
        return comb;
    }
    if (inner_rank == 0) {
        comb.emplace_back(SignedPermutation::identity(n), S(Rational(1)));
        return comb;
    }
    for (const auto& s : enumerate_group(inner_rank)) comb.emplace_back(s.extend_to(n), phi_value(s, q));
    return comb;
}

/// R^{(n)} = id + q− (n̄ n) + q+ Σ_{j∈[±(n−1)]} (j n)(j̄ n̄).
template <class S>
std::vector<std::pair<SignedPermutation, S>> r_operator(int n, const Deformation<S>& q) {
    std::vector<std::pair<SignedPermutation, S>> comb;
    if (n == 0) {
        comb.emplace_back(SignedPermutation(std::vector<int>{}), S(Rational(1)));
        return comb;
    }
    comb.emplace_back(SignedPermutation::identity(n), S(Rational(1)));
    comb.emplace_back(Reflection::make_short(n).to_permutation(n), q.qm);
    for (int j = -(n - 1); j <= n - 1; ++j)
        if (j) comb.emplace_back(Reflection::make_long(j, n).to_permutation(n), q.qp);
    return comb;
}

template <class S>
FockVector<S> apply_symmetrizer(const FockVector<S>& v, const Deformation<S>& q) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels()) {
        FockVector<S> part(v.dim());
        for (const auto& [t, c] : lvl) part.add(t, c);
        out += apply_combination(symmetrizer(n, q), part);
    }
    return out;
}

template <class S>
FockVector<S> apply_r(const FockVector<S>& v, const Deformation<S>& q) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels()) {
        FockVector<S> part(v.dim());
        for (const auto& [t, c] : lvl) part.add(t, c);
        out += apply_combination(r_operator(n, q), part);
    }
    return out;
}

/// ⟨u, v⟩_0 on the undeformed tensor inner product (real scalars).
template <class S>
S plain_inner(const FockVector<S>& u, const FockVector<S>& v) {
    u.check_dim(v);
    S s;
    for (const auto& [n, lvl] : u.levels()) {
        auto other = v.level(n);
        for (const auto& [t, c] : lvl) {
            auto it = other.find(t);
            if (it != other.end()) s = s + c * it->second;
        }
    }
    return s;
}

/// ⟨u, P v⟩_0.
template <class S>
S deformed_inner(const FockVector<S>& u, const FockVector<S>& v, const Deformation<S>& q) {
    return plain_inner(u, apply_symmetrizer(v, q));
}

/// b*(x⊗y): x enters at slot −(n+1), y at slot n+1.
template <class S>
FockVector<S> create(const Vec& x, const Vec& y, const FockVector<S>& v) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels())
        for (const auto& [t, c] : lvl)
            for (int a = 0; a < v.dim(); ++a) {
                if (x[static_cast<std::size_t>(a)] == 0) continue;
                for (int b = 0; b < v.dim(); ++b) {
                    if (y[static_cast<std::size_t>(b)] == 0) continue;
                    std::vector<int> nt;
                    nt.reserve(t.size() + 2);
                    nt.push_back(a);
                    nt.insert(nt.end(), t.begin(), t.end());
                    nt.push_back(b);
                    out.add(nt, c * S(x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)]));
                }
            }
    return out;
}

/// Free annihilator b(x⊗y): contracts x with slot n̄ and y with slot n; zero on the vacuum.
template <class S>
FockVector<S> annihilate_free(const Vec& x, const Vec& y, const FockVector<S>& v) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels()) {
        if (n == 0) continue;
        for (const auto& [t, c] : lvl) {
            Rational w = x[static_cast<std::size_t>(t.front())] * y[static_cast<std::size_t>(t.back())];
            if (w == 0) continue;
            out.add(std::vector<int>(t.begin() + 1, t.end() - 1), c * S(w));
        }
    }
    return out;
}

/// b_{q,s}(x⊗y) = b(x⊗y) ∘ R^{(n)}.
template <class S>
FockVector<S> annihilate(const Vec& x, const Vec& y, const FockVector<S>& v, const Deformation<S>& q) {
    return annihilate_free(x, y, apply_r(v, q));
}

/// b_{q,s}(x⊗y) as α₀ + β_{q+} + γ_{q−}, written slot by slot without permutations.
template <class S>
FockVector<S> annihilate_direct(const Vec& x, const Vec& y, const FockVector<S>& v, const Deformation<S>& q) {
    FockVector<S> out(v.dim());
    auto X = [&](int j) { return x[static_cast<std::size_t>(j)]; };
    auto Y = [&](int j) { return y[static_cast<std::size_t>(j)]; };
    for (const auto& [n, lvl] : v.levels()) {
        if (n == 0) continue;
        for (const auto& [t, c] : lvl) {
            const int tn = t[slot(n, n)], tnb = t[slot(-n, n)];
            std::vector<int> inner(t.begin() + 1, t.end() - 1);
            out.add(inner, c * S(X(tnb) * Y(tn)));
            out.add(inner, c * q.qm * S(X(tn) * Y(tnb)));
            for (int i = -(n - 1); i <= n - 1; ++i) {
                if (!i) continue;
                Rational w = X(t[slot(-i, n)]) * Y(t[slot(i, n)]);
                if (w == 0) continue;
                std::vector<int> u = t;
                u[slot(i, n)] = tn;
                u[slot(-i, n)] = tnb;
                out.add(std::vector<int>(u.begin() + 1, u.end() - 1), c * q.qp * S(w));
            }
        }
    }
    return out;
}

/// Γ_{q+}(|ξ⟩⟨x| ⊗ |η⟩⟨y|): for each i, either (ξ⟨x,·⟩ at ī, η⟨y,·⟩ at i) or (ξ⟨x,·⟩ at i, η⟨y,·⟩ at ī).
template <class S>
FockVector<S> second_quantization(const Vec& xi, const Vec& x, const Vec& eta, const Vec& y, const FockVector<S>& v,
                                  const Deformation<S>& q) {
    FockVector<S> out(v.dim());
    for (const auto& [n, lvl] : v.levels()) {
        if (n == 0) continue;
        for (const auto& [t, c] : lvl)
            for (int i = 1; i <= n; ++i)
                for (int orient : {1, -1}) {
                    const std::size_t sa = slot(-orient * i, n), sb = slot(orient * i, n);
                    Rational w = x[static_cast<std::size_t>(t[sa])] * y[static_cast<std::size_t>(t[sb])];
                    if (w == 0) continue;
                    for (int a = 0; a < v.dim(); ++a) {
                        if (xi[static_cast<std::size_t>(a)] == 0) continue;
                        for (int b = 0; b < v.dim(); ++b) {
                            if (eta[static_cast<std::size_t>(b)] == 0) continue;
                            std::vector<int> u = t;
                            u[sa] = a;
                            u[sb] = b;
                            out.add(u, c * q.qp * S(w * xi[static_cast<std::size_t>(a)] * eta[static_cast<std::size_t>(b)]));
                        }
                    }
                }
    }
    return out;
}

/// Right-hand side of the commutation relation applied to v.
template <class S>
FockVector<S> commutation_rhs(const Vec& x, const Vec& y, const Vec& xi, const Vec& eta, const FockVector<S>& v,
                              const Deformation<S>& q) {
    S id = S(dot(x, xi) * dot(y, eta)) + q.qm * S(dot(x, eta) * dot(y, xi));
    return v.scaled(id) + second_quantization(xi, x, eta, y, v, q);
}

/// One operator per position: '*' creates, '1' annihilates; pairs[k] = (x_{k̄}, x_k). Applied for k = 1, 2, ….
template <class S>
FockVector<S> apply_word(const std::string& eps, const std::vector<std::pair<Vec, Vec>>& pairs, const Deformation<S>& q) {
    if (eps.size() != pairs.size()) throw std::invalid_argument("word and vectors differ in length");
    const int d = static_cast<int>(pairs.empty() ? 1 : pairs.front().first.size());
    FockVector<S> v = FockVector<S>::vacuum(d);
    for (std::size_t k = 0; k < eps.size(); ++k) {
        if (eps[k] == '*') v = create(pairs[k].first, pairs[k].second, v);
        else if (eps[k] == '1') v = annihilate(pairs[k].first, pairs[k].second, v, q);
        else throw std::invalid_argument("word letters must be '1' or '*'");
    }
    return v;
}

/// Sum over admissible partitions of q−^{c−} q+^{l_c+l_sc} Π⟨x_i, x_j⟩ times the semi-cycle tensor.
template <class S>
FockVector<S> combinatorial_word(const std::string& eps, const std::vector<std::pair<Vec, Vec>>& pairs,
                                 const Deformation<S>& q) {
    const int n = static_cast<int>(eps.size());
    if (pairs.size() != eps.size()) throw std::invalid_argument("word and vectors differ in length");
    const int d = static_cast<int>(pairs.empty() ? 1 : pairs.front().first.size());
    auto vec = [&](int p) -> const Vec& {
        const auto& pr = pairs[static_cast<std::size_t>(std::abs(p) - 1)];
        return p < 0 ? pr.first : pr.second;
    };
    FockVector<S> out(d);
    for (const auto& p : enumerate(n, eps)) {
        Rational prod = 1;
        for (const auto& [a, b] : p.blocks())
            if (a != b) prod *= dot(vec(a), vec(b));
        if (prod == 0) continue;
        CycleDecomposition dec = decompose(p);
        if (!dec.regular) throw std::logic_error("irregular semi-cycle in admissible partition");
        S w = power(q.qm, dec.stats.c_minus) * power(q.qp, dec.stats.l_c + dec.stats.l_sc) * S(prod);
        std::vector<Vec> slots;
        for (const auto& [key, label] : semicycle_tensor_order(dec)) slots.push_back(vec(label));
        out += FockVector<S>::tensor(d, slots, w);
    }
    return out;
}

/// G(x) = b_{q,s}(x⊗x) + b*(x⊗x).
template <class S>
FockVector<S> apply_gaussian(const Vec& x, const FockVector<S>& v, const Deformation<S>& q) {
    return annihilate(x, x, v, q) + create(x, x, v);
}

/// ⟨Ω⊗Ω, G(x)^{2n} Ω⊗Ω⟩_{q,s} for a unit vector x in dimension one, by the operators themselves.
template <class S>
S gaussian_moment_operator(int two_n, const Deformation<S>& q) {
    if (two_n % 2) return S();
    const Vec x{Rational(1)};
    FockVector<S> v = FockVector<S>::vacuum(1);
    for (int k = 0; k < two_n; ++k) v = apply_gaussian(x, v, q);
    return v.coefficient({});
}

inline BivarPoly gaussian_moment_operator(int two_n) { return gaussian_moment_operator(two_n, symbolic()); }

struct ExclusionReport {
    int M;
    int N;
    Rational q_plus;
    Rational q_minus;
    std::vector<Rational> norms;    // level n = 1..M+1, by the deformed inner product
    std::vector<Rational> product;  // Π_{k≤n} (1 + 2(k−1)q+ + q−)
    bool ok;
};

ExclusionReport exclusion_check(int M, int N);

}  // namespace hyperoct

#pragma once

#include "hyperoct/partition.hpp"
#include "hyperoct/poly.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperoct {

/// Element of B(n) stored as the images σ(1), …, σ(n); σ(−i) = −σ(i).
class SignedPermutation {
public:
    SignedPermutation() = default;
    /// Throws std::invalid_argument unless |img| is a permutation of 1..n.
    explicit SignedPermutation(std::vector<int> img);

    static SignedPermutation identity(int n);
    /// Signed model (g_1, …, g_n; τ): σ(k) = g_{τ(k)} τ(k). `tau` is one-line notation.
    static SignedPermutation from_signed_model(const std::vector<int>& g, const std::vector<int>& tau);
    /// Generators s_0 = (1̄ 1), s_i = (i i+1)(ī ī+1̄).
    static SignedPermutation generator(int n, int i);

    int rank() const { return static_cast<int>(img_.size()); }
    const std::vector<int>& word() const { return img_; }
    /// σ(i) for i ∈ [±n].
    int operator()(int i) const { return i > 0 ? img_[i - 1] : -img_[-i - 1]; }

    std::pair<std::vector<int>, std::vector<int>> to_signed_model() const;
    std::vector<int> underlying() const;
    int underlying_sign() const;
    int negative_count() const;

    SignedPermutation inverse() const;
    /// Restriction to 1..m, assuming σ fixes every k > m.
    SignedPermutation restrict_to(int m) const;
    /// Same action on 1..n, fixing n+1..m.
    SignedPermutation extend_to(int m) const;

    /// Cycles on [±n]; each cycle starts at its smallest positive element when it has one.
    std::vector<std::vector<int>> cycles() const;

    std::string to_string() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> img_;
};

/// a∘b: apply b first.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) { return compose(a, b); }

struct Reflection {
    enum class Kind { Long, Short };
    Kind kind;
    /// Long: the pair {a, b} normalized so that |a| < |b| and b > 0. Short: a = b = i.
    int a;
    int b;

    static Reflection make_long(int a, int b);
    static Reflection make_short(int i);
    SignedPermutation to_permutation(int n) const;
    std::vector<int> support() const;
    std::string to_string() const;
    friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// All n² reflections: long ones first, ordered by (|b|, a), then short ones.
std::vector<Reflection> all_reflections(int n);

struct CycleType {
    enum class Convention { Reduced, Padded };
    Partition rho_plus;
    Partition rho_minus;
    Convention convention = Convention::Reduced;

    CycleType to_reduced() const;
    CycleType to_padded(int n) const;
    std::string to_string() const;
    friend bool operator==(const CycleType& x, const CycleType& y) {
        return x.rho_plus == y.rho_plus && x.rho_minus == y.rho_minus && x.convention == y.convention;
    }
    friend bool operator<(const CycleType& x, const CycleType& y) {
        return std::tie(x.rho_plus, x.rho_minus) < std::tie(y.rho_plus, y.rho_minus);
    }
};

CycleType cycle_type(const SignedPermutation& s, CycleType::Convention conv = CycleType::Convention::Reduced);

struct ReflectionLengths {
    int ell_plus;
    int ell_minus;
    int total() const { return ell_plus + ell_minus; }
};
ReflectionLengths reflection_lengths(const CycleType& t);
ReflectionLengths reflection_lengths(const SignedPermutation& s);

/// q+^{‖ρ+‖+‖ρ−‖} q−^{ℓ(ρ−)} with symbolic parameters.
BivarPoly phi(const CycleType& t);
/// Same at fixed rational parameters, 0^0 = 1.
Rational phi(const CycleType& t, const Rational& qp, const Rational& qm);

/// 2^n n! elements ordered by (unsigned one-line permutation, sign vector with + before −).
std::vector<SignedPermutation> enumerate_group(int n);
Integer group_order(int n);
/// Class size from the centralizer order Π_j (2j)^{m_j(ρ+)+m_j(ρ−)} m_j(ρ+)! m_j(ρ−)!.
Integer class_size(const CycleType& t, int n);
/// Padded cycle types of B(n), ordered by |ρ+| descending then partition order.
std::vector<CycleType> padded_classes(int n);

/// Conjugacy classes of B(n) by brute-force orbits; each class sorted in enumeration order.
std::vector<std::vector<SignedPermutation>> conjugacy_classes_bruteforce(int n);

}  // namespace hyperoct

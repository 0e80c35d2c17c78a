#pragma once

#include "hyperoct/signed_perm.hpp"

#include <cstdint>
#include <vector>

namespace hyperoct {

struct RepConfig {
    int M = 1;
    int N = 1;
    int eps = 1;
    int n = 1;
    /// Largest admissible (M+N)^n.
    std::size_t max_dimension = 4096;

    std::size_t dimension() const;
    Rational q_plus() const { return frac(eps, M + N); }
    Rational q_minus() const { return frac(M - N, M + N); }
    /// Throws std::invalid_argument on bad parameters or an exceeded budget.
    void validate() const;
};

/// Signed permutation matrix: column e maps to sign[e] · basis vector target[e].
/// Basis index e encodes (j_1, …, j_n) in base M+N with j_1 most significant;
/// digits < M are e⁺ vectors, the rest e⁻.
struct RepMatrix {
    std::vector<std::size_t> target;
    std::vector<int> sign;

    std::size_t dimension() const { return target.size(); }
    long long trace() const;
    /// Dense view, row-major: entry (target[e], e) = sign[e].
    std::vector<std::vector<int>> dense() const;
    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

/// A·B (apply B first).
RepMatrix multiply(const RepMatrix& a, const RepMatrix& b);
RepMatrix identity_matrix(std::size_t dim);

RepMatrix rep_matrix(const SignedPermutation& g, const RepConfig& cfg);

/// ε^{‖ρ+‖+‖ρ−‖} (M+N)^{n−‖ρ+‖−|ρ−|} (M−N)^{ℓ(ρ−)}.
Integer trace_formula(const CycleType& t, const RepConfig& cfg);

/// ω(ab) = ω(a)ω(b) on all generator pairs and `random_pairs` seeded random pairs; also (s₀s₁)⁴ = id.
bool verify_homomorphism(const RepConfig& cfg, unsigned long long seed = 1, int random_pairs = 100);

/// Trace equals the closed formula and trace/(M+N)^n equals φ, for every element of B(n).
bool verify_character(const RepConfig& cfg);

}  // namespace hyperoct

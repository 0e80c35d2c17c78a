#pragma once

#include "hyperoct/signed_perm.hpp"

#include <vector>

namespace hyperoct {

struct ThomaParamsB {
    std::vector<Rational> alpha, beta, gamma, delta;
    Rational kappa;

    /// Throws std::invalid_argument unless the sequences are nonnegative, weakly decreasing and
    /// Σ(α+β+γ+δ) + |κ| ≤ 1.
    void validate() const;

    static ThomaParamsB extreme(int M, int N, int eps);
    static ThomaParamsB degenerate(const Rational& q_minus);
};

/// Extreme character of B(∞) evaluated on a class of B(n).
Rational hirai_character(const ThomaParamsB& p, const CycleType& t);

/// Compares with φ on every class of B(n) at q+ = eps/(M+N), q− = (M−N)/(M+N).
bool hirai_matches_phi(int M, int N, int eps, int n);
/// Same for q+ = 0 and κ = q−.
bool hirai_matches_phi_degenerate(const Rational& q_minus, int n);

}  // namespace hyperoct

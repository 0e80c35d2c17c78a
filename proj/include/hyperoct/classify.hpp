#pragma once

#include "hyperoct/characters.hpp"

#include <optional>

namespace hyperoct {

struct Witness {
    PartitionPair lam;
    Rational value;
    int size() const { return lam.first.size() + lam.second.size(); }
};

struct ClassificationResult {
    enum class Verdict { Extreme, Degenerate, NotPD };
    Verdict verdict;
    int M = 0;
    int N = 0;
    int eps = 0;
    Rational q_minus;  // degenerate only
    std::optional<Witness> witness;

    bool positive_definite() const { return verdict != Verdict::NotPD; }
};

/// Decides positive definiteness of φ on B(∞) from (q+, q−). The witness scan never changes the verdict.
ClassificationResult classify(const Rational& qp, const Rational& qm, int witness_bound = 12);

/// First (λ+, λ−) with negative coefficient_B, by total size, then |λ+|, then partition order.
std::optional<Witness> find_negative_coefficient(const Rational& qp, const Rational& qm, int max_size);

/// Π_{□∈λ}(1 + q c(□)).
Rational coefficient_A(const Partition& lam, const Rational& q);

struct ClassificationA {
    bool positive_definite;
    std::optional<Partition> witness;
    Rational witness_value;
};

/// Type A reflection function q^{‖ρ‖}: positive definite iff q = 0 or 1/q ∈ ℤ.
ClassificationA classify_A(const Rational& q, int witness_bound = 12);

}  // namespace hyperoct

#pragma once

#include "hyperoct/classify.hpp"

#include <optional>
#include <vector>

namespace hyperoct {

/// g₁⋯g_n = 1.
bool is_in_D(const SignedPermutation& s);

struct DClass {
    CycleType type;  // padded
    int split;       // 0 when the B-class stays whole, otherwise +1 / −1 in order of discovery
    std::vector<SignedPermutation> elements;
};

/// Conjugacy classes of D(n) by brute-force orbits, in enumeration order of their first element.
std::vector<DClass> classes_D(int n);

/// True iff ρ− = ∅ and every part of the padded ρ+ is even.
bool splits_in_D(const CycleType& padded);

/// Symmetrized content product with q+ = q− = q.
Rational coefficient_D(const Partition& lam, const Partition& mu, const Rational& q);

struct DClassification {
    bool positive_definite;
    std::optional<std::pair<Partition, Partition>> witness;
    Rational witness_value;
};

/// Positive definite iff q = 0 or 1/q is an odd integer; otherwise scans for a witness.
DClassification classify_D(const Rational& q, int witness_bound = 12);

/// Scan of coefficient_D over all pairs of total size ≤ max_size.
std::optional<std::pair<Partition, Partition>> find_negative_coefficient_D(const Rational& q, int max_size);

}  // namespace hyperoct

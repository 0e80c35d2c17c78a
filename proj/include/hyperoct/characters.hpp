#pragma once

#include "hyperoct/signed_perm.hpp"

#include <utility>
#include <vector>

namespace hyperoct {

using PartitionPair = std::pair<Partition, Partition>;

/// χ^λ(μ) for the symmetric group, by Murnaghan–Nakayama on beta-sets.
long long char_A(const Partition& lam, const Partition& mu);

/// Irreducible character of B(n) indexed by (λ+, λ−) on the class ρ.
long long char_B(const PartitionPair& lam, const CycleType& rho);

/// Irreducible labels of B(n) in the same order as padded_classes(n).
std::vector<PartitionPair> irreps_B(int n);

/// Π_{□∈λ+}(q+c + (1+q−)/2) · Π_{□∈λ−}(q+c + (1−q−)/2).
BivarPoly coefficient_B(const PartitionPair& lam);
Rational coefficient_B(const PartitionPair& lam, const Rational& qp, const Rational& qm);

/// coefficient_B / (H(λ+) H(λ−)): the weight of χ_λ in the expansion of φ.
BivarPoly expansion_weight(const PartitionPair& lam);

struct ExpansionRow {
    CycleType rho;
    BivarPoly expanded;
    BivarPoly phi;
    bool ok;
};

struct ExpansionReport {
    int n;
    std::vector<ExpansionRow> rows;
    bool ok;
};

/// Checks Σ_λ χ_λ(ρ) · expansion_weight(λ) = φ(ρ) on every class of B(n).
ExpansionReport verify_rozklad(int n);

/// Number of semistandard tableaux of shape λ with entries in 1..N (brute force).
Integer count_ssyt(const Partition& lam, int N);

}  // namespace hyperoct

#pragma once

#include "hyperoct/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperoct {

/// λ(k) = 1 + 2(k−1)q+ + q−, k ≥ 1.
BivarPoly jacobi_lambda(int k);
Rational jacobi_lambda(int k, const Rational& qp, const Rational& qm);
/// c = (1+q−)/(2q+) − 1, so that λ(k) = 2q+(k + c); requires q+ ≠ 0.
Rational awk_parameter(const Rational& qp, const Rational& qm);

/// ⟨e₀, T^{2n} e₀⟩ with T e_k = e_{k+1} + λ(k) e_{k−1}.
BivarPoly jacobi_moments(int two_n);
std::vector<Rational> jacobi_moments(int max_order, const Rational& qp, const Rational& qm);

using DyckPath = std::vector<int>;  // steps ±1
std::vector<DyckPath> dyck_paths(int n);
/// Σ over Dyck paths of Π over down steps of (1 + q− + 2q+·(height after the step)).
BivarPoly dyck_moments(int two_n);
/// Σ over matchings of [2n] of (1+q−)^{c(m)} (2q+)^{n−c(m)}.
BivarPoly matching_moments(int two_n);
/// Wick sum over symmetric pair partitions with all vectors equal to a unit vector.
BivarPoly wick_moments(int two_n);

struct RouteComparison {
    int two_n;
    std::vector<std::pair<std::string, BivarPoly>> routes;
    bool equal;
    std::optional<std::pair<unsigned, unsigned>> first_difference;
};

/// Five routes (jacobi, dyck, wick, matching, fock) for every even order up to two_n_max.
std::vector<RouteComparison> cross_check(int two_n_max);

Integer catalan(int n);
Integer factorial(int n);
Integer double_factorial(int n);

struct SpecializationRow {
    int n;
    bool semicircle_ok;      // q+ = 0: Cₙ(1+q−)ⁿ
    Rational at_2_2;         // (x,y) = (2,2)
    bool at_2_2_ok;          // (2n)!/n!
    Rational at_2_0;         // (x,y) = (2,0)
    bool at_2_0_ok;          // 2ⁿCₙ
    Integer pair_count;      // |P₂^sym(2n)|
    bool pair_count_ok;      // 2ⁿ(2n−1)!!
    UniPoly cycles, non_nested, no_right_crossing, from_moment;
    bool drake_ok;
};

/// Rows n = 1..n_max; the Drake polynomials are also compared with m_{2n} at x = t, y = 1.
std::vector<SpecializationRow> specializations(int n_max);

/// m_{2n} written in x = 1+q−, y = 2q+ with y = 1 and x = t.
UniPoly as_cycle_polynomial(const BivarPoly& moment);

/// Determinant by fraction-free elimination.
Rational determinant(std::vector<std::vector<Rational>> a);
/// det[m_{i+j}]_{0≤i,j<k}.
Rational hankel_determinant(const std::vector<Rational>& moments, int k);

}  // namespace hyperoct

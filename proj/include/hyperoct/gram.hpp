#pragma once

#include "hyperoct/rational.hpp"

#include <vector>

namespace hyperoct {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact LDLᵀ with symmetric pivoting on the largest remaining diagonal entry.
/// PSD iff every pivot is ≥ 0 and a zero pivot leaves an identically zero block.
bool is_psd(RationalMatrix a);

/// G[g,h] = φ(h⁻¹g) over B(n) at fixed parameters, rows in enumeration order.
RationalMatrix gram_matrix(int n, const Rational& qp, const Rational& qm);

bool gram_psd(int n, const Rational& qp, const Rational& qm);

}  // namespace hyperoct

#pragma once

#include "hyperoct/signed_perm.hpp"

#include <map>

namespace hyperoct {

/// Finitely supported element of the group algebra of B(n) over BivarPoly.
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int n) : n_(n) {}
    static GroupAlgebraElement unit(int n);
    static GroupAlgebraElement basis(const SignedPermutation& s, const BivarPoly& c = 1);

    int rank() const { return n_; }
    const std::map<SignedPermutation, BivarPoly>& coeffs() const { return coeffs_; }
    BivarPoly coefficient(const SignedPermutation& s) const;
    std::size_t support_size() const { return coeffs_.size(); }

    void add(const SignedPermutation& s, const BivarPoly& c);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    int n_;
    std::map<SignedPermutation, BivarPoly> coeffs_;
};

struct FactorizationIdentity {
    GroupAlgebraElement lhs;
    GroupAlgebraElement rhs;
    bool equal;
};

/// Σ_σ φ(σ)σ against Π_{i=1}^n (1 + q+ J⁺_i + q− J⁻_i).
FactorizationIdentity factorization_identity(int n);

/// J⁺_i = Σ_{j∈[±(i−1)]} (j i)(j̄ ī) and J⁻_i = (ī i), embedded in B(n).
GroupAlgebraElement jucys_plus(int i, int n);
GroupAlgebraElement jucys_minus(int i, int n);

/// Coset representative w(j) ∈ B(m) sending m to j.
SignedPermutation coset_representative(int j, int m);

/// Reflections whose product (left to right) is s, of length ℓ_R(s), each inside one cycle of s.
std::vector<Reflection> minimal_nonmixing_factorization(const SignedPermutation& s);

SignedPermutation product(const std::vector<Reflection>& rs, int n);
/// True when every reflection's orbits on [±n] are contained in cycles of s.
bool is_nonmixing(const std::vector<Reflection>& rs, const SignedPermutation& s);

}  // namespace hyperoct

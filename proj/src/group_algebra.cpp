#include "hyperoct/group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperoct {

GroupAlgebraElement GroupAlgebraElement::unit(int n) { return basis(SignedPermutation::identity(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const SignedPermutation& s, const BivarPoly& c) {
    GroupAlgebraElement e(s.rank());
    e.add(s, c);
    return e;
}

BivarPoly GroupAlgebraElement::coefficient(const SignedPermutation& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? BivarPoly() : it->second;
}

void GroupAlgebraElement::add(const SignedPermutation& s, const BivarPoly& c) {
    if (s.rank() != n_) throw std::invalid_argument("group algebra: rank mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
    for (const auto& [s, c] : o.coeffs_) add(s, c);
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("group algebra: rank mismatch");
    GroupAlgebraElement out(a.n_);
    for (const auto& [sa, ca] : a.coeffs_)
        for (const auto& [sb, cb] : b.coeffs_) out.add(sa * sb, ca * cb);
    return out;
}

GroupAlgebraElement jucys_plus(int i, int n) {
    GroupAlgebraElement e(n);
    for (int j = -(i - 1); j <= i - 1; ++j)
        if (j != 0) e.add(Reflection::make_long(j, i).to_permutation(n), 1);
    return e;
}

GroupAlgebraElement jucys_minus(int i, int n) {
    return GroupAlgebraElement::basis(Reflection::make_short(i).to_permutation(n));
}

FactorizationIdentity factorization_identity(int n) {
    if (n == 0) {
        GroupAlgebraElement one(0);
        one.add(SignedPermutation(std::vector<int>{}), 1);
        return {one, one, true};
    }
    GroupAlgebraElement lhs(n);
    for (const auto& s : enumerate_group(n)) lhs.add(s, phi(cycle_type(s)));
    GroupAlgebraElement rhs = GroupAlgebraElement::unit(n);
    for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement factor = GroupAlgebraElement::unit(n);
        const auto jp = jucys_plus(i, n), jm = jucys_minus(i, n);
        for (const auto& [s, c] : jp.coeffs()) factor.add(s, c * BivarPoly::qp());
        for (const auto& [s, c] : jm.coeffs()) factor.add(s, c * BivarPoly::qm());
        rhs = rhs * factor;
    }
    bool eq = lhs == rhs;
    return {std::move(lhs), std::move(rhs), eq};
}

SignedPermutation coset_representative(int j, int m) {
    if (j == m) return SignedPermutation::identity(m);
    if (j == -m) return Reflection::make_short(m).to_permutation(m);
    return Reflection::make_long(j, m).to_permutation(m);
}

SignedPermutation product(const std::vector<Reflection>& rs, int n) {
    SignedPermutation p = SignedPermutation::identity(n);
    for (const auto& r : rs) p = p * r.to_permutation(n);
    return p;
}

namespace {

// Cycle label of each point of [±n]: a positive cycle and its mirror share a label.
std::vector<int> cycle_labels(const SignedPermutation& s) {
    const int n = s.rank();
    std::vector<int> label(2 * n + 1, -1);
    int next = 0;
    for (int i = 1; i <= n; ++i) {
        if (label[i + n] >= 0) continue;
        for (int x = i; label[x + n] < 0; x = s(x)) {
            label[x + n] = next;
            label[-x + n] = next;
        }
        ++next;
    }
    return label;
}

}  // namespace

bool is_nonmixing(const std::vector<Reflection>& rs, const SignedPermutation& s) {
    for (const auto& r : rs) {
        std::vector<std::pair<int, int>> orbits;
        if (r.kind == Reflection::Kind::Short) orbits = {{r.a, -r.a}};
        else orbits = {{r.a, r.b}, {-r.a, -r.b}};
        for (auto [x, y] : orbits) {
            bool same = false;
            for (int z = s(x);; z = s(z)) {
                if (z == y) {
                    same = true;
                    break;
                }
                if (z == x) break;
            }
            if (!same) return false;
        }
    }
    return true;
}

std::vector<Reflection> minimal_nonmixing_factorization(const SignedPermutation& s) {
    const int n = s.rank();
    std::vector<Reflection> out;
    SignedPermutation cur = s;
    for (int m = n; m >= 1; --m) {
        SignedPermutation local = cur.restrict_to(m);
        int j = local(m);
        if (j != m) {
            out.push_back(j == -m ? Reflection::make_short(m) : Reflection::make_long(j, m));
            local = coset_representative(j, m) * local;
        }
        cur = local.extend_to(n);
    }
    auto label = cycle_labels(s);
    std::stable_sort(out.begin(), out.end(), [&](const Reflection& x, const Reflection& y) {
        return label[x.b + n] < label[y.b + n];
    });
    return out;
}

}  // namespace hyperoct

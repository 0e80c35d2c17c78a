#include "hyperoct/type_d.hpp"

#include <algorithm>
#include <map>

namespace hyperoct {

bool is_in_D(const SignedPermutation& s) { return s.negative_count() % 2 == 0; }

std::vector<DClass> classes_D(int n) {
    std::vector<SignedPermutation> d;
    for (const auto& s : enumerate_group(n))
        if (is_in_D(s)) d.push_back(s);
    std::map<SignedPermutation, std::size_t> index;
    for (std::size_t i = 0; i < d.size(); ++i) index.emplace(d[i], i);
    std::vector<bool> done(d.size(), false);
    std::vector<DClass> out;
    std::map<CycleType, int> seen_type;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> orbit;
        for (const auto& h : d) {
            std::size_t j = index.at(h * d[i] * h.inverse());
            if (!done[j]) {
                done[j] = true;
                orbit.push_back(j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        DClass c{cycle_type(d[i], CycleType::Convention::Padded), 0, {}};
        for (auto j : orbit) c.elements.push_back(d[j]);
        int& count = seen_type[c.type];
        ++count;
        out.push_back(std::move(c));
    }
    for (auto& c : out) {
        if (seen_type[c.type] < 2) continue;
        int before = 0;
        for (const auto& o : out) {
            if (&o == &c) break;
            if (o.type == c.type) ++before;
        }
        c.split = before == 0 ? 1 : -1;
    }
    return out;
}

bool splits_in_D(const CycleType& padded) {
    if (!padded.rho_minus.empty()) return false;
    for (int p : padded.rho_plus.parts())
        if (p % 2) return false;
    return true;
}

Rational coefficient_D(const Partition& lam, const Partition& mu, const Rational& q) {
    return coefficient_B({lam, mu}, q, q) + coefficient_B({mu, lam}, q, q);
}

std::optional<std::pair<Partition, Partition>> find_negative_coefficient_D(const Rational& q, int max_size) {
    for (int s = 1; s <= max_size; ++s)
        for (int k = 0; k <= s; ++k)
            for (const auto& a : Partition::all(k))
                for (const auto& b : Partition::all(s - k))
                    if (coefficient_D(a, b, q) < 0) return std::make_pair(a, b);
    return std::nullopt;
}

DClassification classify_D(const Rational& q, int witness_bound) {
    if (q == 0 || (abs(q.get_num()) == 1 && q.get_den() % 2 == 1)) return {true, std::nullopt, 0};
    DClassification r{false, find_negative_coefficient_D(q, witness_bound), 0};
    if (r.witness) r.witness_value = coefficient_D(r.witness->first, r.witness->second, q);
    return r;
}

}  // namespace hyperoct

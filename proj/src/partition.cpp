#include "hyperoct/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) out.push_back(j - i);
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return {};
    for (int j = 0; j < parts_[0]; ++j) {
        int k = 0;
        while (k < length() && parts_[k] > j) ++k;
        c.push_back(k);
    }
    return Partition(c);
}

Integer Partition::hook_product() const {
    Partition conj = conjugate();
    Integer h = 1;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) h *= (parts_[i] - j - 1) + (conj.parts_[j] - i - 1) + 1;
    return h;
}

Partition Partition::without_ones() const {
    std::vector<int> p;
    for (int x : parts_)
        if (x > 1) p.push_back(x);
    return Partition(p);
}

Partition Partition::padded_to(int total) const {
    std::vector<int> p = parts_;
    for (int s = size(); s < total; ++s) p.push_back(1);
    return Partition(p);
}

std::vector<Partition> Partition::all(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

}  // namespace hyperoct

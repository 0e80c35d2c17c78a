#pragma once

#include "hyperoct/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

using Block = std::pair<int, int>;  // a ≤ b; a == b is a singleton

/// Blocks over [±n] with the order −n < … < −1 < 1 < … < n.
class PointPartition {
public:
    PointPartition() = default;
    /// Throws std::invalid_argument unless the blocks partition [±n] into pairs and singletons.
    PointPartition(int n, std::vector<Block> blocks);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    /// Partner of p, or p itself for a singleton.
    int mate(int p) const { return mate_[index(p)]; }
    bool is_singleton(int p) const { return mate(p) == p; }
    /// Index of the block containing p.
    std::size_t block_of(int p) const { return block_of_[index(p)]; }
    std::size_t index(int p) const { return static_cast<std::size_t>(p < 0 ? p + n_ : p + n_ - 1); }
    std::vector<int> points() const;
    bool is_symmetric() const;
    bool is_noncrossing() const;
    std::string to_string() const;

    friend bool operator==(const PointPartition& x, const PointPartition& y) {
        return x.n_ == y.n_ && x.blocks_ == y.blocks_;
    }

private:
    int n_ = 0;
    std::vector<Block> blocks_;
    std::vector<int> mate_;
    std::vector<std::size_t> block_of_;
};

/// Symmetric partition of [±n] into pairs and singletons with no pair equal to its bar-image.
class SymPairPartition : public PointPartition {
public:
    SymPairPartition() = default;
    SymPairPartition(int n, std::vector<Block> blocks);

    /// A pair (a, b), a < b, is positive iff b > ā.
    static bool is_positive(const Block& b) { return b.first + b.second > 0; }
    bool is_perfect() const;
    /// Singletons and negative pairs sit where the word allows (ε(|b|) = *, ε(|a|) = 1, ε(|c|) = *).
    bool admissible(const std::string& eps) const;
};

using HatMatching = PointPartition;

/// All symmetric partitions of [±n]; restricted to admissible ones when eps is given,
/// to pair partitions when perfect is set.
std::vector<SymPairPartition> enumerate(int n, const std::optional<std::string>& eps = std::nullopt,
                                        bool perfect = false);

/// The non-crossing matching built from the Motzkin path on the negative side.
HatMatching hat(const SymPairPartition& p);
/// Non-crossing, symmetric, one-sided blocks, leg-consistent with p, no pair covering a singleton of h.
bool satisfies_hat_conditions(const SymPairPartition& p, const HatMatching& h);

struct Cycle {
    int sign;                  // +1 or −1
    int length;
    std::vector<int> support;  // points in traversal order
};

struct SemiCycle {
    int length;
    int l_minus, r_minus, l_plus, r_plus;
    std::vector<int> plus_part;   // (l_1, r_1, …, r_m, c_m)
    std::vector<int> minus_part;  // mirror of plus_part, reversed
};

struct Stats {
    int c_minus = 0;
    int l_c = 0;
    int l_sc = 0;
    int c = 0;
};

struct CycleDecomposition {
    std::vector<Cycle> cycles;
    std::vector<SemiCycle> semi_cycles;
    Stats stats;
    /// False when some chain does not run from a hat-free point to a π-singleton.
    bool regular = true;
};

CycleDecomposition decompose(const SymPairPartition& p);

/// Output slots of the semi-cycle tensor: (r-key, l-label) sorted by r-key.
std::vector<std::pair<int, int>> semicycle_tensor_order(const CycleDecomposition& d);

/// q−^{c−} q+^{l_c + l_sc}.
BivarPoly weight(const Stats& s);

using Vec = std::vector<Rational>;
Rational dot(const Vec& x, const Vec& y);

/// Σ over pair partitions of [±2n] of q−^{c−} q+^{n−c} Π_{pairs} ⟨x_|i|, x_|j|⟩; vectors.size() = 2n.
BivarPoly wick_moment(const std::vector<Vec>& vectors);

/// Perfect matching of {1..2n}; pairs (i, j) with i < j, sorted.
struct Matching {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
    friend bool operator==(const Matching&, const Matching&) = default;
};

std::vector<Matching> enumerate_matchings(int n);
/// Sends (i, j) to (|i|, |j|); requires a perfect partition, keeps one pair per bar-orbit.
Matching project(const SymPairPartition& p);
/// The non-crossing matching with the same left legs.
Matching left_aligned_noncrossing(const Matching& m);
/// Number of cycles of m ∪ m̂.
int matching_cycles(const Matching& m);
/// The 2ⁿ symmetric pair partitions projecting onto m.
std::vector<SymPairPartition> fiber(const Matching& m);
bool fiber_identity(const Matching& m);

struct DrakeStats {
    int non_nested;
    int no_right_crossing;
};
DrakeStats drake_stats(const Matching& m);

}  // namespace hyperoct

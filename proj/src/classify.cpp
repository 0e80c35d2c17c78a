#include "hyperoct/classify.hpp"

namespace hyperoct {

std::optional<Witness> find_negative_coefficient(const Rational& qp, const Rational& qm, int max_size) {
    for (int s = 1; s <= max_size; ++s)
        for (int k = 0; k <= s; ++k)
            for (const auto& a : Partition::all(k))
                for (const auto& b : Partition::all(s - k)) {
                    PartitionPair lam{a, b};
                    Rational v = coefficient_B(lam, qp, qm);
                    if (v < 0) return Witness{lam, v};
                }
    return std::nullopt;
}

namespace {

bool is_nonneg_integer(const Rational& r) { return r.get_den() == 1 && r >= 0; }

}  // namespace

ClassificationResult classify(const Rational& qp, const Rational& qm, int witness_bound) {
    ClassificationResult res{};
    if (qp == 0) {
        if (abs(qm) <= 1) {
            res.verdict = ClassificationResult::Verdict::Degenerate;
            res.q_minus = qm;
            return res;
        }
    } else {
        Rational a = abs(qp);
        Rational inv = 1 / a;
        Rational M = (1 + qm) / (2 * a), N = (1 - qm) / (2 * a);
        if (inv.get_den() == 1 && is_nonneg_integer(M) && is_nonneg_integer(N)) {
            res.verdict = ClassificationResult::Verdict::Extreme;
            res.M = static_cast<int>(M.get_num().get_si());
            res.N = static_cast<int>(N.get_num().get_si());
            res.eps = qp > 0 ? 1 : -1;
            return res;
        }
    }
    res.verdict = ClassificationResult::Verdict::NotPD;
    res.witness = find_negative_coefficient(qp, qm, witness_bound);
    return res;
}

Rational coefficient_A(const Partition& lam, const Rational& q) {
    Rational r = 1;
    for (int c : lam.contents()) r *= 1 + q * c;
    return r;
}

ClassificationA classify_A(const Rational& q, int witness_bound) {
    if (q == 0 || abs(q.get_num()) == 1) return {true, std::nullopt, 0};
    for (int s = 1; s <= witness_bound; ++s)
        for (const auto& lam : Partition::all(s)) {
            Rational v = coefficient_A(lam, q);
            if (v < 0) return {false, lam, v};
        }
    return {false, std::nullopt, 0};
}

}  // namespace hyperoct

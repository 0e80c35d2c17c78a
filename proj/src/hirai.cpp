#include "hyperoct/hirai.hpp"

#include <stdexcept>

namespace hyperoct {

void ThomaParamsB::validate() const {
    Rational total = abs(kappa);
    for (const auto* seq : {&alpha, &beta, &gamma, &delta}) {
        for (std::size_t i = 0; i < seq->size(); ++i) {
            if ((*seq)[i] < 0) throw std::invalid_argument("Thoma parameters must be nonnegative");
            if (i && (*seq)[i] > (*seq)[i - 1]) throw std::invalid_argument("Thoma parameters must be weakly decreasing");
            total += (*seq)[i];
        }
    }
    if (total > 1) throw std::invalid_argument("Thoma parameters exceed total mass 1");
}

ThomaParamsB ThomaParamsB::extreme(int M, int N, int eps) {
    if (M < 0 || N < 0 || M + N < 1 || (eps != 1 && eps != -1)) throw std::invalid_argument("bad extreme parameters");
    Rational w(1, M + N);
    ThomaParamsB p;
    std::vector<Rational> a(M, w), c(N, w);
    if (eps == 1) {
        p.alpha = a;
        p.gamma = c;
    } else {
        p.beta = a;
        p.delta = c;
    }
    p.kappa = 0;
    return p;
}

ThomaParamsB ThomaParamsB::degenerate(const Rational& q_minus) {
    ThomaParamsB p;
    p.kappa = q_minus;
    return p;
}

namespace {

Rational power_sum(const std::vector<Rational>& v, unsigned j) {
    Rational s = 0;
    for (const auto& x : v) s += pow(x, j);
    return s;
}

}  // namespace

Rational hirai_character(const ThomaParamsB& p, const CycleType& t_in) {
    p.validate();
    const int n = t_in.rho_plus.size() + t_in.rho_minus.size();
    CycleType t = t_in.to_padded(n);
    Rational lead = power_sum(p.alpha, 1) + power_sum(p.beta, 1) - power_sum(p.gamma, 1) - power_sum(p.delta, 1) + p.kappa;
    Rational r = pow(lead, static_cast<unsigned>(t.rho_minus.multiplicity(1)));
    for (int e : {1, -1}) {
        const Partition& rho = e == 1 ? t.rho_plus : t.rho_minus;
        for (int j = 2; j <= n; ++j) {
            int m = rho.multiplicity(j);
            if (!m) continue;
            const unsigned uj = static_cast<unsigned>(j);
            const int alt = j % 2 ? 1 : -1;  // (−1)^{j−1}
            Rational f = power_sum(p.alpha, uj) + alt * power_sum(p.beta, uj) + e * power_sum(p.gamma, uj) +
                         e * alt * power_sum(p.delta, uj);
            r *= pow(f, static_cast<unsigned>(m));
        }
    }
    return r;
}

bool hirai_matches_phi(int M, int N, int eps, int n) {
    auto p = ThomaParamsB::extreme(M, N, eps);
    Rational qp = frac(eps, M + N), qm = frac(M - N, M + N);
    for (const auto& t : padded_classes(n))
        if (hirai_character(p, t) != phi(t, qp, qm)) return false;
    return true;
}

bool hirai_matches_phi_degenerate(const Rational& q_minus, int n) {
    auto p = ThomaParamsB::degenerate(q_minus);
    for (const auto& t : padded_classes(n))
        if (hirai_character(p, t) != phi(t, Rational(0), q_minus)) return false;
    return true;
}

}  // namespace hyperoct

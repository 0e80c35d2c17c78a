#include "hyperoct/schur_weyl.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hyperoct {

std::size_t RepConfig::dimension() const {
    std::size_t d = 1;
    for (int i = 0; i < n; ++i) {
        d *= static_cast<std::size_t>(M + N);
        if (d > max_dimension) return d;
    }
    return d;
}

void RepConfig::validate() const {
    if (M < 0 || N < 0 || M + N < 1) throw std::invalid_argument("need M, N >= 0 and M+N >= 1");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (dimension() > max_dimension) throw std::invalid_argument("representation dimension exceeds budget");
}

long long RepMatrix::trace() const {
    long long t = 0;
    for (std::size_t e = 0; e < target.size(); ++e)
        if (target[e] == e) t += sign[e];
    return t;
}

std::vector<std::vector<int>> RepMatrix::dense() const {
    std::vector<std::vector<int>> d(dimension(), std::vector<int>(dimension(), 0));
    for (std::size_t e = 0; e < target.size(); ++e) d[target[e]][e] = sign[e];
    return d;
}

RepMatrix multiply(const RepMatrix& a, const RepMatrix& b) {
    if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
    RepMatrix c{std::vector<std::size_t>(a.dimension()), std::vector<int>(a.dimension())};
    for (std::size_t e = 0; e < b.dimension(); ++e) {
        c.target[e] = a.target[b.target[e]];
        c.sign[e] = b.sign[e] * a.sign[b.target[e]];
    }
    return c;
}

RepMatrix identity_matrix(std::size_t dim) {
    RepMatrix r{std::vector<std::size_t>(dim), std::vector<int>(dim, 1)};
    for (std::size_t e = 0; e < dim; ++e) r.target[e] = e;
    return r;
}

RepMatrix rep_matrix(const SignedPermutation& g, const RepConfig& cfg) {
    cfg.validate();
    if (g.rank() != cfg.n) throw std::invalid_argument("rank mismatch");
    const int n = cfg.n;
    const std::size_t base = static_cast<std::size_t>(cfg.M + cfg.N);
    const std::size_t dim = cfg.dimension();
    auto [gs, tau] = g.to_signed_model();
    std::vector<int> tau_inv(n);
    for (int k = 0; k < n; ++k) tau_inv[tau[k] - 1] = k + 1;
    const int global = cfg.eps == -1 ? g.underlying_sign() : 1;

    RepMatrix r{std::vector<std::size_t>(dim), std::vector<int>(dim)};
    std::vector<std::size_t> digits(n), out(n);
    for (std::size_t e = 0; e < dim; ++e) {
        std::size_t rest = e;
        for (int i = n - 1; i >= 0; --i) {
            digits[i] = rest % base;
            rest /= base;
        }
        int s = global;
        for (int i = 1; i <= n; ++i) {
            out[i - 1] = digits[tau_inv[i - 1] - 1];
            if (out[i - 1] >= static_cast<std::size_t>(cfg.M)) s *= gs[i - 1];
        }
        std::size_t t = 0;
        for (int i = 0; i < n; ++i) t = t * base + out[i];
        r.target[e] = t;
        r.sign[e] = s;
    }
    return r;
}

Integer trace_formula(const CycleType& t, const RepConfig& cfg) {
    CycleType red = t.to_reduced();
    const int np = red.rho_plus.norm(), nm = red.rho_minus.norm();
    Integer r = 1;
    if ((np + nm) % 2 && cfg.eps == -1) r = -1;
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), Integer(cfg.M + cfg.N).get_mpz_t(),
               static_cast<unsigned long>(cfg.n - np - red.rho_minus.size()));
    mpz_pow_ui(b.get_mpz_t(), Integer(cfg.M - cfg.N).get_mpz_t(), static_cast<unsigned long>(red.rho_minus.length()));
    return r * a * b;
}

bool verify_homomorphism(const RepConfig& cfg, unsigned long long seed, int random_pairs) {
    cfg.validate();
    const int n = cfg.n;
    std::vector<SignedPermutation> gens;
    for (int i = 0; i < n; ++i) gens.push_back(SignedPermutation::generator(n, i));
    auto check = [&](const SignedPermutation& a, const SignedPermutation& b) {
        return rep_matrix(a * b, cfg) == multiply(rep_matrix(a, cfg), rep_matrix(b, cfg));
    };
    for (const auto& a : gens)
        for (const auto& b : gens)
            if (!check(a, b)) return false;
    if (n >= 2) {
        RepMatrix st = multiply(rep_matrix(gens[0], cfg), rep_matrix(gens[1], cfg));
        RepMatrix p = identity_matrix(cfg.dimension());
        for (int k = 0; k < 4; ++k) p = multiply(p, st);
        if (!(p == identity_matrix(cfg.dimension()))) return false;
    }
    std::mt19937_64 rng(seed);
    auto random_element = [&] {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        std::shuffle(img.begin(), img.end(), rng);
        for (auto& v : img)
            if (rng() & 1u) v = -v;
        return SignedPermutation(img);
    };
    for (int k = 0; k < random_pairs; ++k) {
        auto a = random_element();
        auto b = random_element();
        if (!check(a, b)) return false;
    }
    return true;
}

bool verify_character(const RepConfig& cfg) {
    cfg.validate();
    const Rational dim(Integer(static_cast<unsigned long>(cfg.dimension())));
    for (const auto& g : enumerate_group(cfg.n)) {
        CycleType t = cycle_type(g);
        const long tr = static_cast<long>(rep_matrix(g, cfg).trace());
        if (Integer(tr) != trace_formula(t, cfg)) return false;
        if (Rational(tr) / dim != phi(t, cfg.q_plus(), cfg.q_minus())) return false;
    }
    return true;
}

}  // namespace hyperoct

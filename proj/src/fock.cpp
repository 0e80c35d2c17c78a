#include "hyperoct/fock.hpp"

namespace hyperoct {

ExclusionReport exclusion_check(int M, int N) {
    if (M < 1 || N < 0 || M > 4 || N > 4) throw std::invalid_argument("exclusion_check needs 1 <= M <= 4, 0 <= N <= 4");
    ExclusionReport rep{M, N, frac(-1, M + N), frac(M - N, M + N), {}, {}, true};
    auto q = at(rep.q_plus, rep.q_minus);
    Rational prod = 1;
    for (int n = 1; n <= M + 1; ++n) {
        std::vector<Vec> slots(2 * static_cast<std::size_t>(n), Vec{Rational(1)});
        auto v = FockVector<Rational>::tensor(1, slots);
        Rational norm = deformed_inner(v, v, q);
        prod *= 1 + 2 * (n - 1) * rep.q_plus + rep.q_minus;
        rep.norms.push_back(norm);
        rep.product.push_back(prod);
        bool expect_zero = n == M + 1;
        if (norm != prod || (expect_zero ? norm != 0 : norm <= 0)) rep.ok = false;
    }
    return rep;
}

}  // namespace hyperoct

#include "maassp/mp.hpp"

namespace maassp {

std::vector<mpq_class> bernoulli_numbers(int n) {
    // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1, k) B_k
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    std::vector<mpz_class> binom(n + 2);
    for (int m = 1; m <= n; ++m) {
        // Row m+1 of Pascal's triangle.
        binom[0] = 1;
        for (int k = 1; k <= m + 1; ++k) {
            mpz_class c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(k));
            binom[k] = c;
        }
        mpq_class acc = 0;
        for (int k = 0; k < m; ++k) acc += mpq_class(binom[k]) * b[k];
        b[m] = -acc / mpq_class(m + 1);
        b[m].canonicalize();
    }
    return b;
}

}  // namespace maassp

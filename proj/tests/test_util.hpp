#pragma once

#include <random>

#include "parabolica/sparse_poly.hpp"

namespace parabolica::testutil {

inline Rat random_rational(std::mt19937& rng, int num_range = 20, int den_range = 6) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rat random_nonzero_rational(std::mt19937& rng, int num_range = 20, int den_range = 6) {
    for (;;) {
        Rat q = random_rational(rng, num_range, den_range);
        if (q != 0) return q;
    }
}

inline SparsePoly random_poly(std::mt19937& rng, int max_degree, int max_terms,
                              int coeff_range = 9) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    SparsePoly p;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        int i = deg(rng);
        std::uniform_int_distribution<int> rest(0, max_degree - i);
        int j = rest(rng);
        p.add_term({i, j}, Rat(coeff(rng)));
    }
    return p;
}

}  // namespace parabolica::testutil

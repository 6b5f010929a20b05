#include "kleinian/random.hpp"

#include <algorithm>

namespace kleinian {

long Sampler::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

mpq_class Sampler::rational(long num_bound, long den_bound) {
    mpq_class q(integer(-num_bound, num_bound), integer(1, den_bound));
    q.canonicalize();
    return q;
}

CycScalar Sampler::scalar(bool complex, long num_bound, long den_bound) {
    CycScalar r(rational(num_bound, den_bound));
    if (complex && session_field()->has_i() && coin())
        r += CycScalar(rational(num_bound, den_bound)) * CycScalar::imag();
    return r;
}

CycScalar Sampler::nonzero_scalar(bool complex) {
    for (;;) {
        CycScalar s = scalar(complex);
        if (!s.is_zero())
            return s;
    }
}

MPoly Sampler::poly(const std::vector<Var> &vars, unsigned max_degree, unsigned max_terms,
                    bool complex) {
    MPoly r;
    const long terms = integer(1, max_terms);
    for (long k = 0; k < terms; ++k) {
        Mono m{};
        long budget = integer(0, max_degree);
        std::vector<Var> order = vars;
        std::shuffle(order.begin(), order.end(), rng_);
        for (Var v : order) {
            long e = integer(0, budget);
            m[static_cast<int>(v)] = static_cast<std::uint32_t>(e);
            budget -= e;
        }
        r.add_term(m, scalar(complex));
    }
    return r;
}

MPoly Sampler::monic(Var v, unsigned d, bool drop_subleading, long coeff_bound) {
    std::vector<CycScalar> c(d + 1);
    for (unsigned j = 0; j < d; ++j)
        c[j] = CycScalar(integer(-coeff_bound, coeff_bound));
    c[d] = CycScalar(1);
    if (drop_subleading && d >= 1)
        c[d - 1] = CycScalar();
    return MPoly::univariate(v, c);
}

} // namespace kleinian

#pragma once

#include "kleinian/poly.hpp"

#include <random>
#include <vector>

namespace kleinian {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }
    // p/q with |p| <= num_bound, 1 <= q <= den_bound.
    mpq_class rational(long num_bound = 5, long den_bound = 3);
    // Rational, or a + b*i when the session field has i and complex is set.
    CycScalar scalar(bool complex = true, long num_bound = 5, long den_bound = 3);
    CycScalar nonzero_scalar(bool complex = true);
    // Random polynomial in the given variables of total degree <= max_degree
    // with at most max_terms terms.
    MPoly poly(const std::vector<Var> &vars, unsigned max_degree, unsigned max_terms = 4,
               bool complex = false);
    // Monic polynomial in v of exact degree d, with small integer coefficients,
    // optionally without a v^(d-1) term.
    MPoly monic(Var v, unsigned d, bool drop_subleading, long coeff_bound = 2);

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace kleinian

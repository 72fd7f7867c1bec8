#pragma once

#include <cstdint>
#include <random>

#include "hardy/polyalg.hpp"

namespace hardy {

/// Random test polynomials with coefficients re, im in {k/1000 : |k| <= 1000}. Draws use
/// only raw mt19937_64 output, so a seed gives the same corpus on every platform.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    /// Nonzero m-homogeneous polynomial in variables 1..vars with at most max_terms terms.
    TrigPoly homogeneous(unsigned m, unsigned vars, unsigned max_terms);
    /// Nonzero Dirichlet polynomial supported on 1..support with at most max_terms terms.
    DirichletPoly dirichlet(std::uint64_t support, unsigned max_terms);

    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

private:
    ExactComplex coefficient();

    std::mt19937_64 rng_;
};

} // namespace hardy

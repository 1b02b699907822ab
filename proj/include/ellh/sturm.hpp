#pragma once

#include <vector>

#include "ellh/rational.hpp"

namespace ellh {

// Exact univariate polynomials over Q, coefficients low-to-high with a
// nonzero leading coefficient (the zero polynomial is the empty vector).
using Poly = std::vector<Rat>;

Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_derivative(const Poly& p);

// Sturm chain of a squarefree polynomial; exact real-root counting.
struct SturmChain {
    std::vector<Poly> seq;

    static SturmChain build(const Poly& p);

    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // number of real roots in (-inf, x]
    long count_roots_leq(const Rat& x) const;
    // number of real roots in (-inf, x)
    long count_roots_below(const Rat& x) const;
    // number of real roots in (x, +inf)
    long count_roots_above(const Rat& x) const;
};

} // namespace ellh

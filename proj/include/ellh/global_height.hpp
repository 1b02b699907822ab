#pragma once

#include <map>
#include <optional>
#include <set>

#include "ellh/curve.hpp"
#include "ellh/padic_place.hpp"
#include "ellh/rational.hpp"
#include "ellh/real_place.hpp"

namespace ellh {

struct GlobalHeightResult {
    double total = 0.0;
    double archimedean = 0.0;
    std::map<unsigned long, Rat> finite_parts; // prime -> coefficient of log p
    double error_bound = 0.0;
    std::optional<int> torsion_order;
};

// Primes that can carry a nonzero local height: divisors of the
// discriminant plus divisors of the denominator of x(P). Everywhere else
// reduction is good and x is integral, so the coefficient is 0.
std::set<unsigned long> candidate_primes(const WeierstrassCurve& e, const CurvePoint& p);

struct GlobalOptions {
    double tol = 1e-12;
    int real_n_max = 64;
    int padic_n_max = 40;
    bool torsion_shortcircuit = true;
};

GlobalHeightResult canonical_height(const WeierstrassCurve& e, const CurvePoint& p,
                                    const GlobalOptions& opts = {});

// Independent oracle: 4^{-n} * (1/2) * log max(|num|, |den|) of x(2^n P),
// by exact doubling. Throws TorsionCollapseError when some 2^k P = O.
double naive_height_limit(const WeierstrassCurve& e, const CurvePoint& p, int n);

// Exact order of p when it is at most max_order, nullopt otherwise.
std::optional<int> order_check(const WeierstrassCurve& e, const CurvePoint& p,
                               int max_order = 16);

} // namespace ellh

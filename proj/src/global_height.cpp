#include "ellh/global_height.hpp"

#include <cmath>

#include "ellh/factorint.hpp"

namespace ellh {

std::set<unsigned long> candidate_primes(const WeierstrassCurve& e, const CurvePoint& p) {
    if (!e.has_integral_model())
        throw NonIntegralModelError("prime enumeration needs integer coefficients");
    if (p.is_infinity())
        throw PointAtInfinityError("prime enumeration needs an affine point");
    std::set<unsigned long> primes = prime_divisors(Int(e.disc.get_num()));
    Int den = p.x().get_den();
    if (den > 1) {
        std::set<unsigned long> extra = prime_divisors(den);
        primes.insert(extra.begin(), extra.end());
    }
    return primes;
}

GlobalHeightResult canonical_height(const WeierstrassCurve& e, const CurvePoint& p,
                                    const GlobalOptions& opts) {
    if (p.is_infinity())
        throw PointAtInfinityError("canonical height of the identity is zero; not computed");
    if (!e.has_integral_model())
        throw NonIntegralModelError("canonical height needs integer coefficients");
    if (!contains(e, p))
        throw PointNotOnCurveError("point not on curve");

    GlobalHeightResult res;
    if (opts.torsion_shortcircuit) {
        if (auto ord = order_check(e, p)) {
            res.torsion_order = ord;
            return res; // torsion points have canonical height exactly 0
        }
    }

    RealOptions ropts;
    ropts.tol = opts.tol;
    ropts.n_max = opts.real_n_max;
    LocalHeightResult arch = lambda_real(e, p, ropts);
    res.archimedean = arch.lambda;
    res.total = arch.lambda;
    res.error_bound = arch.truncation_error_bound;

    PadicOptions popts;
    popts.n_max = opts.padic_n_max;
    for (unsigned long q : candidate_primes(e, p)) {
        PadicHeightResult local = lambda_padic(e, p, q, popts);
        res.finite_parts[q] = local.coefficient;
        double logq = std::log(static_cast<double>(q));
        res.total += local.coefficient.get_d() * logq;
        res.error_bound += local.tail_bound_coefficient.get_d() * logq;
    }
    return res;
}

double naive_height_limit(const WeierstrassCurve& e, const CurvePoint& p, int n) {
    if (p.is_infinity())
        throw PointAtInfinityError("naive height limit needs an affine point");
    if (n < 0 || n > 10)
        throw Error("doubling depth out of range (0..10)");
    CurvePoint q = p;
    for (int k = 1; k <= n; ++k) {
        q = double_point(e, q);
        if (q.is_infinity())
            throw TorsionCollapseError("2^" + std::to_string(k) + " P is the identity");
    }
    double h = 0.5 * log_abs(Rat(naive_height(q.x())));
    return std::ldexp(h, -2 * n); // h / 4^n
}

std::optional<int> order_check(const WeierstrassCurve& e, const CurvePoint& p,
                               int max_order) {
    CurvePoint q = p;
    for (int k = 1; k <= max_order; ++k) {
        if (q.is_infinity())
            return k;
        q = add(e, q, p);
    }
    return std::nullopt;
}

} // namespace ellh

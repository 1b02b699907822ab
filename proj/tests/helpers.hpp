#pragma once

#include <random>

#include "ellh/curve.hpp"
#include "ellh/rational.hpp"

namespace ellh::testing {

// the three workhorse curves used across the suite
inline WeierstrassCurve curve_m2() { // y^2 = x^3 - 2
    return WeierstrassCurve::create(Rat(0), Rat(0), Rat(0), Rat(0), Rat(-2));
}
inline WeierstrassCurve curve_p1() { // y^2 = x^3 + 1
    return WeierstrassCurve::create(Rat(0), Rat(0), Rat(0), Rat(0), Rat(1));
}
inline WeierstrassCurve curve_37() { // y^2 + y = x^3 - x
    return WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0));
}

inline CurvePoint pt(long x, long y) { return CurvePoint::affine(Rat(x), Rat(y)); }
inline CurvePoint pt(const Rat& x, const Rat& y) { return CurvePoint::affine(x, y); }

// A nonsingular curve passing through (x0, y0): pick a1..a4 and solve for a6.
struct CurveWithPoint {
    WeierstrassCurve curve;
    CurvePoint point;
};

inline CurveWithPoint random_curve_with_point(std::mt19937_64& rng, long coeff_range = 6) {
    std::uniform_int_distribution<long> d(-coeff_range, coeff_range);
    while (true) {
        Rat a1(d(rng)), a2(d(rng)), a3(d(rng)), a4(d(rng));
        Rat x0(d(rng)), y0(d(rng));
        Rat a6 = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0 * x0 * x0 - a2 * x0 * x0 - a4 * x0;
        try {
            WeierstrassCurve e = WeierstrassCurve::create(a1, a2, a3, a4, a6);
            return {e, CurvePoint::affine(x0, y0)};
        } catch (const SingularCurveError&) {
            continue;
        }
    }
}

} // namespace ellh::testing

#pragma once

#include "ellh/curve.hpp"
#include "ellh/errors.hpp"

namespace ellh {

// One step of the duplication series
//   W(t) = 4t + b2 t^2 + 2 b4 t^3 + b6 t^4
//   Z(t) = 1 - b4 t^2 - 2 b6 t^3 - b8 t^4
//   t'   = W/Z
// For t = 1/x these are W = F(x)/x^4, Z = N(x)/x^4, so t' = 1/x(2P).
//
// Scalar construction differs per domain (a p-adic constant needs a prime
// and precision), hence the model-carrying scalar_from_int hook.

inline double scalar_from_int(const double&, long v) { return static_cast<double>(v); }
inline Rat scalar_from_int(const Rat&, long v) { return Rat(v); }

inline bool scalar_is_zero(const double& v) { return v == 0.0; }
inline bool scalar_is_zero(const Rat& v) { return v == 0; }

template <class S>
struct SeriesStep {
    S w;
    S z;
    S t_next;
};

template <class S>
SeriesStep<S> duplication_step(const BInvariants<S>& b, const S& t) {
    const S four = scalar_from_int(t, 4);
    const S one = scalar_from_int(t, 1);
    S w = t * (four + t * (b.b2 + t * (b.b4 + b.b4 + t * b.b6)));
    S z = one - t * t * (b.b4 + t * (b.b6 + b.b6 + t * b.b8));
    if (scalar_is_zero(z))
        throw ZVanishedError("Z vanished along the duplication series");
    S t_next = w / z;
    return {std::move(w), std::move(z), std::move(t_next)};
}

} // namespace ellh

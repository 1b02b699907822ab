#pragma once

#include <optional>
#include <utility>

#include "ellh/errors.hpp"
#include "ellh/rational.hpp"

namespace ellh {

// Coefficients of the quartics driving the duplication law, in whatever
// scalar domain the caller works in (exact rational, double, p-adic).
template <class S>
struct BInvariants {
    S b2, b4, b6, b8;
};

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, with the derived
// quantities precomputed. Nonsingular by construction.
struct WeierstrassCurve {
    Rat a1, a2, a3, a4, a6;
    Rat b2, b4, b6, b8;
    Rat disc;

    // Throws SingularCurveError when the discriminant vanishes.
    static WeierstrassCurve create(const Rat& a1, const Rat& a2, const Rat& a3,
                                   const Rat& a4, const Rat& a6);

    BInvariants<Rat> b_exact() const { return {b2, b4, b6, b8}; }
    BInvariants<double> b_real() const {
        return {b2.get_d(), b4.get_d(), b6.get_d(), b8.get_d()};
    }

    bool has_integral_model() const;
};

struct CurvePoint {
    static CurvePoint infinity() { return CurvePoint{}; }
    static CurvePoint affine(Rat x, Rat y) {
        CurvePoint p;
        p.coords_ = std::make_pair(std::move(x), std::move(y));
        return p;
    }

    bool is_infinity() const { return !coords_.has_value(); }
    const Rat& x() const;
    const Rat& y() const;

    bool operator==(const CurvePoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

private:
    std::optional<std::pair<Rat, Rat>> coords_;
};

bool contains(const WeierstrassCurve& e, const CurvePoint& p);

// Chord-tangent group law, exact.
CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p);
CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q);
CurvePoint double_point(const WeierstrassCurve& e, const CurvePoint& p);

// Y = 2y + a1 x + a3; satisfies Y^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
Rat y_prime(const WeierstrassCurve& e, const CurvePoint& p);

// F(x) = 4x^3 + b2 x^2 + 2 b4 x + b6 in any scalar domain.
template <class S>
S cubic_F_eval(const BInvariants<S>& b, const S& x);
Rat cubic_F_eval(const WeierstrassCurve& e, const Rat& x);

// N(x) = x^4 - b4 x^2 - 2 b6 x - b8, the numerator of the duplication map.
template <class S>
S quartic_N_eval(const BInvariants<S>& b, const S& x);

// x(2P) = N(x)/F(x). Throws TwoTorsionError when F(x) = 0 (then 2P = O).
template <class S>
S x_duplication(const BInvariants<S>& b, const S& x);
Rat x_duplication(const WeierstrassCurve& e, const Rat& x);

// The model obtained by substituting x -> x - r, together with the point
// map P -> (x + r, y). Translation preserves the discriminant, Y, and F up
// to the corresponding shift of argument.
struct ShiftedModel {
    WeierstrassCurve curve;
    Rat r;
    CurvePoint map_point(const CurvePoint& p) const;
};

ShiftedModel shift_model(const WeierstrassCurve& e, const Rat& r);

// --- template bodies ---

template <class S>
S cubic_F_eval(const BInvariants<S>& b, const S& x) {
    // 4x^3 + b2 x^2 + 2 b4 x + b6, Horner form
    S four_x = x + x;
    four_x = four_x + four_x;
    return ((four_x + b.b2) * x + b.b4 + b.b4) * x + b.b6;
}

template <class S>
S quartic_N_eval(const BInvariants<S>& b, const S& x) {
    // x^4 - b4 x^2 - 2 b6 x - b8
    return ((x * x - b.b4) * x - (b.b6 + b.b6)) * x - b.b8;
}

template <class S>
S x_duplication(const BInvariants<S>& b, const S& x) {
    S den = cubic_F_eval(b, x);
    if (den == S(0))
        throw TwoTorsionError("x_duplication: F(x) = 0, point is 2-torsion");
    return quartic_N_eval(b, x) / den;
}

} // namespace ellh

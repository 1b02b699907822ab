#include "ellh/curve.hpp"

#include <vector>

namespace ellh {

namespace {

// Coefficients of p(x - r) for p given low-to-high: Taylor shift by
// repeated synthetic division, collecting remainders.
std::vector<Rat> poly_compose_shift(std::vector<Rat> c, const Rat& r) {
    const std::size_t n = c.size();
    std::vector<Rat> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        // synthetic division of c by (x - (-r))
        for (std::size_t i = n - 1; i + 1 > k + 1; --i)
            c[i - 1] -= r * c[i];
        out[k] = c[k];
    }
    return out;
}

} // namespace

WeierstrassCurve WeierstrassCurve::create(const Rat& a1, const Rat& a2, const Rat& a3,
                                          const Rat& a4, const Rat& a6) {
    WeierstrassCurve e;
    e.a1 = a1;
    e.a2 = a2;
    e.a3 = a3;
    e.a4 = a4;
    e.a6 = a6;
    e.b2 = a1 * a1 + 4 * a2;
    e.b4 = 2 * a4 + a1 * a3;
    e.b6 = a3 * a3 + 4 * a6;
    e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 +
             9 * e.b2 * e.b4 * e.b6;
    if (e.disc == 0)
        throw SingularCurveError("discriminant is zero");
    return e;
}

bool WeierstrassCurve::has_integral_model() const {
    return rat_is_integer(a1) && rat_is_integer(a2) && rat_is_integer(a3) &&
           rat_is_integer(a4) && rat_is_integer(a6);
}

const Rat& CurvePoint::x() const {
    if (!coords_)
        throw PointAtInfinityError("x() of the point at infinity");
    return coords_->first;
}

const Rat& CurvePoint::y() const {
    if (!coords_)
        throw PointAtInfinityError("y() of the point at infinity");
    return coords_->second;
}

bool contains(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.is_infinity())
        return true;
    const Rat& x = p.x();
    const Rat& y = p.y();
    Rat lhs = y * y + e.a1 * x * y + e.a3 * y;
    Rat rhs = ((x + e.a2) * x + e.a4) * x + e.a6;
    return lhs == rhs;
}

CurvePoint negate(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.is_infinity())
        return p;
    return CurvePoint::affine(p.x(), -p.y() - e.a1 * p.x() - e.a3);
}

namespace {

CurvePoint chord_tangent(const WeierstrassCurve& e, const Rat& x1, const Rat& y1,
                         const Rat& x2, const Rat& slope) {
    Rat x3 = slope * slope + e.a1 * slope - e.a2 - x1 - x2;
    Rat y3 = slope * (x1 - x3) - y1 - e.a1 * x3 - e.a3;
    return CurvePoint::affine(x3, y3);
}

} // namespace

CurvePoint add(const WeierstrassCurve& e, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    if (x1 == x2) {
        if (y1 == y2)
            return double_point(e, p);
        return CurvePoint::infinity(); // the two points share an x, so q = -p
    }
    Rat slope = (y2 - y1) / (x2 - x1);
    return chord_tangent(e, x1, y1, x2, slope);
}

CurvePoint double_point(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.is_infinity())
        return p;
    Rat denom = 2 * p.y() + e.a1 * p.x() + e.a3; // = Y(P)
    if (denom == 0)
        return CurvePoint::infinity();
    Rat slope = (3 * p.x() * p.x() + 2 * e.a2 * p.x() + e.a4 - e.a1 * p.y()) / denom;
    return chord_tangent(e, p.x(), p.y(), p.x(), slope);
}

Rat y_prime(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.is_infinity())
        throw PointAtInfinityError("Y(P) undefined at the point at infinity");
    return 2 * p.y() + e.a1 * p.x() + e.a3;
}

Rat cubic_F_eval(const WeierstrassCurve& e, const Rat& x) {
    return cubic_F_eval(e.b_exact(), x);
}

Rat x_duplication(const WeierstrassCurve& e, const Rat& x) {
    return x_duplication(e.b_exact(), x);
}

CurvePoint ShiftedModel::map_point(const CurvePoint& p) const {
    if (p.is_infinity())
        return p;
    return CurvePoint::affine(p.x() + r, p.y());
}

ShiftedModel shift_model(const WeierstrassCurve& e, const Rat& r) {
    // substitute x = x' - r in both sides and re-expand:
    //   rhs cubic  x^3 + a2 x^2 + a4 x + a6
    //   lhs y-coefficient  a1 x + a3
    std::vector<Rat> cubic = poly_compose_shift({e.a6, e.a4, e.a2, Rat(1)}, r);
    std::vector<Rat> ylin = poly_compose_shift({e.a3, e.a1}, r);
    ShiftedModel m;
    m.curve = WeierstrassCurve::create(ylin[1], cubic[2], ylin[0], cubic[1], cubic[0]);
    m.r = r;
    return m;
}

} // namespace ellh

#include "ellh/padic_place.hpp"

#include <algorithm>
#include <cstdlib>

#include "ellh/series.hpp"

namespace ellh {

namespace {

ShiftCertificate make_certificate(const WeierstrassCurve& e, unsigned long p, long r) {
    Rat w = cubic_F_eval(e, Rat(-r));
    ShiftCertificate cert;
    cert.r = r;
    cert.prime = p;
    cert.witness = w;
    cert.reason =
        valuation(w, p) % 2 != 0 ? "witness_valuation_odd" : "witness_unit_nonresidue";
    return cert;
}

// Once v(t) passes the threshold the remaining valuations are pinned: for a
// p-integral model and p odd, v(t) >= 1 gives v(4 + b2 t + 2 b4 t^2 + b6 t^3)
// = 0, so v(t') = v(t) and v(Z) = 0 from here on; for p = 2, v(t) >= 3 gives
// v(4 + ...) = 2, v(t') = v(t) + 2 (strictly growing) and v(Z) = 0.
bool termination_certificate_fires(const PadicNumber& t, unsigned long p) {
    if (t.is_zero())
        return true;
    return t.valuation() >= (p == 2 ? 3 : 1);
}

Rat pow4_inv(int n) {
    Rat r(1);
    r /= Rat(Int(1) << (2 * n));
    return r;
}

} // namespace

bool is_admissible_shift_padic(const WeierstrassCurve& e, unsigned long p, long r) {
    Rat w = cubic_F_eval(e, Rat(-r));
    return w != 0 && !is_square_qp(w, p);
}

ShiftCertificate select_shift_padic(const WeierstrassCurve& e, unsigned long p,
                                    long r_max) {
    if (!e.has_integral_model())
        throw NonIntegralModelError("p-adic shift selection needs integer coefficients");
    for (long a = 0; a <= r_max; ++a) {
        for (long r : {a, -a}) {
            if (is_admissible_shift_padic(e, p, r))
                return make_certificate(e, p, r);
            if (a == 0)
                break;
        }
    }
    throw NoAdmissibleShiftError("no admissible shift within |r| <= " +
                                 std::to_string(r_max));
}

PadicHeightResult lambda_padic(const WeierstrassCurve& e, const CurvePoint& pt,
                               unsigned long p, const PadicOptions& opts) {
    if (pt.is_infinity())
        throw PointAtInfinityError("local height undefined at the identity");
    if (!e.has_integral_model())
        throw NonIntegralModelError("p-adic local heights need integer coefficients");
    if (!contains(e, pt))
        throw PointNotOnCurveError("point not on curve");
    if (opts.n_max < 1)
        throw Error("n_max must be at least 1");

    PadicHeightResult res;
    if (opts.shift_override) {
        if (!is_admissible_shift_padic(e, p, *opts.shift_override))
            throw InadmissibleShiftError("shift override rejected: F(-r) is a square in Q_p");
        res.certificate = make_certificate(e, p, *opts.shift_override);
    } else {
        res.certificate = select_shift_padic(e, p);
    }
    const long r = res.certificate.r;

    ShiftedModel shifted = shift_model(e, Rat(r));
    const BInvariants<Rat> bq = shifted.curve.b_exact();
    const Rat x0 = pt.x() + r;
    const long vx0 = valuation(x0, p);

    // Exact prefix for 2-power torsion (order at most 8 over Q): the orbit
    // parks at t = 0 and every remaining term vanishes.
    {
        Rat xn = x0;
        for (int k = 0; k <= 2; ++k) {
            if (cubic_F_eval(bq, xn) == 0) {
                Rat vsum(0);
                Rat xm = x0;
                for (int n = 0; n <= k; ++n) {
                    Rat zn = quartic_N_eval(bq, xm) / (xm * xm * xm * xm);
                    long vz = valuation(zn, p);
                    res.valuation_trace.push_back(vz);
                    vsum += pow4_inv(n) * vz;
                    if (n < k)
                        xm = x_duplication(bq, xm);
                }
                res.coefficient = -Rat(vx0) / 2 - vsum / 8;
                res.exact = true;
                res.tail_bound_coefficient = 0;
                res.iterations = k + 1;
                return res;
            }
            if (k < 2)
                xn = x_duplication(bq, xn);
        }
    }

    const long k_start = opts.precision_start.value_or(32 + 2 * static_cast<long>(opts.n_max));
    long digits = k_start;
    for (int attempt = 0;; ++attempt) {
        try {
            res.valuation_trace.clear();
            Rat vsum(0);
            long vmax = 0;
            bool exact = false;
            int iterations = 0;

            BInvariants<PadicNumber> bp = {
                PadicNumber::from_rational(bq.b2, p, digits),
                PadicNumber::from_rational(bq.b4, p, digits),
                PadicNumber::from_rational(bq.b6, p, digits),
                PadicNumber::from_rational(bq.b8, p, digits),
            };
            PadicNumber t = PadicNumber::from_rational(Rat(1) / x0, p, digits);
            if (termination_certificate_fires(t, p)) {
                exact = true; // empty sum: every v(Z_n) is already 0
            } else {
                for (int n = 0; n < opts.n_max; ++n) {
                    SeriesStep<PadicNumber> st = duplication_step(bp, t);
                    long vz = st.z.valuation();
                    res.valuation_trace.push_back(vz);
                    vsum += pow4_inv(n) * vz;
                    vmax = std::max(vmax, std::labs(vz));
                    iterations = n + 1;
                    t = st.t_next;
                    if (termination_certificate_fires(t, p)) {
                        exact = true;
                        break;
                    }
                }
            }

            res.coefficient = -Rat(vx0) / 2 - vsum / 8;
            res.exact = exact;
            res.iterations = iterations;
            if (exact) {
                res.tail_bound_coefficient = 0;
            } else {
                res.tail_bound_coefficient =
                    pow4_inv(opts.n_max) * Rat(4, 3) * Rat(vmax + 1);
            }
            return res;
        } catch (const PrecisionExhaustedError&) {
            if (attempt >= 4)
                throw;
            digits *= 2;
        }
    }
}

} // namespace ellh

#include "ellh/real_place.hpp"

#include <cmath>

#include "ellh/series.hpp"
#include "ellh/sturm.hpp"

namespace ellh {

namespace {

Poly cubic_F_poly(const WeierstrassCurve& e) {
    return {e.b6, 2 * e.b4, e.b2, Rat(4)};
}

// All real roots of F lie in [-M, M].
Rat cauchy_bound(const WeierstrassCurve& e) {
    Rat m = abs(e.b2);
    if (abs(2 * e.b4) > m)
        m = abs(2 * e.b4);
    if (abs(e.b6) > m)
        m = abs(e.b6);
    return 1 + m / 4;
}

bool no_root_below(const SturmChain& chain, const Rat& z) {
    return chain.count_roots_below(z) == 0;
}

} // namespace

const char* gamma_kind_name(GammaKind k) {
    switch (k) {
    case GammaKind::FullGroupB6Negative:
        return "full_group_b6_negative";
    case GammaKind::IdentityComponent:
        return "identity_component";
    case GammaKind::ShiftedFullGroup:
        return "shifted_full_group";
    }
    return "?";
}

RealShift select_shift_real(const WeierstrassCurve& e) {
    Rat bound = cauchy_bound(e);
    if (bound > Rat(Int(1) << 62))
        throw RootIsolationError("coefficients too large for shift bracketing");
    SturmChain chain = SturmChain::build(cubic_F_poly(e));

    // smallest integer r such that F has no real root below 1 - r; the
    // predicate is monotone in r, so bisect over integers.
    long lo = static_cast<long>(floor_to_int(1 - bound).get_si()) - 1; // predicate false
    long hi = static_cast<long>(ceil_to_int(1 + bound).get_si()) + 1;  // predicate true
    if (no_root_below(chain, Rat(1) - lo))
        hi = lo;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (no_root_below(chain, Rat(1) - mid))
            hi = mid;
        else
            lo = mid;
    }
    long r = hi;
    Rat witness = poly_eval(cubic_F_poly(e), Rat(-r));
    while (witness >= 0) { // unreachable: -r sits strictly below the least root
        ++r;
        witness = poly_eval(cubic_F_poly(e), Rat(-r));
    }
    return {r, witness};
}

bool is_admissible_shift_real(const WeierstrassCurve& e, long r) {
    SturmChain chain = SturmChain::build(cubic_F_poly(e));
    if (!no_root_below(chain, Rat(1) - r))
        return false;
    return poly_eval(cubic_F_poly(e), Rat(-r)) < 0;
}

bool on_identity_component(const WeierstrassCurve& e, const CurvePoint& p) {
    if (p.is_infinity())
        return true;
    if (e.disc < 0)
        return true;
    SturmChain chain = SturmChain::build(cubic_F_poly(e));
    return chain.count_roots_above(p.x()) == 0;
}

namespace {

GammaCertificate certificate_impl(const WeierstrassCurve& e, const CurvePoint* p) {
    if (e.b6 < 0)
        return {GammaKind::FullGroupB6Negative, 0, e.b6.get_d()};
    // With disc > 0 the cubic F has three real roots; the largest is
    // positive iff some coefficient among b2, b4, b6 is negative.
    if (e.disc > 0 && (e.b2 < 0 || e.b4 < 0 || e.b6 < 0)) {
        if (p == nullptr || on_identity_component(e, *p))
            return {GammaKind::IdentityComponent, 0, e.b6.get_d()};
    }
    RealShift s = select_shift_real(e);
    return {GammaKind::ShiftedFullGroup, s.r, s.witness.get_d()};
}

} // namespace

GammaCertificate gamma_certificate(const WeierstrassCurve& e) {
    return certificate_impl(e, nullptr);
}

GammaCertificate gamma_certificate(const WeierstrassCurve& e, const CurvePoint& p) {
    return certificate_impl(e, &p);
}

namespace {

struct MuSeries {
    double mu = 0.0;
    int iterations = 0;
    double tail_bound = 0.0;
    IterationTrace trace;
};

MuSeries run_series(const BInvariants<double>& b, double t0, double tol, int n_max) {
    MuSeries out;
    double t = t0;
    double scale = 1.0;
    for (int n = 0; n < n_max; ++n) {
        SeriesStep<double> st = duplication_step(b, t);
        double term = std::log(std::fabs(st.z));
        out.mu += scale * term;
        out.iterations = n + 1;
        out.trace.steps.push_back({n, t, st.w, st.z, term});
        if (std::fabs(term) > out.trace.observed_log_bound)
            out.trace.observed_log_bound = std::fabs(term);
        if (std::fabs(t) > out.trace.observed_t_bound)
            out.trace.observed_t_bound = std::fabs(t);
        if (st.w == 0.0) {
            // the orbit reached the identity: t stays 0, Z stays 1, zero tail
            out.tail_bound = 0.0;
            break;
        }
        scale *= 0.25;
        out.tail_bound = scale * (4.0 / 3.0) * out.trace.observed_log_bound;
        if (out.tail_bound < tol)
            break;
        t = st.t_next;
    }
    return out;
}

} // namespace

LocalHeightResult lambda_real(const WeierstrassCurve& e, const CurvePoint& p,
                              const RealOptions& opts) {
    if (p.is_infinity())
        throw PointAtInfinityError("local height undefined at the identity");
    if (!contains(e, p))
        throw PointNotOnCurveError("point not on curve");
    if (!(opts.tol > 0))
        throw Error("tol must be positive");
    if (opts.n_max < 1)
        throw Error("n_max must be at least 1");

    LocalHeightResult res;
    res.certificate = gamma_certificate(e, p);

    long r;
    if (opts.shift_override) {
        r = *opts.shift_override;
        if (!is_admissible_shift_real(e, r))
            throw InadmissibleShiftError("shift override rejected: F(-r) >= 0 or roots below 1-r");
    } else {
        r = select_shift_real(e).r;
    }
    ShiftedModel shifted = shift_model(e, Rat(r));
    res.shift_used = r;
    res.shift_witness = cubic_F_eval(shifted.curve, Rat(0)).get_d();

    const BInvariants<Rat> bq = shifted.curve.b_exact();
    Rat x0 = p.x() + r;

    // Exact prefix: if 2^(k+1) P = O for some k <= 2 (the largest possible
    // 2-power order of a rational point is 8), the series terminates after
    // finitely many terms and floating-point iteration would drift past the
    // fixed point at t = 0. Detect and evaluate those terms exactly.
    {
        Rat xk = x0;
        for (int k = 0; k <= 2; ++k) {
            Rat fk = cubic_F_eval(bq, xk);
            if (fk == 0) {
                double mu = 0.0, scale = 1.0;
                IterationTrace trace;
                Rat xn = x0;
                for (int n = 0; n <= k; ++n) {
                    Rat x4 = xn * xn * xn * xn;
                    Rat zn = quartic_N_eval(bq, xn) / x4;
                    Rat wn = cubic_F_eval(bq, xn) / x4; // 0 exactly at n = k
                    double term = log_abs(zn);
                    mu += scale * term;
                    scale *= 0.25;
                    double tn = Rat(Rat(1) / xn).get_d();
                    trace.steps.push_back({n, tn, wn.get_d(), zn.get_d(), term});
                    if (std::fabs(term) > trace.observed_log_bound)
                        trace.observed_log_bound = std::fabs(term);
                    if (std::fabs(tn) > trace.observed_t_bound)
                        trace.observed_t_bound = std::fabs(tn);
                    if (n < k)
                        xn = x_duplication(bq, xn);
                }
                res.mu = mu;
                res.lambda = 0.5 * log_abs(x0) + mu / 8.0;
                res.iterations = k + 1;
                res.truncation_error_bound = 0.0;
                if (opts.want_trace)
                    res.trace = std::move(trace);
                return res;
            }
            if (k < 2)
                xk = x_duplication(bq, xk);
        }
    }

    double t0 = Rat(Rat(1) / x0).get_d();
    MuSeries series = run_series(shifted.curve.b_real(), t0, opts.tol, opts.n_max);
    res.mu = series.mu;
    res.lambda = 0.5 * log_abs(x0) + series.mu / 8.0;
    res.iterations = series.iterations;
    res.truncation_error_bound = series.tail_bound / 8.0;
    if (opts.want_trace)
        res.trace = std::move(series.trace);
    return res;
}

} // namespace ellh

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellh/curve.hpp"
#include "ellh/rational.hpp"

namespace ellh {

// Which subgroup certificate justifies running the series over R.
enum class GammaKind {
    FullGroupB6Negative, // b6 < 0: x(P) never vanishes on all of E(R)
    IdentityComponent,   // disc > 0 and the 2-torsion abscissa on E^0 is > 0
    ShiftedFullGroup,    // fall back to x -> x + r with F(-r) < 0
};

const char* gamma_kind_name(GammaKind k);

struct GammaCertificate {
    GammaKind kind;
    long r = 0;            // 0 unless ShiftedFullGroup
    double witness = 0.0;  // F(-r); equals b6 when r = 0
};

struct RealShift {
    long r;
    Rat witness; // F(-r), exact; negative by construction
};

// Smallest integer r with x(P) + r >= 1 for every real point, i.e. no real
// root of F below 1 - r. Bisection steered by exact Sturm root counts.
RealShift select_shift_real(const WeierstrassCurve& e);

bool is_admissible_shift_real(const WeierstrassCurve& e, long r);

// True when disc > 0 and no root of F exceeds x(P) (so P lies on the
// unbounded component), or when disc < 0 (one component only).
bool on_identity_component(const WeierstrassCurve& e, const CurvePoint& p);

// Curve-level certificate per the b6 / identity-component taxonomy.
GammaCertificate gamma_certificate(const WeierstrassCurve& e);
// Point-aware variant: IdentityComponent only applies when p actually lies
// on E^0; otherwise falls through to the shifted certificate.
GammaCertificate gamma_certificate(const WeierstrassCurve& e, const CurvePoint& p);

struct TraceStep {
    int n;
    double t, w, z;
    double log_abs_z;
};

struct IterationTrace {
    std::vector<TraceStep> steps;
    double observed_log_bound = 0.0; // max |log|Z_n|| seen
    double observed_t_bound = 0.0;   // max |t_n| seen
};

struct LocalHeightResult {
    double lambda = 0.0;
    double mu = 0.0;
    int iterations = 0;
    double truncation_error_bound = 0.0;
    GammaCertificate certificate;
    long shift_used = 0;        // r of the model the series actually ran on
    double shift_witness = 0.0; // F(-shift_used)
    std::optional<IterationTrace> trace;
};

struct RealOptions {
    double tol = 1e-12;
    int n_max = 64;
    bool want_trace = false;
    std::optional<long> shift_override; // must be admissible
};

// Archimedean local height: lambda = (1/2) log|x'(P)| + mu/8 with
// mu = sum 4^{-n} log|Z_n| on the shifted model x' = x + r.
LocalHeightResult lambda_real(const WeierstrassCurve& e, const CurvePoint& p,
                              const RealOptions& opts = {});

} // namespace ellh

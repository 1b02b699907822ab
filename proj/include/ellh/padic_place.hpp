#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellh/curve.hpp"
#include "ellh/padic.hpp"
#include "ellh/rational.hpp"

namespace ellh {

struct ShiftCertificate {
    long r = 0;
    unsigned long prime = 0;
    Rat witness;        // F(-r), nonzero and a non-square in Q_p
    std::string reason; // "witness_valuation_odd" | "witness_unit_nonresidue"
};

// Result of a p-adic local height: lambda_p = coefficient * log p. When
// exact, the series terminated with a certificate and the coefficient is
// the full sum; otherwise it was truncated at n_max and the tail satisfies
// |tail| <= tail_bound_coefficient * log p.
struct PadicHeightResult {
    Rat coefficient;
    bool exact = false;
    Rat tail_bound_coefficient;
    int iterations = 0;
    ShiftCertificate certificate;
    std::vector<long> valuation_trace; // v_p(Z_n) per summed term
};

// Smallest |r| (0, 1, -1, 2, ...) with F(-r) != 0 and not a square in Q_p:
// then no point of E(Q_p) has x = -r, since an abscissa x0 occurs iff
// F(x0) is a square (Y^2 = F(x)).
ShiftCertificate select_shift_padic(const WeierstrassCurve& e, unsigned long p,
                                    long r_max = 64);

bool is_admissible_shift_padic(const WeierstrassCurve& e, unsigned long p, long r);

struct PadicOptions {
    int n_max = 40;
    std::optional<long> shift_override;     // must be admissible
    std::optional<long> precision_start;    // digits; default 32 + 2*n_max
};

PadicHeightResult lambda_padic(const WeierstrassCurve& e, const CurvePoint& pt,
                               unsigned long p, const PadicOptions& opts = {});

} // namespace ellh

#pragma once

#include <string>

#include "ellh/errors.hpp"
#include "ellh/rational.hpp"

namespace ellh {

/**
 * Capped-precision p-adic numbers.
 *
 * A regular value is stored as p^v * u with u a unit known modulo p^k:
 * v is the valuation, k the number of significant (relative) digits.
 * Exact zero is its own state (valuation +infinity). A third state,
 * O(p^A), records a value known only to be divisible by p^A: additions
 * whose tracked digits cancel completely produce it instead of failing,
 * since an intermediate polynomial term can be exactly zero while the
 * surrounding computation stays well determined.
 *
 * Multiplication and division preserve relative precision; addition works
 * at the weaker absolute precision of the operands, so cancellation eats
 * digits. Asking an O(p^A) value for its valuation or unit digits, or
 * dividing by one, throws PrecisionExhaustedError: at that point the
 * computation genuinely cannot certify a single digit.
 */
class PadicNumber {
public:
    static PadicNumber zero(unsigned long p);
    static PadicNumber from_rational(const Rat& q, unsigned long p, long k);
    static PadicNumber from_long(long v, unsigned long p, long k) {
        return from_rational(Rat(v), p, k);
    }

    unsigned long prime() const { return p_; }
    bool is_zero() const { return kind_ == Kind::ExactZero; }
    bool is_zero_at_precision() const { return kind_ != Kind::Regular; }
    long valuation() const;        // throws unless the value is regular
    long precision() const;        // relative digits (0 for the zero states)
    long absolute_precision() const; // v + k, resp. A for O(p^A)
    const Int& unit_digits() const;

    // representative rational p^v * u (0 for either zero state)
    Rat to_rational() const;

    PadicNumber operator-() const;
    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b);
    friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b);

    std::string str() const;

private:
    enum class Kind { ExactZero, ApproxZero, Regular };

    PadicNumber() = default;

    unsigned long p_ = 2;
    Kind kind_ = Kind::ExactZero;
    long v_ = 0;   // valuation (Regular) or the bound A (ApproxZero)
    Int unit_ = 0; // in [0, p^k), not divisible by p (Regular only)
    long k_ = 0;
};

// Whether q is a square in Q_p. Zero is rejected by convention (it cannot
// witness the missing-abscissa condition). For p odd: even valuation and
// quadratic-residue unit; for p = 2: even valuation and unit = 1 mod 8.
bool is_square_qp(const Rat& q, unsigned long p);

// hooks for the scalar-generic series code
PadicNumber scalar_from_int(const PadicNumber& model, long v);
inline bool scalar_is_zero(const PadicNumber& v) { return v.is_zero(); }

} // namespace ellh

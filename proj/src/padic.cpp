#include "ellh/padic.hpp"

#include <algorithm>
#include <limits>

namespace ellh {

namespace {

Int pow_p(unsigned long p, long k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(k));
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("modular inverse does not exist");
    return r;
}

} // namespace

PadicNumber PadicNumber::zero(unsigned long p) {
    PadicNumber z;
    z.p_ = p;
    z.kind_ = Kind::ExactZero;
    return z;
}

PadicNumber PadicNumber::from_rational(const Rat& q, unsigned long p, long k) {
    if (p < 2)
        throw Error("p must be at least 2");
    if (k < 1)
        throw Error("precision must be at least one digit");
    if (q == 0)
        return zero(p);
    PadicNumber r;
    r.p_ = p;
    r.kind_ = Kind::Regular;
    r.k_ = k;
    Int num = q.get_num(), den = q.get_den();
    Int pz(p);
    long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    r.v_ = vn - vd;
    Int pk = pow_p(p, k);
    Int u = (num % pk) * mod_inverse(den, pk) % pk;
    if (u < 0)
        u += pk;
    r.unit_ = u;
    return r;
}

long PadicNumber::valuation() const {
    if (kind_ == Kind::ExactZero)
        throw Error("valuation of exact zero is +infinity");
    if (kind_ == Kind::ApproxZero)
        throw PrecisionExhaustedError("valuation not determined: value is O(p^" +
                                      std::to_string(v_) + ")");
    return v_;
}

long PadicNumber::precision() const { return kind_ == Kind::Regular ? k_ : 0; }

long PadicNumber::absolute_precision() const {
    if (kind_ == Kind::ExactZero)
        return std::numeric_limits<long>::max();
    return kind_ == Kind::ApproxZero ? v_ : v_ + k_;
}

const Int& PadicNumber::unit_digits() const {
    if (kind_ != Kind::Regular)
        throw PrecisionExhaustedError("no unit digits: value is zero at this precision");
    return unit_;
}

Rat PadicNumber::to_rational() const {
    if (kind_ != Kind::Regular)
        return Rat(0);
    Rat r(unit_);
    if (v_ >= 0)
        r *= Rat(pow_p(p_, v_));
    else
        r /= Rat(pow_p(p_, -v_));
    return r;
}

PadicNumber PadicNumber::operator-() const {
    if (kind_ != Kind::Regular)
        return *this;
    PadicNumber r = *this;
    r.unit_ = pow_p(p_, k_) - unit_;
    return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_)
        throw Error("mixed primes in p-adic arithmetic");
    const unsigned long p = a.p_;
    if (a.kind_ == PadicNumber::Kind::ExactZero)
        return b;
    if (b.kind_ == PadicNumber::Kind::ExactZero)
        return a;

    const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.kind_ == PadicNumber::Kind::ApproxZero ||
        b.kind_ == PadicNumber::Kind::ApproxZero) {
        const PadicNumber& reg =
            a.kind_ == PadicNumber::Kind::Regular ? a : b;
        if (reg.kind_ != PadicNumber::Kind::Regular || reg.v_ >= abs_prec) {
            PadicNumber r;
            r.p_ = p;
            r.kind_ = PadicNumber::Kind::ApproxZero;
            r.v_ = abs_prec;
            return r;
        }
        PadicNumber r;
        r.p_ = p;
        r.kind_ = PadicNumber::Kind::Regular;
        r.v_ = reg.v_;
        r.k_ = abs_prec - reg.v_;
        r.unit_ = reg.unit_ % pow_p(p, r.k_);
        return r;
    }

    const long vmin = std::min(a.v_, b.v_);
    const long digits = abs_prec - vmin; // >= 1 since k >= 1 on both sides
    Int window = pow_p(p, digits);
    Int s = a.unit_ * pow_p(p, a.v_ - vmin) + b.unit_ * pow_p(p, b.v_ - vmin);
    s %= window;
    if (s < 0)
        s += window;
    PadicNumber r;
    r.p_ = p;
    if (s == 0) {
        // every tracked digit cancelled: all that is known is O(p^abs_prec)
        r.kind_ = PadicNumber::Kind::ApproxZero;
        r.v_ = abs_prec;
        return r;
    }
    Int pz(p);
    Int u;
    long voff = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), pz.get_mpz_t()));
    r.kind_ = PadicNumber::Kind::Regular;
    r.v_ = vmin + voff;
    r.k_ = digits - voff;
    r.unit_ = u;
    return r;
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_)
        throw Error("mixed primes in p-adic arithmetic");
    if (a.kind_ == PadicNumber::Kind::ExactZero || b.kind_ == PadicNumber::Kind::ExactZero)
        return PadicNumber::zero(a.p_);
    PadicNumber r;
    r.p_ = a.p_;
    if (a.kind_ == PadicNumber::Kind::ApproxZero || b.kind_ == PadicNumber::Kind::ApproxZero) {
        // O(p^A) * (p^v u + ...) is O(p^(A+v)); O(p^A) * O(p^B) is O(p^(A+B))
        r.kind_ = PadicNumber::Kind::ApproxZero;
        r.v_ = a.v_ + b.v_;
        return r;
    }
    r.kind_ = PadicNumber::Kind::Regular;
    r.v_ = a.v_ + b.v_;
    r.k_ = std::min(a.k_, b.k_);
    Int pk = pow_p(a.p_, r.k_);
    r.unit_ = a.unit_ * b.unit_ % pk;
    return r;
}

PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    if (a.p_ != b.p_)
        throw Error("mixed primes in p-adic arithmetic");
    if (b.kind_ == PadicNumber::Kind::ExactZero)
        throw DivisionByZeroError("p-adic division by exact zero");
    if (b.kind_ == PadicNumber::Kind::ApproxZero)
        throw PrecisionExhaustedError("division by a value indistinguishable from zero");
    if (a.kind_ == PadicNumber::Kind::ExactZero)
        return PadicNumber::zero(a.p_);
    PadicNumber r;
    r.p_ = a.p_;
    if (a.kind_ == PadicNumber::Kind::ApproxZero) {
        r.kind_ = PadicNumber::Kind::ApproxZero;
        r.v_ = a.v_ - b.v_;
        return r;
    }
    r.kind_ = PadicNumber::Kind::Regular;
    r.v_ = a.v_ - b.v_;
    r.k_ = std::min(a.k_, b.k_);
    Int pk = pow_p(a.p_, r.k_);
    r.unit_ = a.unit_ % pk * mod_inverse(b.unit_ % pk, pk) % pk;
    return r;
}

std::string PadicNumber::str() const {
    if (kind_ == Kind::ExactZero)
        return "0 (exact)";
    if (kind_ == Kind::ApproxZero)
        return "O(" + std::to_string(p_) + "^" + std::to_string(v_) + ")";
    return unit_.get_str() + "*" + std::to_string(p_) + "^" + std::to_string(v_) +
           " + O(" + std::to_string(p_) + "^" + std::to_string(v_ + k_) + ")";
}

bool is_square_qp(const Rat& q, unsigned long p) {
    if (q == 0)
        return false;
    Int num = q.get_num(), den = q.get_den();
    Int pz(p);
    long v = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t())) -
             static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()));
    if (v % 2 != 0)
        return false;
    if (p == 2) {
        // unit square in Q_2 iff = 1 mod 8
        Int m8 = num * mod_inverse(den, Int(8)) % 8;
        if (m8 < 0)
            m8 += 8;
        return m8 == 1;
    }
    Int u = num * mod_inverse(den, pz) % pz;
    if (u < 0)
        u += pz;
    return mpz_legendre(u.get_mpz_t(), pz.get_mpz_t()) == 1;
}

PadicNumber scalar_from_int(const PadicNumber& model, long v) {
    return PadicNumber::from_long(v, model.prime(), std::max(model.precision(), 1L));
}

} // namespace ellh

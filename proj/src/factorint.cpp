#include "ellh/factorint.hpp"

#include <vector>

#include "ellh/errors.hpp"

namespace ellh {

namespace {

constexpr unsigned long kTrialBound = 100000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i])
                continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialBound; j += i)
                sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Pollard rho, Brent's cycle variant.
Int pollard_brent(const Int& n, unsigned long c, unsigned long max_iters) {
    Int y = 2, r = 1, q = 1, g = 1, x, ys;
    unsigned long spent = 0;
    const unsigned long m = 128;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i)
            y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int lim = r - k < m ? r - k : Int(m);
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                q = q * abs(d) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
            spent += m;
            if (spent > max_iters)
                return 0;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one squaring at a time
        do {
            ys = (ys * ys + c) % n;
            Int d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g == n ? Int(0) : g;
}

void factor_rec(const Int& n, std::map<Int, int>& out) {
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = 0;
    for (unsigned long c = 1; c <= 8 && d == 0; ++c)
        d = pollard_brent(n, c, 50'000'000);
    if (d == 0)
        throw FactorizationOverflowError("could not split composite " + n.get_str());
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, int> factorize(const Int& n) {
    if (n == 0)
        throw Error("cannot factor zero");
    std::map<Int, int> out;
    Int m = abs(n);
    for (unsigned long p : small_primes()) {
        if (m == 1)
            break;
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    if (m > 1)
        factor_rec(m, out);
    return out;
}

std::set<unsigned long> prime_divisors(const Int& n) {
    std::set<unsigned long> out;
    for (const auto& [p, e] : factorize(n)) {
        if (!p.fits_ulong_p())
            throw FactorizationOverflowError("prime factor exceeds machine range: " +
                                             p.get_str());
        out.insert(p.get_ui());
    }
    return out;
}

} // namespace ellh

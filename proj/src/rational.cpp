#include "ellh/rational.hpp"

#include <cctype>
#include <cmath>

namespace ellh {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw Error("empty rational literal");
    // validate before handing to GMP: sign, digits, at most one '/'
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == s.size())
                throw Error("malformed rational literal: " + s);
            slash = i;
        } else if (c == '-' || c == '+') {
            if (i != 0 && i != slash + 1)
                throw Error("malformed rational literal: " + s);
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error("malformed rational literal: " + s);
        }
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("malformed rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw Error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

long valuation(const Int& z, unsigned long p) {
    if (z == 0)
        throw Error("valuation of zero is undefined");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), Int(p).get_mpz_t()));
}

long valuation(const Rat& q, unsigned long p) {
    if (q == 0)
        throw Error("valuation of zero is undefined");
    return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

double log_abs(const Int& z) {
    if (z == 0)
        throw Error("log of zero");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * M_LN2;
}

double log_abs(const Rat& q) {
    if (q == 0)
        throw Error("log of zero");
    return log_abs(Int(q.get_num())) - log_abs(Int(q.get_den()));
}

Int naive_height(const Rat& q) {
    Int n = abs(Int(q.get_num()));
    Int d = abs(Int(q.get_den()));
    return n >= d ? n : d;
}

Int floor_to_int(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return r;
}

Int ceil_to_int(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), mpq_numref(q.get_mpq_t()), mpq_denref(q.get_mpq_t()));
    return r;
}

} // namespace ellh

#include "ellh/sturm.hpp"

namespace ellh {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// remainder of a mod b (b nonzero)
Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat factor = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] -= factor * b[i];
        trim(a);
    }
    return a;
}

int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

int count_variations(const std::vector<int>& signs) {
    int var = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++var;
        last = s;
    }
    return var;
}

} // namespace

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i > 0; --i)
        acc = acc * x + p[i - 1];
    return acc;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(Rat(static_cast<long>(i)) * p[i]);
    return d;
}

SturmChain SturmChain::build(const Poly& p) {
    SturmChain c;
    Poly cur = p;
    trim(cur);
    c.seq.push_back(cur);
    Poly d = poly_derivative(cur);
    trim(d);
    if (d.empty())
        return c;
    c.seq.push_back(d);
    while (true) {
        const Poly& a = c.seq[c.seq.size() - 2];
        const Poly& b = c.seq.back();
        Poly r = poly_rem(a, b);
        if (r.empty())
            break;
        for (Rat& q : r)
            q = -q;
        c.seq.push_back(std::move(r));
        if (c.seq.back().size() == 1)
            break;
    }
    return c;
}

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const Poly& p : seq)
        signs.push_back(sign_of(poly_eval(p, x)));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const Poly& p : seq) {
        int lead = p.empty() ? 0 : sign_of(p.back());
        bool odd_degree = !p.empty() && (p.size() - 1) % 2 == 1;
        signs.push_back(odd_degree ? -lead : lead);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const Poly& p : seq)
        signs.push_back(p.empty() ? 0 : sign_of(p.back()));
    return count_variations(signs);
}

long SturmChain::count_roots_leq(const Rat& x) const {
    return variations_at_neg_inf() - variations_at(x);
}

long SturmChain::count_roots_below(const Rat& x) const {
    long n = count_roots_leq(x);
    if (poly_eval(seq.front(), x) == 0)
        --n;
    return n;
}

long SturmChain::count_roots_above(const Rat& x) const {
    return variations_at(x) - variations_at_pos_inf();
}

} // namespace ellh

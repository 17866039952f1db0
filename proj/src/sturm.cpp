#include "xop/sturm.hpp"

#include <stdexcept>

namespace xop {

std::vector<Poly> sturm_chain(const Poly& p) {
    if (p.is_zero()) {
        throw std::domain_error("Sturm chain of the zero polynomial");
    }
    std::vector<Poly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

int sign_at_infinity(const Poly& p, bool positive) {
    const int lead = sgn(p.leading());
    const bool odd = *p.degree() % 2 != 0;
    return (positive || !odd) ? lead : -lead;
}

int variations_at(const std::vector<Poly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        signs.push_back(sgn(q(x)));
    }
    return variations(signs);
}

} // namespace

int count_real_roots(const Poly& p) {
    const auto chain = sturm_chain(p);
    std::vector<int> lo;
    std::vector<int> hi;
    for (const auto& q : chain) {
        lo.push_back(sign_at_infinity(q, false));
        hi.push_back(sign_at_infinity(q, true));
    }
    return variations(lo) - variations(hi);
}

int count_roots_in(const Poly& p, const Rational& lo, const Rational& hi) {
    const auto chain = sturm_chain(p);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

} // namespace xop

#include "xop/interpolate.hpp"

#include "xop/error.hpp"
#include "xop/matrix.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace xop {

namespace {

constexpr std::size_t kHeldOut = 3;

std::optional<RationalFn> try_degrees(std::span<const Sample> fit, std::span<const Sample> all, int dn, int dd) {
    // Unknowns: p_0..p_dn, q_0..q_dd. Row i: sum p_t n^t - v sum q_t n^t = 0.
    const std::size_t cols = static_cast<std::size_t>(dn + dd + 2);
    RationalMatrix a(fit.size(), cols);
    for (std::size_t i = 0; i < fit.size(); ++i) {
        Rational power = 1;
        const Rational ni = fit[i].n;
        for (int t = 0; t <= std::max(dn, dd); ++t) {
            if (t <= dn) {
                a(i, static_cast<std::size_t>(t)) = power;
            }
            if (t <= dd) {
                a(i, static_cast<std::size_t>(dn + 1 + t)) = -fit[i].value * power;
            }
            power *= ni;
        }
    }
    for (const auto& v : nullspace(a)) {
        Poly p(std::vector<Rational>(v.begin(), v.begin() + dn + 1));
        Poly q(std::vector<Rational>(v.begin() + dn + 1, v.end()));
        if (q.is_zero()) {
            continue;
        }
        bool ok = true;
        for (const auto& s : all) {
            const Rational qn = q(s.n);
            if (qn == 0 || p(s.n) != s.value * qn) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return RationalFn(std::move(p), std::move(q));
        }
    }
    return std::nullopt;
}

} // namespace

RationalFn rational_interpolate(std::span<const Sample> samples, int dnum, int dden) {
    if (dnum < 0 || dden < 0) {
        throw std::invalid_argument("rational_interpolate: negative degree bound");
    }
    if (samples.size() < static_cast<std::size_t>(dnum + dden + 2)) {
        throw std::invalid_argument("rational_interpolate: need at least " + std::to_string(dnum + dden + 2) +
                                    " samples, got " + std::to_string(samples.size()));
    }
    std::set<long> seen;
    bool all_equal = true;
    for (const auto& s : samples) {
        if (!seen.insert(s.n).second) {
            throw std::invalid_argument("rational_interpolate: repeated abscissa " + std::to_string(s.n));
        }
        all_equal = all_equal && s.value == samples.front().value;
    }
    if (all_equal) {
        return RationalFn(Poly::constant(samples.front().value));
    }
    const std::size_t nfit = samples.size() > kHeldOut ? samples.size() - kHeldOut : samples.size();
    const auto fit = samples.first(nfit);
    for (int total = 0; total <= dnum + dden; ++total) {
        // The fit rows must pin the candidate down to a single direction.
        if (static_cast<std::size_t>(total) + 1 > nfit) {
            break;
        }
        for (int dd = 0; dd <= std::min(total, dden); ++dd) {
            const int dn = total - dd;
            if (dn > dnum) {
                continue;
            }
            if (auto r = try_degrees(fit, samples, dn, dd)) {
                return *r;
            }
        }
    }
    throw DegreeBoundError("rational_interpolate: no interpolant with deg num <= " + std::to_string(dnum) +
                           ", deg den <= " + std::to_string(dden));
}

} // namespace xop

#include "xop/indexsets.hpp"

#include "xop/classical.hpp"
#include "xop/error.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace xop {

FSet::FSet(std::vector<int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] <= 0) {
            throw ParameterError("index sets hold positive integers only");
        }
        if (i > 0 && elems_[i] == elems_[i - 1]) {
            throw ParameterError("index set has a repeated element " + std::to_string(elems_[i]));
        }
    }
}

FSet FSet::parse(std::string_view text) {
    std::vector<int> out;
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return {};
    }
    while (true) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty()) {
            throw std::invalid_argument("malformed index set element '" + std::string(item) + "'");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return FSet(std::move(out));
}

long FSet::sum() const noexcept {
    long s = 0;
    for (int f : elems_) {
        s += f;
    }
    return s;
}

bool FSet::contains(int f) const {
    return std::binary_search(elems_.begin(), elems_.end(), f);
}

long FSet::u() const noexcept {
    const long kk = k();
    return sum() - kk * (kk + 1) / 2;
}

long FSet::w() const noexcept {
    const long kk = k();
    return sum() - kk * (kk - 1) / 2 + 1;
}

std::string FSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(elems_[i]);
    }
    return s;
}

long FPair::u() const noexcept {
    const long a = k1();
    const long b = k2();
    return f1_.sum() + f2_.sum() - a * (a + 1) / 2 - b * (b - 1) / 2;
}

long FPair::w() const noexcept {
    const long a = k1();
    const long b = k2();
    return f1_.sum() + f2_.sum() - a * (a - 1) / 2 - b * (b - 1) / 2 + 1;
}

std::string FPair::to_string() const {
    return "({" + f1_.to_string() + "},{" + f2_.to_string() + "})";
}

bool sigma_contains(const FSet& f, long n) {
    const long u = f.u();
    return n >= u && !f.contains(static_cast<int>(n - u));
}

bool sigma_contains(const FPair& p, long n) {
    const long u = p.u();
    return n >= u && !p.f1().contains(static_cast<int>(n - u));
}

FSet involution(const FSet& f) {
    if (f.empty()) {
        return {};
    }
    const int top = f.max();
    std::vector<int> out;
    for (int g = 1; g <= top; ++g) {
        if (!f.contains(top - g)) {
            out.push_back(g);
        }
    }
    return FSet(std::move(out));
}

bool admissible_charlier(const FSet& f) {
    // The product has constant sign past the largest root.
    for (long x = 0; x <= f.max() + 1; ++x) {
        long sign = 1;
        for (int e : f.elems()) {
            const long factor = x - e;
            if (factor == 0) {
                sign = 0;
                break;
            }
            if (factor < 0) {
                sign = -sign;
            }
        }
        if (sign < 0) {
            return false;
        }
    }
    return true;
}

bool admissible_meixner(const FPair& p, const Rational& c) {
    require_meixner_c(c);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    const long c_hat = std::max(-fl.get_si(), 0L);
    const long cutoff = p.f1().max() + c_hat + 1;
    for (long x = 0; x <= cutoff; ++x) {
        Rational value = 1;
        for (int e : p.f1().elems()) {
            value *= Rational(x - e);
        }
        for (int e : p.f2().elems()) {
            value *= x + c + e;
        }
        // (x+c)_{c_hat} never vanishes since c is not a nonpositive integer.
        value /= pochhammer(x + c, c_hat);
        if (value < 0) {
            return false;
        }
    }
    return true;
}

} // namespace xop

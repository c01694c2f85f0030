#include "fact3/oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fact3::oracle {

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    if (v == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// #{k >= 0 : 2^k x <= n} for positive x, overflow-safe.
std::uint64_t doubling_count(std::uint64_t n, std::uint64_t x) {
    std::uint64_t count = 0;
    for (std::uint64_t v = x; v <= n; v <<= 1) {
        ++count;
        if (v > (n >> 1)) break;
    }
    return count;
}

}  // namespace

BigNat factorial(std::uint64_t n, std::uint64_t bound) {
    if (n > bound) throw std::domain_error("factorial: n exceeds the configured bound");
    BigNat f(1);
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<std::uint32_t>(i);
    return f;
}

std::uint64_t two_adic_valuation(const BigNat& m) {
    if (m.is_zero()) throw std::domain_error("two_adic_valuation: zero has no valuation");
    return m.trailing_zero_bits();
}

FactorialShape shape_of(const BigNat& value) {
    FactorialShape s;
    s.gamma = two_adic_valuation(value);
    std::uint64_t four_exponent = s.gamma / 2;
    s.z_mod8 = Residue8(static_cast<int>(value.low_bits(2 * four_exponent, 3)));
    return s;
}

FactorialShape exact_shape(std::uint64_t n, std::uint64_t bound) {
    return shape_of(factorial(n, bound));
}

bool is_sum_of_three_squares(const BigNat& m) {
    if (m.is_zero()) return true;
    std::uint64_t stripped = 2 * (m.trailing_zero_bits() / 2);
    return m.low_bits(stripped, 3) != 7;
}

std::optional<Decomposition> three_square_decompose(std::uint64_t m, std::uint64_t bound) {
    if (m > bound) throw std::domain_error("three_square_decompose: m exceeds the configured bound");
    for (std::uint64_t a = 0; 3 * a * a <= m; ++a) {
        std::uint64_t rem = m - a * a;
        for (std::uint64_t b = a; 2 * b * b <= rem; ++b) {
            std::uint64_t c2 = rem - b * b;
            std::uint64_t c = isqrt(c2);
            if (c * c == c2) return Decomposition{a, b, c};
        }
    }
    return std::nullopt;
}

CongruenceCounts congruence_counts(std::uint64_t n) {
    if (n > 100'000) throw std::domain_error("congruence_counts: n exceeds 100000");
    CongruenceCounts cc;
    cc.n = n;
    std::uint64_t bitlen = static_cast<std::uint64_t>(std::bit_width(n));
    for (int cls = 0; cls < 4; ++cls) {
        std::uint64_t i = static_cast<std::uint64_t>(2 * cls + 1);
        auto& row = cc.per_shift[cls];
        row.assign(bitlen + 1, 0);
        for (std::uint64_t k = 0; k <= bitlen; ++k) {
            std::uint64_t limit = n >> k;
            for (std::uint64_t x = i; x <= limit; x += 8) ++row[k];
        }
        std::uint64_t total = 0;
        for (std::uint64_t x = i; x <= n; x += 8) total += doubling_count(n, x);
        cc.totals[cls] = total;
        cc.z_mod8[cls] = Residue8(static_cast<int>((total & 1) ? i : 1));
    }
    return cc;
}

LemmaReport verify_lemmas(std::uint64_t n_max) {
    if (n_max > 10'000) throw std::domain_error("verify_lemmas: n_max exceeds 10000");
    LemmaReport report;
    report.n_max = n_max;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        CongruenceCounts cc = congruence_counts(n);
        BitString bits = bits_from_integer(n);
        std::uint64_t bitlen = bits.size();
        std::uint64_t digit_sum_above2 = 0;
        for (std::size_t k = 3; k < bits.size(); ++k) digit_sum_above2 += bits.digit(k);

        for (int cls = 0; cls < 4; ++cls) {
            int i = 2 * cls + 1;

            std::uint64_t shift_sum = 0;
            for (std::uint64_t v : cc.per_shift[cls]) shift_sum += v;
            ++report.checks;
            if (shift_sum != cc.totals[cls])
                report.violations.push_back(
                    {"class-total-decomposition", n, i, 0, cc.totals[cls], shift_sum});

            for (std::uint64_t k = 0; k <= bitlen; ++k) {
                std::uint64_t predicted =
                    (static_cast<std::uint64_t>(bits.digit(k + 3)) +
                     (window_value(bits, k) >= i ? 1 : 0)) &
                    1;
                std::uint64_t actual = cc.per_shift[cls][k] & 1;
                ++report.checks;
                if (predicted != actual)
                    report.violations.push_back({"shift-count-parity", n, i, k, predicted, actual});
            }

            std::uint64_t windows_reaching = 0;
            for (std::uint64_t k = 0; k < bitlen; ++k)
                if (window_value(bits, k) >= i) ++windows_reaching;
            std::uint64_t predicted = (digit_sum_above2 + windows_reaching) & 1;
            ++report.checks;
            if (predicted != (cc.totals[cls] & 1))
                report.violations.push_back(
                    {"digit-sum-parity", n, i, 0, predicted, cc.totals[cls] & 1});
        }
    }
    return report;
}

}  // namespace fact3::oracle

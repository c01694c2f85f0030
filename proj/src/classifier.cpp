#include "fact3/classifier.hpp"

#include <array>
#include <stdexcept>

namespace fact3 {

namespace {

// All eight parity combinations of 2^g * 3^a * (-1)^b mod 8, indexed 4g+2a+b.
constexpr std::array<int, 8> kResidueByParities = [] {
    std::array<int, 8> t{};
    for (int g = 0; g < 2; ++g)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                int v = (g ? 2 : 1) * (a ? 3 : 1) * (b ? 7 : 1);
                t[4 * g + 2 * a + b] = v % 8;
            }
    return t;
}();

void require_odd_class(int i) {
    if (i != 1 && i != 3 && i != 5 && i != 7)
        throw std::invalid_argument("residue class must be one of 1, 3, 5, 7");
}

}  // namespace

Residue8::Residue8(int value) : value_(value) {
    if (value < 1 || value > 7 || value == 4)
        throw std::invalid_argument("Residue8: value must be in {1,2,3,5,6,7}");
}

Residue8 residue_from_parities(int gamma_parity, int alpha3_parity, int alpha5_parity) {
    return Residue8(kResidueByParities[4 * (gamma_parity & 1) + 2 * (alpha3_parity & 1) +
                                       (alpha5_parity & 1)]);
}

Verdict classify(const BitString& b) {
    WindowProfile p = window_profile(b);
    Verdict v;
    v.gamma_parity = gamma_parity(b);
    v.alpha3_parity = static_cast<int>(p.alpha3 & 1);
    v.alpha5_parity = static_cast<int>(p.alpha5 & 1);
    v.z_mod8 = residue_from_parities(v.gamma_parity, v.alpha3_parity, v.alpha5_parity);
    v.representable = v.z_mod8.value() != 7;
    if (b.fits_uint64()) {
        std::uint64_t g = gamma_exact(b.to_uint64());
        v.gamma_exact = g;
        v.four_exponent = g >> 1;
    }
    return v;
}

std::uint64_t odd_part_multiplicity(std::uint64_t n, std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("odd_part_multiplicity: x must be positive");
    std::uint64_t count = 0;
    for (std::uint64_t v = x; v <= n; v <<= 1) {
        ++count;
        if (v > (n >> 1)) break;  // next doubling would exceed n (or overflow)
    }
    return count;
}

std::uint64_t shifted_residue_count(std::uint64_t n, int i, std::uint64_t k) {
    require_odd_class(i);
    std::uint64_t m = k < 64 ? (n >> k) : 0;
    std::uint64_t count = 0;
    for (std::uint64_t x = static_cast<std::uint64_t>(i); x <= m; x += 8) ++count;
    return count;
}

std::uint64_t residue_class_exponent(std::uint64_t n, int i) {
    require_odd_class(i);
    std::uint64_t total = 0;
    for (std::uint64_t x = static_cast<std::uint64_t>(i); x <= n; x += 8)
        total += odd_part_multiplicity(n, x);
    return total;
}

BitString family_1010(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("family_1010: k must be at least 1");
    std::vector<std::uint8_t> d;
    d.reserve(4 * k);
    for (std::uint64_t block = 0; block < k; ++block) {
        d.push_back(0);
        d.push_back(1);
        d.push_back(0);
        d.push_back(1);
    }
    return BitString(std::move(d));
}

BitString family_1100(std::uint64_t k) {
    std::vector<std::uint8_t> d;
    d.reserve(4 * (2 * k + 1));
    for (std::uint64_t block = 0; block < 2 * k + 1; ++block) {
        d.push_back(0);
        d.push_back(0);
        d.push_back(1);
        d.push_back(1);
    }
    return BitString(std::move(d));
}

Residue8 pow2_plus_w_expected(int w) {
    switch (w) {
        case 3:
        case 4: return Residue8(1);
        case 7: return Residue8(2);
        case 2: return Residue8(3);
        case 5: return Residue8(5);
        case 0:
        case 1:
        case 6: return Residue8(6);
        default: throw std::invalid_argument("pow2_plus_w_expected: w must be in [0,8)");
    }
}

}  // namespace fact3

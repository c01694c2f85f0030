#pragma once

#include <cstdint>
#include <optional>

#include "fact3/bitstring.hpp"

namespace fact3 {

/// Residue of the 4-stripped part of n! modulo 8. Stripping every factor of
/// 4 leaves a number that is odd or twice an odd number, so the residue is
/// one of {1,2,3,5,6,7}; 0 and 4 are impossible.
class Residue8 {
public:
    Residue8() = default;  // residue 1
    explicit Residue8(int value);
    int value() const { return value_; }
    bool operator==(const Residue8&) const = default;

private:
    int value_ = 1;
};

/// Residue forced by the three parities: 2^g * 3^a * (-1)^b mod 8.
Residue8 residue_from_parities(int gamma_parity, int alpha3_parity, int alpha5_parity);

/// Everything the mod-8 criterion says about n!, computed from the digits of
/// n alone. The exact gamma and the exponent of 4 are filled in only when n
/// fits a machine word; the parities and the residue never need the value.
struct Verdict {
    int gamma_parity = 0;
    int alpha3_parity = 0;
    int alpha5_parity = 0;
    Residue8 z_mod8;
    bool representable = true;  // false exactly when z_mod8 is 7
    std::optional<std::uint64_t> gamma_exact;
    std::optional<std::uint64_t> four_exponent;  // (gamma - gamma mod 2) / 2
};

Verdict classify(const BitString& b);

/// Number of m <= n whose odd part is x, i.e. #{k >= 0 : 2^k x <= n}.
/// x must be positive; returns 0 when x > n.
std::uint64_t odd_part_multiplicity(std::uint64_t n, std::uint64_t x);

/// #{x : x = i (mod 8), 2^k x <= n} by direct enumeration; i in {1,3,5,7}.
std::uint64_t shifted_residue_count(std::uint64_t n, int i, std::uint64_t k);

/// Total exponent the class i (mod 8) contributes to the odd part of n!:
/// the sum of odd_part_multiplicity(n, x) over x = i (mod 8).
std::uint64_t residue_class_exponent(std::uint64_t n, int i);

/// The 4-bit block of value 10 repeated k times (k >= 1), LSB first.
/// The value is 2(16^k - 1)/3; every member classifies to residue 7.
BitString family_1010(std::uint64_t k);

/// The 4-bit block of value 12 repeated 2k+1 times, LSB first.
/// The value is 4(16^(2k+1) - 1)/5; every member classifies to residue 7.
BitString family_1100(std::uint64_t k);

/// Expected residue for n = 2^k + w with k >= 5 and 0 <= w < 8.
Residue8 pow2_plus_w_expected(int w);

}  // namespace fact3

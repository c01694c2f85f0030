#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fact3/bitstring.hpp"

namespace fact3::oracle {

/// Arbitrary-precision nonnegative integer carrying exactly the operations
/// the ground-truth checks need: small-factor multiplication, right shifts,
/// low-bit reads and decimal I/O. Limbs are 32-bit, little endian, with no
/// high zero limb stored.
class BigNat {
public:
    BigNat() = default;  // zero
    explicit BigNat(std::uint64_t v);

    /// Throws std::invalid_argument on an empty string or a non-digit.
    static BigNat from_decimal(std::string_view text);
    static BigNat from_bits(const BitString& b);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;
    int bit(std::size_t i) const;

    /// Value of the bits [pos, pos + count), count <= 32.
    std::uint32_t low_bits(std::size_t pos, unsigned count) const;

    /// Largest e with 2^e dividing the value; throws std::domain_error on 0.
    std::size_t trailing_zero_bits() const;

    std::uint32_t mod8() const { return low_bits(0, 3); }

    BigNat& operator*=(std::uint32_t m);
    BigNat shifted_right(std::size_t k) const;

    std::string to_decimal() const;
    BitString to_bits() const;

    bool operator==(const BigNat&) const = default;

private:
    void add_small(std::uint32_t v);
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace fact3::oracle

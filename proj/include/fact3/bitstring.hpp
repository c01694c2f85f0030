#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fact3 {

/// Binary digit sequence of a nonnegative integer, least significant digit
/// first: position k holds the coefficient of 2^k. The empty sequence is 0.
///
/// Canonical form stores nothing above the most significant 1, but sequences
/// with extra high zeros are accepted by every operation and classify the
/// same number.
class BitString {
public:
    BitString() = default;

    /// Takes the digits verbatim; throws std::invalid_argument if any digit
    /// is outside {0,1}.
    explicit BitString(std::vector<std::uint8_t> digits);

    const std::vector<std::uint8_t>& digits() const { return digits_; }
    std::size_t size() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }

    /// Digit at position k; positions beyond the stored length read as 0.
    int digit(std::size_t k) const { return k < digits_.size() ? digits_[k] : 0; }

    /// Number of digits up to and including the most significant 1.
    std::size_t significant_size() const;

    bool is_canonical() const { return significant_size() == digits_.size(); }
    BitString canonical() const;

    bool fits_uint64() const { return significant_size() <= 64; }

    /// Numeric value; throws std::overflow_error when it does not fit.
    std::uint64_t to_uint64() const;

    /// MSB-first text, the human convention; "0" for the empty sequence.
    std::string to_binary_text() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> digits_;
};

/// Canonical digits of n, LSB first.
BitString bits_from_integer(std::uint64_t n);

/// Parses MSB-first text such as "1011". Empty strings and characters other
/// than 0/1 yield nullopt.
std::optional<BitString> bits_from_binary_text(std::string_view text);

/// Three-bit window read upward from position k: a_k + 2 a_{k+1} + 4 a_{k+2}.
int window_value(const BitString& b, std::size_t k);

/// Counts of the three window classes over all positions of a digit string.
struct WindowProfile {
    std::uint64_t alpha3 = 0;  // windows in {3,4}
    std::uint64_t alpha5 = 0;  // windows in {5,6}
    std::uint64_t alpha7 = 0;  // windows equal to 7
    bool operator==(const WindowProfile&) const = default;
};

WindowProfile window_profile(const BitString& b);

/// Parity of the digit sum above position 0. For machine-size n this equals
/// gamma_exact(n) mod 2.
int gamma_parity(const BitString& b);

/// Exponent of 2 in n!: n minus the number of 1 digits of n.
std::uint64_t gamma_exact(std::uint64_t n);

}  // namespace fact3

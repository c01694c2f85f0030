#include "fact3/bitstring.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace fact3 {

BitString::BitString(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
        if (d > 1) throw std::invalid_argument("BitString: digit outside {0,1}");
    }
}

std::size_t BitString::significant_size() const {
    std::size_t n = digits_.size();
    while (n > 0 && digits_[n - 1] == 0) --n;
    return n;
}

BitString BitString::canonical() const {
    std::vector<std::uint8_t> d(digits_.begin(), digits_.begin() + significant_size());
    return BitString(std::move(d));
}

std::uint64_t BitString::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BitString: value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t k = significant_size(); k-- > 0;) v = (v << 1) | digits_[k];
    return v;
}

std::string BitString::to_binary_text() const {
    std::size_t n = significant_size();
    if (n == 0) return "0";
    std::string s;
    s.reserve(n);
    for (std::size_t k = n; k-- > 0;) s.push_back(char('0' + digits_[k]));
    return s;
}

BitString bits_from_integer(std::uint64_t n) {
    std::vector<std::uint8_t> d;
    while (n != 0) {
        d.push_back(static_cast<std::uint8_t>(n & 1));
        n >>= 1;
    }
    return BitString(std::move(d));
}

std::optional<BitString> bits_from_binary_text(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::vector<std::uint8_t> d(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[text.size() - 1 - i];  // reverse into LSB-first order
        if (c != '0' && c != '1') return std::nullopt;
        d[i] = static_cast<std::uint8_t>(c - '0');
    }
    return BitString(std::move(d));
}

int window_value(const BitString& b, std::size_t k) {
    return b.digit(k) + 2 * b.digit(k + 1) + 4 * b.digit(k + 2);
}

WindowProfile window_profile(const BitString& b) {
    WindowProfile p;
    for (std::size_t k = 0; k < b.size(); ++k) {
        switch (window_value(b, k)) {
            case 3:
            case 4: ++p.alpha3; break;
            case 5:
            case 6: ++p.alpha5; break;
            case 7: ++p.alpha7; break;
            default: break;
        }
    }
    return p;
}

int gamma_parity(const BitString& b) {
    int parity = 0;
    for (std::size_t k = 1; k < b.size(); ++k) parity ^= b.digit(k);
    return parity;
}

std::uint64_t gamma_exact(std::uint64_t n) {
    return n - static_cast<std::uint64_t>(std::popcount(n));
}

}  // namespace fact3

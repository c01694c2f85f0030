#include "fact3/bignat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fact3::oracle {

namespace {
constexpr std::uint32_t kDecimalChunk = 1'000'000'000;  // 10^9 fits a limb
}

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::add_small(std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0 && i < limbs_.size(); ++i) {
        carry += limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(carry & 0xffffffffu);
        carry >>= 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
}

BigNat BigNat::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigNat: empty decimal string");
    BigNat n;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigNat: non-digit in decimal string");
        n *= 10;
        n.add_small(static_cast<std::uint32_t>(c - '0'));
    }
    return n;
}

BigNat BigNat::from_bits(const BitString& b) {
    BigNat n;
    std::size_t len = b.significant_size();
    n.limbs_.assign((len + 31) / 32, 0);
    for (std::size_t i = 0; i < len; ++i) {
        if (b.digit(i)) n.limbs_[i / 32] |= (std::uint32_t{1} << (i % 32));
    }
    n.trim();
    return n;
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

int BigNat::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return 0;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

std::uint32_t BigNat::low_bits(std::size_t pos, unsigned count) const {
    std::uint64_t v = 0;
    std::size_t limb = pos / 32, off = pos % 32;
    if (limb < limbs_.size()) v = limbs_[limb] >> off;
    if (off != 0 && limb + 1 < limbs_.size())
        v |= static_cast<std::uint64_t>(limbs_[limb + 1]) << (32 - off);
    return static_cast<std::uint32_t>(v & ((std::uint64_t{1} << count) - 1));
}

std::size_t BigNat::trailing_zero_bits() const {
    if (is_zero()) throw std::domain_error("BigNat: trailing zeros of zero");
    std::size_t i = 0;
    while (limbs_[i] == 0) ++i;
    return 32 * i + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
}

BigNat& BigNat::operator*=(std::uint32_t m) {
    if (m == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
        limb = static_cast<std::uint32_t>(p & 0xffffffffu);
        carry = p >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigNat BigNat::shifted_right(std::size_t k) const {
    std::size_t drop = k / 32, off = k % 32;
    if (drop >= limbs_.size()) return BigNat{};
    BigNat out;
    out.limbs_.assign(limbs_.begin() + drop, limbs_.end());
    if (off != 0) {
        for (std::size_t i = 0; i + 1 < out.limbs_.size(); ++i)
            out.limbs_[i] = (out.limbs_[i] >> off) |
                            (out.limbs_[i + 1] << (32 - off));
        out.limbs_.back() >>= off;
    }
    out.trim();
    return out;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work(limbs_);
    std::vector<std::uint32_t> chunks;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / kDecimalChunk);
            rem = cur % kDecimalChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        chunks.push_back(static_cast<std::uint32_t>(rem));
    }
    std::string s = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s.append(9 - part.size(), '0');
        s += part;
    }
    return s;
}

BitString BigNat::to_bits() const {
    std::size_t len = bit_length();
    std::vector<std::uint8_t> d(len);
    for (std::size_t i = 0; i < len; ++i) d[i] = static_cast<std::uint8_t>(bit(i));
    return BitString(std::move(d));
}

}  // namespace fact3::oracle

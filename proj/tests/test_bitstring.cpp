#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fact3/bitstring.hpp"

using namespace fact3;

namespace {

BitString bits(std::initializer_list<int> lsb_first) {
    std::vector<std::uint8_t> d;
    for (int v : lsb_first) d.push_back(static_cast<std::uint8_t>(v));
    return BitString(std::move(d));
}

BitString pad(const BitString& b, std::size_t zeros) {
    std::vector<std::uint8_t> d = b.digits();
    d.insert(d.end(), zeros, 0);
    return BitString(std::move(d));
}

}  // namespace

TEST_CASE("bits_from_integer produces canonical LSB-first digits") {
    CHECK(bits_from_integer(0) == BitString{});
    CHECK(bits_from_integer(11) == bits({1, 1, 0, 1}));
    CHECK(bits_from_integer(24) == bits({0, 0, 0, 1, 1}));
    CHECK(bits_from_integer(1) == bits({1}));
}

TEST_CASE("integer round trip holds for canonical digit strings") {
    CHECK(bits_from_integer(0).to_uint64() == 0);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() >> (rng() % 64);
        BitString b = bits_from_integer(n);
        CHECK(b.is_canonical());
        CHECK(b.to_uint64() == n);
        CHECK(bits_from_integer(b.to_uint64()) == b);
    }
}

TEST_CASE("digit vectors are validated") {
    CHECK_THROWS_AS(BitString({0, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(bits({1, 9}), std::invalid_argument);
}

TEST_CASE("to_uint64 refuses values beyond 64 bits") {
    std::vector<std::uint8_t> d(65, 0);
    d[64] = 1;
    CHECK_THROWS_AS(BitString(d).to_uint64(), std::overflow_error);
    d[64] = 0;
    CHECK(BitString(d).to_uint64() == 0);  // high zeros do not count
}

TEST_CASE("binary text uses the MSB-first human convention") {
    CHECK(bits_from_integer(11).to_binary_text() == "1011");
    CHECK(bits_from_integer(0).to_binary_text() == "0");
    CHECK(bits_from_binary_text("1011") == bits_from_integer(11));
    CHECK(bits_from_binary_text("0") == BitString{std::vector<std::uint8_t>{0}});
    CHECK(!bits_from_binary_text("").has_value());
    CHECK(!bits_from_binary_text("10120").has_value());
}

TEST_CASE("window_value reads three digits upward with zero padding") {
    BitString b = bits_from_integer(11);
    CHECK(window_value(b, 0) == 3);
    CHECK(window_value(b, 1) == 5);
    CHECK(window_value(b, 2) == 2);
    CHECK(window_value(b, 3) == 1);
    CHECK(window_value(b, 4) == 0);
    CHECK(window_value(b, 100) == 0);
}

TEST_CASE("window_profile counts the three window classes") {
    CHECK(window_profile(bits_from_integer(11)) == WindowProfile{1, 1, 0});
    CHECK(window_profile(bits_from_integer(7)) == WindowProfile{1, 0, 1});
    CHECK(window_profile(bits_from_integer(0)) == WindowProfile{0, 0, 0});
    CHECK(window_profile(bits_from_integer(1)) == WindowProfile{0, 0, 0});
    CHECK(window_profile(bits_from_integer(24)) == WindowProfile{2, 1, 0});
}

TEST_CASE("window class counts never exceed the digit length") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n = rng() >> (rng() % 64);
        BitString b = bits_from_integer(n);
        WindowProfile p = window_profile(b);
        CHECK(p.alpha3 + p.alpha5 + p.alpha7 <= b.size());
    }
}

TEST_CASE("gamma_exact follows the digit-sum formula") {
    CHECK(gamma_exact(11) == 8);   // 11! = 2^8 * 155925
    CHECK(gamma_exact(7) == 4);    // 5040 = 2^4 * 315
    CHECK(gamma_exact(0) == 0);
    CHECK(gamma_exact(1) == 0);
    for (int k = 0; k < 63; ++k) CHECK(gamma_exact(std::uint64_t{1} << k) == (std::uint64_t{1} << k) - 1);
}

TEST_CASE("gamma_parity matches gamma_exact mod 2") {
    CHECK(gamma_parity(bits_from_integer(11)) == 0);
    CHECK(gamma_parity(bits_from_integer(2)) == 1);
    CHECK(gamma_parity(bits_from_integer(1)) == 0);
    for (std::uint64_t n = 0; n <= 100'000; ++n)
        REQUIRE(gamma_parity(bits_from_integer(n)) == static_cast<int>(gamma_exact(n) & 1));
}

TEST_CASE("high zero digits change nothing") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t n = rng() >> (rng() % 64);
        BitString b = bits_from_integer(n);
        BitString padded = pad(b, 1 + rng() % 20);
        CHECK(!padded.is_canonical() );
        CHECK(padded.canonical() == b);
        CHECK(window_profile(padded) == window_profile(b));
        CHECK(gamma_parity(padded) == gamma_parity(b));
        CHECK(padded.to_uint64() == n);
    }
}

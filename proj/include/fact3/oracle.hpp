#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fact3/bignat.hpp"
#include "fact3/classifier.hpp"

namespace fact3::oracle {

// Desk-scale defaults; both are parameters, not hard limits.
inline constexpr std::uint64_t kDefaultFactorialBound = 5000;
inline constexpr std::uint64_t kDefaultDecomposeBound = 100'000'000;

/// Exact n!; throws std::domain_error when n exceeds the bound.
BigNat factorial(std::uint64_t n, std::uint64_t bound = kDefaultFactorialBound);

/// Largest e with 2^e dividing m; throws std::domain_error on m = 0.
std::uint64_t two_adic_valuation(const BigNat& m);

/// The unique split m = 4^x * Z with Z in {1,2,3,5,6,7} mod 8, reported as
/// the exponent of 2 together with Z mod 8.
struct FactorialShape {
    std::uint64_t gamma = 0;
    Residue8 z_mod8;
};

FactorialShape shape_of(const BigNat& value);  // value >= 1
FactorialShape exact_shape(std::uint64_t n, std::uint64_t bound = kDefaultFactorialBound);

/// Classical test: strip every factor of 4 and reject exactly the remainders
/// congruent to 7 mod 8.
bool is_sum_of_three_squares(const BigNat& m);

struct Decomposition {
    std::uint64_t a = 0, b = 0, c = 0;  // a <= b <= c
    bool operator==(const Decomposition&) const = default;
};

/// Lexicographically smallest sorted triple with a^2 + b^2 + c^2 = m, if one
/// exists. Throws std::domain_error when m exceeds the bound.
std::optional<Decomposition> three_square_decompose(
    std::uint64_t m, std::uint64_t bound = kDefaultDecomposeBound);

/// Multiplicities of the odd residue classes in the factorization of n!,
/// gathered by direct enumeration. Classes 1,3,5,7 are indexed by (i-1)/2.
struct CongruenceCounts {
    std::uint64_t n = 0;
    std::array<std::vector<std::uint64_t>, 4> per_shift;  // [cls][k], k <= bitlen(n)
    std::array<std::uint64_t, 4> totals{};
    std::array<Residue8, 4> z_mod8{};  // i^totals mod 8

    std::uint64_t count(int i, std::uint64_t k) const { return per_shift[(i - 1) / 2][k]; }
    std::uint64_t total(int i) const { return totals[(i - 1) / 2]; }
};

CongruenceCounts congruence_counts(std::uint64_t n);  // n <= 100000

struct LemmaViolation {
    std::string rule;
    std::uint64_t n = 0;
    int i = 0;
    std::uint64_t k = 0;
    std::uint64_t expected = 0;
    std::uint64_t actual = 0;
};

struct LemmaReport {
    std::uint64_t n_max = 0;
    std::uint64_t checks = 0;
    std::vector<LemmaViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks, for every n <= n_max, every class i in {1,3,5,7} and every
/// k <= bitlen(n), that
///   - the class total equals the sum of the per-shift counts,
///   - each per-shift count has the parity predicted by digit k+3 and the
///     window at k (flip when the window reaches i),
///   - the class total has the parity of the digit sum above position 2
///     plus the number of windows reaching i.
/// Violations are reported with witnesses, never thrown. n_max <= 10000.
LemmaReport verify_lemmas(std::uint64_t n_max);

}  // namespace fact3::oracle

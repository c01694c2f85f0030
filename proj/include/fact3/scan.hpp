#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fact3/automata.hpp"
#include "fact3/classifier.hpp"

namespace fact3::cli {

/// Residues in reporting order.
inline constexpr std::array<int, 6> kResidueOrder{1, 2, 3, 5, 6, 7};

enum class Engine { Formula, Automaton };

/// Residue tally over an inclusive range of n. Subranges may be tallied
/// independently and merged; the result does not depend on the partition.
struct ScanReport {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::array<std::uint64_t, 6> counts{};  // indexed per kResidueOrder

    std::uint64_t total() const;
    std::uint64_t rejected() const { return counts[5]; }
    void add(Residue8 r);
    void merge(const ScanReport& other);
};

Residue8 residue_of(std::uint64_t n, Engine engine);

ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, Engine engine);

/// Ascending n <= max whose factorial is not a sum of three squares.
std::vector<std::uint64_t> sequence_not_representable(std::uint64_t max, Engine engine);

std::string render_text(const ScanReport& r);
std::string render_csv(const ScanReport& r);
std::string render_json(const ScanReport& r);

/// Decimal value of a digit string, any length.
std::string decimal_of_bits(const BitString& b);

std::string render_verdict_text(const std::string& n_decimal, const Verdict& v);
std::string render_verdict_json(const std::string& n_decimal, const Verdict& v);

}  // namespace fact3::cli

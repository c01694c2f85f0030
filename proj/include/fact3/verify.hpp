#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fact3/automata.hpp"

namespace fact3::cli {

struct VerifyOptions {
    std::uint64_t oracle_max = 2000;     // 0 skips the big-integer stage
    std::uint64_t scan_max = 1'000'000;  // upper end of the cross-engine scan
    std::uint64_t random_cases = 10'000;
};

/// The machines under verification. Tests substitute corrupted members to
/// exercise the failure paths; standard() builds the genuine set.
struct MachineSet {
    automata::MooreMachine gamma;
    automata::MooreMachine alpha3_paper;
    automata::MooreMachine alpha3_direct;
    automata::MooreMachine alpha5_paper;
    automata::MooreMachine alpha5_direct;
    automata::MooreMachine product_paper;
    automata::MooreMachine product_direct;

    static MachineSet standard();
};

struct VerifyResult {
    std::uint64_t failures = 0;
    std::uint64_t checks = 0;
    // Which million-element range matched the reference counts, when that
    // stage ran: "[1, 1000000]" or "[0, 999999]", empty otherwise.
    std::string matched_range;

    bool ok() const { return failures == 0; }
};

/// Runs every property suite and logs one line per stage; failures come with
/// witnesses. Intended for the `verify` command and for tests.
VerifyResult run_verification(const VerifyOptions& opts, const MachineSet& machines,
                              std::ostream& log);
VerifyResult run_verification(const VerifyOptions& opts, std::ostream& log);

}  // namespace fact3::cli

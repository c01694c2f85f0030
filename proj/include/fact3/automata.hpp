#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fact3/bitstring.hpp"

namespace fact3::automata {

/// Deterministic finite-state transducer over the input alphabet {0,1}.
/// The output is a property of the state reached after the last digit;
/// component machines emit a parity bit, products emit a residue mod 8.
struct MooreMachine {
    struct State {
        std::string label;
        int output = 0;
        std::array<int, 2> next{-1, -1};
    };

    std::vector<State> states;
    int start = 0;

    int step(int state, int digit) const { return states[state].next[digit]; }
    int output_of(int state) const { return states[state].output; }
    std::size_t size() const { return states.size(); }
};

/// Two independent constructions of the alpha trackers.
///
/// Paper: the published transition tables verbatim. The tables leave the
/// first two digits unspecified, so both constructions prepend explicit
/// start-up states; the alpha3 table counts each run of adjacent ones at its
/// start rather than each completed window, which misses exactly a run
/// beginning at bit 0, so its start-up layer seeds the parity register with
/// a0 AND a1.
///
/// Direct: parity flips derived from completed window values. A trailing
/// window of value 3 is only completed by the zero padding above the top
/// digit, so the alpha3 output corrects by y AND z at read-out time.
///
/// The two variants must agree on every input; the exact equivalence check
/// is the arbiter.
enum class MachineVariant { Paper, Direct };

MooreMachine build_gamma_machine();
MooreMachine build_alpha3_machine(MachineVariant variant);
MooreMachine build_alpha5_machine(MachineVariant variant);

/// Synchronous product of the three parity trackers sharing one two-digit
/// history register: 32 main states plus the start-up layer. Outputs the
/// residue of the 4-stripped part of n! mod 8; a state is rejecting exactly
/// when its output is 7.
MooreMachine build_product_machine(MachineVariant variant);

/// Feeds the digits least significant first; returns the final state output.
int run_machine(const MooreMachine& m, const BitString& input);

/// Drops unreachable states; state order becomes BFS from start, digit 0
/// explored before digit 1.
MooreMachine trim(const MooreMachine& m);

/// Output-preserving minimal machine via partition refinement seeded by the
/// state outputs, numbered canonically (BFS from start, digit 0 first).
MooreMachine minimize(const MooreMachine& m);

struct EquivalenceResult {
    bool equivalent = true;
    BitString counterexample;  // a shortest distinguishing input when not equivalent
};

/// Exact decision by synchronized reachability over state pairs.
EquivalenceResult machines_equivalent(const MooreMachine& m1, const MooreMachine& m2);

enum class ExportFormat { Dot, Json, Csv };

std::string export_machine(const MooreMachine& m, ExportFormat format);

/// Parses the json export format back into a machine; throws
/// std::invalid_argument on malformed or non-total input.
MooreMachine import_machine(const std::string& json_text);

}  // namespace fact3::automata

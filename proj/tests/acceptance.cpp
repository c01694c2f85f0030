// Acceptance suite: every release gate in one binary, one line per criterion.
// Exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fact3/automata.hpp"
#include "fact3/bignat.hpp"
#include "fact3/classifier.hpp"
#include "fact3/oracle.hpp"
#include "fact3/scan.hpp"

using namespace fact3;

namespace {

int g_failed = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++g_failed;
}

constexpr std::array<std::uint64_t, 6> kMillionCounts{124967, 249445, 124968,
                                                      125032, 250556, 125032};

// 1. Exactly the reference counts on one of the two million-element ranges,
//    zero tolerance, both engines.
void criterion_table() {
    cli::ScanReport machine = cli::scan_range(1, 1'000'000, cli::Engine::Automaton);
    cli::ScanReport formula = cli::scan_range(1, 1'000'000, cli::Engine::Formula);
    bool engines_agree = machine.counts == formula.counts;

    std::array<std::uint64_t, 6> high = machine.counts;  // [1, 1000000]
    std::array<std::uint64_t, 6> low = machine.counts;   // shifted to [0, 999999]
    auto index_of = [](int r) {
        return static_cast<std::size_t>(
            std::find(cli::kResidueOrder.begin(), cli::kResidueOrder.end(), r) -
            cli::kResidueOrder.begin());
    };
    low[index_of(cli::residue_of(1'000'000, cli::Engine::Formula).value())]--;
    low[index_of(cli::residue_of(0, cli::Engine::Formula).value())]++;

    std::string range;
    if (high == kMillionCounts) range = "[1, 1000000]";
    else if (low == kMillionCounts) range = "[0, 999999]";
    report(1, engines_agree && !range.empty(),
           range.empty() ? "reference residue counts not reproduced on either range"
                         : "reference residue counts reproduced exactly on " + range);
}

// 2. Formula verdict, product-automaton verdict and the big-integer oracle
//    agree for every n <= 2000.
void criterion_oracle() {
    auto product = automata::build_product_machine(automata::MachineVariant::Paper);
    oracle::BigNat f(1);
    std::uint64_t bad = 0;
    for (std::uint64_t n = 0; n <= 2000; ++n) {
        if (n >= 2) f *= static_cast<std::uint32_t>(n);
        auto shape = oracle::shape_of(f);
        BitString b = bits_from_integer(n);
        Verdict v = classify(b);
        bool ok = shape.gamma == *v.gamma_exact && shape.gamma == gamma_exact(n) &&
                  static_cast<int>(shape.gamma & 1) == v.gamma_parity &&
                  shape.z_mod8 == v.z_mod8 &&
                  automata::run_machine(product, b) == shape.z_mod8.value() &&
                  oracle::is_sum_of_three_squares(f) == v.representable;
        if (!ok) {
            if (bad == 0)
                std::printf("  first mismatch at n=%llu\n",
                            static_cast<unsigned long long>(n));
            ++bad;
        }
    }
    report(2, bad == 0, "formula, automaton and big-integer oracle agree for n <= 2000");
}

// 3. The three counting identities hold with zero violations for n <= 10^4.
void criterion_lemmas() {
    auto r = oracle::verify_lemmas(10'000);
    for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i) {
        const auto& v = r.violations[i];
        std::printf("  violation: %s n=%llu i=%d k=%llu expected=%llu actual=%llu\n",
                    v.rule.c_str(), static_cast<unsigned long long>(v.n), v.i,
                    static_cast<unsigned long long>(v.k),
                    static_cast<unsigned long long>(v.expected),
                    static_cast<unsigned long long>(v.actual));
    }
    report(3, r.ok(), "count identities hold with zero violations for n <= 10000 (" +
                          std::to_string(r.checks) + " checks)");
}

// 4. Exact variant equivalence, product vs formula on n <= 10^6 and on 10^4
//    random 256-digit inputs, minimization soundness.
void criterion_automata() {
    using namespace automata;
    auto a3p = build_alpha3_machine(MachineVariant::Paper);
    auto a3d = build_alpha3_machine(MachineVariant::Direct);
    auto a5p = build_alpha5_machine(MachineVariant::Paper);
    auto a5d = build_alpha5_machine(MachineVariant::Direct);
    auto prod = build_product_machine(MachineVariant::Paper);
    auto prod_d = build_product_machine(MachineVariant::Direct);

    bool ok = machines_equivalent(a3p, a3d).equivalent &&
              machines_equivalent(a5p, a5d).equivalent &&
              machines_equivalent(prod, prod_d).equivalent;

    for (std::uint64_t n = 0; ok && n <= 1'000'000; ++n) {
        BitString b = bits_from_integer(n);
        if (run_machine(prod, b) != classify(b).z_mod8.value()) ok = false;
    }

    std::mt19937_64 rng(0xacce97);
    for (int i = 0; ok && i < 10'000; ++i) {
        std::vector<std::uint8_t> d(rng() % 257);
        for (auto& v : d) v = static_cast<std::uint8_t>(rng() & 1);
        BitString b(std::move(d));
        if (run_machine(prod, b) != classify(b).z_mod8.value()) ok = false;
    }

    const MooreMachine* all[] = {&a3p, &a3d, &a5p, &a5d, &prod, &prod_d};
    for (const auto* m : all) {
        auto min1 = minimize(*m);
        if (!machines_equivalent(*m, min1).equivalent) ok = false;
        if (export_machine(min1, ExportFormat::Json) !=
            export_machine(minimize(min1), ExportFormat::Json))
            ok = false;
    }
    report(4, ok, "variant equivalence exact; product = formula on n <= 10^6 and 10^4 "
                  "random inputs; minimization sound");
}

// 5. Block families reject for every listed k, and 2^k + w follows the
//    w table, all on the digit path alone.
void criterion_families() {
    bool ok = true;
    for (std::uint64_t k = 1; k <= 50; ++k)
        if (classify(family_1010(k)).z_mod8.value() != 7) ok = false;
    for (std::uint64_t k = 0; k <= 25; ++k)
        if (classify(family_1100(k)).z_mod8.value() != 7) ok = false;
    for (int k = 5; k <= 30; ++k)
        for (int w = 0; w < 8; ++w) {
            std::uint64_t n = (std::uint64_t{1} << k) + static_cast<std::uint64_t>(w);
            if (!(classify(bits_from_integer(n)).z_mod8 == pow2_plus_w_expected(w))) ok = false;
        }
    report(5, ok, "block families reject for k <= 50 / k <= 25; 2^k+w matches the w table");
}

// 6. Doubling keeps the residue for 4 | n, n <= 10^5; extending above the
//    top digit by the value-36 block keeps it for n <= 10^4.
void criterion_closure() {
    bool ok = true;
    for (std::uint64_t n = 4; n <= 100'000; n += 4)
        if (!(classify(bits_from_integer(n)).z_mod8 ==
              classify(bits_from_integer(2 * n)).z_mod8))
            ok = false;
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        std::uint64_t r = bits_from_integer(n).size() - 1;
        std::uint64_t m = n + 36 * (std::uint64_t{1} << (r + 1));
        if (!(classify(bits_from_integer(n)).z_mod8 ==
              classify(bits_from_integer(m)).z_mod8))
            ok = false;
    }
    report(6, ok, "doubling and prefix closure hold for n <= 10^5 / 10^4");
}

// 7. Brute-force decomposition exists exactly when the stripped test passes,
//    for every m <= 10^5; decompose(6!) really sums to 720.
void criterion_decompose() {
    bool ok = true;
    std::uint64_t first_bad = 0;
    for (std::uint64_t m = 0; m <= 100'000; ++m) {
        auto d = oracle::three_square_decompose(m);
        bool representable = oracle::is_sum_of_three_squares(oracle::BigNat(m));
        if (d.has_value() != representable ||
            (d && (d->a * d->a + d->b * d->b + d->c * d->c != m || d->a > d->b || d->b > d->c))) {
            if (ok) first_bad = m;
            ok = false;
        }
    }
    auto d720 = oracle::three_square_decompose(720);
    bool spot = d720 && d720->a * d720->a + d720->b * d720->b + d720->c * d720->c == 720;
    if (!ok)
        std::printf("  first mismatch at m=%llu\n", static_cast<unsigned long long>(first_bad));
    report(7, ok && spot,
           "decomposition exists iff the stripped test passes for m <= 10^5; 6! decomposes");
}

// 8. The sequence command output equals the list derived from exact
//    factorials, and contains 10, 12 and 24.
void criterion_sequence() {
    std::vector<std::uint64_t> golden;
    oracle::BigNat f(1);
    for (std::uint64_t n = 0; n <= 200; ++n) {
        if (n >= 2) f *= static_cast<std::uint32_t>(n);
        if (!oracle::is_sum_of_three_squares(f)) golden.push_back(n);
    }
    auto by_machine = cli::sequence_not_representable(200, cli::Engine::Automaton);
    auto by_formula = cli::sequence_not_representable(200, cli::Engine::Formula);
    bool has_known = std::find(golden.begin(), golden.end(), 10) != golden.end() &&
                     std::find(golden.begin(), golden.end(), 12) != golden.end() &&
                     std::find(golden.begin(), golden.end(), 24) != golden.end();
    report(8, by_machine == golden && by_formula == golden && has_known,
           "sequence up to 200 equals the oracle-derived list and contains 10, 12, 24");
}

}  // namespace

int main() {
    criterion_table();
    criterion_oracle();
    criterion_lemmas();
    criterion_automata();
    criterion_families();
    criterion_closure();
    criterion_decompose();
    criterion_sequence();
    if (g_failed == 0) {
        std::printf("acceptance: 8/8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failed);
    return 1;
}

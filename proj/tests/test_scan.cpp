#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fact3/oracle.hpp"
#include "fact3/scan.hpp"
#include "fact3/verify.hpp"

using namespace fact3;
using namespace fact3::cli;

TEST_CASE("scan counts every n in the range exactly once") {
    ScanReport r = scan_range(1, 1, Engine::Formula);
    CHECK(r.total() == 1);
    CHECK(r.counts[0] == 1);  // residue of 1! is 1

    ScanReport r2 = scan_range(0, 5000, Engine::Automaton);
    CHECK(r2.total() == 5001);
    CHECK(r2.rejected() == r2.counts[5]);
}

TEST_CASE("both engines agree residue by residue") {
    for (std::uint64_t n = 0; n <= 5000; ++n)
        REQUIRE(residue_of(n, Engine::Formula) == residue_of(n, Engine::Automaton));
}

TEST_CASE("engine reports are byte-identical") {
    ScanReport f = scan_range(1, 20'000, Engine::Formula);
    ScanReport a = scan_range(1, 20'000, Engine::Automaton);
    CHECK(render_text(f) == render_text(a));
    CHECK(render_csv(f) == render_csv(a));
    CHECK(render_json(f) == render_json(a));
}

TEST_CASE("merged partial scans equal one whole scan") {
    ScanReport whole = scan_range(1, 4000, Engine::Formula);
    for (std::uint64_t split : {1ull, 17ull, 2000ull, 3999ull}) {
        ScanReport low = scan_range(1, split, Engine::Formula);
        ScanReport high = scan_range(split + 1, 4000, Engine::Formula);
        low.merge(high);
        CHECK(low.counts == whole.counts);
        CHECK(low.lo == whole.lo);
        CHECK(low.hi == whole.hi);
        CHECK(render_csv(low) == render_csv(whole));
    }
}

TEST_CASE("scan rejects an empty range") {
    CHECK_THROWS_AS(scan_range(5, 4, Engine::Formula), std::invalid_argument);
}

TEST_CASE("csv schema: header plus six residue rows in order") {
    ScanReport r = scan_range(1, 100, Engine::Automaton);
    std::istringstream in(render_csv(r));
    std::string line;
    std::getline(in, line);
    CHECK(line == "residue,count,proportion");
    int expected_residues[] = {1, 2, 3, 5, 6, 7};
    for (int res : expected_residues) {
        REQUIRE(std::getline(in, line));
        CHECK(line.rfind(std::to_string(res) + ",", 0) == 0);
    }
    CHECK(!std::getline(in, line));
}

TEST_CASE("proportions render to six decimals and sum to one") {
    ScanReport r = scan_range(1, 1000, Engine::Automaton);
    std::string csv = render_csv(r);
    // every proportion field looks like 0.xxxxxx or 1.000000
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    double sum = 0;
    while (std::getline(in, line)) {
        auto second_comma = line.find(',', line.find(',') + 1);
        std::string prop = line.substr(second_comma + 1);
        REQUIRE(prop.size() == 8);
        CHECK(prop[1] == '.');
        sum += std::stod(prop);
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("sequence lists exactly the rejected n in ascending order") {
    auto seq = sequence_not_representable(200, Engine::Automaton);
    for (std::size_t i = 1; i < seq.size(); ++i) REQUIRE(seq[i - 1] < seq[i]);
    for (auto n : {10ull, 12ull, 24ull}) {
        CHECK(std::find(seq.begin(), seq.end(), n) != seq.end());
    }
    std::vector<std::uint64_t> by_formula;
    for (std::uint64_t n = 0; n <= 200; ++n)
        if (!classify(bits_from_integer(n)).representable) by_formula.push_back(n);
    CHECK(seq == by_formula);
}

TEST_CASE("no rejected n has an odd gamma") {
    for (auto n : sequence_not_representable(5000, Engine::Formula))
        REQUIRE(gamma_parity(bits_from_integer(n)) == 0);
}

TEST_CASE("verdict text and json carry the full verdict") {
    Verdict v = classify(bits_from_integer(10));
    std::string text = render_verdict_text("10", v);
    CHECK(text.find("z_mod8=7") != std::string::npos);
    CHECK(text.find("representable=false") != std::string::npos);
    CHECK(text.find("n=10") != std::string::npos);
    CHECK(text.find("gamma=8") != std::string::npos);

    std::string json = render_verdict_json("10", v);
    CHECK(json ==
          R"({"n":"10","gamma_parity":0,"alpha3_parity":0,"alpha5_parity":1,"z_mod8":7,)"
          R"("representable":false})"
          "\n");
}

TEST_CASE("json outputs round-trip through a generic parser") {
    ScanReport r = scan_range(1, 500, Engine::Automaton);
    auto scan_json = nlohmann::json::parse(render_json(r));
    CHECK(scan_json["min"] == 1);
    CHECK(scan_json["max"] == 500);
    CHECK(scan_json["rejected"] == r.rejected());
    std::uint64_t sum = 0;
    for (auto& [key, value] : scan_json["counts"].items()) sum += value.get<std::uint64_t>();
    CHECK(sum == 500);

    auto verdict_json =
        nlohmann::json::parse(render_verdict_json("12", classify(bits_from_integer(12))));
    CHECK(verdict_json["n"] == "12");
    CHECK(verdict_json["z_mod8"] == 7);
    CHECK(verdict_json["representable"] == false);
}

TEST_CASE("decimal_of_bits handles values past 64 bits") {
    CHECK(decimal_of_bits(bits_from_integer(0)) == "0");
    CHECK(decimal_of_bits(bits_from_integer(123456789)) == "123456789");
    CHECK(decimal_of_bits(family_1010(17)) == oracle::BigNat::from_bits(family_1010(17)).to_decimal());
}

TEST_CASE("the verification harness passes at reduced bounds") {
    VerifyOptions opts;
    opts.oracle_max = 60;
    opts.scan_max = 400;
    opts.random_cases = 50;
    std::ostringstream log;
    auto result = run_verification(opts, log);
    CHECK(result.ok());
    CHECK(result.failures == 0);
    CHECK(log.str().find("[FAIL]") == std::string::npos);
    CHECK(log.str().find("verification: PASS") != std::string::npos);
}

TEST_CASE("a vacuous oracle stage still verifies the automata") {
    VerifyOptions opts;
    opts.oracle_max = 0;
    opts.scan_max = 100;
    opts.random_cases = 10;
    std::ostringstream log;
    auto result = run_verification(opts, log);
    CHECK(result.ok());
    CHECK(log.str().find("[skip] oracle") != std::string::npos);
    CHECK(log.str().find("[ok] automata") != std::string::npos);
}

TEST_CASE("a corrupted machine fails verification with a witness") {
    MachineSet machines = MachineSet::standard();
    machines.alpha3_paper.states[7].next[1] = machines.alpha3_paper.states[7].next[0];
    VerifyOptions opts;
    opts.oracle_max = 0;
    opts.scan_max = 200;
    opts.random_cases = 20;
    std::ostringstream log;
    auto result = run_verification(opts, machines, log);
    CHECK(!result.ok());
    CHECK(result.failures > 0);
    CHECK(log.str().find("[FAIL]") != std::string::npos);
    CHECK(log.str().find("counterexample") != std::string::npos);
    CHECK(log.str().find("verification: FAIL") != std::string::npos);
}

#include "fact3/scan.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "fact3/bignat.hpp"

namespace fact3::cli {

namespace {

int residue_index(int value) {
    for (std::size_t i = 0; i < kResidueOrder.size(); ++i)
        if (kResidueOrder[i] == value) return static_cast<int>(i);
    throw std::logic_error("residue outside {1,2,3,5,6,7}");
}

std::string format_proportion(std::uint64_t count, std::uint64_t total) {
    char buf[32];
    double p = total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total);
    std::snprintf(buf, sizeof buf, "%.6f", p);
    return buf;
}

Residue8 residue_by_machine(const automata::MooreMachine& product, std::uint64_t n) {
    int s = product.start;
    while (n != 0) {
        s = product.step(s, static_cast<int>(n & 1));
        n >>= 1;
    }
    return Residue8(product.output_of(s));
}

}  // namespace

std::uint64_t ScanReport::total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

void ScanReport::add(Residue8 r) { ++counts[residue_index(r.value())]; }

void ScanReport::merge(const ScanReport& other) {
    lo = std::min(lo, other.lo);
    hi = std::max(hi, other.hi);
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

Residue8 residue_of(std::uint64_t n, Engine engine) {
    if (engine == Engine::Formula) return classify(bits_from_integer(n)).z_mod8;
    static const automata::MooreMachine product =
        automata::build_product_machine(automata::MachineVariant::Paper);
    return residue_by_machine(product, n);
}

ScanReport scan_range(std::uint64_t lo, std::uint64_t hi, Engine engine) {
    if (lo > hi) throw std::invalid_argument("scan_range: lo exceeds hi");
    ScanReport r;
    r.lo = lo;
    r.hi = hi;
    if (engine == Engine::Automaton) {
        const auto product = automata::build_product_machine(automata::MachineVariant::Paper);
        for (std::uint64_t n = lo;; ++n) {
            r.add(residue_by_machine(product, n));
            if (n == hi) break;
        }
    } else {
        for (std::uint64_t n = lo;; ++n) {
            r.add(classify(bits_from_integer(n)).z_mod8);
            if (n == hi) break;
        }
    }
    return r;
}

std::vector<std::uint64_t> sequence_not_representable(std::uint64_t max, Engine engine) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 0; n <= max; ++n)
        if (residue_of(n, engine).value() == 7) out.push_back(n);
    return out;
}

std::string render_text(const ScanReport& r) {
    std::uint64_t total = r.total();
    std::string out = "range: [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]\n";
    for (std::size_t i = 0; i < kResidueOrder.size(); ++i)
        out += "residue " + std::to_string(kResidueOrder[i]) + ": " +
               std::to_string(r.counts[i]) + " (" + format_proportion(r.counts[i], total) +
               ")\n";
    out += "rejected: " + std::to_string(r.rejected()) + "\n";
    return out;
}

std::string render_csv(const ScanReport& r) {
    std::uint64_t total = r.total();
    std::string out = "residue,count,proportion\n";
    for (std::size_t i = 0; i < kResidueOrder.size(); ++i)
        out += std::to_string(kResidueOrder[i]) + "," + std::to_string(r.counts[i]) + "," +
               format_proportion(r.counts[i], total) + "\n";
    return out;
}

std::string render_json(const ScanReport& r) {
    std::uint64_t total = r.total();
    nlohmann::ordered_json j;
    j["min"] = r.lo;
    j["max"] = r.hi;
    nlohmann::ordered_json counts, proportions;
    for (std::size_t i = 0; i < kResidueOrder.size(); ++i) {
        auto key = std::to_string(kResidueOrder[i]);
        counts[key] = r.counts[i];
        proportions[key] = format_proportion(r.counts[i], total);
    }
    j["counts"] = std::move(counts);
    j["proportions"] = std::move(proportions);
    j["rejected"] = r.rejected();
    return j.dump() + "\n";
}

std::string decimal_of_bits(const BitString& b) {
    return oracle::BigNat::from_bits(b).to_decimal();
}

std::string render_verdict_text(const std::string& n_decimal, const Verdict& v) {
    std::string out = "n=" + n_decimal + " gamma_parity=" + std::to_string(v.gamma_parity) +
                      " alpha3_parity=" + std::to_string(v.alpha3_parity) +
                      " alpha5_parity=" + std::to_string(v.alpha5_parity) +
                      " z_mod8=" + std::to_string(v.z_mod8.value()) +
                      " representable=" + (v.representable ? "true" : "false");
    if (v.gamma_exact) out += " gamma=" + std::to_string(*v.gamma_exact);
    if (v.four_exponent) out += " x=" + std::to_string(*v.four_exponent);
    return out + "\n";
}

std::string render_verdict_json(const std::string& n_decimal, const Verdict& v) {
    nlohmann::ordered_json j;
    j["n"] = n_decimal;
    j["gamma_parity"] = v.gamma_parity;
    j["alpha3_parity"] = v.alpha3_parity;
    j["alpha5_parity"] = v.alpha5_parity;
    j["z_mod8"] = v.z_mod8.value();
    j["representable"] = v.representable;
    return j.dump() + "\n";
}

}  // namespace fact3::cli

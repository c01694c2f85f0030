#include "fact3/automata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace fact3::automata {

int run_machine(const MooreMachine& m, const BitString& input) {
    int s = m.start;
    for (auto d : input.digits()) s = m.step(s, d);
    return m.output_of(s);
}

MooreMachine trim(const MooreMachine& m) {
    std::vector<int> order(m.states.size(), -1);
    std::vector<int> bfs{m.start};
    order[m.start] = 0;
    for (std::size_t q = 0; q < bfs.size(); ++q) {
        for (int d = 0; d < 2; ++d) {
            int t = m.states[bfs[q]].next[d];
            if (order[t] < 0) {
                order[t] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }
    MooreMachine out;
    out.start = 0;
    out.states.resize(bfs.size());
    for (int s : bfs) {
        const auto& st = m.states[s];
        out.states[order[s]] = {st.label, st.output, {order[st.next[0]], order[st.next[1]]}};
    }
    return out;
}

MooreMachine minimize(const MooreMachine& m0) {
    MooreMachine m = trim(m0);
    const int n = static_cast<int>(m.states.size());

    std::vector<int> block(n);
    {
        std::map<int, int> by_output;
        for (int s = 0; s < n; ++s)
            block[s] = by_output.try_emplace(m.states[s].output,
                                             static_cast<int>(by_output.size()))
                           .first->second;
    }
    for (int blocks = 0;;) {
        std::map<std::array<int, 3>, int> sig_ids;
        std::vector<int> refined(n);
        for (int s = 0; s < n; ++s) {
            std::array<int, 3> sig{block[s], block[m.states[s].next[0]],
                                   block[m.states[s].next[1]]};
            refined[s] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()))
                             .first->second;
        }
        bool stable = static_cast<int>(sig_ids.size()) == blocks;
        blocks = static_cast<int>(sig_ids.size());
        block = std::move(refined);
        if (stable) break;
    }

    int blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<int> rep(blocks, -1);
    for (int s = 0; s < n; ++s)
        if (rep[block[s]] < 0) rep[block[s]] = s;

    // Canonical numbering: BFS over blocks from the start block, digit 0 first.
    std::vector<int> new_id(blocks, -1);
    std::vector<int> bfs{block[m.start]};
    new_id[block[m.start]] = 0;
    for (std::size_t q = 0; q < bfs.size(); ++q) {
        for (int d = 0; d < 2; ++d) {
            int nb = block[m.states[rep[bfs[q]]].next[d]];
            if (new_id[nb] < 0) {
                new_id[nb] = static_cast<int>(bfs.size());
                bfs.push_back(nb);
            }
        }
    }

    MooreMachine out;
    out.start = 0;
    out.states.resize(bfs.size());
    for (int b : bfs) {
        const auto& r = m.states[rep[b]];
        out.states[new_id[b]] = {r.label, r.output,
                                 {new_id[block[r.next[0]]], new_id[block[r.next[1]]]}};
    }
    return out;
}

EquivalenceResult machines_equivalent(const MooreMachine& m1, const MooreMachine& m2) {
    struct Node {
        int s1, s2, parent, digit;
    };
    std::vector<Node> nodes{{m1.start, m2.start, -1, -1}};
    std::set<std::pair<int, int>> seen{{m1.start, m2.start}};
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        const int s1 = nodes[q].s1, s2 = nodes[q].s2;
        if (m1.output_of(s1) != m2.output_of(s2)) {
            std::vector<std::uint8_t> digits;
            for (std::size_t i = q; nodes[i].parent >= 0;
                 i = static_cast<std::size_t>(nodes[i].parent))
                digits.push_back(static_cast<std::uint8_t>(nodes[i].digit));
            std::reverse(digits.begin(), digits.end());
            return {false, BitString(std::move(digits))};
        }
        for (int d = 0; d < 2; ++d) {
            std::pair<int, int> next{m1.step(s1, d), m2.step(s2, d)};
            if (seen.insert(next).second)
                nodes.push_back({next.first, next.second, static_cast<int>(q), d});
        }
    }
    return {true, {}};
}

namespace {

std::string export_dot(const MooreMachine& m) {
    std::string out = "digraph M {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (const auto& st : m.states) {
        out += "  \"" + st.label + "\" [xlabel=\"" + std::to_string(st.output) + "\"";
        if (st.output == 7) out += ", shape=doublecircle";
        out += "];\n";
    }
    for (const auto& st : m.states)
        for (int d = 0; d < 2; ++d)
            out += "  \"" + st.label + "\" -> \"" + m.states[st.next[d]].label +
                   "\" [label=\"" + std::to_string(d) + "\"];\n";
    out += "}\n";
    return out;
}

std::string export_json(const MooreMachine& m) {
    nlohmann::ordered_json j;
    auto states = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < m.states.size(); ++s)
        states.push_back({{"id", s},
                          {"label", m.states[s].label},
                          {"output", std::to_string(m.states[s].output)}});
    j["states"] = std::move(states);
    j["start"] = m.start;
    auto transitions = nlohmann::ordered_json::array();
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (int d = 0; d < 2; ++d)
            transitions.push_back({{"from", s}, {"input", d}, {"to", m.states[s].next[d]}});
    j["transitions"] = std::move(transitions);
    return j.dump(2) + "\n";
}

std::string export_csv(const MooreMachine& m) {
    std::string out = "from,input,to,from_output\n";
    for (std::size_t s = 0; s < m.states.size(); ++s)
        for (int d = 0; d < 2; ++d)
            out += std::to_string(s) + "," + std::to_string(d) + "," +
                   std::to_string(m.states[s].next[d]) + "," +
                   std::to_string(m.states[s].output) + "\n";
    return out;
}

}  // namespace

std::string export_machine(const MooreMachine& m, ExportFormat format) {
    switch (format) {
        case ExportFormat::Dot: return export_dot(m);
        case ExportFormat::Json: return export_json(m);
        case ExportFormat::Csv: return export_csv(m);
    }
    throw std::invalid_argument("export_machine: unknown format");
}

MooreMachine import_machine(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("import_machine: ") + e.what());
    }
    if (!j.is_object() || !j.contains("states") || !j.contains("start") ||
        !j.contains("transitions"))
        throw std::invalid_argument("import_machine: missing states/start/transitions");

    MooreMachine m;
    const auto& states = j["states"];
    if (!states.is_array() || states.empty())
        throw std::invalid_argument("import_machine: states must be a nonempty array");
    m.states.resize(states.size());
    std::vector<bool> seen_state(states.size(), false);
    for (const auto& s : states) {
        auto id = s.at("id").get<std::size_t>();
        if (id >= m.states.size() || seen_state[id])
            throw std::invalid_argument("import_machine: state ids must be 0..n-1, unique");
        seen_state[id] = true;
        m.states[id].label = s.at("label").get<std::string>();
        m.states[id].output = std::stoi(s.at("output").get<std::string>());
    }
    m.start = j["start"].get<int>();
    if (m.start < 0 || static_cast<std::size_t>(m.start) >= m.states.size())
        throw std::invalid_argument("import_machine: start out of range");
    for (const auto& t : j["transitions"]) {
        auto from = t.at("from").get<std::size_t>();
        auto input = t.at("input").get<int>();
        auto to = t.at("to").get<std::size_t>();
        if (from >= m.states.size() || to >= m.states.size() || (input != 0 && input != 1))
            throw std::invalid_argument("import_machine: transition out of range");
        if (m.states[from].next[input] != -1)
            throw std::invalid_argument("import_machine: duplicate transition");
        m.states[from].next[input] = static_cast<int>(to);
    }
    for (const auto& st : m.states)
        if (st.next[0] < 0 || st.next[1] < 0)
            throw std::invalid_argument("import_machine: machine is not total");
    return m;
}

}  // namespace fact3::automata

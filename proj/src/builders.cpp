#include <stdexcept>

#include "fact3/automata.hpp"
#include "fact3/classifier.hpp"

namespace fact3::automata {

namespace {

// On-1 rows of the published parity tables, indexed by 4x+2y+z where x is
// the tracked parity, y the most recent digit and z the one before it.
// Each entry is the next 4x'+2y'+z'.
constexpr int kAlpha3OnOne[8] = {
    /* s_{0,0,0} */ 6,  // -> s_{1,1,0}
    /* s_{0,0,1} */ 2,  // -> s_{0,1,0}
    /* s_{0,1,0} */ 7,  // -> s_{1,1,1}
    /* s_{0,1,1} */ 3,  // -> s_{0,1,1}
    /* s_{1,0,0} */ 2,  // -> s_{0,1,0}
    /* s_{1,0,1} */ 6,  // -> s_{1,1,0}
    /* s_{1,1,0} */ 3,  // -> s_{0,1,1}
    /* s_{1,1,1} */ 7,  // -> s_{1,1,1}
};

constexpr int kAlpha5OnOne[8] = {
    /* t_{0,0,0} */ 2,  // -> t_{0,1,0}
    /* t_{0,0,1} */ 6,  // -> t_{1,1,0}
    /* t_{0,1,0} */ 7,  // -> t_{1,1,1}
    /* t_{0,1,1} */ 3,  // -> t_{0,1,1}
    /* t_{1,0,0} */ 6,  // -> t_{1,1,0}
    /* t_{1,0,1} */ 2,  // -> t_{0,1,0}
    /* t_{1,1,0} */ 3,  // -> t_{0,1,1}
    /* t_{1,1,1} */ 7,  // -> t_{1,1,1}
};

int add_state(MooreMachine& m, std::string label, int output) {
    m.states.push_back({std::move(label), output, {-1, -1}});
    return static_cast<int>(m.states.size()) - 1;
}

std::string xyz_label(char letter, int x, int y, int z) {
    std::string s;
    s += letter;
    s += "_{";
    s += char('0' + x);
    s += ',';
    s += char('0' + y);
    s += ',';
    s += char('0' + z);
    s += '}';
    return s;
}

bool window_in_34(int z, int y, int b) {
    int w = z + 2 * y + 4 * b;
    return w == 3 || w == 4;
}

bool window_in_56(int z, int y, int b) {
    int w = z + 2 * y + 4 * b;
    return w == 5 || w == 6;
}

// Shared skeleton of the alpha trackers: a start state, one state per first
// digit, then the eight (x, y, z) states.
struct AlphaParts {
    MooreMachine m;
    int init = -1;
    int after_first[2] = {-1, -1};
    int main[8] = {-1, -1, -1, -1, -1, -1, -1, -1};
};

AlphaParts alpha_skeleton(char letter, int output_of_xyz(int x, int y, int z)) {
    AlphaParts p;
    p.init = add_state(p.m, "init", 0);
    p.after_first[0] = add_state(p.m, "init_0", 0);
    p.after_first[1] = add_state(p.m, "init_1", 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                p.main[4 * x + 2 * y + z] =
                    add_state(p.m, xyz_label(letter, x, y, z), output_of_xyz(x, y, z));
    p.m.states[p.init].next = {p.after_first[0], p.after_first[1]};
    return p;
}

MooreMachine build_alpha_paper(char letter, const int on_one[8], bool seed_with_and) {
    AlphaParts p = alpha_skeleton(letter, [](int x, int, int) { return x; });
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1) {
            int x = seed_with_and ? (a0 & a1) : 0;
            p.m.states[p.after_first[a0]].next[a1] = p.main[4 * x + 2 * a1 + a0];
        }
    for (int code = 0; code < 8; ++code) {
        int x = code >> 2, y = (code >> 1) & 1;
        p.m.states[p.main[code]].next[0] = p.main[4 * x + 0 + y];  // (x, y, z) -> (x, 0, y)
        p.m.states[p.main[code]].next[1] = p.main[on_one[code]];
    }
    return p.m;
}

MooreMachine build_alpha_direct(char letter, bool flip_on(int z, int y, int b),
                                bool correct_trailing) {
    auto output = correct_trailing ? +[](int x, int y, int z) { return x ^ (y & z); }
                                   : +[](int x, int, int) { return x; };
    AlphaParts p = alpha_skeleton(letter, output);
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1)
            p.m.states[p.after_first[a0]].next[a1] = p.main[2 * a1 + a0];
    for (int code = 0; code < 8; ++code) {
        int x = code >> 2, y = (code >> 1) & 1, z = code & 1;
        for (int b = 0; b < 2; ++b) {
            int nx = x ^ (flip_on(z, y, b) ? 1 : 0);
            p.m.states[p.main[code]].next[b] = p.main[4 * nx + 2 * b + y];
        }
    }
    return p.m;
}

}  // namespace

MooreMachine build_gamma_machine() {
    MooreMachine m;
    int init = add_state(m, "init", 0);
    int g0 = add_state(m, "g0", 0);
    int g1 = add_state(m, "g1", 1);
    // The least significant digit never affects the parity of gamma.
    m.states[init].next = {g0, g0};
    m.states[g0].next = {g0, g1};
    m.states[g1].next = {g1, g0};
    return m;
}

MooreMachine build_alpha3_machine(MachineVariant variant) {
    if (variant == MachineVariant::Paper) return build_alpha_paper('s', kAlpha3OnOne, true);
    return build_alpha_direct('u', window_in_34, true);
}

MooreMachine build_alpha5_machine(MachineVariant variant) {
    if (variant == MachineVariant::Paper) return build_alpha_paper('t', kAlpha5OnOne, false);
    return build_alpha_direct('v', window_in_56, false);
}

MooreMachine build_product_machine(MachineVariant variant) {
    const bool paper = variant == MachineVariant::Paper;
    MooreMachine m;
    int init = add_state(m, "init", 1);
    int after_first[2];
    for (int a0 = 0; a0 < 2; ++a0)
        after_first[a0] = add_state(m, a0 ? "init_1" : "init_0", 1);

    // Main layer: (g, x3, x5) parities plus the shared (y, z) digit history.
    int main[2][2][2][2][2];
    for (int g = 0; g < 2; ++g)
        for (int x3 = 0; x3 < 2; ++x3)
            for (int x5 = 0; x5 < 2; ++x5)
                for (int y = 0; y < 2; ++y)
                    for (int z = 0; z < 2; ++z) {
                        std::string label = "p_{";
                        label += char('0' + g);
                        label += ',';
                        label += char('0' + x3);
                        label += ',';
                        label += char('0' + x5);
                        label += ',';
                        label += char('0' + y);
                        label += ',';
                        label += char('0' + z);
                        label += '}';
                        int a3_out = paper ? x3 : (x3 ^ (y & z));
                        int output = residue_from_parities(g, a3_out, x5).value();
                        main[g][x3][x5][y][z] = add_state(m, std::move(label), output);
                    }

    m.states[init].next = {after_first[0], after_first[1]};
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1) {
            int x3 = paper ? (a0 & a1) : 0;
            m.states[after_first[a0]].next[a1] = main[a1][x3][0][a1][a0];
        }

    for (int g = 0; g < 2; ++g)
        for (int x3 = 0; x3 < 2; ++x3)
            for (int x5 = 0; x5 < 2; ++x5)
                for (int y = 0; y < 2; ++y)
                    for (int z = 0; z < 2; ++z)
                        for (int b = 0; b < 2; ++b) {
                            bool flip3 = paper ? (b == 1 && z == 0) : window_in_34(z, y, b);
                            int ng = g ^ b;
                            int nx3 = x3 ^ (flip3 ? 1 : 0);
                            int nx5 = x5 ^ (window_in_56(z, y, b) ? 1 : 0);
                            m.states[main[g][x3][x5][y][z]].next[b] = main[ng][nx3][nx5][b][y];
                        }
    return m;
}

}  // namespace fact3::automata

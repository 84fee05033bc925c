#include "smax/circuits.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include "smax/logic.hpp"

namespace smax {

namespace {

void require_same_length(const BitStream& a, const BitStream& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit stream lengths differ");
    }
}

// Li datapath; `swap_output` exchanges the final multiplexer inputs.
BitStream run_li(const BitStream& a, const BitStream& b, const BitStream& sel_half, int m,
                 std::optional<int> initial_state, bool swap_output) {
    require_same_length(a, b);
    require_same_length(a, sel_half);
    require_even_states(m);
    LinearFsm fsm(m, initial_state.value_or(m / 2));
    BitStream out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool pick_a = fsm.stanh_output() != swap_output;
        out.set(i, pick_a ? a[i] : b[i]);
        const bool d = sel_half[i] ? a[i] : !b[i];
        fsm.step(d, true);
    }
    return out;
}

BitStream run_yu(const BitStream& a, const BitStream& b, int m, std::optional<int> initial_state,
                 bool swap_output) {
    require_same_length(a, b);
    require_even_states(m);
    LinearFsm fsm(m, initial_state.value_or(m / 2));
    BitStream out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool pick_a = fsm.stanh_output() != swap_output;
        out.set(i, pick_a ? a[i] : b[i]);
        fsm.step(a[i], a[i] != b[i]);
    }
    return out;
}

}  // namespace

std::string_view to_string(Architecture arch) {
    switch (arch) {
        case Architecture::Li: return "li";
        case Architecture::Yu: return "yu";
        case Architecture::Novel: return "novel";
    }
    return "unknown";
}

Architecture parse_architecture(std::string_view name) {
    if (name == "li") return Architecture::Li;
    if (name == "yu") return Architecture::Yu;
    if (name == "novel") return Architecture::Novel;
    throw std::invalid_argument("unknown architecture '" + std::string(name) + "' (expected li, yu or novel)");
}

void validate_states(Architecture arch, int m) {
    if (arch == Architecture::Novel) {
        if (m < 2) {
            throw std::invalid_argument("the shift-register circuit needs M >= 2 (L >= 1)");
        }
        return;
    }
    require_even_states(m);
}

BitStream smax_li(const BitStream& a, const BitStream& b, const BitStream& sel_half, int m,
                  std::optional<int> initial_state) {
    return run_li(a, b, sel_half, m, initial_state, false);
}

BitStream smin_li(const BitStream& a, const BitStream& b, const BitStream& sel_half, int m,
                  std::optional<int> initial_state) {
    return run_li(a, b, sel_half, m, initial_state, true);
}

BitStream smax_yu(const BitStream& a, const BitStream& b, int m, std::optional<int> initial_state) {
    return run_yu(a, b, m, initial_state, false);
}

BitStream smin_yu(const BitStream& a, const BitStream& b, int m, std::optional<int> initial_state) {
    return run_yu(a, b, m, initial_state, true);
}

CircuitRun smax_novel(const BitStream& a, const BitStream& b, int l) {
    require_same_length(a, b);
    if (l < 1) {
        throw std::invalid_argument("shift register length must be at least 1");
    }
    const auto wa = a.words();
    const auto wb = b.words();
    std::vector<std::uint64_t> out(wa.size(), 0);
    std::uint64_t right = 0;
    std::uint64_t left = 0;
    int s = 0;
    for (std::size_t w = 0; w < wa.size(); ++w) {
        // Ones of B always pass through; only A=1,B=0 cycles need the register.
        std::uint64_t c = wb[w];
        std::uint64_t diff = wa[w] ^ wb[w];
        while (diff != 0) {
            const int bit = std::countr_zero(diff);
            diff &= diff - 1;
            const std::uint64_t mask = std::uint64_t{1} << bit;
            if ((wb[w] & mask) != 0) {
                if (s > 0) {
                    --s;
                } else {
                    ++left;
                }
            } else if (s == l) {
                c |= mask;
                ++right;
            } else {
                ++s;
            }
        }
        out[w] = c;
    }
    return CircuitRun{BitStream::from_words(std::move(out), a.size()), right, left,
                      static_cast<std::uint64_t>(s), s};
}

CircuitRun smin_novel(const BitStream& a, const BitStream& b, int l) {
    CircuitRun run = smax_novel(not_gate(a), not_gate(b), l);
    run.output = not_gate(run.output);
    return run;
}

BookkeepingResidual bookkeeping_residual(const BitStream& a, const BitStream& b, const CircuitRun& run) {
    const auto oa = static_cast<std::int64_t>(ones(a));
    const auto ob = static_cast<std::int64_t>(ones(b));
    const auto oc = static_cast<std::int64_t>(ones(run.output));
    const auto o_r = static_cast<std::int64_t>(run.right_overflows);
    const auto o_l = static_cast<std::int64_t>(run.left_overflows);
    const auto o_s = static_cast<std::int64_t>(run.remaining_ones);
    return {oc - (ob + (oa - ob) + o_l - o_s), oc - (ob + o_r)};
}

}  // namespace smax

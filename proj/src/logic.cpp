#include "smax/logic.hpp"

#include <stdexcept>
#include <vector>

namespace smax {

namespace {

void require_same_length(const BitStream& a, const BitStream& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit stream lengths differ");
    }
}

template <class Op>
BitStream wordwise(const BitStream& a, const BitStream& b, Op op) {
    require_same_length(a, b);
    const auto wa = a.words();
    const auto wb = b.words();
    std::vector<std::uint64_t> out(wa.size());
    for (std::size_t w = 0; w < wa.size(); ++w) {
        out[w] = op(wa[w], wb[w]);
    }
    return BitStream::from_words(std::move(out), a.size());
}

}  // namespace

BitStream and_gate(const BitStream& a, const BitStream& b) {
    return wordwise(a, b, [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

BitStream xor_gate(const BitStream& a, const BitStream& b) {
    return wordwise(a, b, [](std::uint64_t x, std::uint64_t y) { return x ^ y; });
}

BitStream mux_gate(const BitStream& a, const BitStream& b, const BitStream& sel) {
    require_same_length(a, sel);
    require_same_length(b, sel);
    const auto wa = a.words();
    const auto wb = b.words();
    const auto ws = sel.words();
    std::vector<std::uint64_t> out(ws.size());
    for (std::size_t w = 0; w < ws.size(); ++w) {
        out[w] = (ws[w] & wa[w]) | (~ws[w] & wb[w]);
    }
    return BitStream::from_words(std::move(out), a.size());
}

BitStream not_gate(const BitStream& a) {
    const auto wa = a.words();
    std::vector<std::uint64_t> out(wa.size());
    for (std::size_t w = 0; w < wa.size(); ++w) {
        out[w] = ~wa[w];
    }
    return BitStream::from_words(std::move(out), a.size());
}

LinearFsm::LinearFsm(int num_states, int initial_state) : num_states_(num_states), state_(initial_state) {
    if (num_states < 2) {
        throw std::invalid_argument("a linear FSM needs at least two states");
    }
    if (initial_state < 0 || initial_state >= num_states) {
        throw std::invalid_argument("initial FSM state out of range");
    }
}

bool LinearFsm::stanh_output() const {
    require_even_states(num_states_);
    return state_ >= num_states_ / 2;
}

void require_even_states(int m) {
    if (m < 2 || m % 2 != 0) {
        throw std::invalid_argument("STanh-based elements need an even number of states M >= 2");
    }
}

BitStream stanh_stream(const BitStream& x, int m, std::optional<int> initial_state) {
    require_even_states(m);
    LinearFsm fsm(m, initial_state.value_or(m / 2));
    BitStream out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.set(i, fsm.stanh_output());
        fsm.step(x[i], true);
    }
    return out;
}

}  // namespace smax

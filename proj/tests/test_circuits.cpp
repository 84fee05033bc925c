#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "smax/analytic.hpp"
#include "smax/circuits.hpp"
#include "smax/generator.hpp"
#include "smax/logic.hpp"

using namespace smax;

namespace {

BitStream bits(const char* text) { return BitStream::from_string(text); }

BitStream random_bits(std::mt19937_64& rng, std::size_t n, double p) {
    BitStream s(n);
    std::bernoulli_distribution d(p);
    for (std::size_t i = 0; i < n; ++i) {
        s.set(i, d(rng));
    }
    return s;
}

// 3 binomial standard deviations plus a 2M/N warm-up allowance.
double tolerance(double c, int m, std::size_t n) {
    return 3.0 * std::sqrt(c * (1 - c) / static_cast<double>(n)) + 2.0 * m / static_cast<double>(n);
}

}  // namespace

TEST_CASE("architecture names") {
    CHECK(parse_architecture("li") == Architecture::Li);
    CHECK(parse_architecture("yu") == Architecture::Yu);
    CHECK(parse_architecture("novel") == Architecture::Novel);
    CHECK(to_string(Architecture::Novel) == "novel");
    CHECK_THROWS_AS((void)parse_architecture("wang"), std::invalid_argument);
    CHECK_NOTHROW(validate_states(Architecture::Novel, 3));
    CHECK_THROWS_AS(validate_states(Architecture::Novel, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_states(Architecture::Yu, 15), std::invalid_argument);
}

TEST_CASE("shift-register hand traces") {
    const auto run = smax_novel(bits("01"), bits("10"), 1);
    CHECK(run.output == bits("10"));
    CHECK(run.left_overflows == 1);
    CHECK(run.right_overflows == 0);
    CHECK(run.remaining_ones == 1);

    const auto fill = smax_novel(bits("1111"), bits("0000"), 2);
    CHECK(fill.output == bits("0011"));
    CHECK(fill.right_overflows == 2);
    CHECK(fill.left_overflows == 0);
    CHECK(fill.remaining_ones == 2);
    CHECK(fill.final_state == 2);
    // 0 + (4 - 0) + 0 - 2 = 2 = o(C)
    CHECK(ones(fill.output) == 2);
}

TEST_CASE("identical inputs never touch the register") {
    std::mt19937_64 rng(1);
    const auto x = random_bits(rng, 777, 0.4);
    const auto run = smax_novel(x, x, 5);
    CHECK(run.output == x);
    CHECK(run.right_overflows == 0);
    CHECK(run.left_overflows == 0);
    CHECK(run.remaining_ones == 0);
    CHECK(smin_novel(x, x, 5).output == x);
}

TEST_CASE("word-wise register matches the explicit cell replay") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 300;
        const int l = 1 + static_cast<int>(rng() % 9);
        const auto a = random_bits(rng, n, 0.1 + 0.8 * (rng() % 100) / 100.0);
        const auto b = random_bits(rng, n, 0.1 + 0.8 * (rng() % 100) / 100.0);
        const auto run = smax_novel(a, b, l);
        const auto ref = oracle::shift_register_replay(a, b, l);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(run.output[i] == ref.output[i]);
        }
        CHECK(run.right_overflows == ref.right);
        CHECK(run.left_overflows == ref.left);
        CHECK(run.remaining_ones == ref.remaining);
    }
}

TEST_CASE("every one of B appears in C and the occupancy stays bounded") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 2000;
        const int l = 1 + static_cast<int>(rng() % 20);
        const auto a = random_bits(rng, n, (rng() % 101) / 100.0);
        const auto b = random_bits(rng, n, (rng() % 101) / 100.0);
        const auto run = smax_novel(a, b, l);
        CHECK(and_gate(run.output, b) == b);
        CHECK(run.remaining_ones <= static_cast<std::uint64_t>(l));
        const auto residual = bookkeeping_residual(a, b, run);
        CHECK(residual.excess_form == 0);
        CHECK(residual.overflow_form == 0);
    }
}

TEST_CASE("bounded excess of A means no right overflow") {
    // A leads B by at most l ones over every prefix: pairs of (A=1,B=0)
    // followed by (A=0,B=1), in bursts of at most l.
    std::mt19937_64 rng(4);
    for (int l = 1; l <= 6; ++l) {
        std::string ta;
        std::string tb;
        for (int block = 0; block < 50; ++block) {
            const int burst = 1 + static_cast<int>(rng() % l);
            ta += std::string(burst, '1') + std::string(burst, '0') + "11";
            tb += std::string(burst, '0') + std::string(burst, '1') + "11";
        }
        const auto a = BitStream::from_string(ta);
        const auto b = BitStream::from_string(tb);
        const auto run = smax_novel(a, b, l);
        CHECK(run.right_overflows == 0);
        CHECK(ones(run.output) == ones(b));
    }
}

TEST_CASE("shift-register SMin is the complemented dual") {
    std::mt19937_64 rng(5);
    const auto a = random_bits(rng, 500, 0.3);
    const auto b = random_bits(rng, 500, 0.7);
    const auto inner = smax_novel(not_gate(a), not_gate(b), 4);
    const auto run = smin_novel(a, b, 4);
    CHECK(run.output == not_gate(inner.output));
    CHECK(run.right_overflows == inner.right_overflows);
    CHECK(run.left_overflows == inner.left_overflows);

    const auto ones_a = BitStream::filled(500, true);
    CHECK(smin_novel(ones_a, b, 4).output == b);
}

TEST_CASE("STanh circuits: min is max with the final mux swapped") {
    std::mt19937_64 rng(6);
    const auto a = random_bits(rng, 4000, 0.45);
    const auto b = random_bits(rng, 4000, 0.55);
    const auto sel = random_bits(rng, 4000, 0.5);
    for (int m : {2, 8, 16}) {
        const auto li_max = smax_li(a, b, sel, m);
        const auto li_min = smin_li(a, b, sel, m);
        const auto yu_max = smax_yu(a, b, m);
        const auto yu_min = smin_yu(a, b, m);
        // The state trajectory is shared, so per cycle {max, min} = {A, B}.
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(static_cast<int>(li_max[i]) + li_min[i] == static_cast<int>(a[i]) + b[i]);
            REQUIRE(static_cast<int>(yu_max[i]) + yu_min[i] == static_cast<int>(a[i]) + b[i]);
        }
    }
}

TEST_CASE("STanh circuits reject bad arguments") {
    CHECK_THROWS_AS((void)smax_li(BitStream(4), BitStream(4), BitStream(5), 4), std::invalid_argument);
    CHECK_THROWS_AS((void)smax_li(BitStream(4), BitStream(4), BitStream(4), 5), std::invalid_argument);
    CHECK_THROWS_AS((void)smax_yu(BitStream(4), BitStream(3), 4), std::invalid_argument);
    CHECK_THROWS_AS((void)smax_yu(BitStream(4), BitStream(4), 3), std::invalid_argument);
    CHECK_THROWS_AS((void)smax_novel(BitStream(4), BitStream(3), 2), std::invalid_argument);
    CHECK_THROWS_AS((void)smax_novel(BitStream(4), BitStream(4), 0), std::invalid_argument);
}

TEST_CASE("identical inputs pass straight through the STanh circuits") {
    const StreamGenerator gen{SngMode::PseudoRandom, 31};
    const auto x = generate(0.42, 10000, gen, 1);
    const auto sel = generate(0.5, 10000, gen, 2);
    CHECK(smax_li(x, x, sel, 16) == x);
    CHECK(smax_yu(x, x, 16) == x);
    CHECK(smin_yu(x, x, 16) == x);
}

TEST_CASE("simulated rates match the closed forms at N = 1e6") {
    const std::size_t n = 1000000;
    const StreamGenerator gen{SngMode::PseudoRandom, 1234};
    struct Case {
        double a;
        double b;
        int m;
    };
    for (const Case& c : {Case{0.5, 0.4, 16}, Case{0.5, 0.6, 16}, Case{0.7, 0.2, 8}, Case{0.3, 0.7, 16}}) {
        CAPTURE(c.a);
        CAPTURE(c.b);
        const auto a = generate(c.a, n, gen, derive_seed(1234, 0, 0));
        const auto b = generate(c.b, n, gen, derive_seed(1234, 1, 0));
        const auto sel = generate(0.5, n, gen, derive_seed(1234, 2, 0));

        const double li = smax_li_closed(c.a, c.b, c.m).c;
        const double yu = smax_yu_closed(c.a, c.b, c.m).c;
        const double nv = smax_novel_closed(c.a, c.b, c.m).c;
        CHECK(std::abs(rate(smax_li(a, b, sel, c.m)).value() - li) <= tolerance(li, c.m, n));
        CHECK(std::abs(rate(smax_yu(a, b, c.m)).value() - yu) <= tolerance(yu, c.m, n));
        CHECK(std::abs(rate(smax_novel(a, b, c.m - 1).output).value() - nv) <= tolerance(nv, c.m, n));
    }

    // Li at a = 0.5, b = 0.4, M = 16: 0.5 - 0.1 / (1 + (1.1/0.9)^8).
    const auto a = generate(0.5, n, gen, 71);
    const auto b = generate(0.4, n, gen, 72);
    const auto sel = generate(0.5, n, gen, 73);
    CHECK(std::abs(rate(smax_li(a, b, sel, 16)).value() - 0.48327669613033519) <= 2e-3);
    const auto equal = generate(0.5, n, gen, 74);
    CHECK(std::abs(rate(smax_li(a, equal, sel, 16)).value() - 0.5) <= 2e-3);
}

TEST_CASE("SMin circuits at N = 1e6") {
    const std::size_t n = 1000000;
    const StreamGenerator gen{SngMode::PseudoRandom, 55};
    const auto a = generate(0.3, n, gen, 1);
    const auto b = generate(0.7, n, gen, 2);
    // min(0.3, 0.7) through the complement identity 1 - c_max(0.7, 0.3).
    const double expected = 1.0 - smax_novel_closed(0.7, 0.3, 16).c;
    CHECK(std::abs(expected - 0.29999999999932888) < 1e-12);
    CHECK(std::abs(rate(smin_novel(a, b, 15).output).value() - expected) <= tolerance(expected, 16, n));

    const auto same = generate(0.45, n, gen, 3);
    const auto same_copy = same;
    CHECK(std::abs(rate(smin_yu(same, same_copy, 16)).value() - rate(same).value()) == 0.0);

    const auto all_one = BitStream::filled(n, true);
    const auto pb = generate(0.35, n, gen, 4);
    CHECK(rate(smin_novel(all_one, pb, 15).output) == rate(pb));
}

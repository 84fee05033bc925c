// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "smax/analytic.hpp"
#include "smax/circuits.hpp"
#include "smax/error.hpp"
#include "smax/generator.hpp"
#include "smax/logic.hpp"

using namespace smax;

namespace {

constexpr Architecture kArchs[] = {Architecture::Li, Architecture::Yu, Architecture::Novel};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    for (int m : {2, 4, 8, 16, 32, 64}) {
        for (int i = 1; i <= 19; ++i) {
            for (int j = 1; j <= 19; ++j) {
                const double a = 0.05 * i;
                const double b = 0.05 * j;
                worst = std::max(worst, std::abs(smax_li_closed(a, b, m).c - oracle::li_composition(a, b, m)));
                worst = std::max(worst, std::abs(smax_yu_closed(a, b, m).c - oracle::yu_composition(a, b, m)));
                worst = std::max(worst,
                                 std::abs(smax_novel_closed(a, b, m).c - oracle::novel_composition(a, b, m)));
            }
        }
    }
    return {worst <= 1e-9, "max |closed - solve| = " + fmt("%.3e", worst)};
}

Outcome simulation_match() {
    const std::size_t n = 1000000;
    const std::uint64_t seed = 2024;
    const StreamGenerator gen{SngMode::PseudoRandom, seed};
    const BitStream a = generate(0.5, n, gen, derive_seed(seed, 0, 0));
    double worst = 0.0;
    for (int k = 0; k <= 20; ++k) {
        const double b = std::round((0.40 + 0.01 * k) * 1e12) / 1e12;
        const BitStream sb = generate(b, n, gen, derive_seed(seed, 1, static_cast<std::uint64_t>(k)));
        const BitStream sel = generate(0.5, n, gen, derive_seed(seed, 2, static_cast<std::uint64_t>(k)));
        for (int m : {16, 64}) {
            const double li = rate(smax_li(a, sb, sel, m)).value();
            const double yu = rate(smax_yu(a, sb, m)).value();
            const double nv = rate(smax_novel(a, sb, m - 1).output).value();
            worst = std::max(worst, std::abs(li - smax_li_closed(0.5, b, m).c));
            worst = std::max(worst, std::abs(yu - smax_yu_closed(0.5, b, m).c));
            worst = std::max(worst, std::abs(nv - smax_novel_closed(0.5, b, m).c));
        }
    }
    return {worst <= 2e-3, "max |rate - closed| = " + fmt("%.3e", worst)};
}

Outcome error_ordering() {
    QuadratureConfig quad;
    quad.resolution = 512;
    bool ok = true;
    std::string detail;
    for (int m : {8, 16, 32}) {
        const double li = expected_abs_error(Architecture::Li, m, quad);
        const double yu = expected_abs_error(Architecture::Yu, m, quad);
        const double nv = expected_abs_error(Architecture::Novel, m, quad);
        ok = ok && nv < yu && yu < li;
        detail += "M=" + std::to_string(m) + ": " + fmt("%.3e", nv) + " < " + fmt("%.3e", yu) + " < " +
                  fmt("%.3e", li) + "; ";
    }
    return {ok, detail};
}

Outcome optimal_lengths_check() {
    const std::vector<std::uint64_t> ns{1000, 10000, 30000, 50000, 100000};
    const int expected_l[] = {6, 15, 22, 27, 34};
    const double expected_e[] = {4.13e-3, 1.03e-3, 5.18e-4, 3.75e-4, 2.41e-4};
    std::vector<int> lengths;
    for (int l = 1; l <= 50; ++l) {
        lengths.push_back(l);
    }
    const auto reports = optimal_lengths(ns, lengths);
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const ErrorReport& r = reports[i];
        const double e = r.rows[static_cast<std::size_t>(r.l_opt - 1)].analytic;
        ok = ok && std::abs(r.l_opt - expected_l[i]) <= 1 && std::abs(e - expected_e[i]) <= 0.1 * expected_e[i];
        detail += "N=" + std::to_string(ns[i]) + ": L=" + std::to_string(r.l_opt) + " E=" + fmt("%.3e", e) + "; ";
    }
    return {ok, detail};
}

Outcome lower_bound_consistency() {
    double worst_rel = 0.0;
    for (int m : {8, 16, 32}) {
        const double bound = lower_bound(m);
        const double direct = expected_abs_error(Architecture::Novel, m);
        worst_rel = std::max(worst_rel, std::abs(bound - direct) / direct);
    }
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_point = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double a = u(rng);
        const double b = u(rng);
        const int m = 2 + static_cast<int>(rng() % 63);
        const double c = smax_novel_closed(a, b, m).c;
        if (a < b) {
            worst_point = std::max(worst_point, std::abs((c - b) - p_err_right(a, b, m)));
        } else if (a > b) {
            worst_point = std::max(worst_point, std::abs((c - a) - p_err_left(a, b, m)));
        }
    }
    return {worst_rel <= 1e-3 && worst_point <= 1e-12,
            "integral rel diff " + fmt("%.3e", worst_rel) + ", pointwise " + fmt("%.3e", worst_point)};
}

Outcome exact_bookkeeping() {
    std::int64_t worst = 0;
    std::uint64_t cases = 0;
    for (int l = 1; l <= 4; ++l) {
        for (std::uint64_t x = 0; x < 256; ++x) {
            for (std::uint64_t y = 0; y < 256; ++y) {
                const auto a = BitStream::from_words({x}, 8);
                const auto b = BitStream::from_words({y}, 8);
                const auto run = smax_novel(a, b, l);
                const auto res = bookkeeping_residual(a, b, run);
                worst = std::max({worst, std::abs(res.excess_form), std::abs(res.overflow_form)});
                ++cases;
            }
        }
    }
    return {worst == 0, std::to_string(cases) + " cases, max |residual| = " + std::to_string(worst)};
}

Outcome monte_carlo_match() {
    bool ok = true;
    std::string detail;
    for (int l : {5, 15, 30}) {
        const auto mc = monte_carlo_error(10000, l, 2000, 7000 + static_cast<std::uint64_t>(l));
        const double analytic = expected_error_probability(l + 1, 10000);
        const double z = std::abs(mc.mean - analytic) / mc.std_error;
        ok = ok && z <= 3.0;
        detail += "L=" + std::to_string(l) + ": mc " + fmt("%.4e", mc.mean) + " vs " + fmt("%.4e", analytic) +
                  " (" + fmt("%.2f", z) + " se); ";
    }
    return {ok, detail};
}

Outcome algebraic_identities() {
    std::mt19937_64 rng(808);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_sym = 0.0;
    double worst_sum = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const double a = u(rng);
        const double b = u(rng);
        const int m = 2 * (1 + static_cast<int>(rng() % 32));
        for (Architecture arch : kArchs) {
            const double hi = smax_closed(arch, a, b, m).c;
            worst_sym = std::max(worst_sym, std::abs(hi - smax_closed(arch, b, a, m).c));
            worst_sum = std::max(worst_sum, std::abs(hi + smin_closed(arch, a, b, m).c - a - b));
        }
    }
    return {worst_sym <= 1e-12 && worst_sum <= 1e-12,
            "symmetry " + fmt("%.3e", worst_sym) + ", max+min " + fmt("%.3e", worst_sum)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 oracle equivalence", oracle_equivalence},
        {"2 bit-wise simulation match", simulation_match},
        {"3 approximation error ordering", error_ordering},
        {"4 optimal register lengths", optimal_lengths_check},
        {"5 lower-bound consistency", lower_bound_consistency},
        {"6 exact bookkeeping", exact_bookkeeping},
        {"7 Monte Carlo vs analytic", monte_carlo_match},
        {"8 algebraic identities", algebraic_identities},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-32s %s [%.1fs]\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str(), secs);
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    return failures;
}

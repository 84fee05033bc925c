#include "smax/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "smax/analytic.hpp"
#include "smax/error.hpp"
#include "smax/generator.hpp"
#include "smax/logic.hpp"

namespace smax::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_real(std::string_view text) {
    const std::string s(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(value)) {
        throw UsageError("not a number: '" + s + "'");
    }
    return value;
}

std::int64_t as_integer(double value, std::string_view text) {
    const double rounded = std::round(value);
    if (std::abs(rounded - value) > 1e-9 || std::abs(rounded) > 9.0e15) {
        throw UsageError("not an integer: '" + std::string(text) + "'");
    }
    return static_cast<std::int64_t>(rounded);
}

// Per-row sub-seeds for the streams of one circuit evaluation.
struct StreamSeeds {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t select;
};

StreamSeeds seeds_for(std::uint64_t master, std::uint64_t row) {
    return {derive_seed(master, 0, row), derive_seed(master, 1, row), derive_seed(master, 2, row)};
}

struct SimulatedRun {
    BitStream output;
    std::optional<CircuitRun> novel;
};

SimulatedRun simulate_circuit(Architecture arch, bool minimum, const BitStream& sa, const BitStream& sb,
                              const BitStream& select, int m) {
    switch (arch) {
        case Architecture::Li:
            return {minimum ? smin_li(sa, sb, select, m) : smax_li(sa, sb, select, m), std::nullopt};
        case Architecture::Yu:
            return {minimum ? smin_yu(sa, sb, m) : smax_yu(sa, sb, m), std::nullopt};
        case Architecture::Novel: {
            CircuitRun run = minimum ? smin_novel(sa, sb, m - 1) : smax_novel(sa, sb, m - 1);
            BitStream output = run.output;
            return {std::move(output), std::move(run)};
        }
    }
    throw std::invalid_argument("unknown architecture");
}

double closed_form(Architecture arch, bool minimum, double a, double b, int m) {
    return minimum ? smin_closed(arch, a, b, m).c : smax_closed(arch, a, b, m).c;
}

void write_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i == 0 ? "" : ",") << cells[i];
    }
    out << '\n';
}

void require_probability(double p, const char* flag) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError(std::string(flag) + " must lie in [0, 1]");
    }
}

}  // namespace

std::vector<double> Range::values() const {
    if (!(step > 0.0)) {
        throw UsageError("range step must be positive");
    }
    const double span = (stop - start) / step;
    if (span < -0.5) {
        throw UsageError("range is empty (stop < start)");
    }
    const auto count = static_cast<std::size_t>(std::floor(span + 0.5)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        // Snap to 12 decimals so 0.4 + 10 * 0.01 is exactly 0.5.
        out.push_back(std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12);
    }
    return out;
}

Range parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        const double v = parse_real(parts[0]);
        return {v, v, 1.0};
    }
    if (parts.size() > 3) {
        throw UsageError("range must be start:stop[:step]");
    }
    Range r{parse_real(parts[0]), parse_real(parts[1]), parts.size() == 3 ? parse_real(parts[2]) : 1.0};
    (void)r.values();
    return r;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (std::string_view item : split(text, ',')) {
        if (item.empty()) {
            throw UsageError("empty item in list '" + std::string(text) + "'");
        }
        for (double v : parse_range(item).values()) {
            out.push_back(static_cast<int>(as_integer(v, item)));
        }
    }
    return out;
}

std::vector<std::uint64_t> parse_length_list(std::string_view text) {
    std::vector<std::uint64_t> out;
    for (std::string_view item : split(text, ',')) {
        const std::int64_t n = as_integer(parse_real(item), item);
        if (n < 1) {
            throw UsageError("stream lengths must be positive");
        }
        out.push_back(static_cast<std::uint64_t>(n));
    }
    return out;
}

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", value);
    return buf;
}

void cmd_curve(const SweepSpec& spec, std::ostream& out) {
    require_probability(spec.a, "--a");
    const std::vector<double> bs = spec.b_range.values();
    for (double b : bs) {
        require_probability(b, "--b");
    }
    if (spec.states.empty()) {
        throw UsageError("--m needs at least one value");
    }
    for (int m : spec.states) {
        validate_states(spec.arch, m);
    }
    if (spec.n == 0) {
        throw UsageError("--n must be positive");
    }

    const std::size_t width = spec.states.size();
    std::vector<double> closed(bs.size() * width);
    std::vector<double> simulated(bs.size() * width);
    const StreamGenerator gen{SngMode::PseudoRandom, spec.seed};
    const auto rows = static_cast<std::int64_t>(bs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < rows; ++r) {
        const double b = bs[r];
        const StreamSeeds seeds = seeds_for(spec.seed, static_cast<std::uint64_t>(r));
        const BitStream sa = generate(spec.a, spec.n, gen, seeds.a);
        const BitStream sb = generate(b, spec.n, gen, seeds.b);
        const BitStream select = generate(0.5, spec.n, gen, seeds.select);
        for (std::size_t j = 0; j < width; ++j) {
            const int m = spec.states[j];
            closed[r * width + j] = closed_form(spec.arch, spec.minimum, spec.a, b, m);
            simulated[r * width + j] =
                rate(simulate_circuit(spec.arch, spec.minimum, sa, sb, select, m).output).value();
        }
    }

    std::vector<std::string> header{"b", spec.minimum ? "min_ab" : "max_ab"};
    for (int m : spec.states) {
        header.push_back("closed_M" + std::to_string(m));
        header.push_back("simulated_M" + std::to_string(m));
    }
    write_row(out, header);
    for (std::size_t r = 0; r < bs.size(); ++r) {
        const double exact = spec.minimum ? std::min(spec.a, bs[r]) : std::max(spec.a, bs[r]);
        std::vector<std::string> cells{format_real(bs[r]), format_real(exact)};
        for (std::size_t j = 0; j < width; ++j) {
            cells.push_back(format_real(closed[r * width + j]));
            cells.push_back(format_real(simulated[r * width + j]));
        }
        write_row(out, cells);
    }
}

void cmd_abs_error(const SweepSpec& spec, std::ostream& out) {
    if (spec.states.empty()) {
        throw UsageError("--m needs at least one value");
    }
    for (int m : spec.states) {
        if (m < 2) {
            throw UsageError("--m values must be at least 2");
        }
    }
    write_row(out, {"M", "E_li", "E_yu", "E_novel"});
    for (int m : spec.states) {
        std::vector<std::string> cells{std::to_string(m)};
        for (Architecture arch : {Architecture::Li, Architecture::Yu}) {
            // STanh-based circuits only exist for even M.
            cells.push_back(m % 2 == 0 ? format_real(expected_abs_error(arch, m, spec.quad)) : "");
        }
        cells.push_back(format_real(expected_abs_error(Architecture::Novel, m, spec.quad)));
        write_row(out, cells);
    }
}

void cmd_error_vs_length(const SweepSpec& spec, std::ostream& out) {
    if (spec.lengths.empty() || spec.stream_lengths.empty()) {
        throw UsageError("--l and --n need at least one value");
    }
    std::vector<std::string> header{"L"};
    for (std::uint64_t n : spec.stream_lengths) {
        header.push_back("E_N" + std::to_string(n));
    }
    if (spec.trials > 0) {
        for (std::uint64_t n : spec.stream_lengths) {
            header.push_back("mc_mean_N" + std::to_string(n));
            header.push_back("mc_stderr_N" + std::to_string(n));
        }
    }
    header.emplace_back("lower_bound");
    const std::vector<ErrorReport> reports = optimal_lengths(spec.stream_lengths, spec.lengths, spec.quad);

    write_row(out, header);
    for (std::size_t row = 0; row < spec.lengths.size(); ++row) {
        const int l = spec.lengths[row];
        std::vector<std::string> cells{std::to_string(l)};
        for (const ErrorReport& report : reports) {
            cells.push_back(format_real(report.rows[row].analytic));
        }
        if (spec.trials > 0) {
            for (std::size_t i = 0; i < spec.stream_lengths.size(); ++i) {
                // Each (N, L) point gets its own seed stream.
                const std::uint64_t seed = derive_seed(spec.seed, 1000 + i, static_cast<std::uint64_t>(l));
                const MonteCarloEstimate mc = monte_carlo_error(spec.stream_lengths[i], l, spec.trials, seed);
                cells.push_back(format_real(mc.mean));
                cells.push_back(format_real(mc.std_error));
            }
        }
        cells.push_back(format_real(reports.front().rows[row].lower_bound));
        write_row(out, cells);
    }
}

void cmd_optimal_length(const SweepSpec& spec, std::ostream& out) {
    if (spec.lengths.empty() || spec.stream_lengths.empty()) {
        throw UsageError("--l and --n need at least one value");
    }
    const std::vector<ErrorReport> reports = optimal_lengths(spec.stream_lengths, spec.lengths, spec.quad);
    write_row(out, {"N", "L_opt", "E_opt", "lower_bound_at_opt"});
    for (const ErrorReport& report : reports) {
        const auto best = std::find_if(report.rows.begin(), report.rows.end(),
                                       [&](const ErrorRow& row) { return row.l == report.l_opt; });
        write_row(out, {std::to_string(report.n), std::to_string(report.l_opt), format_real(best->analytic),
                        format_real(best->lower_bound)});
    }
}

void cmd_simulate(const SweepSpec& spec, std::ostream& out) {
    require_probability(spec.a, "--a");
    require_probability(spec.b, "--b");
    if (spec.states.size() != 1) {
        throw UsageError("simulate takes exactly one --m (or --l) value");
    }
    const int m = spec.states.front();
    validate_states(spec.arch, m);
    if (spec.n == 0) {
        throw UsageError("--n must be positive");
    }

    const StreamGenerator gen{SngMode::PseudoRandom, spec.seed};
    const StreamSeeds seeds = seeds_for(spec.seed, 0);
    const BitStream sa = generate(spec.a, spec.n, gen, seeds.a);
    const BitStream sb = generate(spec.b, spec.n, gen, spec.same_streams ? seeds.a : seeds.b);
    const BitStream select = generate(0.5, spec.n, gen, seeds.select);
    const SimulatedRun run = simulate_circuit(spec.arch, spec.minimum, sa, sb, select, m);

    if (!spec.dump_path.empty()) {
        std::ofstream dump(spec.dump_path);
        if (!dump) {
            throw UsageError("cannot open dump file '" + spec.dump_path + "'");
        }
        write_ascii(dump, sa);
        write_ascii(dump, sb);
        write_ascii(dump, run.output);
    }

    write_row(out, {"quantity", "value"});
    write_row(out, {"architecture", std::string(to_string(spec.arch))});
    write_row(out, {"M", std::to_string(m)});
    write_row(out, {"N", std::to_string(spec.n)});
    write_row(out, {"rate_a", format_real(rate(sa).value())});
    write_row(out, {"rate_b", format_real(rate(sb).value())});
    write_row(out, {"rate_c", format_real(rate(run.output).value())});
    write_row(out, {"closed_form", format_real(closed_form(spec.arch, spec.minimum, spec.a, spec.b, m))});
    if (run.novel) {
        const CircuitRun& novel = *run.novel;
        // For SMin the counters belong to the inner SMax run on the inverted inputs.
        BookkeepingResidual residual;
        if (spec.minimum) {
            CircuitRun inner = novel;
            inner.output = not_gate(novel.output);
            residual = bookkeeping_residual(not_gate(sa), not_gate(sb), inner);
        } else {
            residual = bookkeeping_residual(sa, sb, novel);
        }
        write_row(out, {"o_R", std::to_string(novel.right_overflows)});
        write_row(out, {"o_L", std::to_string(novel.left_overflows)});
        write_row(out, {"o_S", std::to_string(novel.remaining_ones)});
        write_row(out, {"residual_excess", std::to_string(residual.excess_form)});
        write_row(out, {"residual_overflow", std::to_string(residual.overflow_form)});
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stochastic max/min circuit simulation and error analysis"};
    app.require_subcommand(1);

    SweepSpec spec;
    std::string arch = "novel";
    std::string b_text;
    std::string m_text;
    std::string l_text;
    std::string n_text;
    std::string scheme = "gauss";
    std::string output_path;
    std::uint64_t simulate_n = 10000;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", output_path, "Write CSV to this file instead of stdout");
        sub->add_option("--seed", spec.seed, "Master seed")->capture_default_str();
    };
    auto quadrature = [&](CLI::App* sub) {
        sub->add_option("--quad-res", spec.quad.resolution, "Quadrature points per axis")->capture_default_str();
        sub->add_option("--quad-max-res", spec.quad.max_resolution, "Refinement limit")->capture_default_str();
        sub->add_option("--quad-scheme", scheme, "midpoint or gauss")->capture_default_str();
    };

    CLI::App* curve = app.add_subcommand("curve", "Closed form vs. bit-wise simulation over a range of b");
    common(curve);
    curve->add_option("--arch", arch, "li, yu or novel")->capture_default_str();
    curve->add_option("--a", spec.a, "Fixed value of a")->capture_default_str();
    curve->add_option("--b", b_text, "Range start:stop:step")->default_str("0.4:0.6:0.01");
    curve->add_option("--m", m_text, "State counts, e.g. 16,64")->default_str("16,64");
    curve->add_option("--n", spec.n, "Stream length")->capture_default_str();
    curve->add_flag("--min", spec.minimum, "Use the SMin variant");

    CLI::App* abs_error = app.add_subcommand("abs-error", "Expected absolute error vs. number of states");
    common(abs_error);
    quadrature(abs_error);
    abs_error->add_option("--m", m_text, "State counts")->default_str("2:50");

    CLI::App* vs_length = app.add_subcommand("error-vs-length", "Expected error probability vs. register length");
    common(vs_length);
    quadrature(vs_length);
    vs_length->add_option("--n", n_text, "Stream lengths")->default_str("1000,10000,30000,50000,100000");
    vs_length->add_option("--l", l_text, "Register lengths")->default_str("1:50");
    vs_length->add_option("--trials", spec.trials, "Monte Carlo trials per point (0 = none)")->capture_default_str();

    CLI::App* optimal = app.add_subcommand("optimal-length", "Optimal register length per stream length");
    common(optimal);
    quadrature(optimal);
    optimal->add_option("--n", n_text, "Stream lengths")->default_str("1000,10000,30000,50000,100000");
    optimal->add_option("--l", l_text, "Register lengths")->default_str("1:50");

    CLI::App* simulate = app.add_subcommand("simulate", "Run one circuit instance and report its counters");
    common(simulate);
    simulate->add_option("--arch", arch, "li, yu or novel")->capture_default_str();
    simulate->add_option("--a", spec.a, "Value of a")->capture_default_str();
    simulate->add_option("--b", b_text, "Value of b")->default_str("0.5");
    auto* m_opt = simulate->add_option("--m", m_text, "Number of states M")->default_str("16");
    simulate->add_option("--l", l_text, "Shift register length L (novel, M = L + 1)")->excludes(m_opt);
    simulate->add_option("--n", simulate_n, "Stream length")->capture_default_str();
    simulate->add_flag("--min", spec.minimum, "Use the SMin variant");
    simulate->add_flag("--same-streams", spec.same_streams, "Generate B from A's seed");
    simulate->add_option("--dump", spec.dump_path, "Write A, B and C as 0/1 text lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (scheme == "midpoint") {
            spec.quad.scheme = QuadratureScheme::Midpoint;
        } else if (scheme == "gauss") {
            spec.quad.scheme = QuadratureScheme::GaussLegendre;
        } else {
            throw UsageError("--quad-scheme must be midpoint or gauss");
        }
        spec.arch = parse_architecture(arch);

        std::unique_ptr<std::ofstream> file;
        std::ostream* sink = &out;
        auto open_output = [&] {
            if (!output_path.empty()) {
                file = std::make_unique<std::ofstream>(output_path);
                if (!*file) {
                    throw UsageError("cannot open output file '" + output_path + "'");
                }
                sink = file.get();
            }
        };
        // Render into a buffer so a failing command leaves no partial CSV behind.
        std::ostringstream buffer;

        if (curve->parsed()) {
            spec.command = Command::Curve;
            spec.b_range = parse_range(b_text.empty() ? "0.4:0.6:0.01" : b_text);
            spec.states = parse_int_list(m_text.empty() ? "16,64" : m_text);
            cmd_curve(spec, buffer);
        } else if (abs_error->parsed()) {
            spec.command = Command::AbsError;
            spec.states = parse_int_list(m_text.empty() ? "2:50" : m_text);
            cmd_abs_error(spec, buffer);
        } else if (vs_length->parsed() || optimal->parsed()) {
            if (!n_text.empty()) {
                spec.stream_lengths = parse_length_list(n_text);
            }
            spec.lengths = parse_int_list(l_text.empty() ? "1:50" : l_text);
            if (vs_length->parsed()) {
                spec.command = Command::ErrorVsLength;
                cmd_error_vs_length(spec, buffer);
            } else {
                spec.command = Command::OptimalLength;
                cmd_optimal_length(spec, buffer);
            }
        } else {
            spec.command = Command::Simulate;
            spec.n = simulate_n;
            spec.b = parse_real(b_text.empty() ? "0.5" : b_text);
            if (!l_text.empty()) {
                std::vector<int> ls = parse_int_list(l_text);
                for (int& l : ls) {
                    l += 1;
                }
                spec.states = ls;
            } else {
                spec.states = parse_int_list(m_text.empty() ? "16" : m_text);
            }
            cmd_simulate(spec, buffer);
        }
        open_output();
        *sink << buffer.str();
        sink->flush();
    } catch (const QuadratureError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace smax::cli

#pragma once

/// Command-line front end: instance I/O, solver dispatch, JSON results,
/// SVG rendering, seeded generation, and the rhythm codec.
///
/// Subcommands: solve, gen, render, rhythm (encode|decode), oracle.
/// Exit codes: 0 success; 1 runtime failure (budget exceeded, unwritable
/// output, bad rhythm string, ...); 2 unreadable or malformed input file;
/// 3 k out of range; 4 solver incompatible with the instance or k.

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dp.hpp"
#include "instance.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "rhythm.hpp"
#include "small_k.hpp"
#include "svg.hpp"

namespace asympoly {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int parse_failure = 2;
inline constexpr int bad_k = 3;
inline constexpr int solver_mismatch = 4;
}  // namespace exit_code

namespace cli_detail {

[[nodiscard]] inline auto read_file(const std::string& path, std::string& out) -> bool {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

[[nodiscard]] inline auto write_file(const std::string& path, const std::string& content) -> bool {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

/// Rounds to 12 significant digits, the precision promised for printed areas.
[[nodiscard]] inline auto round_to_12_digits(double v) -> double {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

[[nodiscard]] inline auto result_json(const diameter_set& ds, const solution& sol,
                                      bool even_lattice) -> nlohmann::json {
    nlohmann::json j;
    j["n"] = ds.n();
    j["k"] = sol.selection.k();
    j["solver"] = solver_name(sol.solver);
    j["area"] = round_to_12_digits(sol.area);
    j["vertex_indices"] = sol.selection.indices;
    j["angles"] = ds.diameter_angles();
    if (even_lattice) {
        j["interval_vector"] = intervals_of(sol.selection, ds.point_count()).gaps;
        j["bits"] = encode_rhythm(sol.selection, ds.point_count());
    }
    return j;
}

[[nodiscard]] inline auto parse_intervals(const std::string& text) -> std::vector<int> {
    std::vector<int> gaps;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto b = token.find_first_not_of(" \t");
        const auto e = token.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("rhythm: empty interval in list");
        token = token.substr(b, e - b + 1);
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size() || v < 1)
            throw std::invalid_argument("rhythm: intervals must be positive integers");
        gaps.push_back(v);
    }
    if (gaps.size() < 3)
        throw std::invalid_argument("rhythm: need at least 3 intervals");
    return gaps;
}

inline auto cmd_solve(std::ostream& out, std::ostream& err, const std::string& path, int k,
                      std::string solver, int threads, std::int64_t budget,
                      const std::string& svg_path) -> int {
    std::string text;
    if (!read_file(path, text)) {
        err << "error: cannot read instance file '" << path << "'\n";
        return exit_code::parse_failure;
    }
    std::optional<instance> inst;
    std::optional<diameter_set> ds;
    try {
        inst = parse_instance_json(text, err);
        ds = inst->to_diameter_set();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_failure;
    }
    const int n = ds->n();
    if (k < 3 || k >= n) {
        err << "error: k must satisfy 3 <= k < n (got k=" << k << ", n=" << n << ")\n";
        return exit_code::bad_k;
    }
    const bool even = inst->even || ds->is_evenly_spaced();
    if (solver == "auto")
        solver = even ? "lattice" : (k == 3 ? "triangle" : (k == 4 ? "quad" : "dp"));
    if (solver == "fast") {
        if (k == 3) {
            solver = "triangle";
        } else if (k == 4) {
            solver = "quad";
        } else {
            err << "error: the fast solver handles only k=3 or k=4 (got k=" << k << ")\n";
            return exit_code::solver_mismatch;
        }
    }
    if (solver == "lattice" && !even) {
        err << "error: the lattice solver requires evenly spaced diameters\n";
        return exit_code::solver_mismatch;
    }

    std::optional<solution> sol;
    try {
        if (solver == "lattice") {
            const interval_vector iv = (k % 2 == 0) ? max_asymmetric_lattice_even(n, k)
                                                    : max_asymmetric_lattice_odd(n, k);
            vertex_selection s = iv.to_selection(*ds);
            const double area = polygon_area(*ds, s);
            sol = solution{std::move(s), area, solver_kind::lattice};
        } else if (solver == "triangle") {
            sol = solve_triangle(*ds);
        } else if (solver == "quad") {
            sol = solve_quadrilateral(*ds);
        } else if (solver == "dp") {
            sol = solve_dp(*ds, k, threads);
        } else {  // oracle
            sol = oracle_solve(*ds, k, oracle_options{true, budget});
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
    out << result_json(*ds, *sol, even).dump(2) << "\n";
    if (!svg_path.empty()) {
        if (!write_file(svg_path, render_svg(*ds, sol->selection))) {
            err << "error: cannot write SVG to '" << svg_path << "'\n";
            return exit_code::failure;
        }
    }
    return exit_code::ok;
}

inline auto cmd_gen(std::ostream& out, std::ostream& err, int n, std::uint64_t seed, bool even,
                    const std::string& out_path) -> int {
    if (n < 3) {
        err << "error: gen needs n >= 3 (got n=" << n << ")\n";
        return exit_code::failure;
    }
    const instance inst = even ? make_even_instance(n) : make_random_instance(n, seed);
    const std::string text = instance_to_json(inst);
    if (out_path.empty()) {
        out << text;
        return exit_code::ok;
    }
    if (!write_file(out_path, text)) {
        err << "error: cannot write instance to '" << out_path << "'\n";
        return exit_code::failure;
    }
    return exit_code::ok;
}

inline auto cmd_render(std::ostream& err, const std::string& result_path,
                       const std::string& out_path) -> int {
    std::string text;
    if (!read_file(result_path, text)) {
        err << "error: cannot read result file '" << result_path << "'\n";
        return exit_code::parse_failure;
    }
    std::string svg;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        const auto angles = j.at("angles").get<std::vector<double>>();
        const auto indices = j.at("vertex_indices").get<std::vector<int>>();
        const diameter_set ds = diameter_set::from_angles(angles);
        const vertex_selection sel = vertex_selection::of(indices, ds);
        svg = render_svg(ds, sel);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_failure;
    }
    if (!write_file(out_path, svg)) {
        err << "error: cannot write SVG to '" << out_path << "'\n";
        return exit_code::failure;
    }
    return exit_code::ok;
}

inline auto cmd_rhythm_encode(std::ostream& out, std::ostream& err, const std::string& text) -> int {
    try {
        const std::vector<int> gaps = parse_intervals(text);
        std::vector<int> onsets;
        onsets.reserve(gaps.size());
        int p = 0;
        for (int g : gaps) {
            onsets.push_back(p);
            p += g;
        }
        const int m = p;
        nlohmann::json j;
        j["bits"] = encode_rhythm(vertex_selection{std::move(onsets)}, m);
        j["intervals"] = gaps;
        j["onsets"] = static_cast<int>(gaps.size());
        j["pulses"] = m;
        out << j.dump(2) << "\n";
        return exit_code::ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
}

inline auto cmd_rhythm_decode(std::ostream& out, std::ostream& err, const std::string& bits) -> int {
    try {
        const interval_vector iv = decode_rhythm(bits);
        nlohmann::json j;
        j["intervals"] = iv.gaps;
        j["onsets"] = iv.k();
        j["pulses"] = iv.lattice_points();
        out << j.dump(2) << "\n";
        return exit_code::ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
}

inline auto cmd_oracle(std::ostream& out, std::ostream& err, const std::string& path, int k,
                       std::int64_t budget, bool allow_diameters) -> int {
    std::string text;
    if (!read_file(path, text)) {
        err << "error: cannot read instance file '" << path << "'\n";
        return exit_code::parse_failure;
    }
    std::optional<instance> inst;
    std::optional<diameter_set> ds;
    try {
        inst = parse_instance_json(text, err);
        ds = inst->to_diameter_set();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::parse_failure;
    }
    if (k < 3 || k > ds->point_count()) {
        err << "error: oracle needs 3 <= k <= 2n (got k=" << k << ", 2n=" << ds->point_count() << ")\n";
        return exit_code::bad_k;
    }
    std::optional<solution> sol;
    try {
        sol = oracle_solve(*ds, k, oracle_options{!allow_diameters, budget});
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::failure;
    }
    const bool even = inst->even || ds->is_evenly_spaced();
    out << result_json(*ds, *sol, even).dump(2) << "\n";
    return exit_code::ok;
}

}  // namespace cli_detail

/// Runs the command-line interface on `args` (without the program name).
/// All output goes to the given streams; the return value is the process
/// exit code.
[[nodiscard]] inline auto run_cli(std::vector<std::string> args, std::ostream& out,
                                  std::ostream& err) -> int {
    CLI::App app{"maximum-area polygons on circle diameters, no diameter inside", "asympoly"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "compute the maximum-area asymmetric k-gon");
    std::string solve_path;
    int solve_k = 0;
    std::string solver = "auto";
    int threads = 1;
    std::int64_t solve_budget = 5'000'000;
    std::string svg_path;
    solve->add_option("instance", solve_path, "instance JSON file")->required();
    solve->add_option("--k", solve_k, "number of polygon vertices")->required();
    solve->add_option("--solver", solver, "solver choice (default auto)")
        ->check(CLI::IsMember({"auto", "lattice", "dp", "oracle", "fast"}));
    solve->add_option("--threads", threads, "worker threads for the dp solver (default 1)");
    solve->add_option("--budget", solve_budget, "enumeration budget for the oracle solver");
    solve->add_option("--svg", svg_path, "also render the solution to this SVG file");

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    bool gen_even = false;
    std::string gen_out;
    gen->add_option("--n", gen_n, "diameter count")->required();
    gen->add_option("--seed", gen_seed, "random seed (default 0)");
    gen->add_flag("--even", gen_even, "evenly spaced diameters instead of random ones");
    gen->add_option("--out", gen_out, "output path (default: standard output)");

    auto* render = app.add_subcommand("render", "render a result JSON file to SVG");
    std::string render_path;
    std::string render_out;
    render->add_option("result", render_path, "result JSON file from solve/oracle")->required();
    render->add_option("--out", render_out, "output SVG path")->required();

    auto* rhythm = app.add_subcommand("rhythm", "convert between bit strings and interval vectors");
    rhythm->require_subcommand(1);
    auto* enc = rhythm->add_subcommand("encode", "interval vector (e.g. 3,3,4,2,4) to bit string");
    auto* dec = rhythm->add_subcommand("decode", "bit string (e.g. 1001001000101000) to intervals");
    std::string enc_text;
    std::string dec_text;
    enc->add_option("intervals", enc_text, "comma-separated positive gaps")->required();
    dec->add_option("bits", dec_text, "string of '0'/'1' with at least 3 onsets")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference solver");
    std::string oracle_path;
    int oracle_k = 0;
    std::int64_t oracle_budget = 5'000'000;
    bool allow_diameters = false;
    oracle_cmd->add_option("instance", oracle_path, "instance JSON file")->required();
    oracle_cmd->add_option("--k", oracle_k, "number of polygon vertices")->required();
    oracle_cmd->add_option("--budget", oracle_budget, "enumeration budget (default 5e6)");
    oracle_cmd->add_flag("--allow-diameters", allow_diameters, "drop the no-diameter constraint");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (app.got_subcommand(solve))
        return cli_detail::cmd_solve(out, err, solve_path, solve_k, solver, threads, solve_budget, svg_path);
    if (app.got_subcommand(gen))
        return cli_detail::cmd_gen(out, err, gen_n, gen_seed, gen_even, gen_out);
    if (app.got_subcommand(render))
        return cli_detail::cmd_render(err, render_path, render_out);
    if (app.got_subcommand(rhythm)) {
        if (rhythm->got_subcommand(enc)) return cli_detail::cmd_rhythm_encode(out, err, enc_text);
        return cli_detail::cmd_rhythm_decode(out, err, dec_text);
    }
    if (app.got_subcommand(oracle_cmd))
        return cli_detail::cmd_oracle(out, err, oracle_path, oracle_k, oracle_budget, allow_diameters);
    err << "error: no subcommand\n";
    return exit_code::failure;
}

}  // namespace asympoly

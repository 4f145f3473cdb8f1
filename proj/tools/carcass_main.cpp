// carcass: command-line front end for piecewise-linear unimodal maps.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carcass/commands.hpp"
#include "carcass/errors.hpp"
#include "carcass/map_io.hpp"

namespace {

using namespace carcass;
using carcass::cli::Document;
using carcass::cli::Format;

unsigned to_unsigned(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used != s.size() || v == 0 || v > 1'000'000) throw std::invalid_argument(s);
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw ValidationError(std::string(what) + " must be a positive integer, got \"" + s + "\"");
    }
}

std::string label_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void emit_map(const PLMap& m, const std::string& out_path) {
    if (out_path.empty()) std::cout << format_map(m);
    else save_map(m, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of piecewise-linear unimodal maps, their conjugacies with the "
                 "tent map and their self-semiconjugations"};
    app.require_subcommand(1);

    std::string format_name = "text";
    cli::Limits limits;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--max-points", limits.max_points, "Cap on total lattice points")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-denominator-bits", limits.max_denominator_bits,
                   "Cap on denominator bit length (0 = none)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Kinks, slopes, firmness, structure and PL verdict");
    std::string analyze_file;
    cli::AnalyzeOptions analyze_opts;
    unsigned analyze_depth = 0;
    analyze->add_option("map", analyze_file, "Carcass map file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--depth", analyze_depth, "Lattice depth (default: 4*n0+window, at least 8)");
    analyze->add_option("--n-max", analyze_opts.firmness_bound, "Firmness iteration bound")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--window", analyze_opts.window, "Structure-report window")
        ->check(CLI::PositiveNumber);

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Preimage lattice levels and interval tables");
    std::string lattice_file;
    unsigned lattice_depth = 6;
    unsigned lattice_level = 0;
    std::string lattice_table = "mu";
    lattice->add_option("map", lattice_file, "Carcass map file")->required()->check(CLI::ExistingFile);
    lattice->add_option("--depth", lattice_depth, "Lattice depth")->check(CLI::PositiveNumber);
    lattice->add_option("--level", lattice_level, "Print only this level")->check(CLI::PositiveNumber);
    lattice->add_option("--table", lattice_table, "Table to print")
        ->check(CLI::IsMember({"mu", "len", "delta"}));

    // conjugacy
    auto* conj = app.add_subcommand("conjugacy", "Conjugacies with the tent map");
    std::string build_file;
    std::vector<std::string> verify_files, profile_files;
    std::string detect_file;
    unsigned conj_depth = 8;
    conj->add_option("--build", build_file, "Print h o f o h^-1 for homeomorphism h")
        ->check(CLI::ExistingFile);
    conj->add_option("--verify", verify_files, "Check h o f = g o h (files h g)")->expected(2);
    conj->add_option("--detect", detect_file, "PL-conjugacy verdict for g")->check(CLI::ExistingFile);
    conj->add_option("--profile", profile_files, "Convergence profile of g1 -> g2 interpolants")
        ->expected(2);
    auto* conj_depth_opt = conj->add_option("--depth", conj_depth, "Lattice depth");
    conj_depth_opt->check(CLI::PositiveNumber);
    // --depth is a modifier, not one of the exclusive actions
    conj->require_option(1, 2);

    // semiconj
    auto* semi = app.add_subcommand("semiconj", "Self-semiconjugations psi o g = g o psi");
    semi->require_option(1);
    unsigned xi_t = 0;
    std::vector<std::string> psi_exact_args, psi_lattice_args, semi_verify_files, evidence_args,
        lemma35_args;
    semi->add_option("--xi", xi_t, "Print the zig-zag xi_t")->check(CLI::PositiveNumber);
    semi->add_option("--psi-exact", psi_exact_args, "h.map t: h o xi_t o h^-1")->expected(2);
    semi->add_option("--psi-lattice", psi_lattice_args, "g.map t n: psi_t on lattice level n")
        ->expected(3);
    semi->add_option("--verify", semi_verify_files, "psi.map g.map: check commutation")->expected(2);
    semi->add_option("--evidence", evidence_args, "g.map t n_min n_max: defect counts")->expected(4);
    semi->add_option("--lemma35", lemma35_args, "g.map t depth: hypothesis and conclusion")
        ->expected(3);

    // theorems
    auto* theorems = app.add_subcommand("theorems", "Evidence suite for the main theorems");
    std::string theorems_file;
    std::vector<unsigned> theorems_ts{2, 3, 5};
    unsigned theorems_depth = 8;
    theorems->add_option("map", theorems_file, "Carcass map file")->required()->check(CLI::ExistingFile);
    theorems->add_option("--t", theorems_ts, "Tangent indices")->delimiter(',')->check(CLI::PositiveNumber);
    theorems->add_option("--depth", theorems_depth, "Lattice depth (>= 5)")->check(CLI::PositiveNumber);

    // mapgen
    auto* mapgen = app.add_subcommand("mapgen", "Generate a carcass map file");
    std::string mapgen_kind, mapgen_h, mapgen_v, mapgen_out;
    mapgen->add_option("kind", mapgen_kind, "conjugate | asym-tent")
        ->required()
        ->check(CLI::IsMember({"conjugate", "asym-tent"}));
    mapgen->add_option("--homeo", mapgen_h, "Homeomorphism file (kind=conjugate)")->check(CLI::ExistingFile);
    mapgen->add_option("--v", mapgen_v, "Peak in (0,1) (kind=asym-tent)");
    mapgen->add_option("-o,--output", mapgen_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format format = format_name == "structured" ? Format::structured : Format::text;
    auto print = [&](const Document& d) { std::cout << cli::render(d, format); };

    try {
        set_max_denominator_bits(limits.max_denominator_bits);
        if (analyze->parsed()) {
            if (analyze_depth != 0) analyze_opts.depth = analyze_depth;
            analyze_opts.limits = limits;
            print(cli::cmd_analyze(load_map(analyze_file), label_of(analyze_file), analyze_opts));
        } else if (lattice->parsed()) {
            const auto table = lattice_table == "mu"    ? cli::Table::mu
                               : lattice_table == "len" ? cli::Table::len
                                                        : cli::Table::delta;
            std::optional<unsigned> level;
            if (lattice_level != 0) level = lattice_level;
            print(cli::cmd_lattice(load_map(lattice_file), lattice_depth, level, table, limits));
        } else if (conj->parsed()) {
            if (!build_file.empty()) {
                emit_map(cli::cmd_conjugacy_build(load_map(build_file)), "");
            } else if (!verify_files.empty()) {
                print(cli::cmd_conjugacy_verify(load_map(verify_files[0]), load_map(verify_files[1])));
            } else if (!detect_file.empty()) {
                print(cli::cmd_conjugacy_detect(load_map(detect_file), conj_depth, limits));
            } else if (!profile_files.empty()) {
                print(cli::cmd_conjugacy_profile(load_map(profile_files[0]), load_map(profile_files[1]),
                                                 conj_depth, limits));
            } else {
                throw ValidationError("conjugacy needs one of --build, --verify, --detect, --profile");
            }
        } else if (semi->parsed()) {
            if (xi_t != 0) {
                emit_map(xi(xi_t), "");
            } else if (!psi_exact_args.empty()) {
                const auto s = psi_exact(load_map(psi_exact_args[0]), to_unsigned(psi_exact_args[1], "t"));
                emit_map(*s.body, "");
            } else if (!psi_lattice_args.empty()) {
                const Document d = cli::cmd_semiconj_psi_lattice(
                    load_map(psi_lattice_args[0]), to_unsigned(psi_lattice_args[1], "t"),
                    to_unsigned(psi_lattice_args[2], "n"), limits);
                if (format == Format::text) {
                    for (const auto& p : d["points"])
                        std::cout << p[0].get<std::string>() << ' ' << p[1].get<std::string>() << '\n';
                } else {
                    print(d);
                }
            } else if (!semi_verify_files.empty()) {
                print(cli::cmd_semiconj_verify(load_map(semi_verify_files[0]),
                                               load_map(semi_verify_files[1])));
            } else if (!evidence_args.empty()) {
                print(cli::cmd_semiconj_evidence(
                    load_map(evidence_args[0]), to_unsigned(evidence_args[1], "t"),
                    to_unsigned(evidence_args[2], "n_min"), to_unsigned(evidence_args[3], "n_max"),
                    limits));
            } else if (!lemma35_args.empty()) {
                print(cli::cmd_semiconj_lemma35(load_map(lemma35_args[0]),
                                                to_unsigned(lemma35_args[1], "t"),
                                                to_unsigned(lemma35_args[2], "depth"), limits));
            } else {
                throw ValidationError("semiconj needs an action flag");
            }
        } else if (theorems->parsed()) {
            print(cli::to_document(cli::cmd_theorems(load_map(theorems_file), label_of(theorems_file),
                                                     theorems_ts, theorems_depth, limits)));
        } else if (mapgen->parsed()) {
            if (mapgen_kind == "conjugate") {
                if (mapgen_h.empty()) throw ValidationError("mapgen conjugate needs --homeo");
                emit_map(cli::cmd_mapgen_conjugate(load_map(mapgen_h)), mapgen_out);
            } else {
                if (mapgen_v.empty()) throw ValidationError("mapgen asym-tent needs --v");
                emit_map(cli::cmd_mapgen_asym_tent(Rational::parse(mapgen_v)), mapgen_out);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_code_for(e);
    }
    return 0;
}

// Command-line front end: verdicts, candidate classes, duals, rank-2
// construction data, the exact genus-0 oracle, sweeps, Segre strata and
// theta-divisor targets, all emitted as line-oriented JSON records (or an
// aligned table with --table).
//
// Exit codes: 0 success, 2 invalid input or domain violation, 3 internal
// invariant violation.

#include "ruled/records.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

ruled::Int parse_int(const std::string& text) {
    try {
        return ruled::Int(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
}

ruled::Range parse_range(const std::string& text) {
    const auto pos = text.find(':');
    if (pos == std::string::npos) {
        const ruled::Int v = parse_int(text);
        return {v, v};
    }
    // lo > hi is an empty range: the sweep over it is empty, not an error
    return {parse_int(text.substr(0, pos)), parse_int(text.substr(pos + 1))};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    file << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic calculator for Ulrich line bundles on geometrically "
                 "ruled surfaces"};
    app.require_subcommand(1);

    long long g = 0, e = 0, a = 0, b = 0;
    long long da = 0, db = 0;
    long long r = 0, d = 0, rp = 0, sv = 0;
    long long grid_limit = 12;
    std::string gr, er, ar, br;
    std::string out_path;
    bool table = false;
    ruled::GenericityFlags flags;

    const auto add_surface = [&](CLI::App* cmd) {
        cmd->add_option("--g", g, "genus of the base curve")->required();
        cmd->add_option("--e", e, "invariant e of the normalized bundle")->required();
    };
    const auto add_polarization = [&](CLI::App* cmd) {
        cmd->add_option("--a", a, "fiber degree h.f of the polarization")->required();
        cmd->add_option("--b", b, "fiber coefficient of the polarization")->required();
    };
    const auto add_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--generic-bundle", flags.generic_bundle,
                      "grant genericity of the bundle E");
        cmd->add_flag("--generic-curve", flags.generic_curve,
                      "grant genericity of the base curve");
    };
    const auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
    };

    CLI::App* cmd_verdict =
        app.add_subcommand("verdict", "existence verdict for Ulrich line bundles");
    add_surface(cmd_verdict);
    add_polarization(cmd_verdict);
    add_flags(cmd_verdict);
    cmd_verdict->add_flag("--table", table, "aligned table instead of JSON records");
    add_out(cmd_verdict);
    cmd_verdict->callback([&] {
        const ruled::RuledSurface s{ruled::Int(g), ruled::Int(e)};
        const ruled::Polarization h(s, {a, b}, false);
        const std::vector<ruled::Record> rows{ruled::verdict_record(s, h, flags)};
        emit(table ? ruled::verdict_table(rows) : ruled::to_lines(rows), out_path);
    });

    CLI::App* cmd_classes =
        app.add_subcommand("classes", "the two candidate Ulrich divisor classes");
    add_surface(cmd_classes);
    add_polarization(cmd_classes);
    add_out(cmd_classes);
    cmd_classes->callback([&] {
        const ruled::RuledSurface s{ruled::Int(g), ruled::Int(e)};
        const ruled::Polarization h(s, {a, b}, false);
        emit(ruled::to_lines({ruled::classes_record(s, h)}), out_path);
    });

    CLI::App* cmd_dual = app.add_subcommand("dual", "Ulrich dual 3H + K_S - D of a class");
    add_surface(cmd_dual);
    add_polarization(cmd_dual);
    cmd_dual->add_option("--da", da, "fiber degree of D")->required();
    cmd_dual->add_option("--db", db, "fiber coefficient of D")->required();
    add_out(cmd_dual);
    cmd_dual->callback([&] {
        const ruled::RuledSurface s{ruled::Int(g), ruled::Int(e)};
        const ruled::Polarization h(s, {a, b}, false);
        emit(ruled::to_lines({ruled::dual_record(s, h, {da, db})}), out_path);
    });

    CLI::App* cmd_rank2 =
        app.add_subcommand("rank2", "special rank-2 Ulrich target and construction data");
    add_surface(cmd_rank2);
    add_polarization(cmd_rank2);
    add_out(cmd_rank2);
    cmd_rank2->callback([&] {
        const ruled::RuledSurface s{ruled::Int(g), ruled::Int(e)};
        const ruled::Polarization h(s, {a, b}, false);
        emit(ruled::to_lines({ruled::rank2_record(s, h)}), out_path);
    });

    CLI::App* cmd_oracle = app.add_subcommand(
        "oracle", "brute-force Ulrich line classes on a Hirzebruch surface (g = 0)");
    cmd_oracle->add_option("--e", e, "Hirzebruch invariant e >= 0")->required();
    add_polarization(cmd_oracle);
    cmd_oracle->add_option("--grid-limit", grid_limit,
                           "enumerate |coefficients| <= LIMIT (default 12)");
    add_out(cmd_oracle);
    cmd_oracle->callback([&] {
        const ruled::RuledSurface s{0, ruled::Int(e)};
        const ruled::Polarization h(s, {a, b}, false);
        emit(ruled::to_lines(ruled::oracle_records(s, h, grid_limit)), out_path);
    });

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "verdicts over ranges of (g, e, a, b)");
    cmd_sweep->add_option("--g", gr, "genus range, N or LO:HI")->required();
    cmd_sweep->add_option("--e", er, "invariant range, N or LO:HI")->required();
    cmd_sweep->add_option("--a", ar, "fiber degree range, N or LO:HI")->required();
    cmd_sweep->add_option("--b", br, "fiber coefficient range, N or LO:HI")->required();
    add_flags(cmd_sweep);
    cmd_sweep->add_flag("--table", table, "aligned table instead of JSON records");
    add_out(cmd_sweep);
    cmd_sweep->callback([&] {
        const ruled::SweepSpec spec{parse_range(gr), parse_range(er), parse_range(ar),
                                    parse_range(br), flags};
        const std::vector<ruled::Record> rows = ruled::run_sweep(spec);
        emit(table ? ruled::verdict_table(rows) : ruled::to_lines(rows), out_path);
    });

    CLI::App* cmd_strata =
        app.add_subcommand("strata", "Segre-invariant stratum of the moduli space U(r,d)");
    cmd_strata->add_option("--g", g, "genus of the curve")->required();
    cmd_strata->add_option("--r", r, "rank")->required();
    cmd_strata->add_option("--d", d, "degree")->required();
    cmd_strata->add_option("--rp", rp, "subbundle rank r'")->required();
    cmd_strata->add_option("--s", sv, "Segre invariant s")->required();
    add_out(cmd_strata);
    cmd_strata->callback([&] {
        emit(ruled::to_lines({ruled::strata_record(g, r, d, rp, sv)}), out_path);
    });

    CLI::App* cmd_theta = app.add_subcommand(
        "theta", "symmetric-power theta target and properness status");
    add_surface(cmd_theta);
    cmd_theta->add_option("--a", a, "fiber degree (rank of the symmetric power)")
        ->required();
    add_flags(cmd_theta);
    add_out(cmd_theta);
    cmd_theta->callback([&] {
        const ruled::RuledSurface s{ruled::Int(g), ruled::Int(e)};
        emit(ruled::to_lines({ruled::theta_record(s, a, flags)}), out_path);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::logic_error& ex) {
        std::cerr << "internal error: " << ex.what() << '\n';
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}

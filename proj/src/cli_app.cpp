#include "scsa/cli_app.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "scsa/chi_search.hpp"
#include "scsa/core.hpp"
#include "scsa/decomposition.hpp"
#include "scsa/signal.hpp"
#include "scsa/soliton.hpp"

namespace scsa {

namespace {

using json = nlohmann::ordered_json;

void write_report(const Signal& shifted, double shift_offset, const ScsaResult& r,
                  double deficit, const std::string& path) {
    json report;
    report["chi"] = r.spectrum.chi;
    report["count"] = r.spectrum.count();
    report["kappas"] = r.spectrum.kappas;  // descending
    report["inv1"] = r.inv1;
    report["inv3"] = r.inv3;
    report["mse"] = r.mse;
    report["deficit"] = deficit;
    report["shift_offset"] = shift_offset;
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path);
    out << report.dump(2) << "\n";
    (void)shifted;
}

void write_columns(const Grid& grid, const std::vector<double>& values,
                   const std::string& path) {
    save_csv(Signal{grid, values}, path);
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        char* end = nullptr;
        double v = std::strtod(field.c_str(), &end);
        if (end == field.c_str()) throw ParseError("bad number in list: " + field);
        values.push_back(v);
    }
    return values;
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"Semi-classical signal analysis"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a closed-form test signal to CSV");
    std::string kind = "sech2", out_path;
    double a = 0.0, b = 15.0;
    int m = 512;
    double x0 = 6.0, mu = 0.75, sigma = 0.1;
    double amplitude = 2.0, omega = std::numbers::pi, phi = -0.5;
    double f0 = 0.5, f1 = 3.0, chirp_amp = 1.0;
    gen->add_option("--kind", kind)->check(CLI::IsMember({"sech2", "gaussian", "sine", "chirp"}));
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--m", m);
    gen->add_option("--x0", x0);
    gen->add_option("--mu", mu);
    gen->add_option("--sigma", sigma);
    gen->add_option("--amplitude", amplitude);
    gen->add_option("--omega", omega);
    gen->add_option("--phi", phi);
    gen->add_option("--f0", f0);
    gen->add_option("--f1", f1);
    gen->add_option("--chirp-amplitude", chirp_amp);
    gen->add_option("--out", out_path)->required();

    // analyze
    auto* ana = app.add_subcommand("analyze", "Spectrum, reconstruction and diagnostics at one chi");
    std::string in_path, rec_path;
    double chi = 0.0, eps_rel = 1e-10;
    ana->add_option("--in", in_path)->required();
    ana->add_option("--chi", chi)->required();
    ana->add_option("--eps-rel", eps_rel);
    ana->add_option("--out", out_path)->required();
    ana->add_option("--rec", rec_path);

    // sweep
    auto* swp = app.add_subcommand("sweep", "Per-chi (chi, count, mse) table");
    double chi_min = 1.0, chi_max = 500.0;
    int points = 200;
    bool linear = false;
    swp->add_option("--in", in_path)->required();
    swp->add_option("--chi-min", chi_min);
    swp->add_option("--chi-max", chi_max);
    swp->add_option("--points", points);
    swp->add_flag("--linear", linear, "linear instead of log spacing");
    swp->add_option("--out", out_path)->required();

    // fit
    auto* fit = app.add_subcommand("fit", "Locate the N-count plateau and minimize J on it");
    int n_target = 4;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    fit->add_option("--in", in_path)->required();
    fit->add_option("--n", n_target)->required();
    fit->add_option("--bracket-lo", bracket_lo);
    fit->add_option("--bracket-hi", bracket_hi);
    fit->add_option("--out", out_path)->required();

    // decompose
    auto* dec = app.add_subcommand("decompose", "Fast/slow partial sums of the reconstruction");
    int n_fast = 1;
    std::string fast_path, slow_path;
    dec->add_option("--in", in_path)->required();
    dec->add_option("--chi", chi)->required();
    dec->add_option("--n-fast", n_fast);
    dec->add_option("--out-fast", fast_path)->required();
    dec->add_option("--out-slow", slow_path)->required();

    // soliton
    auto* sol = app.add_subcommand("soliton", "Evaluate the N-soliton determinant formula");
    std::string kappas_text, constants_text;
    sol->add_option("--chi", chi)->required();
    sol->add_option("--kappas", kappas_text)->required();
    sol->add_option("--constants", constants_text)->required();
    sol->add_option("--a", a);
    sol->add_option("--b", b);
    sol->add_option("--m", m);
    sol->add_option("--out", out_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage message
        return code == 0 ? 0 : 1;
    }

    if (gen->parsed()) {
        Grid grid = make_grid(a, b, m);
        Signal s = kind == "sech2"      ? generate_sech2(grid, x0)
                   : kind == "gaussian" ? generate_gaussian(grid, mu, sigma)
                   : kind == "sine"     ? generate_sine(grid, amplitude, omega, phi)
                                        : generate_chirp(grid, chirp_amp, f0, f1);
        save_csv(s, out_path);
    } else if (ana->parsed()) {
        auto shifted = shift_nonnegative(load_csv(in_path));
        auto result = analyze(shifted.signal, chi, eps_rel);
        double deficit = reflectionless_deficit(shifted.signal, result.spectrum);
        write_report(shifted.signal, shifted.offset, result, deficit, out_path);
        if (!rec_path.empty()) write_columns(shifted.signal.grid, result.reconstruction, rec_path);
    } else if (swp->parsed()) {
        auto shifted = shift_nonnegative(load_csv(in_path));
        std::vector<double> chis;
        if (linear) {
            chis.resize(points);
            for (int i = 0; i < points; ++i)
                chis[i] = chi_min + (chi_max - chi_min) * i / static_cast<double>(points - 1);
        } else {
            chis = log_spaced(chi_min, chi_max, points);
        }
        auto table = sweep(shifted.signal, chis);
        std::ofstream out(out_path);
        if (!out) throw ParseError("cannot open " + out_path);
        out << "chi,count,mse\n";
        char buf[96];
        for (const auto& p : table) {
            std::snprintf(buf, sizeof buf, "%.17g,%d,%.17g\n", p.chi, p.count, p.mse);
            out << buf;
        }
    } else if (fit->parsed()) {
        auto shifted = shift_nonnegative(load_csv(in_path));
        double guess = weyl_chi_for_target(shifted.signal, n_target);
        if (!(bracket_lo > 0)) bracket_lo = guess / 4.0;
        if (!(bracket_hi > 0)) bracket_hi = guess * 4.0;
        Plateau plateau = find_plateau(shifted.signal, n_target, {bracket_lo, bracket_hi});
        auto [chi_best, best_mse] = optimize_chi(shifted.signal, plateau);
        auto result = analyze(shifted.signal, chi_best);
        double deficit = reflectionless_deficit(shifted.signal, result.spectrum);
        std::fprintf(stderr, "plateau N=%d: chi in [%.6g, %.6g], chi_best=%.6g J=%.3e\n",
                     plateau.count, plateau.chi_lo, plateau.chi_hi, chi_best, best_mse);
        write_report(shifted.signal, shifted.offset, result, deficit, out_path);
    } else if (dec->parsed()) {
        auto shifted = shift_nonnegative(load_csv(in_path));
        auto spec = negative_spectrum(shifted.signal, chi);
        auto parts = split(spec, n_fast);
        write_columns(shifted.signal.grid, parts.fast, fast_path);
        write_columns(shifted.signal.grid, parts.slow, slow_path);
    } else if (sol->parsed()) {
        SolitonModel model{chi, parse_list(kappas_text), parse_list(constants_text)};
        save_csv(nsoliton_signal(model, make_grid(a, b, m)), out_path);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    try {
        return run(args);
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace scsa

#include "cvpt/cli.hpp"

#include "cvpt/convergence.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/serialization.hpp"
#include "cvpt/vpt.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace cvpt {

namespace {

namespace fs = std::filesystem;

enum class Format { json, csv, pretty };

struct RunConfig {
    Format format = Format::pretty;
    std::string cache_dir;
    int order = 10;
    int loops = 0;
    bool physical = false;
    std::string variant = "veff";
    int max_order = 5;
    double tol = 1e-13;
    std::vector<double> bracket;
    std::string selection;
    int digits = 9;
    double reference = kB0Reference;
    std::string input = "-";

    std::optional<fs::path> cache() const {
        return cache_dir.empty() ? std::nullopt : std::optional<fs::path>(cache_dir);
    }
};

std::string fixed(double x, int digits) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string sci(double x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::scientific << std::setprecision(2) << x;
    return os.str();
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- series

int cmd_series(const RunConfig& cfg, std::ostream& out) {
    if (cfg.order < 1) {
        throw argument_error("--order must be at least 1, got " + std::to_string(cfg.order));
    }
    const auto s = cached_ground_state_series(cfg.order, cfg.cache());
    switch (cfg.format) {
    case Format::json:
        emit_json(out, {{"order", cfg.order}, {"eps", energy_to_json(s.energy)}});
        break;
    case Format::csv:
        out << "k,numerator,denominator\n";
        for (int k = 1; k <= cfg.order; ++k) {
            const BigRational& e = s.energy.at(k).re();
            out << k << ',' << e.numerator_str() << ',' << e.denominator_str() << '\n';
        }
        break;
    case Format::pretty:
        out << "k  eps_k\n";
        for (int k = 1; k <= cfg.order; ++k) {
            out << k << "  " << s.energy.at(k).re().str() << '\n';
        }
        break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- veff

int cmd_veff_loops(const RunConfig& cfg, std::ostream& out) {
    if (cfg.loops < 1) {
        throw argument_error("--loops must be at least 1, got " + std::to_string(cfg.loops));
    }
    const auto series = cached_veff_series(std::max(1, 2 * cfg.loops - 2), cfg.cache());
    const LoopExpansion r = loop_coefficients(series.potential, cfg.loops);
    switch (cfg.format) {
    case Format::json:
        emit_json(out, loops_to_json(r));
        break;
    case Format::csv:
        out << "l,numerator,denominator,g_power,wtilde_power\n";
        for (int l = 1; l <= r.loops(); ++l) {
            out << l << ',' << r.at(l).numerator_str() << ',' << r.at(l).denominator_str() << ','
                << LoopExpansion::g_power(l) << ',' << LoopExpansion::wtilde_power(l) << '\n';
        }
        break;
    case Format::pretty:
        out << "V^(l) = " << kLoopTemplate << "\n";
        out << "l  r_l\n";
        for (int l = 1; l <= r.loops(); ++l) {
            out << l << "  " << r.at(l).str() << '\n';
        }
        break;
    }
    return kExitOk;
}

int cmd_veff_physical(const RunConfig& cfg, std::ostream& out, const EffectivePotentialSeries& v) {
    const auto terms = g_expansion(v, cfg.order);
    switch (cfg.format) {
    case Format::json: {
        json rows = json::array();
        for (const auto& t : terms) {
            json row{{"g_power", t.g_power},
                     {"x_power", t.x_power},
                     {"hbar_power", t.hbar_power},
                     {"omega_power", t.omega_power}};
            row.update(to_json(t.coeff));
            rows.push_back(std::move(row));
        }
        emit_json(out, {{"order", cfg.order}, {"terms", std::move(rows)}});
        break;
    }
    case Format::csv:
        out << "g_power,x_power,hbar_power,omega_power,re_num,re_den,im_num,im_den\n";
        for (const auto& t : terms) {
            out << t.g_power << ',' << t.x_power << ',' << t.hbar_power << ',' << t.omega_power << ','
                << t.coeff.re().numerator_str() << ',' << t.coeff.re().denominator_str() << ','
                << t.coeff.im().numerator_str() << ',' << t.coeff.im().denominator_str() << '\n';
        }
        break;
    case Format::pretty:
        out << "g^k  term\n";
        for (const auto& t : terms) {
            out << t.g_power << "  " << to_string(t) << '\n';
        }
        break;
    }
    return kExitOk;
}

int cmd_veff(const RunConfig& cfg, std::ostream& out) {
    if (cfg.loops > 0) {
        return cmd_veff_loops(cfg, out);
    }
    if (cfg.order < 1) {
        throw argument_error("--order must be at least 1, got " + std::to_string(cfg.order));
    }
    const auto s = cached_veff_series(cfg.order, cfg.cache());
    if (cfg.physical) {
        return cmd_veff_physical(cfg, out, s.potential);
    }
    switch (cfg.format) {
    case Format::json:
        emit_json(out, {{"order", cfg.order}, {"potential", potential_to_json(s.potential)}});
        break;
    case Format::csv:
        out << "k,j,re_num,re_den,im_num,im_den\n";
        for (int k = 1; k <= cfg.order; ++k) {
            const auto& c = s.potential.at(k).coefficients();
            for (std::size_t j = 0; j < c.size(); ++j) {
                if (!c[j].is_zero()) {
                    out << k << ',' << j << ',' << c[j].re().numerator_str() << ',' << c[j].re().denominator_str()
                        << ',' << c[j].im().numerator_str() << ',' << c[j].im().denominator_str() << '\n';
                }
            }
        }
        break;
    case Format::pretty:
        out << "k  V_k(X)\n";
        for (int k = 1; k <= cfg.order; ++k) {
            out << k << "  " << to_string(s.potential.at(k), "X") << '\n';
        }
        break;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- vpt

std::vector<VptOutcome> run_scan(const RunConfig& cfg) {
    if (cfg.max_order < 1) {
        throw argument_error("--max-order must be at least 1, got " + std::to_string(cfg.max_order));
    }
    if (!(cfg.tol > 0)) {
        throw argument_error("--tol must be positive");
    }
    if (cfg.variant == "naive") {
        NaiveOptions o;
        o.tol = cfg.tol;
        if (!cfg.bracket.empty()) {
            o.lo = cfg.bracket[0];
            o.hi = cfg.bracket[1];
        }
        if (cfg.selection == "flattest") {
            o.selection = NaiveSelection::flattest;
        } else if (!cfg.selection.empty() && cfg.selection != "continuation") {
            throw argument_error("naive selection must be continuation or flattest");
        }
        const auto s = cached_ground_state_series(2 * cfg.max_order, cfg.cache());
        return naive_b0_sequence(s.energy, cfg.max_order, o);
    }
    if (cfg.variant == "veff") {
        VeffOptions o;
        o.tol = cfg.tol;
        if (!cfg.bracket.empty()) {
            o.omega_lo = cfg.bracket[0];
            o.omega_hi = cfg.bracket[1];
        }
        if (cfg.selection == "interior-first") {
            o.selection = VeffSelection::interior_first;
        } else if (!cfg.selection.empty() && cfg.selection != "flattest") {
            throw argument_error("veff selection must be flattest or interior-first");
        }
        const auto s = cached_veff_series(std::max(1, 2 * cfg.max_order - 2), cfg.cache());
        return veff_b0_sequence(loop_coefficients(s.potential, cfg.max_order), cfg.max_order, o);
    }
    throw argument_error("unknown variant '" + cfg.variant + "'");
}

int cmd_vpt(const RunConfig& cfg, std::ostream& out) {
    if (cfg.digits < 1 || cfg.digits > 17) {
        throw argument_error("--digits must lie in 1..17");
    }
    const auto scan = run_scan(cfg);
    int failed = 0;
    for (const auto& o : scan) {
        failed += o.solution ? 0 : 1;
    }
    switch (cfg.format) {
    case Format::json: {
        json rows = json::array();
        for (const auto& o : scan) {
            if (o.solution) {
                json row = to_json(*o.solution);
                row["deviation"] = relative_deviation(o.solution->b0, cfg.reference);
                row["status"] = "ok";
                rows.push_back(std::move(row));
            } else {
                rows.push_back({{"variant", cfg.variant}, {"N", o.order}, {"status", "failed"}, {"error", o.error}});
            }
        }
        emit_json(out, {{"variant", cfg.variant}, {"reference", cfg.reference}, {"solutions", std::move(rows)}});
        break;
    }
    case Format::csv:
        out << "N,b0,deviation,regressor,omega_var,y,criticality,status\n";
        for (const auto& o : scan) {
            out << o.order << ',';
            if (o.solution) {
                const auto& s = *o.solution;
                out << format_double(s.b0) << ',' << format_double(relative_deviation(s.b0, cfg.reference)) << ','
                    << format_double(convergence_regressor(o.order)) << ',' << format_double(s.omega_var) << ','
                    << (s.y ? format_double(*s.y) : "") << ',' << to_string(s.criticality) << ",ok\n";
            } else {
                out << ",," << format_double(convergence_regressor(o.order)) << ",,,,failed\n";
            }
        }
        break;
    case Format::pretty:
        out << "variant " << cfg.variant << ", reference b0 = " << fixed(cfg.reference, cfg.digits) << '\n';
        out << "N  b0  deviation  Omega  y  criticality\n";
        for (const auto& o : scan) {
            out << o.order << "  ";
            if (o.solution) {
                const auto& s = *o.solution;
                out << fixed(s.b0, cfg.digits) << "  " << sci(relative_deviation(s.b0, cfg.reference)) << "  "
                    << fixed(s.omega_var, cfg.digits) << "  " << (s.y ? fixed(*s.y, cfg.digits) : "-") << "  "
                    << to_string(s.criticality) << '\n';
            } else {
                out << "failed: " << o.error << '\n';
            }
        }
        break;
    }
    if (failed == 0) {
        return kExitOk;
    }
    return failed == static_cast<int>(scan.size()) ? kExitFailure : kExitPartial;
}

// ---------------------------------------------------------------- fit / plotdata

std::vector<ScanRow> read_input(const RunConfig& cfg) {
    if (cfg.input == "-") {
        return read_scan_csv(std::cin);
    }
    std::ifstream in(cfg.input);
    if (!in) {
        throw argument_error("cannot open " + cfg.input);
    }
    return read_scan_csv(in);
}

std::vector<ConvergencePoint> to_points(const std::vector<ScanRow>& rows, double reference) {
    std::vector<ConvergencePoint> pts;
    for (const auto& r : rows) {
        pts.push_back({static_cast<double>(r.order), r.deviation ? *r.deviation : relative_deviation(*r.b0, reference)});
    }
    return pts;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
    const auto pts = to_points(read_input(cfg), cfg.reference);
    const ConvergenceFit fit = fit_convergence(pts);
    std::vector<ConvergencePoint> even;
    for (const auto& p : pts) {
        if (static_cast<int>(p.order) % 2 == 0) {
            even.push_back(p);
        }
    }
    std::optional<ConvergenceFit> even_fit;
    if (even.size() >= 3 && even.size() < pts.size()) {
        even_fit = fit_convergence(even);
    }
    switch (cfg.format) {
    case Format::json: {
        json j{{"model", "ln(deviation) = slope * N^(3/5) + intercept"}, {"fit", to_json(fit)}};
        j["even_only"] = even_fit ? to_json(*even_fit) : json(nullptr);
        emit_json(out, j);
        break;
    }
    case Format::csv:
        out << "subset,slope,slope_stderr,intercept,intercept_stderr,points\n";
        out << "all," << format_double(fit.slope) << ',' << format_double(fit.slope_stderr) << ','
            << format_double(fit.intercept) << ',' << format_double(fit.intercept_stderr) << ',' << pts.size()
            << '\n';
        if (even_fit) {
            out << "even," << format_double(even_fit->slope) << ',' << format_double(even_fit->slope_stderr) << ','
                << format_double(even_fit->intercept) << ',' << format_double(even_fit->intercept_stderr) << ','
                << even.size() << '\n';
        }
        break;
    case Format::pretty:
        out << "ln(deviation) = a N^(3/5) + c\n";
        out << "all   a = " << fixed(fit.slope, 4) << " +- " << fixed(fit.slope_stderr, 4) << "   c = "
            << fixed(fit.intercept, 4) << " +- " << fixed(fit.intercept_stderr, 4) << "   (" << pts.size()
            << " points)\n";
        if (even_fit) {
            out << "even  a = " << fixed(even_fit->slope, 4) << " +- " << fixed(even_fit->slope_stderr, 4)
                << "   c = " << fixed(even_fit->intercept, 4) << " +- " << fixed(even_fit->intercept_stderr, 4)
                << "   (" << even.size() << " points)\n";
        }
        break;
    }
    return kExitOk;
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out) {
    const auto pts = to_points(read_input(cfg), cfg.reference);
    out << "N,regressor,ln_deviation\n";
    for (const auto& p : pts) {
        if (!(p.deviation > 0)) {
            throw domain_error("deviation at N = " + format_double(p.order) + " is not positive");
        }
        out << format_double(p.order) << ',' << format_double(convergence_regressor(p.order)) << ','
            << format_double(std::log(p.deviation)) << '\n';
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact perturbation series and variational resummation for the i g x^3 oscillator", "cvpt"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{
        {"json", Format::json}, {"csv", Format::csv}, {"pretty-table", Format::pretty}};
    app.add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("pretty-table");
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for the JSON series cache (default: no cache)")
        ->envname("CVPT_CACHE_DIR");

    auto* series = app.add_subcommand("series", "Energy coefficients eps_1..eps_K");
    series->add_option("-k,--order", cfg.order, "Highest order K")->capture_default_str();

    auto* veff = app.add_subcommand("veff", "Effective-potential coefficients V_k(X) or loop coefficients r_l");
    auto* veff_order = veff->add_option("-k,--order", cfg.order, "Highest order K")->capture_default_str();
    veff->add_option("-l,--loops", cfg.loops, "Emit r_1..r_L instead of V_k")->excludes(veff_order);
    veff->add_flag("--physical", cfg.physical, "Restore hbar, w and g in the V_k expansion");

    auto* vpt = app.add_subcommand("vpt", "Variational strong-coupling coefficient b0 for N = 1..max-order");
    vpt->add_option("--variant", cfg.variant, "naive or veff")
        ->check(CLI::IsMember({"naive", "veff"}))
        ->capture_default_str();
    vpt->add_option("--max-order", cfg.max_order, "Highest VPT order")->capture_default_str();
    vpt->add_option("--tol", cfg.tol, "Relative root tolerance")->capture_default_str();
    vpt->add_option("--bracket", cfg.bracket, "Variational-parameter search interval lo,hi")
        ->expected(2)
        ->delimiter(',');
    vpt->add_option("--selection", cfg.selection,
                    "PMS tie-break: continuation|flattest (naive), flattest|interior-first (veff)");
    vpt->add_option("--digits", cfg.digits, "Decimals in pretty-table output")->capture_default_str();
    vpt->add_option("--reference", cfg.reference, "Reference b0 for deviations")->capture_default_str();

    auto* fit = app.add_subcommand("fit", "Fit ln(deviation) = a N^(3/5) + c to a VPT CSV");
    fit->add_option("input", cfg.input, "CSV file from `vpt --format csv`, or - for stdin")->capture_default_str();
    fit->add_option("--reference", cfg.reference, "Reference b0 when the CSV has no deviation column")
        ->capture_default_str();

    auto* plot = app.add_subcommand("plotdata", "Emit (N^(3/5), ln deviation) points from a VPT CSV");
    plot->add_option("input", cfg.input, "CSV file from `vpt --format csv`, or - for stdin")->capture_default_str();
    plot->add_option("--reference", cfg.reference, "Reference b0 when the CSV has no deviation column")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (!cfg.bracket.empty() && !(cfg.bracket[0] < cfg.bracket[1])) {
        err << "error: --bracket needs lo < hi\n";
        return kExitUsage;
    }

    try {
        if (series->parsed()) {
            return cmd_series(cfg, out);
        }
        if (veff->parsed()) {
            return cmd_veff(cfg, out);
        }
        if (vpt->parsed()) {
            return cmd_vpt(cfg, out);
        }
        if (fit->parsed()) {
            return cmd_fit(cfg, out);
        }
        return cmd_plotdata(cfg, out);
    } catch (const argument_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const solver_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace cvpt

// Command-line front end: noise injection, denoising, metrics and density
// sweeps over binary PGM images.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stmdf/csv.hpp"
#include "stmdf/diffusion.hpp"
#include "stmdf/metrics.hpp"
#include "stmdf/noise.hpp"
#include "stmdf/pgm.hpp"
#include "stmdf/stats.hpp"

namespace {

using namespace stmdf;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

Variant parse_variant(const std::string& name) {
    if (name == "stmdf-ad") return Variant::StmdfAd;
    if (name == "mf-ad") return Variant::MfAd;
    if (name == "median") return Variant::Median;
    if (name == "stmdf") return Variant::StmdfOnly;
    if (name == "tvr-stmdf") return Variant::TvrStmdf;
    throw CLI::ValidationError("--variant",
                               "unknown variant '" + name +
                                   "' (expected stmdf-ad, mf-ad, median, stmdf, tvr-stmdf)");
}

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::StmdfAd: return "stmdf-ad";
    case Variant::MfAd: return "mf-ad";
    case Variant::Median: return "median";
    case Variant::StmdfOnly: return "stmdf";
    case Variant::TvrStmdf: return "tvr-stmdf";
    }
    return "?";
}

CoefficientKind parse_coeff(const std::string& name) {
    if (name == "gaussian") return CoefficientKind::Gaussian;
    if (name == "cauchy") return CoefficientKind::Cauchy;
    if (name == "tukey") return CoefficientKind::Tukey;
    throw CLI::ValidationError("--coeff", "unknown coefficient '" + name + "'");
}

// Shared filter knobs; values only land in the params structs when the
// corresponding flag was actually given.
struct FilterFlags {
    double beta = 1.0;
    std::string coeff = "cauchy";
    double trim = 0.45;
    std::size_t window = 5;
    std::size_t iters = 120;
    double tol = 0.25;
    std::string tau_policy = "fixed";
    std::string kappa_policy = "refresh";
    bool clamp_tau = false;
    int threads = 1;
    double eps = 1e-3;
    double lambda = 0.1;
    double alpha = 0.1;
    double dt = 0.2;

    CLI::Option* window_opt = nullptr;
    CLI::Option* iters_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    CLI::Option* trim_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--beta", beta, "source term weight in [0,1]");
        cmd->add_option("--coeff", coeff, "diffusion coefficient: gaussian|cauchy|tukey");
        trim_opt = cmd->add_option("--trim", trim, "trim fraction in [0,0.5)");
        window_opt = cmd->add_option("--window", window, "odd window size");
        iters_opt = cmd->add_option("--iters", iters, "maximum iterations");
        tol_opt = cmd->add_option("--tol", tol, "stopping tolerance, mean abs change per pixel");
        cmd->add_option("--tau-policy", tau_policy, "fixed|refresh");
        cmd->add_option("--kappa-policy", kappa_policy, "refresh|fixed");
        cmd->add_flag("--clamp-tau", clamp_tau, "clamp negative thresholds to zero");
        cmd->add_option("--threads", threads, "worker threads for per-pixel passes");
        cmd->add_option("--eps", eps, "TVR gradient regularizer");
        cmd->add_option("--lambda", lambda, "TVR fidelity weight");
        cmd->add_option("--alpha", alpha, "TVR source term weight");
        cmd->add_option("--dt", dt, "TVR time step");
    }

    DiffusionParams diffusion() const {
        DiffusionParams p;
        p.source_strength = beta;
        p.coefficient = parse_coeff(coeff);
        p.trim.trim_fraction = trim;
        if (window_opt && window_opt->count() > 0) p.trim.window_size = window;
        p.max_iterations = iters;
        p.stop_tolerance = tol;
        if (tau_policy == "fixed") {
            p.tau_policy = TauPolicy::FixedFromInput;
        } else if (tau_policy == "refresh") {
            p.tau_policy = TauPolicy::RefreshPerIteration;
        } else {
            throw CLI::ValidationError("--tau-policy", "expected fixed|refresh");
        }
        if (kappa_policy == "refresh") {
            p.kappa_policy = KappaPolicy::RefreshPerIteration;
        } else if (kappa_policy == "fixed") {
            p.kappa_policy = KappaPolicy::Fixed;
        } else {
            throw CLI::ValidationError("--kappa-policy", "expected refresh|fixed");
        }
        p.clamp_tau = clamp_tau;
        p.threads = threads;
        return p;
    }

    TvrParams tvr() const {
        TvrParams p;
        p.epsilon = eps;
        p.lambda = lambda;
        p.source_strength = alpha;
        p.dt = dt;
        if (trim_opt && trim_opt->count() > 0) p.trim.trim_fraction = trim;
        if (window_opt && window_opt->count() > 0) p.trim.window_size = window;
        if (iters_opt && iters_opt->count() > 0) p.max_iterations = iters;
        if (tol_opt && tol_opt->count() > 0) p.stop_tolerance = tol;
        p.threads = threads;
        return p;
    }
};

std::string metrics_line(const MetricsReport& r) {
    return "psnr_db=" + format_number(r.psnr) + ",mae=" + format_number(r.mae) +
           ",mse=" + format_number(r.mse) + ",mssim=" + format_number(r.mssim);
}

CsvTable trace_table(const RunTrace& trace) {
    CsvTable t;
    t.header = {"iteration", "mean_abs_change"};
    for (std::size_t i = 0; i < trace.mean_abs_change.size(); ++i) {
        t.rows.push_back({std::to_string(i + 1), format_number(trace.mean_abs_change[i])});
    }
    return t;
}

std::string render_svg(const std::vector<double>& densities,
                       const std::map<std::string, std::vector<double>>& psnr_by_variant) {
    constexpr double kW = 640, kH = 480, kMargin = 56;
    double lo = 1e300, hi = -1e300;
    for (const auto& [name, col] : psnr_by_variant) {
        for (double v : col) {
            if (!std::isfinite(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (lo > hi) { lo = 0; hi = 1; }
    if (hi - lo < 1e-9) hi = lo + 1;
    const double dlo = densities.front(), dhi = densities.back();
    auto sx = [&](double d) {
        return kMargin + (kW - 2 * kMargin) * (dhi > dlo ? (d - dlo) / (dhi - dlo) : 0.5);
    };
    auto sy = [&](double v) { return kH - kMargin - (kH - 2 * kMargin) * (v - lo) / (hi - lo); };

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << " " << kH
        << "\">\n";
    svg << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kH - kMargin << "\" x2=\"" << kW - kMargin
        << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kH - kMargin << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12
        << "\" text-anchor=\"middle\" font-size=\"14\">noise density</text>\n";
    svg << "<text x=\"16\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 16 " << kH / 2
        << ")\" text-anchor=\"middle\" font-size=\"14\">PSNR (dB)</text>\n";
    svg << "<text x=\"" << kMargin << "\" y=\"" << kH - kMargin + 18
        << "\" text-anchor=\"middle\" font-size=\"12\">" << format_number(dlo) << "</text>\n";
    svg << "<text x=\"" << kW - kMargin << "\" y=\"" << kH - kMargin + 18
        << "\" text-anchor=\"middle\" font-size=\"12\">" << format_number(dhi) << "</text>\n";
    svg << "<text x=\"" << kMargin - 8 << "\" y=\"" << kH - kMargin + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(lo) << "</text>\n";
    svg << "<text x=\"" << kMargin - 8 << "\" y=\"" << kMargin + 4
        << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(hi) << "</text>\n";

    int idx = 0;
    for (const auto& [name, col] : psnr_by_variant) {
        const char* color = kColors[idx % 5];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < densities.size(); ++i) {
            const double v = std::isfinite(col[i]) ? col[i] : hi;
            svg << sx(densities[i]) << "," << sy(v) << " ";
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << kW - kMargin + 6 << "\" y=\"" << kMargin + 16 * idx + 4
            << "\" font-size=\"12\" fill=\"" << color << "\">" << name << "</text>\n";
        ++idx;
    }
    svg << "</svg>\n";
    return svg.str();
}

int cmd_noise(const std::string& in, const std::string& out, const std::string& mask_path,
              double density, std::uint64_t seed) {
    const Image img = read_pgm_file(in);
    const auto [noisy, mask] = inject_salt_pepper(img, NoiseSpec{density, seed});
    write_pgm_file(noisy, out);
    if (!mask_path.empty()) write_mask_file(mask, mask_path);
    std::size_t corrupted = 0;
    for (auto f : mask.flags) corrupted += f;
    std::cout << "corrupted_fraction="
              << format_number(static_cast<double>(corrupted) / static_cast<double>(img.size()))
              << "\n";
    return kExitOk;
}

int cmd_denoise(const std::string& in, const std::string& out, const std::string& ref,
                const std::string& trace_path, const std::string& variant_name_str,
                const FilterFlags& flags) {
    const Image noisy = read_pgm_file(in);
    const Variant variant = parse_variant(variant_name_str);
    const RunResult result = run_filter(noisy, variant, flags.diffusion(), flags.tvr());
    write_pgm_file(result.image, out);
    if (!trace_path.empty()) write_file(trace_path, write_csv(trace_table(result.trace)));
    if (!ref.empty()) {
        const Image clean = read_pgm_file(ref);
        std::cout << metrics_line(compute_metrics(clean, result.image)) << "\n";
    }
    return kExitOk;
}

int cmd_metrics(const std::string& ref, const std::string& test) {
    const Image a = read_pgm_file(ref);
    const Image b = read_pgm_file(test);
    const MetricsReport r = compute_metrics(a, b);
    CsvTable t;
    t.header = {"psnr_db", "mae", "mse", "mssim"};
    t.rows.push_back({format_number(r.psnr), format_number(r.mae), format_number(r.mse),
                      format_number(r.mssim)});
    std::cout << write_csv(t);
    return kExitOk;
}

int cmd_sweep(const std::string& in, const std::string& out, const std::string& stats_out,
              const std::string& svg_out, std::vector<double> densities,
              const std::vector<std::string>& variant_names, std::uint64_t seed,
              const FilterFlags& flags) {
    if (densities.empty()) {
        throw CLI::ValidationError("--densities", "at least one density is required");
    }
    std::vector<Variant> variants;
    for (const auto& name : variant_names) variants.push_back(parse_variant(name));

    std::sort(densities.begin(), densities.end());
    CsvTable table;
    table.header = {"density", "variant", "psnr_db", "mae", "mse", "mssim"};
    const Image clean = read_pgm_file(in);
    std::map<std::string, std::vector<double>> psnr_by_variant;

    for (double density : densities) {
        const NoiseSpec spec{density, sweep_seed(seed, density)};
        const Image noisy = inject_salt_pepper(clean, spec).noisy;
        // Keep rows grouped by density and ordered by variant name.
        std::vector<std::pair<std::string, Variant>> cells;
        for (auto v : variants) cells.emplace_back(variant_name(v), v);
        std::sort(cells.begin(), cells.end());
        for (const auto& [name, variant] : cells) {
            const RunResult result = run_filter(noisy, variant, flags.diffusion(), flags.tvr());
            const MetricsReport r = compute_metrics(clean, result.image);
            table.rows.push_back({format_number(density), name, format_number(r.psnr),
                                  format_number(r.mae), format_number(r.mse),
                                  format_number(r.mssim)});
            psnr_by_variant[name].push_back(r.psnr);
        }
    }
    write_file(out, write_csv(table));
    if (!stats_out.empty()) {
        write_file(stats_out, write_csv(stats_sweep(clean, densities, seed)));
    }
    if (!svg_out.empty()) {
        write_file(svg_out, render_svg(densities, psnr_by_variant));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Switching trimmed mean deviation filtering with anisotropic diffusion"};
    app.require_subcommand(1);

    std::string in, out, mask_path, ref, test, trace_path, stats_out, svg_out;
    std::string variant = "stmdf-ad";
    std::vector<std::string> variants{"stmdf-ad"};
    std::vector<double> densities;
    double density = 0.0;
    std::uint64_t seed = 1;
    FilterFlags flags;

    auto* noise = app.add_subcommand("noise", "inject fixed-value impulse noise");
    noise->add_option("--in", in, "clean input PGM")->required();
    noise->add_option("--out", out, "noisy output PGM")->required();
    noise->add_option("--mask", mask_path, "optional corruption mask output");
    noise->add_option("--density", density, "corruption probability in [0,1]")->required();
    noise->add_option("--seed", seed, "PRNG seed");

    auto* denoise = app.add_subcommand("denoise", "filter a noisy PGM");
    denoise->add_option("--in", in, "noisy input PGM")->required();
    denoise->add_option("--out", out, "filtered output PGM")->required();
    denoise->add_option("--variant", variant, "stmdf-ad|mf-ad|median|stmdf|tvr-stmdf");
    denoise->add_option("--ref", ref, "clean reference; prints a metrics line");
    denoise->add_option("--trace", trace_path, "write per-iteration change CSV");
    flags.attach(denoise);

    auto* metrics = app.add_subcommand("metrics", "score a (reference, test) pair");
    metrics->add_option("--ref", ref, "reference PGM")->required();
    metrics->add_option("--test", test, "test PGM")->required();

    auto* sweep = app.add_subcommand("sweep", "density sweep with per-variant metrics");
    sweep->add_option("--in", in, "clean input PGM")->required();
    sweep->add_option("--out", out, "metrics CSV output")->required();
    sweep->add_option("--stats-out", stats_out, "noisy-image statistics CSV output");
    sweep->add_option("--svg", svg_out, "optional PSNR-vs-density chart");
    sweep->add_option("--densities", densities, "comma-separated densities in [0,1]")
        ->required()
        ->delimiter(',');
    sweep->add_option("--variants", variants, "comma-separated variant list")->delimiter(',');
    sweep->add_option("--seed", seed, "base seed; per-density seeds derive from it");
    FilterFlags sweep_flags;
    sweep_flags.attach(sweep);

    try {
        app.parse(argc, argv);
        if (noise->parsed()) return cmd_noise(in, out, mask_path, density, seed);
        if (denoise->parsed()) return cmd_denoise(in, out, ref, trace_path, variant, flags);
        if (metrics->parsed()) return cmd_metrics(ref, test);
        if (sweep->parsed())
            return cmd_sweep(in, out, stats_out, svg_out, densities, variants, seed, sweep_flags);
        std::cerr << app.help() << "\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const stmdf::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const stmdf::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const stmdf::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const stmdf::DegenerateImage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

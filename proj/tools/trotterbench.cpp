// Command-line front end: catalog queries, error-coefficient reports,
// coefficient conversion and the two benchmark experiment families.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trotterkit/bch.hpp"
#include "trotterkit/bench.hpp"
#include "trotterkit/catalog.hpp"
#include "trotterkit/gates.hpp"
#include "trotterkit/taylor.hpp"
#include "trotterkit/threads.hpp"

namespace tk = trotterkit;

namespace {

std::string complex_str(tk::Complex z, const char* fmt = "%.12g") {
    char buf[96];
    std::snprintf(buf, sizeof(buf), fmt, z.real());
    std::string s = buf;
    std::snprintf(buf, sizeof(buf), fmt, std::abs(z.imag()));
    s += z.imag() < 0.0 ? " - " : " + ";
    s += buf;
    s += "i";
    return s;
}

std::vector<std::string> split_schemes(const std::string& arg, bool with_taylor) {
    std::vector<std::string> names;
    if (arg == "all") {
        names = tk::catalog_names();
        if (with_taylor) names.push_back(tk::bench::kTaylorName);
        return names;
    }
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) names.push_back(item);
    }
    if (names.empty()) throw std::invalid_argument("--schemes: empty list");
    for (const auto& n : names)
        if (n != tk::bench::kTaylorName) tk::get_scheme(n);  // throws for unknown names
    return names;
}

std::optional<bool> parse_conjugate_flag(const std::string& value) {
    if (value.empty()) return std::nullopt;
    return value == "on";
}

void emit_csv(const std::vector<tk::bench::BenchRecord>& records, const std::string& out_path) {
    if (out_path.empty()) {
        tk::bench::write_csv(std::cout, records);
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    tk::bench::write_csv(os, records);
}

int cmd_list_schemes(std::optional<int> order_filter, bool unitary_only) {
    std::printf("%-22s %5s %6s %8s %8s\n", "name", "order", "cycles", "unitary", "eff");
    int rows = 0;
    for (const auto& name : tk::catalog_names()) {
        const auto& s = tk::get_scheme(name);
        if (order_filter && s.order != *order_filter) continue;
        if (unitary_only && !s.unitary()) continue;
        std::string eff = "-";
        if (s.order == 2 || s.order == 4) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.3g", tk::efficiency(s));
            eff = buf;
        }
        std::printf("%-22s %5d %6d %8s %8s\n", s.name.c_str(), s.order, s.cycles,
                    s.unitary() ? "yes" : "no", eff.c_str());
        ++rows;
    }
    std::printf("%d scheme%s\n", rows, rows == 1 ? "" : "s");
    return 0;
}

int cmd_efficiency(const std::string& name) {
    const auto& s = tk::get_scheme(name);
    const auto ec = tk::error_coefficients(s);
    std::printf("scheme: %s (order %d, %d cycles, %s)\n", s.name.c_str(), s.order, s.cycles,
                s.unitary() ? "unitary" : "non-unitary");
    std::printf("  nu - 1    = %s\n", complex_str(ec.nu - 1.0).c_str());
    std::printf("  sigma - 1 = %s\n", complex_str(ec.sigma - 1.0).c_str());
    std::printf("  alpha     = %s\n", complex_str(ec.alpha).c_str());
    std::printf("  beta      = %s\n", complex_str(ec.beta).c_str());
    for (int j = 0; j < 6; ++j)
        std::printf("  gamma_%d   = %s\n", j + 1,
                    complex_str(ec.gamma[static_cast<std::size_t>(j)]).c_str());
    std::printf("  residuals: deg1 %.3g, deg3 %.3g, deg5 %.3g\n", ec.residual_deg1,
                ec.residual_deg3, ec.residual_deg5);
    if (s.order == 2 || s.order == 4)
        std::printf("  Eff%d = %.3g\n", s.order, tk::efficiency(s));
    else
        std::printf("  Eff undefined for order %d (defined for orders 2 and 4 only)\n", s.order);
    return 0;
}

int cmd_convert(const std::string& name_or_file, const std::string& out_path) {
    tk::SplittingScheme scheme;
    if (tk::is_catalog_scheme(name_or_file)) {
        scheme = tk::get_scheme(name_or_file);
    } else {
        std::ifstream is(name_or_file);
        if (!is)
            throw std::invalid_argument("'" + name_or_file +
                                        "' is neither a catalog scheme nor a readable file");
        std::stringstream buffer;
        buffer << is.rdbuf();
        scheme = tk::scheme_from_json(buffer.str());
    }
    const auto sc = tk::to_stage_coefficients(scheme);

    std::printf("scheme: %s (order %d, %d cycles)\n", scheme.name.c_str(), scheme.order,
                scheme.cycles);
    auto print_list = [](const char* label, const std::vector<tk::Complex>& v) {
        std::printf("%s = [", label);
        for (std::size_t i = 0; i < v.size(); ++i)
            std::printf("%s%s", i ? ", " : "", complex_str(v[i], "%.17g").c_str());
        std::printf("]\n");
    };
    print_list("c", sc.c);
    print_list("d", sc.d);

    // re-check the telescope identities on the freshly computed values
    double worst = 0.0;
    tk::Complex prev_d = 0.0;
    for (std::size_t i = 0; i < sc.c.size(); ++i) {
        worst = std::max(worst, std::abs(sc.c[i] + prev_d - scheme.a[i]));
        worst = std::max(worst, std::abs(sc.d[i] + sc.c[i] - scheme.b[i]));
        prev_d = sc.d[i];
    }
    if (worst > 1e-15) throw std::runtime_error("telescope identities violated");
    std::printf("telescope identities: OK\n");

    const std::string json = tk::scheme_to_json(scheme);
    if (out_path.empty()) {
        std::fputs(json.c_str(), stdout);
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        os << json;
    }
    return 0;
}

int cmd_taylor(const std::string& model, int sites, std::uint64_t seed, double t,
               double epsilon) {
    const auto cfg = tk::bench::make_model(model, sites, seed);
    const double gamma = tk::spectral_bound(cfg);
    const auto steps = static_cast<long long>(std::ceil(t * gamma - 1e-12));
    const double h = t / static_cast<double>(std::max<long long>(steps, 1));
    const int k = tk::cutoff_for_step(gamma * h, epsilon);
    const double error = tk::taylor_error(cfg, h, t, k);
    std::printf("model=%s L=%d seed=%llu t=%s\n", model.c_str(), sites,
                static_cast<unsigned long long>(seed), tk::format_g17(t).c_str());
    std::printf("gamma=%s h=%s steps=%lld cutoff=%d epsilon=%.3g\n",
                tk::format_g17(gamma).c_str(), tk::format_g17(h).c_str(), steps, k, epsilon);
    std::printf("frobenius error vs exact diagonalisation: %s\n",
                tk::format_g17(error).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    tk::init_threads_from_env();

    CLI::App app{"Splitting-scheme toolkit for spin-chain time evolution"};
    app.require_subcommand(1);

    // list-schemes
    auto* list = app.add_subcommand("list-schemes", "Print the scheme catalog");
    std::optional<int> order_filter;
    bool unitary_only = false;
    list->add_option("--order", order_filter, "only schemes of this order");
    list->add_flag("--unitary", unitary_only, "only unitary schemes");

    // efficiency
    auto* eff = app.add_subcommand("efficiency", "Error coefficients and efficiency");
    std::string eff_scheme;
    eff->add_option("scheme", eff_scheme, "catalog scheme name")->required();

    // convert
    auto* conv = app.add_subcommand("convert", "Print ramp coefficients c_i, d_i and JSON");
    std::string conv_arg, conv_out;
    conv->add_option("scheme", conv_arg, "catalog scheme name or JSON file")->required();
    conv->add_option("--out", conv_out, "write the scheme JSON here instead of stdout");

    // common benchmark options
    std::string model = "xz", arrangement = "s2", schemes = "all", out_path, conj_flag;
    int sites = 6;
    std::uint64_t seed = 1;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--model", model, "xz or xxz")->check(CLI::IsMember({"xz", "xxz"}));
        cmd->add_option("--arrangement", arrangement, "s2, s2l, s3 or s3l")
            ->check(CLI::IsMember({"s2", "s2l", "s3", "s3l"}));
        cmd->add_option("--schemes", schemes, "comma list of schemes, or 'all'");
        cmd->add_option("--L", sites, "chain length")->check(CLI::Range(2, 20));
        cmd->add_option("--seed", seed, "field realisation seed");
        cmd->add_option("--out", out_path, "CSV output path (default stdout)");
        cmd->add_option("--conjugate-alternating", conj_flag,
                        "force conjugate alternation on/off (default: on for non-unitary)")
            ->check(CLI::IsMember({"on", "off"}));
    };

    // bench-cost
    auto* cost = app.add_subcommand("bench-cost", "Error vs cost at fixed t (CSV)");
    double t = 10.0, h_min = 5e-4, h_max = 2.0;
    int points_per_decade = 24;
    add_common(cost);
    cost->add_option("--t", t, "evolution time")->check(CLI::PositiveNumber);
    cost->add_option("--h-min", h_min, "smallest step")->check(CLI::PositiveNumber);
    cost->add_option("--h-max", h_max, "largest step")->check(CLI::PositiveNumber);
    cost->add_option("--points-per-decade", points_per_decade, "grid density")
        ->check(CLI::Range(1, 200));

    // bench-time
    auto* time = app.add_subcommand("bench-time", "Error/t vs t at matched cost (CSV)");
    double t_min = 0.25, t_max = 10.0, matched_cost = 50.0;
    int t_points = 12;
    add_common(time);
    time->add_option("--t-min", t_min, "smallest evolution time")->check(CLI::PositiveNumber);
    time->add_option("--t-max", t_max, "largest evolution time")->check(CLI::PositiveNumber);
    time->add_option("--t-points", t_points, "number of times (log spaced)")
        ->check(CLI::Range(1, 500));
    time->add_option("--matched-cost", matched_cost, "scaled cost shared by all schemes")
        ->check(CLI::PositiveNumber);

    // taylor
    auto* taylor = app.add_subcommand("taylor", "Truncated-Taylor propagation report");
    double taylor_t = 10.0, epsilon = tk::TaylorPlan::kDefaultEpsilon;
    std::string taylor_model = "xxz";
    int taylor_sites = 6;
    std::uint64_t taylor_seed = 1;
    taylor->add_option("--model", taylor_model, "xz or xxz")
        ->check(CLI::IsMember({"xz", "xxz"}));
    taylor->add_option("--L", taylor_sites, "chain length")->check(CLI::Range(2, 20));
    taylor->add_option("--seed", taylor_seed, "field realisation seed");
    taylor->add_option("--t", taylor_t, "evolution time")->check(CLI::PositiveNumber);
    taylor->add_option("--epsilon", epsilon, "target relative precision")
        ->check(CLI::Range(1e-16, 0.5));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) return cmd_list_schemes(order_filter, unitary_only);
        if (eff->parsed()) return cmd_efficiency(eff_scheme);
        if (conv->parsed()) return cmd_convert(conv_arg, conv_out);
        if (taylor->parsed())
            return cmd_taylor(taylor_model, taylor_sites, taylor_seed, taylor_t, epsilon);

        if (cost->parsed()) {
            tk::bench::CostBenchParams p;
            p.model = model;
            p.arrangement = tk::Arrangement::parse(arrangement);
            p.schemes = split_schemes(schemes, true);
            p.t = t;
            p.h_min = h_min;
            p.h_max = h_max;
            p.points_per_decade = points_per_decade;
            p.sites = sites;
            p.seed = seed;
            p.conjugate_alternating = parse_conjugate_flag(conj_flag);
            emit_csv(tk::bench::run_bench_cost(p), out_path);
            return 0;
        }
        if (time->parsed()) {
            tk::bench::TimeBenchParams p;
            p.model = model;
            p.arrangement = tk::Arrangement::parse(arrangement);
            p.schemes = split_schemes(schemes, true);
            for (int i = 0; i < t_points; ++i) {
                const double lg =
                    t_points == 1 ? std::log10(t_max)
                                  : std::log10(t_min) +
                                        (std::log10(t_max) - std::log10(t_min)) * i /
                                            (t_points - 1);
                p.t_grid.push_back(std::pow(10.0, lg));
            }
            p.matched_cost = matched_cost;
            p.sites = sites;
            p.seed = seed;
            p.conjugate_alternating = parse_conjugate_flag(conj_flag);
            emit_csv(tk::bench::run_bench_time(p), out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fprf/analytic.hpp"
#include "fprf/compound.hpp"
#include "fprf/gpp.hpp"
#include "fprf/io.hpp"
#include "fprf/motion.hpp"
#include "fprf/sampling.hpp"
#include "fprf/stats.hpp"
#include "fprf/validation.hpp"

using nlohmann::json;
namespace fa = fprf::analytic;

namespace {

const char* regime_name(fprf::Regime r) {
    switch (r) {
        case fprf::Regime::series: return "series";
        case fprf::Regime::quadrature: return "quadrature";
        case fprf::Regime::closed_form: return "closed_form";
    }
    return "?";
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out);
    f << j.dump(2) << '\n';
}

void emit_table_csv(const json& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    if (table.empty()) return;
    bool first = true;
    for (auto& [key, val] : table.front().items()) {
        (void)val;
        f << (first ? "" : ",") << key;
        first = false;
    }
    f << '\n';
    for (const auto& row : table) {
        first = true;
        for (auto& [key, val] : row.items()) {
            (void)key;
            f << (first ? "" : ",");
            if (val.is_number_float())
                f << fprf::io::format_double(val.get<double>());
            else
                f << val.dump();
            first = false;
        }
        f << '\n';
    }
}

struct Common {
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "json";
    double tol = 1e-12;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--seed", c.seed, "random stream seed");
    cmd->add_option("--out", c.out, "output file (stdout when omitted)");
    cmd->add_option("--format", c.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", c.tol, "series absolute tolerance");
}

json summary_json(const std::vector<double>& xs) {
    auto s = fprf::stats::summarize(xs);
    return {{"mean", s.mean}, {"variance", s.variance}, {"se_mean", s.se_mean}, {"n", s.n}};
}

json empirical_json(const std::vector<long>& ks) {
    auto e = fprf::sampling::empirical_pmf(ks);
    return {{"frequencies", e.frequencies}, {"standard_errors", e.standard_errors}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form laws and simulators of fractional Poisson random fields"};
    app.require_subcommand(1);

    // ---- pmf -------------------------------------------------------------
    auto* pmf_cmd = app.add_subcommand("pmf", "state probabilities of the field");
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, t1 = 1.0, t2 = 1.0;
        int kmax = 10;
        Common c;
    } pmf_a;
    pmf_cmd->add_option("--lambda", pmf_a.lambda)->required();
    pmf_cmd->add_option("--nu1", pmf_a.nu1)->required();
    pmf_cmd->add_option("--nu2", pmf_a.nu2)->required();
    pmf_cmd->add_option("--t1", pmf_a.t1)->required();
    pmf_cmd->add_option("--t2", pmf_a.t2)->required();
    pmf_cmd->add_option("--kmax", pmf_a.kmax);
    add_common(pmf_cmd, pmf_a.c);

    // ---- moments ----------------------------------------------------------
    auto* mom_cmd = app.add_subcommand("moments", "mean and variance of the field");
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, t1 = 1.0, t2 = 1.0;
        Common c;
    } mom_a;
    mom_cmd->add_option("--lambda", mom_a.lambda)->required();
    mom_cmd->add_option("--nu1", mom_a.nu1)->required();
    mom_cmd->add_option("--nu2", mom_a.nu2)->required();
    mom_cmd->add_option("--t1", mom_a.t1)->required();
    mom_cmd->add_option("--t2", mom_a.t2)->required();
    add_common(mom_cmd, mom_a.c);

    // ---- covariance ---------------------------------------------------------
    auto* cov_cmd = app.add_subcommand("covariance", "two-point covariance");
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, tau1 = 0.5, tau2 = 0.5, t1 = 1.0,
               t2 = 1.0;
        Common c;
    } cov_a;
    cov_cmd->add_option("--lambda", cov_a.lambda)->required();
    cov_cmd->add_option("--nu1", cov_a.nu1)->required();
    cov_cmd->add_option("--nu2", cov_a.nu2)->required();
    cov_cmd->add_option("--tau1", cov_a.tau1)->required();
    cov_cmd->add_option("--tau2", cov_a.tau2)->required();
    cov_cmd->add_option("--t1", cov_a.t1)->required();
    cov_cmd->add_option("--t2", cov_a.t2)->required();
    add_common(cov_cmd, cov_a.c);

    // ---- orderstats ---------------------------------------------------------
    auto* ord_cmd = app.add_subcommand("orderstats", "order-statistics laws");
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, t1 = 1.0, t2 = 1.0, fv = 0.5;
        int k = 1;
        std::string which = "kth";
        Common c;
    } ord_a;
    ord_cmd->add_option("--lambda", ord_a.lambda)->required();
    ord_cmd->add_option("--nu1", ord_a.nu1)->required();
    ord_cmd->add_option("--nu2", ord_a.nu2)->required();
    ord_cmd->add_option("--t1", ord_a.t1)->required();
    ord_cmd->add_option("--t2", ord_a.t2)->required();
    ord_cmd->add_option("--fv", ord_a.fv)->required();
    ord_cmd->add_option("--k", ord_a.k);
    ord_cmd->add_option("--which", ord_a.which)
        ->check(CLI::IsMember({"kth", "min-cond", "max-cond", "min-tail", "max-uncond"}));
    add_common(ord_cmd, ord_a.c);

    // ---- gpp -----------------------------------------------------------------
    auto* gpp_cmd = app.add_subcommand("gpp", "generalized Poisson process laws");
    struct {
        double alpha = 1.0, gamma = 1.0, lambda = 1.0, t = 1.0;
        int kmax = 10;
        Common c;
    } gpp_a;
    gpp_cmd->add_option("--alpha", gpp_a.alpha)->required();
    gpp_cmd->add_option("--gamma", gpp_a.gamma)->required();
    gpp_cmd->add_option("--lambda", gpp_a.lambda)->required();
    gpp_cmd->add_option("--t", gpp_a.t)->required();
    gpp_cmd->add_option("--kmax", gpp_a.kmax);
    add_common(gpp_cmd, gpp_a.c);

    // ---- motion-cf -------------------------------------------------------------
    auto* mcf_cmd = app.add_subcommand("motion-cf", "linear motion characteristic function");
    struct {
        double lambda = 2.0, v = 1.0, t = 1.0, eta_max = 5.0;
        int steps = 20;
        double alpha = 1.0, gamma = 1.0;
        Common c;
    } mcf_a;
    mcf_cmd->add_option("--lambda", mcf_a.lambda)->required();
    mcf_cmd->add_option("--v", mcf_a.v)->required();
    mcf_cmd->add_option("--t", mcf_a.t)->required();
    mcf_cmd->add_option("--eta-max", mcf_a.eta_max);
    mcf_cmd->add_option("--steps", mcf_a.steps);
    mcf_cmd->add_option("--alpha", mcf_a.alpha);
    mcf_cmd->add_option("--gamma", mcf_a.gamma);
    add_common(mcf_cmd, mcf_a.c);

    // ---- compound-cdf -----------------------------------------------------------
    auto* ccdf_cmd = app.add_subcommand("compound-cdf", "compound field cdf/density grid");
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, t1 = 1.0, t2 = 1.0;
        double jump_rate = 1.0, step = 0.01, eps_tail = 1e-4;
        int cells = 2500;
        std::string jump = "exp";
        Common c;
    } ccdf_a;
    ccdf_cmd->add_option("--lambda", ccdf_a.lambda)->required();
    ccdf_cmd->add_option("--nu1", ccdf_a.nu1)->required();
    ccdf_cmd->add_option("--nu2", ccdf_a.nu2)->required();
    ccdf_cmd->add_option("--t1", ccdf_a.t1)->required();
    ccdf_cmd->add_option("--t2", ccdf_a.t2)->required();
    ccdf_cmd->add_option("--jump", ccdf_a.jump)->check(CLI::IsMember({"exp", "unit"}));
    ccdf_cmd->add_option("--jump-rate", ccdf_a.jump_rate);
    ccdf_cmd->add_option("--step", ccdf_a.step);
    ccdf_cmd->add_option("--cells", ccdf_a.cells);
    ccdf_cmd->add_option("--eps-tail", ccdf_a.eps_tail);
    add_common(ccdf_cmd, ccdf_a.c);

    // ---- simulate ----------------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("simulate", "draw samples");
    sim_cmd->require_subcommand(1);
    struct {
        double lambda = 1.0, nu1 = 1.0, nu2 = 1.0, t1 = 1.0, t2 = 1.0;
        double alpha = 1.0, gamma = 1.0, t = 1.0, v = 1.0;
        double jump_rate = 1.0;
        std::string jump = "exp";
        int n = 1000;
        int condition_k = -1;
        bool reflecting_bm = false;
        std::optional<double> nu;
        Common c;
    } sim_a;
    auto* sim_prf = sim_cmd->add_subcommand("prf", "spatial point pattern");
    sim_prf->add_option("--lambda", sim_a.lambda)->required();
    sim_prf->add_option("--t1", sim_a.t1)->required();
    sim_prf->add_option("--t2", sim_a.t2)->required();
    add_common(sim_prf, sim_a.c);
    auto* sim_fprf = sim_cmd->add_subcommand("fprf", "time-changed field counts");
    sim_fprf->add_option("--lambda", sim_a.lambda)->required();
    sim_fprf->add_option("--nu1", sim_a.nu1)->required();
    sim_fprf->add_option("--nu2", sim_a.nu2)->required();
    sim_fprf->add_option("--t1", sim_a.t1)->required();
    sim_fprf->add_option("--t2", sim_a.t2)->required();
    sim_fprf->add_option("--n", sim_a.n);
    add_common(sim_fprf, sim_a.c);
    auto* sim_gpp = sim_cmd->add_subcommand("gpp", "generalized process counts");
    sim_gpp->add_option("--alpha", sim_a.alpha)->required();
    sim_gpp->add_option("--gamma", sim_a.gamma)->required();
    sim_gpp->add_option("--lambda", sim_a.lambda)->required();
    sim_gpp->add_option("--t", sim_a.t)->required();
    sim_gpp->add_option("--n", sim_a.n);
    add_common(sim_gpp, sim_a.c);
    auto* sim_lin = sim_cmd->add_subcommand("linear", "telegraph endpoints");
    sim_lin->add_option("--lambda", sim_a.lambda)->required();
    sim_lin->add_option("--v", sim_a.v)->required();
    sim_lin->add_option("--t", sim_a.t)->required();
    sim_lin->add_option("--n", sim_a.n);
    sim_lin->add_option("--nu", [&sim_a](const std::vector<std::string>& vals) {
        sim_a.nu = std::stod(vals.front());
        return true;
    }, "inverse-stable time change order");
    add_common(sim_lin, sim_a.c);
    auto* sim_pla = sim_cmd->add_subcommand("planar", "planar motion endpoints");
    sim_pla->add_option("--lambda", sim_a.lambda)->required();
    sim_pla->add_option("--v", sim_a.v)->required();
    sim_pla->add_option("--t", sim_a.t)->required();
    sim_pla->add_option("--n", sim_a.n);
    sim_pla->add_option("--condition-k", sim_a.condition_k);
    sim_pla->add_flag("--reflecting-bm", sim_a.reflecting_bm);
    add_common(sim_pla, sim_a.c);
    auto* sim_cmp = sim_cmd->add_subcommand("compound", "compound field draws");
    sim_cmp->add_option("--lambda", sim_a.lambda)->required();
    sim_cmp->add_option("--nu1", sim_a.nu1)->required();
    sim_cmp->add_option("--nu2", sim_a.nu2)->required();
    sim_cmp->add_option("--t1", sim_a.t1)->required();
    sim_cmp->add_option("--t2", sim_a.t2)->required();
    sim_cmp->add_option("--n", sim_a.n);
    sim_cmp->add_option("--jump", sim_a.jump)->check(CLI::IsMember({"exp", "unit"}));
    sim_cmp->add_option("--jump-rate", sim_a.jump_rate);
    add_common(sim_cmp, sim_a.c);

    // ---- validate -------------------------------------------------------------
    auto* val_cmd = app.add_subcommand("validate", "run validation scenarios");
    struct {
        std::string scenario = "all";
        Common c;
    } val_a;
    val_cmd->add_option("scenario", val_a.scenario, "scenario name or 'all'");
    add_common(val_cmd, val_a.c);

    // ---- plot --------------------------------------------------------------------
    auto* plot_cmd = app.add_subcommand("plot", "render a CSV as a static SVG");
    struct {
        std::string in, out = "plot.svg", title = "fprf";
        bool scatter = false;
    } plot_a;
    plot_cmd->add_option("--in", plot_a.in)->required();
    plot_cmd->add_option("--svg", plot_a.out);
    plot_cmd->add_option("--title", plot_a.title);
    plot_cmd->add_flag("--scatter", plot_a.scatter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*pmf_cmd) {
            fa::FieldParams p{pmf_a.lambda, pmf_a.nu1, pmf_a.nu2};
            fa::QuadrantPoint at{pmf_a.t1, pmf_a.t2};
            fprf::SeriesControl ctl;
            ctl.abs_tol = pmf_a.c.tol;
            json table = json::array();
            fprf::EvalReport last;
            for (int k = 0; k <= pmf_a.kmax; ++k) {
                last = fa::pmf(p, k, at, ctl);
                table.push_back({{"k", k}, {"value", last.value}});
            }
            json j = {{"schema", 1},
                      {"params", {{"lambda", p.lambda}, {"nu1", p.nu1}, {"nu2", p.nu2},
                                  {"t1", at.t1}, {"t2", at.t2}}},
                      {"table", table},
                      {"diagnostics", {{"regime", regime_name(last.regime)},
                                       {"terms_used", last.terms_used},
                                       {"error_estimate", last.error_estimate},
                                       {"precision_loss", last.precision_loss}}}};
            if (pmf_a.c.format == "csv" && !pmf_a.c.out.empty())
                emit_table_csv(table, pmf_a.c.out);
            else
                emit(j, pmf_a.c.out);
        } else if (*mom_cmd) {
            fa::FieldParams p{mom_a.lambda, mom_a.nu1, mom_a.nu2};
            fa::QuadrantPoint at{mom_a.t1, mom_a.t2};
            auto m = fa::moments(p, at);
            emit({{"schema", 1},
                  {"params", {{"lambda", p.lambda}, {"nu1", p.nu1}, {"nu2", p.nu2},
                              {"t1", at.t1}, {"t2", at.t2}}},
                  {"mean", m.mean},
                  {"variance", m.variance}},
                 mom_a.c.out);
        } else if (*cov_cmd) {
            fa::FieldParams p{cov_a.lambda, cov_a.nu1, cov_a.nu2};
            double v = fa::covariance(p, {cov_a.tau1, cov_a.tau2}, {cov_a.t1, cov_a.t2});
            emit({{"schema", 1}, {"covariance", v}}, cov_a.c.out);
        } else if (*ord_cmd) {
            fa::FieldParams p{ord_a.lambda, ord_a.nu1, ord_a.nu2};
            fa::QuadrantPoint at{ord_a.t1, ord_a.t2};
            double v;
            if (ord_a.which == "kth")
                v = fa::order_stat_cdf(p, ord_a.k, ord_a.fv, at);
            else if (ord_a.which == "min-cond")
                v = fa::extreme_stats(p, ord_a.fv, at, fa::ExtremeKind::min_conditional);
            else if (ord_a.which == "max-cond")
                v = fa::extreme_stats(p, ord_a.fv, at, fa::ExtremeKind::max_conditional);
            else if (ord_a.which == "min-tail")
                v = fa::extreme_stats(p, ord_a.fv, at, fa::ExtremeKind::min_unconditional_tail);
            else
                v = fa::extreme_stats(p, ord_a.fv, at, fa::ExtremeKind::max_unconditional);
            emit({{"schema", 1}, {"which", ord_a.which}, {"value", v}}, ord_a.c.out);
        } else if (*gpp_cmd) {
            fprf::gpp::GppParams p{gpp_a.alpha, gpp_a.gamma, gpp_a.lambda};
            json table = json::array();
            for (int k = 0; k <= gpp_a.kmax; ++k)
                table.push_back({{"k", k}, {"value", fprf::gpp::gpp_pmf(p, gpp_a.t, k)}});
            emit({{"schema", 1},
                  {"table", table},
                  {"mean", fprf::gpp::gpp_mean(p, gpp_a.t)},
                  {"variance", fprf::gpp::gpp_variance(p, gpp_a.t)},
                  {"waiting_survival", fprf::gpp::gpp_waiting_survival(p, gpp_a.t)}},
                 gpp_a.c.out);
        } else if (*mcf_cmd) {
            fprf::motion::MotionParams m{mcf_a.lambda, mcf_a.v, mcf_a.t};
            json table = json::array();
            for (int i = 0; i <= mcf_a.steps; ++i) {
                double eta = mcf_a.eta_max * i / mcf_a.steps;
                json row = {{"eta", eta}, {"cf", fprf::motion::linear_cf(m, eta)}};
                if (mcf_a.alpha < 1.0 || mcf_a.gamma < 1.0)
                    row["cf_timechanged"] =
                        fprf::motion::linear_cf_timechanged(mcf_a.alpha, mcf_a.gamma, m, eta);
                table.push_back(row);
            }
            if (mcf_a.c.format == "csv" && !mcf_a.c.out.empty())
                emit_table_csv(table, mcf_a.c.out);
            else
                emit({{"schema", 1}, {"table", table}}, mcf_a.c.out);
        } else if (*ccdf_cmd) {
            fa::FieldParams p{ccdf_a.lambda, ccdf_a.nu1, ccdf_a.nu2};
            fa::QuadrantPoint at{ccdf_a.t1, ccdf_a.t2};
            std::function<double(double)> F;
            if (ccdf_a.jump == "exp") {
                double r = ccdf_a.jump_rate;
                F = [r](double y) { return y <= 0.0 ? 0.0 : 1.0 - std::exp(-r * y); };
            } else {
                F = [](double y) { return y >= 1.0 ? 1.0 : 0.0; };
            }
            auto jumps = fprf::compound::discretize_cdf(F, 0.0, ccdf_a.step, ccdf_a.cells);
            auto dist = fprf::compound::cfprf_distribution(p, jumps, at, ccdf_a.eps_tail);
            std::string base = ccdf_a.c.out.empty() ? "compound" : ccdf_a.c.out;
            fprf::io::write_grid_distribution(base + ".csv", base + ".json", dist.density,
                                              dist.cdf);
            std::cout << "wrote " << base << ".csv and " << base << ".json\n";
        } else if (*sim_cmd) {
            fprf::RngStream rng(sim_a.c.seed, 7);
            if (*sim_prf) {
                auto pat = fprf::sampling::sample_prf(sim_a.lambda, sim_a.t1, sim_a.t2, rng);
                std::string base = sim_a.c.out.empty() ? "prf_points" : sim_a.c.out;
                fprf::io::write_point_pattern_csv(base + ".csv", pat);
                emit({{"schema", 1}, {"count", pat.count()}}, base + ".json");
            } else if (*sim_fprf) {
                fa::FieldParams p{sim_a.lambda, sim_a.nu1, sim_a.nu2};
                fa::QuadrantPoint at{sim_a.t1, sim_a.t2};
                std::vector<long> ks(sim_a.n);
                for (auto& k : ks) k = fprf::sampling::sample_fprf(p, at, rng);
                std::string base = sim_a.c.out.empty() ? "fprf_samples" : sim_a.c.out;
                fprf::io::write_count_samples_csv(base + ".csv", ks);
                std::vector<double> xs(ks.begin(), ks.end());
                json j = {{"schema", 1}, {"summary", summary_json(xs)},
                          {"empirical", empirical_json(ks)}};
                emit(j, base + ".json");
            } else if (*sim_gpp) {
                fprf::gpp::GppParams p{sim_a.alpha, sim_a.gamma, sim_a.lambda};
                fprf::sampling::GppSampler sampler(p, sim_a.t);
                std::vector<long> ks(sim_a.n);
                for (auto& k : ks) k = sampler.draw(rng);
                std::string base = sim_a.c.out.empty() ? "gpp_samples" : sim_a.c.out;
                fprf::io::write_count_samples_csv(base + ".csv", ks);
                std::vector<double> xs(ks.begin(), ks.end());
                emit({{"schema", 1}, {"summary", summary_json(xs)},
                      {"empirical", empirical_json(ks)}},
                     base + ".json");
            } else if (*sim_lin) {
                fprf::motion::MotionParams m{sim_a.lambda, sim_a.v, sim_a.t};
                std::vector<double> xs(sim_a.n);
                std::vector<long> ks(sim_a.n, 0);
                for (int i = 0; i < sim_a.n; ++i) {
                    auto smp = fprf::motion::simulate_linear_sample(m, sim_a.nu, rng);
                    xs[i] = smp.x;
                    ks[i] = smp.switches;
                }
                std::string base = sim_a.c.out.empty() ? "linear_samples" : sim_a.c.out;
                fprf::io::write_linear_endpoints_csv(base + ".csv", xs, ks);
                emit({{"schema", 1}, {"summary", summary_json(xs)}}, base + ".json");
            } else if (*sim_pla) {
                fprf::motion::MotionParams m{sim_a.lambda, sim_a.v, sim_a.t};
                std::vector<fprf::motion::PlanarSample> rows(sim_a.n);
                for (auto& r : rows) {
                    if (sim_a.condition_k >= 0)
                        r = fprf::motion::simulate_planar_conditional(m, sim_a.condition_k, rng);
                    else
                        r = fprf::motion::simulate_planar(
                            m, sim_a.reflecting_bm ? fprf::motion::PlanarClock::reflecting_bm
                                                   : fprf::motion::PlanarClock::none,
                            rng);
                }
                std::string base = sim_a.c.out.empty() ? "planar_samples" : sim_a.c.out;
                fprf::io::write_planar_endpoints_csv(base + ".csv", rows);
                std::vector<double> r2(rows.size());
                for (std::size_t i = 0; i < rows.size(); ++i)
                    r2[i] = rows[i].x * rows[i].x + rows[i].y * rows[i].y;
                emit({{"schema", 1}, {"summary_r2", summary_json(r2)}}, base + ".json");
            } else if (*sim_cmp) {
                fa::FieldParams p{sim_a.lambda, sim_a.nu1, sim_a.nu2};
                fa::QuadrantPoint at{sim_a.t1, sim_a.t2};
                std::function<double(fprf::RngStream&)> jump;
                if (sim_a.jump == "exp") {
                    double r = sim_a.jump_rate;
                    jump = [r](fprf::RngStream& s) { return s.exponential(r); };
                } else {
                    jump = [](fprf::RngStream&) { return 1.0; };
                }
                std::vector<double> ys(sim_a.n);
                for (auto& y : ys) y = fprf::compound::sample_cfprf(p, jump, at, rng);
                std::string base = sim_a.c.out.empty() ? "compound_samples" : sim_a.c.out;
                std::ofstream f(base + ".csv", std::ios::binary);
                f << "sample_index,y\n";
                for (std::size_t i = 0; i < ys.size(); ++i)
                    f << i << ',' << fprf::io::format_double(ys[i]) << '\n';
                emit({{"schema", 1}, {"summary", summary_json(ys)}}, base + ".json");
            }
        } else if (*val_cmd) {
            std::vector<fprf::validation::ScenarioReport> reports;
            if (val_a.scenario == "all") {
                reports = fprf::validation::run_all(val_a.c.seed);
            } else {
                try {
                    reports.push_back(fprf::validation::run_scenario(val_a.scenario, val_a.c.seed));
                } catch (const std::out_of_range& e) {
                    std::cerr << e.what() << '\n';
                    return 2;
                }
            }
            bool all_pass = true;
            json jr = json::array();
            for (const auto& rep : reports) {
                json checks = json::array();
                for (const auto& ch : rep.checks) {
                    checks.push_back({{"name", ch.name},
                                      {"statistic", ch.statistic},
                                      {"threshold", ch.threshold},
                                      {"pass", ch.pass}});
                    all_pass = all_pass && ch.pass;
                }
                jr.push_back({{"scenario", rep.scenario},
                              {"elapsed_seconds", rep.elapsed_seconds},
                              {"pass", rep.pass},
                              {"checks", checks}});
            }
            emit({{"schema", 1}, {"seed", val_a.c.seed}, {"reports", jr}}, val_a.c.out);
            return all_pass ? 0 : 1;
        } else if (*plot_cmd) {
            std::ifstream f(plot_a.in);
            if (!f) throw std::runtime_error("cannot open " + plot_a.in);
            std::string line;
            std::getline(f, line);
            std::vector<fprf::io::XY> pts;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                auto c1 = line.find(',');
                auto c2 = line.find(',', c1 + 1);
                double x = std::stod(line.substr(0, c1));
                double y = std::stod(c2 == std::string::npos
                                         ? line.substr(c1 + 1)
                                         : line.substr(c1 + 1, c2 - c1 - 1));
                pts.push_back({x, y});
            }
            fprf::io::write_svg_plot(plot_a.out, {pts}, plot_a.title, plot_a.scatter);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

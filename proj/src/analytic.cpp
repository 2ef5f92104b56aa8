#include "fprf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fprf/quadrature.hpp"
#include "fprf/specfun.hpp"

namespace fprf {
namespace analytic {

namespace {

double lg(double x) { return std::lgamma(x); }

// Smallest U with Pr{L_nu(t) > U} < tail_eps, via the Markov bound over the
// integer moments E L^p = Gamma(p+1) t^{nu p} / Gamma(nu p + 1).
double inverse_stable_tail_cutoff(double nu, double t, double tail_eps) {
    double mean = std::pow(t, nu) / std::tgamma(nu + 1.0);
    double U = std::max(1e-3, 2.0 * mean);
    for (int iter = 0; iter < 60; ++iter) {
        double best = 1.0;
        for (int p = 1; p <= 400; ++p) {
            double logm = lg(p + 1.0) + nu * p * std::log(t) - lg(nu * p + 1.0) -
                          p * std::log(U);
            best = std::min(best, std::exp(logm));
            if (logm > 200.0) break;  // bound only deteriorates from here
        }
        if (best < tail_eps) return U;
        U *= 1.35;
    }
    return U;
}

}  // namespace

double FieldParams::scaled_area(double t1, double t2) const {
    if (t1 == 0.0 || t2 == 0.0) return 0.0;
    return std::pow(t1, nu1) * std::pow(t2, nu2);
}

ConvergenceRegime classify(const FieldParams& p, double argument) {
    ConvergenceRegime r;
    r.s = p.nu1 + p.nu2;
    if (r.s > 1.0 + 1e-9)
        r.radius = std::numeric_limits<double>::infinity();
    else if (r.s < 1.0 - 1e-9)
        r.radius = 0.0;
    else
        r.radius = std::pow(p.nu1, p.nu1) * std::pow(p.nu2, p.nu2);
    r.usable = std::fabs(argument) < 0.9 * r.radius;
    return r;
}

std::int64_t adomian_component(int n, int k, AdomianMode mode) {
    if (n < 0 || k < 0) throw std::domain_error("adomian_component: n,k >= 0");
    if (n > 16) throw std::domain_error("adomian_component: n <= 16 (int64 range)");
    if (k > n) return 0;
    if (mode == AdomianMode::closed) {
        // (-1)^{n-k} n_(n-k) n_(k); the k = 0 case is (-1)^n n!.
        std::int64_t fall1 = 1, fall2 = 1;
        for (int j = 0; j < n - k; ++j) fall1 *= (n - j);
        for (int j = 0; j < k; ++j) fall2 *= (n - j);
        std::int64_t v = fall1 * fall2;
        return ((n - k) % 2 == 0) ? v : -v;
    }
    // Coefficient recursion induced by the monomial integration rule; the
    // Gamma factors cancel row to row, leaving pure integers.
    std::vector<std::int64_t> row = {1};  // c(0,0)
    for (int m = 1; m <= n; ++m) {
        std::vector<std::int64_t> next(m + 1, 0);
        auto prev = [&](int j) -> std::int64_t {
            return (j >= 0 && j < static_cast<int>(row.size())) ? row[j] : 0;
        };
        next[0] = prev(1) - prev(0);
        for (int j = 1; j <= m; ++j)
            next[j] = (j + 1) * prev(j + 1) - (2 * j + 1) * prev(j) + j * prev(j - 1);
        row = std::move(next);
    }
    return k < static_cast<int>(row.size()) ? row[k] : 0;
}

EvalReport pmf_series(const FieldParams& p, int k, const QuadrantPoint& at,
                      const SeriesControl& ctl) {
    p.validate();
    at.validate();
    ctl.validate();
    if (k < 0) throw std::domain_error("pmf_series: k >= 0");
    double T = p.scaled_area(at.t1, at.t2);
    double x = p.lambda * T;
    EvalReport rep;
    if (x == 0.0) {
        rep.value = k == 0 ? 1.0 : 0.0;
        rep.regime = Regime::closed_form;
        return rep;
    }
    if (!classify(p, x).usable)
        throw DivergentSeriesError("pmf_series: outside the series regime");

    // sum_{n>=k} (-1)^{n-k} (n!)^2 x^n / (k!(n-k)! Gamma(n nu1+1) Gamma(n nu2+1))
    QuadSum acc;
    const __float128 lx = logq(static_cast<__float128>(x));
    const __float128 lgk = lgammaq(static_cast<__float128>(k) + 1.0Q);
    std::size_t small_streak = 0;
    std::size_t used = 0;
    bool converged = false;
    double last_mag = std::numeric_limits<double>::infinity();
    for (std::size_t n = k; n < k + ctl.max_terms; ++n) {
        __float128 nq = static_cast<__float128>(n);
        __float128 logmag = 2.0Q * lgammaq(nq + 1.0Q) - lgk -
                            lgammaq(nq - k + 1.0Q) + nq * lx -
                            lgammaq(nq * p.nu1 + 1.0Q) - lgammaq(nq * p.nu2 + 1.0Q);
        __float128 term = expq(logmag);
        if ((n - k) & 1) term = -term;
        acc.add(term);
        ++used;
        double mag = std::fabs(static_cast<double>(term));
        double thresh = ctl.abs_tol + ctl.rel_tol * std::fabs(acc.value());
        // Tail detection needs the decay phase: the terms first climb to
        // their hump, and early terms below tolerance must not stop us.
        small_streak = (mag < thresh && mag <= last_mag) ? small_streak + 1 : 0;
        last_mag = mag;
        if (small_streak >= 3) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SeriesBudgetError("pmf_series: term budget exhausted");
    rep.terms_used = used;
    rep.regime = Regime::series;
    rep.precision_loss = acc.max_abs_term() > 1e12 * std::max(std::fabs(acc.value()), 1e-300);
    // Deep-tail probabilities sink below the accumulated cancellation noise;
    // report an honest zero there instead of signed noise.
    double nf = acc.noise_floor(4096.0);
    rep.error_estimate = std::max(nf, ctl.abs_tol);
    if (std::fabs(acc.value()) < 8.0 * nf) {
        rep.value = 0.0;
        rep.precision_loss = true;
        return rep;
    }
    rep.value = std::clamp(acc.value(), 0.0, 1.0);
    return rep;
}

EvalReport pmf_via_integral(const FieldParams& p, int k, const QuadrantPoint& at,
                            double quad_tol) {
    p.validate();
    at.validate();
    if (k < 0) throw std::domain_error("pmf_via_integral: k >= 0");
    if (!(at.t1 > 0.0 && at.t2 > 0.0))
        throw std::domain_error("pmf_via_integral: t1,t2 > 0 required");
    if (!(p.nu1 < 1.0 && p.nu2 < 1.0))
        throw std::domain_error("pmf_via_integral: nu1,nu2 < 1 required");

    // Kernels are the inverse-stable densities h_i(s) =
    // t^{-nu} W_{-nu,1-nu}(-s t^{-nu}); domain cut where the tail mass
    // drops below 1e-10 by the moment bound.
    specfun::WrightTable k1(-p.nu1, 1.0 - p.nu1);
    specfun::WrightTable k2(-p.nu2, 1.0 - p.nu2);
    const double sc1 = std::pow(at.t1, -p.nu1);
    const double sc2 = std::pow(at.t2, -p.nu2);
    const double U1 = inverse_stable_tail_cutoff(p.nu1, at.t1, 1e-10);
    const double U2 = inverse_stable_tail_cutoff(p.nu2, at.t2, 1e-10);
    const double logpref = k * std::log(p.lambda) - lg(k + 1.0);

    double prev = 0.0;
    EvalReport rep;
    rep.regime = Regime::quadrature;
    for (int N = 64; N <= 1024; N *= 2) {
        const auto& rule = quadrature::gauss_legendre(N);
        std::vector<double> s1(N), w1(N), s2(N), w2(N), K1(N), K2(N);
        for (int i = 0; i < N; ++i) {
            s1[i] = 0.5 * U1 * (rule.nodes[i] + 1.0);
            w1[i] = 0.5 * U1 * rule.weights[i];
            K1[i] = sc1 * k1.eval(-s1[i] * sc1);
            s2[i] = 0.5 * U2 * (rule.nodes[i] + 1.0);
            w2[i] = 0.5 * U2 * rule.weights[i];
            K2[i] = sc2 * k2.eval(-s2[i] * sc2);
        }
        KahanSum sum;
        for (int i = 0; i < N; ++i) {
            if (K1[i] == 0.0) continue;
            double a = w1[i] * K1[i];
            for (int j = 0; j < N; ++j) {
                if (K2[j] == 0.0) continue;
                double area = s1[i] * s2[j];
                double v = std::exp(logpref + k * std::log(area) - p.lambda * area);
                sum.add(a * w2[j] * K2[j] * v);
            }
        }
        double cur = sum.value();
        rep.terms_used = static_cast<std::size_t>(N) * N;
        if (N > 64 && std::fabs(cur - prev) <= quad_tol * (1.0 + std::fabs(cur))) {
            rep.value = std::clamp(cur, 0.0, 1.0);
            rep.error_estimate = std::fabs(cur - prev);
            return rep;
        }
        prev = cur;
    }
    throw std::runtime_error("pmf_via_integral: tolerance unmet at node cap");
}

EvalReport pmf(const FieldParams& p, int k, const QuadrantPoint& at,
               const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (k < 0) throw std::domain_error("pmf: k >= 0");
    double T = p.scaled_area(at.t1, at.t2);
    EvalReport rep;
    if (T == 0.0) {
        rep.value = k == 0 ? 1.0 : 0.0;
        rep.regime = Regime::closed_form;
        return rep;
    }
    if (p.is_poisson()) {
        double m = p.lambda * at.t1 * at.t2;
        rep.value = std::exp(k * std::log(m) - m - lg(k + 1.0));
        rep.regime = Regime::closed_form;
        return rep;
    }
    const bool both_fractional = p.nu1 < 1.0 && p.nu2 < 1.0;
    if (classify(p, p.lambda * T).usable) {
        try {
            rep = pmf_series(p, k, at, ctl);
            double tol_needed = std::max(100.0 * ctl.abs_tol, 1e-9);
            if (rep.error_estimate <= tol_needed || !both_fractional) return rep;
        } catch (const SeriesBudgetError&) {
            if (!both_fractional) throw;
        }
    } else if (!both_fractional) {
        throw DivergentSeriesError("pmf: series divergent and no integral fallback");
    }
    return pmf_via_integral(p, k, at);
}

EvalReport void_probability(const FieldParams& p, double rate, const QuadrantPoint& at,
                            const SeriesControl& ctl) {
    if (rate < 0.0) throw std::domain_error("void_probability: rate >= 0");
    if (rate == 0.0) {
        EvalReport rep;
        rep.value = 1.0;
        rep.regime = Regime::closed_form;
        return rep;
    }
    FieldParams q{rate, p.nu1, p.nu2};
    return pmf(q, 0, at, ctl);
}

Moments moments(const FieldParams& p, const QuadrantPoint& at) {
    p.validate();
    at.validate();
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return {0.0, 0.0};
    double mean = p.lambda * T / (std::tgamma(p.nu1 + 1.0) * std::tgamma(p.nu2 + 1.0));
    double mu2 = 4.0 * p.lambda * p.lambda * T * T /
                 (std::tgamma(2.0 * p.nu1 + 1.0) * std::tgamma(2.0 * p.nu2 + 1.0));
    return {mean, mean + mu2 - mean * mean};
}

double covariance(const FieldParams& p, const QuadrantPoint& tau, const QuadrantPoint& t) {
    p.validate();
    tau.validate();
    t.validate();
    if (tau.t1 > t.t1 || tau.t2 > t.t2)
        throw std::domain_error("covariance: requires tau <= t componentwise");
    double Ttau = p.scaled_area(tau.t1, tau.t2);
    if (Ttau == 0.0) return 0.0;
    double Tt = p.scaled_area(t.t1, t.t2);
    double g1 = std::tgamma(p.nu1 + 1.0) * std::tgamma(p.nu2 + 1.0);
    double first = p.lambda * Ttau / g1 - p.lambda * p.lambda * Ttau * Tt / (g1 * g1);
    double prod = 1.0;
    const double nus[2] = {p.nu1, p.nu2};
    const double taus[2] = {tau.t1, tau.t2};
    const double ts[2] = {t.t1, t.t2};
    for (int i = 0; i < 2; ++i) {
        double x = taus[i] / ts[i];
        double I = x <= 0.0 ? 0.0 : specfun::reg_inc_beta(std::min(x, 1.0), nus[i], nus[i] + 1.0);
        prod *= (std::pow(taus[i], 2.0 * nus[i]) + std::pow(ts[i], 2.0 * nus[i]) * I) /
                std::tgamma(2.0 * nus[i] + 1.0);
    }
    return first + p.lambda * p.lambda * prod;
}

EvalReport pgf(const FieldParams& p, double z, const QuadrantPoint& at,
               const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (std::fabs(z) > 1.0) throw std::domain_error("pgf: |z| <= 1 required");
    EvalReport rep;
    if (z == 1.0) {
        rep.value = 1.0;
        rep.regime = Regime::closed_form;
        return rep;
    }
    if (p.is_poisson()) {
        rep.value = std::exp((z - 1.0) * p.lambda * at.t1 * at.t2);
        rep.regime = Regime::closed_form;
        return rep;
    }
    return void_probability(p, p.lambda * (1.0 - z), at, ctl);
}

double capacity(const FieldParams& p, const QuadrantPoint& at, const SeriesControl& ctl) {
    return std::clamp(1.0 - pmf(p, 0, at, ctl).value, 0.0, 1.0);
}

double factorial_moment(const FieldParams& p, int n, const QuadrantPoint& at) {
    p.validate();
    at.validate();
    if (n < 1) throw std::domain_error("factorial_moment: n >= 1");
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return 0.0;
    return std::exp(2.0 * lg(n + 1.0) + n * std::log(p.lambda * T) -
                    lg(n * p.nu1 + 1.0) - lg(n * p.nu2 + 1.0));
}

FracIntegralMoments frac_integral_moments(double alpha1, double alpha2,
                                          const FieldParams& p, const QuadrantPoint& at) {
    p.validate();
    at.validate();
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw std::domain_error("frac_integral_moments: alpha1, alpha2 > 0");
    FracIntegralMoments m;
    m.fprf_mean = p.lambda * std::pow(at.t1, alpha1 + p.nu1) *
                  std::pow(at.t2, alpha2 + p.nu2) /
                  (std::tgamma(alpha1 + p.nu1 + 1.0) * std::tgamma(alpha2 + p.nu2 + 1.0));
    m.prf_mean = p.lambda * std::pow(at.t1, alpha1 + 1.0) * std::pow(at.t2, alpha2 + 1.0) /
                 (std::tgamma(alpha1 + 2.0) * std::tgamma(alpha2 + 2.0));
    m.prf_variance = p.lambda *
                     (std::pow(at.t1, 2.0 * alpha1 + 1.0) /
                      ((2.0 * alpha1 + 1.0) * std::pow(std::tgamma(alpha1 + 1.0), 2))) *
                     (std::pow(at.t2, 2.0 * alpha2 + 1.0) /
                      ((2.0 * alpha2 + 1.0) * std::pow(std::tgamma(alpha2 + 1.0), 2)));
    m.prf_conditional_mean_per_count =
        std::pow(at.t1, alpha1) * std::pow(at.t2, alpha2) /
        (std::tgamma(alpha1 + 2.0) * std::tgamma(alpha2 + 2.0));
    return m;
}

namespace {

// Pr{count >= k} at the given rate, by 1 - partial sum, clamped.
double tail_probability(const FieldParams& p, double rate, int k, const QuadrantPoint& at,
                        const SeriesControl& ctl) {
    if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
    FieldParams q{rate, p.nu1, p.nu2};
    KahanSum below;
    for (int j = 0; j < k; ++j) below.add(pmf(q, j, at, ctl).value);
    return std::clamp(1.0 - below.value(), 0.0, 1.0);
}

}  // namespace

double order_stat_cdf(const FieldParams& p, int k, double Fv, const QuadrantPoint& at,
                      const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (k < 1) throw std::domain_error("order_stat_cdf: k >= 1");
    if (!(Fv >= 0.0 && Fv <= 1.0)) throw std::domain_error("order_stat_cdf: Fv in [0,1]");
    if (Fv == 1.0) return 1.0;
    if (Fv == 0.0) return 0.0;
    double denom = tail_probability(p, p.lambda, k, at, ctl);
    if (denom < 1e-300)
        throw std::runtime_error("order_stat_cdf: conditioning event has no mass");
    return std::clamp(tail_probability(p, p.lambda * Fv, k, at, ctl) / denom, 0.0, 1.0);
}

double extreme_stats(const FieldParams& p, double Fv, const QuadrantPoint& at,
                     ExtremeKind which, const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (!(Fv >= 0.0 && Fv <= 1.0)) throw std::domain_error("extreme_stats: Fv in [0,1]");
    auto v = [&](double rate) { return void_probability(p, rate, at, ctl).value; };
    switch (which) {
        case ExtremeKind::min_unconditional_tail:
            return v(p.lambda * Fv);
        case ExtremeKind::max_unconditional:
            return v(p.lambda * (1.0 - Fv));
        case ExtremeKind::min_conditional: {
            double denom = 1.0 - v(p.lambda);
            if (denom < 1e-300)
                throw std::runtime_error("extreme_stats: conditioning event has no mass");
            return std::clamp((1.0 - v(p.lambda * Fv)) / denom, 0.0, 1.0);
        }
        case ExtremeKind::max_conditional: {
            double denom = 1.0 - v(p.lambda);
            if (denom < 1e-300)
                throw std::runtime_error("extreme_stats: conditioning event has no mass");
            return std::clamp((v(p.lambda * (1.0 - Fv)) - v(p.lambda)) / denom, 0.0, 1.0);
        }
    }
    throw std::logic_error("extreme_stats: unreachable");
}

double prf_conditional_binomial(int k, int l, const QuadrantPoint& tau,
                                const QuadrantPoint& t) {
    tau.validate();
    t.validate();
    if (k < 0 || l < k) throw std::domain_error("prf_conditional_binomial: 0 <= k <= l");
    if (!(t.t1 * t.t2 > 0.0))
        throw std::domain_error("prf_conditional_binomial: t1 t2 > 0");
    if (tau.t1 > t.t1 || tau.t2 > t.t2)
        throw std::domain_error("prf_conditional_binomial: tau <= t required");
    double r = (tau.t1 * tau.t2) / (t.t1 * t.t2);
    if (r == 0.0) return k == 0 ? 1.0 : 0.0;
    if (r == 1.0) return k == l ? 1.0 : 0.0;
    return std::exp(lg(l + 1.0) - lg(k + 1.0) - lg(l - k + 1.0) + k * std::log(r) +
                    (l - k) * std::log1p(-r));
}

namespace {

double ml2(double a, double b, double g, double x, const SeriesControl& ctl) {
    return specfun::mittag_leffler(a, b, g, x, ctl).value;
}

}  // namespace

double alt_pmf(const FieldParams& p, int k, const QuadrantPoint& at,
               const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (k < 0) throw std::domain_error("alt_pmf: k >= 0");
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return k == 0 ? 1.0 : 0.0;
    double x = p.lambda * T;
    double E = ml2(p.nu1, p.nu2, 1.0, x, ctl);
    return std::exp(k * std::log(x) - lg(k * p.nu1 + p.nu2)) / E;
}

double alt_mean(const FieldParams& p, const QuadrantPoint& at, const SeriesControl& ctl) {
    p.validate();
    at.validate();
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return 0.0;
    double x = p.lambda * T;
    return x * ml2(p.nu1, p.nu1 + p.nu2, 2.0, x, ctl) / ml2(p.nu1, p.nu2, 1.0, x, ctl);
}

double alt_variance(const FieldParams& p, const QuadrantPoint& at,
                    const SeriesControl& ctl) {
    p.validate();
    at.validate();
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return 0.0;
    double x = p.lambda * T;
    double m = alt_mean(p, at, ctl);
    return 2.0 * x * x * ml2(p.nu1, p.nu2 + 2.0 * p.nu1, 3.0, x, ctl) /
               ml2(p.nu1, p.nu2, 1.0, x, ctl) +
           m * (1.0 - m);
}

double alt_pgf(const FieldParams& p, double z, const QuadrantPoint& at,
               const SeriesControl& ctl) {
    p.validate();
    at.validate();
    if (std::fabs(z) > 1.0) throw std::domain_error("alt_pgf: |z| <= 1");
    double T = p.scaled_area(at.t1, at.t2);
    if (T == 0.0) return 1.0;
    double x = p.lambda * T;
    return ml2(p.nu1, p.nu2, 1.0, x * z, ctl) / ml2(p.nu1, p.nu2, 1.0, x, ctl);
}

double alt_min_tail(const FieldParams& p, double Fv, const QuadrantPoint& at,
                    const SeriesControl& ctl) {
    if (!(Fv >= 0.0 && Fv <= 1.0)) throw std::domain_error("alt_min_tail: Fv in [0,1]");
    return alt_pgf(p, 1.0 - Fv, at, ctl);
}

double alt_max_cdf(const FieldParams& p, double Fv, const QuadrantPoint& at,
                   const SeriesControl& ctl) {
    if (!(Fv >= 0.0 && Fv <= 1.0)) throw std::domain_error("alt_max_cdf: Fv in [0,1]");
    return alt_pgf(p, Fv, at, ctl);
}

}  // namespace analytic
}  // namespace fprf

#include "fprf/motion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fprf/quadrature.hpp"
#include "fprf/sampling.hpp"
#include "fprf/specfun.hpp"

namespace fprf {
namespace motion {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

double lg(double x) { return std::lgamma(x); }

// Tail cutoff for psi_{alpha,gamma}(t) from its integer moments
// E psi^p = Gamma(gamma+p) t^{alpha p} / (Gamma(gamma) Gamma(alpha p + 1)).
double psi_tail_cutoff(double alpha, double gamma, double t, double tail_eps) {
    double U = std::max(1e-3, 3.0 * std::pow(t, alpha));
    for (int iter = 0; iter < 60; ++iter) {
        double best = 1.0;
        for (int p = 1; p <= 400; ++p) {
            double logm = lg(gamma + p) - lg(gamma) + alpha * p * std::log(t) -
                          lg(alpha * p + 1.0) - p * std::log(U);
            best = std::min(best, std::exp(logm));
            if (logm > 200.0) break;
        }
        if (best < tail_eps) return U;
        U *= 1.35;
    }
    return U;
}

// Both telegraph formulas are even functions of a square root whose branch
// is fixed by the eta = 0 limit: cos/sin of sqrt(eta^2 v^2 - lambda^2) and
// exp/Mittag-Leffler combinations of sqrt(lambda^2 - eta^2 v^2).
std::complex<double> branch_sqrt(double w2) {
    // Removable w -> 0 point; nudge keeps the even function continuous.
    if (std::fabs(w2) < 1e-10) w2 = 1e-10;
    return std::sqrt(std::complex<double>(w2, 0.0));
}

// Zeros of J0 by Newton from the McMahon seed (seed only; the function
// values come from the ascending series).
double j0_zero(int p) {
    double x = (p - 0.25) * kPi;
    x += 0.125 / x;
    for (int it = 0; it < 50; ++it) {
        double f = specfun::bessel_j(0.0, x);
        double df = -specfun::bessel_j(1.0, x);
        double dx = f / df;
        x -= dx;
        if (std::fabs(dx) < 1e-13) break;
    }
    return x;
}

}  // namespace

double linear_cf(const MotionParams& m, double eta) {
    m.validate();
    if (eta == 0.0) return 1.0;
    std::complex<double> w = branch_sqrt(eta * eta * m.v * m.v - m.lambda * m.lambda);
    std::complex<double> val =
        std::cos(w * m.t) + m.lambda * std::sin(w * m.t) / w;
    val *= std::exp(-m.lambda * m.t);
    if (std::fabs(val.imag()) > 1e-10)
        throw std::runtime_error("linear_cf: imaginary residual exceeds 1e-10");
    return val.real();
}

double linear_cf_timechanged(double alpha, double gamma, const MotionParams& m,
                             double eta, const SeriesControl& ctl) {
    m.validate();
    if (!(alpha > 0.0 && alpha <= 1.0) || !(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("linear_cf_timechanged: alpha,gamma in (0,1]");
    if (eta == 0.0) return 1.0;
    std::complex<double> w = branch_sqrt(m.lambda * m.lambda - eta * eta * m.v * m.v);
    double ta = std::pow(m.t, alpha);
    std::complex<double> em = specfun::mittag_leffler_complex(
        alpha, 1.0, gamma, -(m.lambda - w) * ta, ctl);
    std::complex<double> ep = specfun::mittag_leffler_complex(
        alpha, 1.0, gamma, -(m.lambda + w) * ta, ctl);
    std::complex<double> val = 0.5 * (em + ep) + m.lambda / (2.0 * w) * (em - ep);
    if (std::fabs(val.imag()) > 1e-10)
        throw std::runtime_error("linear_cf_timechanged: imaginary residual exceeds 1e-10");
    return val.real();
}

LinearSample simulate_linear_sample(const MotionParams& m,
                                    std::optional<double> timechange_nu, RngStream& s) {
    m.validate();
    double horizon = m.t;
    if (timechange_nu)
        horizon = sampling::sample_inverse_stable(*timechange_nu, m.t, s);
    double dir = s.u01() < 0.5 ? 1.0 : -1.0;
    LinearSample out;
    double clock = 0.0;
    while (true) {
        double dt = s.exponential(m.lambda);
        if (clock + dt >= horizon) {
            out.x += dir * m.v * (horizon - clock);
            return out;
        }
        out.x += dir * m.v * dt;
        clock += dt;
        dir = -dir;
        ++out.switches;
    }
}

double simulate_linear(const MotionParams& m, std::optional<double> timechange_nu,
                       RngStream& s) {
    return simulate_linear_sample(m, timechange_nu, s).x;
}

double planar_cond_cf(int k, const MotionParams& m, double delta_norm) {
    m.validate();
    if (k < 0) throw std::domain_error("planar_cond_cf: k >= 0");
    if (!(delta_norm >= 0.0)) throw std::domain_error("planar_cond_cf: delta_norm >= 0");
    double z = m.v * m.t * delta_norm;
    double nu = 0.5 * k;
    if (z < 1e-6) return 1.0 - z * z / (4.0 * (nu + 1.0));
    return std::exp(nu * std::log(2.0 / z) + lg(nu + 1.0)) * specfun::bessel_j(nu, z);
}

DiskLaw planar_cond_law(int k, const MotionParams& m, double z_norm) {
    m.validate();
    if (k < 0) throw std::domain_error("planar_cond_law: k >= 0");
    if (k == 0) return {true, m.v * m.t, 0.0};
    if (!(z_norm >= 0.0 && z_norm < m.v * m.t))
        throw std::domain_error("planar_cond_law: need 0 <= ||z|| < v t");
    double vt = m.v * m.t;
    double density = k / (2.0 * kPi * std::pow(vt, k)) *
                     std::pow(vt * vt - z_norm * z_norm, 0.5 * k - 1.0);
    return {false, 0.0, density};
}

double planar_cond_density(int k, const MotionParams& m, double z_norm) {
    if (k == 0)
        throw std::domain_error(
            "planar_cond_density: k = 0 is an atom on the circle; use planar_cond_law");
    return planar_cond_law(k, m, z_norm).density;
}

double frac_planar_cond_cf(double alpha, double gamma, int k, const MotionParams& m,
                           double delta_norm, CfRoute route, const SeriesControl& ctl) {
    m.validate();
    if (!(alpha > 0.0 && alpha <= 1.0) || !(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("frac_planar_cond_cf: alpha,gamma in (0,1]");
    if (k < 0) throw std::domain_error("frac_planar_cond_cf: k >= 0");
    if (delta_norm == 0.0) return 1.0;
    double X = std::pow(m.v * delta_norm * std::pow(m.t, alpha), 2);
    if (route == CfRoute::wright_series) {
        specfun::WrightParams wp;
        wp.upper = {{gamma, 2.0}};
        wp.lower = {{0.5 * k + 1.0, 1.0}, {1.0, 2.0 * alpha}};
        EvalReport w = specfun::gen_wright(wp, -0.25 * X, ctl);
        return std::exp(lg(0.5 * k + 1.0) - lg(gamma)) * w.value;
    }
    // Beta-weighted integral of the (2n)!-normalized series; the two routes
    // are connected by the Euler integral of B(n+1/2,(k+1)/2).
    specfun::WrightParams wp;
    wp.upper = {{gamma, 2.0}, {1.0, 1.0}};
    wp.lower = {{1.0, 2.0}, {1.0, 2.0 * alpha}};
    auto g = [&](double r) { return specfun::gen_wright(wp, -X * r, ctl).value; };
    double integral = quadrature::beta_weighted(g, 0.5, 0.5 * (k + 1.0), 160);
    double logB = lg(0.5) + lg(0.5 * (k + 1.0)) - lg(0.5 * k + 1.0);
    return integral / (std::exp(logB) * std::tgamma(gamma));
}

double psi_time_density(double alpha, double gamma, double t, double u) {
    if (!(alpha > 0.0 && alpha <= 1.0) || !(gamma > 0.0 && gamma <= 1.0))
        throw std::domain_error("psi_time_density: alpha,gamma in (0,1]");
    if (!(t > 0.0)) throw std::domain_error("psi_time_density: t > 0");
    if (!(u > 0.0)) return 0.0;
    if (alpha == 1.0) {
        if (gamma == 1.0)
            throw std::domain_error("psi_time_density: degenerate law at alpha=gamma=1");
        // Scaled arcsine-type density on (0, t).
        if (u >= t) return 0.0;
        return std::sin(kPi * gamma) / kPi * std::pow(u, gamma - 1.0) *
               std::pow(t - u, -gamma);
    }
    double ta = std::pow(t, -alpha);
    static thread_local double cached_a = -1.0, cached_g = -1.0;
    static thread_local specfun::WrightTable* table = nullptr;
    if (!table || cached_a != alpha || cached_g != gamma) {
        delete table;
        table = new specfun::WrightTable(-alpha, 1.0 - alpha * gamma);
        cached_a = alpha;
        cached_g = gamma;
    }
    double w = table->eval(-u * ta);
    double val = std::pow(u, gamma - 1.0) * std::pow(ta, gamma) * w / std::tgamma(gamma);
    return std::max(val, 0.0);
}

double frac_planar_cond_density(double alpha, double gamma, int k,
                                const MotionParams& m, double z_norm,
                                const SeriesControl& ctl) {
    (void)ctl;
    m.validate();
    if (k < 0) throw std::domain_error("frac_planar_cond_density: k >= 0");
    if (alpha == 1.0 && gamma == 1.0) return planar_cond_density(k, m, z_norm);
    if (!(z_norm > 0.0))
        throw std::domain_error(
            "frac_planar_cond_density: singular at the origin for fractional orders");
    const double rho = z_norm / m.v;
    if (k == 0) {
        // The circle atom smeared over the time law: ||Z|| = v psi.
        return psi_time_density(alpha, gamma, m.t, rho) / (2.0 * kPi * z_norm * m.v);
    }
    // u = rho cosh(s) absorbs the disk-edge singularity at u = rho and the
    // scale separation between rho and the time-law tail in one stroke:
    // density = k/(2 pi v^2 rho) int tanh^{k-1}(s) sech(s) f_psi(rho cosh s) ds.
    auto hyperbolic = [&](const std::function<double(double)>& f_time, double Ucap) {
        if (rho >= Ucap) return 0.0;
        double S = std::acosh(Ucap / rho);
        auto integrand = [&](double s) {
            double u = rho * std::cosh(s);
            return std::pow(std::tanh(s), k - 1.0) / std::cosh(s) * f_time(u);
        };
        return k / (2.0 * kPi * m.v * m.v * rho) *
               quadrature::integrate_adaptive(integrand, 0.0, S, 1e-9);
    };
    if (alpha == 1.0) {
        // arcsine clock on (0,t): peel the (t-u)^{-gamma} endpoint off with
        // the s = (t-u)^{1-gamma} substitution, hyperbolic part below.
        if (rho >= m.t) return 0.0;
        double mid = 0.5 * (rho + m.t);
        auto f_arc = [&](double u) {
            return u < m.t ? std::sin(kPi * gamma) / kPi * std::pow(u, gamma - 1.0) *
                                 std::pow(m.t - u, -gamma)
                           : 0.0;
        };
        double part1 = hyperbolic(f_arc, mid);
        auto disk = [&](double u) {
            return k / (2.0 * kPi * std::pow(m.v * u, k)) *
                   std::pow(m.v * m.v * (u * u - rho * rho), 0.5 * k - 1.0);
        };
        double q = 1.0 - gamma;
        auto upper = [&](double sv) {
            double u = m.t - std::pow(sv, 1.0 / q);
            if (u <= rho) return 0.0;
            return disk(u) * std::sin(kPi * gamma) / kPi * std::pow(u, gamma - 1.0) / q;
        };
        double part2 =
            quadrature::integrate_adaptive(upper, 0.0, std::pow(m.t - mid, q), 1e-9);
        return part1 + part2;
    }
    double U = psi_tail_cutoff(alpha, gamma, m.t, 1e-12);
    auto f_psi = [&](double u) { return psi_time_density(alpha, gamma, m.t, u); };
    return hyperbolic(f_psi, U);
}

double hankel_radial_density(double alpha, double gamma, int k, const MotionParams& m,
                             double z_norm, double tol) {
    m.validate();
    if (!(z_norm > 0.0)) throw std::domain_error("hankel_radial_density: z_norm > 0");
    SeriesControl ctl;
    auto psi_cf = [&](double r) {
        return frac_planar_cond_cf(alpha, gamma, k, m, r, CfRoute::wright_series, ctl);
    };
    // Panels between consecutive zeros of J0(r z); stop extending once the
    // Wright series loses the argument to cancellation.
    std::vector<double> breaks{0.0};
    for (int p = 1; p <= 120; ++p) {
        double r = j0_zero(p) / z_norm;
        if (r * z_norm > 55.0) break;  // J0 series range for the weight
        // Largest series term of the cf kernel is exp((4X)^{1/(2 alpha)});
        // past ~e^60 the quad accumulator is all noise.
        double X = std::pow(0.5 * m.v * r * std::pow(m.t, alpha), 2);
        if (std::pow(4.0 * X, 0.5 / alpha) > 60.0) break;
        breaks.push_back(r);
    }
    if (breaks.size() < 6)
        throw TailNotConverged("hankel_radial_density: too few usable panels");
    auto f = [&](double r) {
        return r * specfun::bessel_j(0.0, r * z_norm) * psi_cf(r) / (2.0 * kPi);
    };
    bool converged = false;
    double val = quadrature::oscillatory_panels(f, breaks, tol, &converged);
    if (!converged)
        throw TailNotConverged("hankel_radial_density: panel acceleration did not settle");
    return val;
}

PlanarSample simulate_planar(const MotionParams& m, PlanarClock clock, RngStream& s) {
    m.validate();
    double horizon = m.t;
    if (clock == PlanarClock::reflecting_bm)
        horizon = sampling::sample_reflecting_bm(m.t, s);
    long k = s.poisson(m.lambda * horizon);
    MotionParams eff{m.lambda, m.v, horizon};
    PlanarSample out = simulate_planar_conditional(eff, static_cast<int>(k), s);
    return out;
}

PlanarSample simulate_planar_conditional(const MotionParams& m, int k, RngStream& s) {
    m.validate();
    if (k < 0) throw std::domain_error("simulate_planar_conditional: k >= 0");
    std::vector<double> epochs(k);
    for (int i = 0; i < k; ++i) epochs[i] = m.t * s.u01();
    std::sort(epochs.begin(), epochs.end());
    epochs.push_back(m.t);
    PlanarSample out;
    out.switches = k;
    double prev = 0.0;
    for (int i = 0; i <= k; ++i) {
        double theta = s.uniform(0.0, 2.0 * kPi);
        double dt = epochs[i] - prev;
        out.x += m.v * dt * std::cos(theta);
        out.y += m.v * dt * std::sin(theta);
        prev = epochs[i];
    }
    return out;
}

}  // namespace motion
}  // namespace fprf

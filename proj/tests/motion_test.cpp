#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fprf/motion.hpp"
#include "fprf/quadrature.hpp"
#include "fprf/sampling.hpp"
#include "fprf/specfun.hpp"
#include "fprf/stats.hpp"

using namespace fprf;
using namespace fprf::motion;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

TEST_CASE("linear characteristic function") {
    MotionParams m{2.0, 1.0, 1.0};
    CHECK(linear_cf(m, 0.0) == 1.0);
    // hyperbolic branch cross-check at eta^2 v^2 < lambda^2
    double om = std::sqrt(4.0 - 1.0);
    double want = std::exp(-2.0) * (std::cosh(om) + 2.0 / om * std::sinh(om));
    CHECK(linear_cf(m, 1.0) == doctest::Approx(want).epsilon(1e-12));
    for (double eta = 0.0; eta <= 8.0; eta += 0.37) {
        double v = linear_cf(m, eta);
        CHECK(std::fabs(v) <= 1.0 + 1e-12);
        CHECK(v == doctest::Approx(linear_cf(m, -eta)).epsilon(1e-12));  // even
    }
}

TEST_CASE("time-changed linear cf reduces to the classic one") {
    MotionParams m{2.0, 1.0, 1.0};
    for (double eta : {0.0, 0.5, 1.0, 2.0, 5.0})
        CHECK(linear_cf_timechanged(1.0, 1.0, m, eta) ==
              doctest::Approx(linear_cf(m, eta)).epsilon(1e-10));
    CHECK(linear_cf_timechanged(0.5, 1.0, m, 0.0) == 1.0);
    for (double eta : {0.5, 1.5})
        CHECK(std::fabs(linear_cf_timechanged(0.6, 0.8, m, eta)) <= 1.0);
}

TEST_CASE("telegraph path simulation") {
    RngStream rng(61, 0);
    MotionParams m{2.0, 1.0, 1.0};
    const int n = 40000;
    std::vector<double> xs(n);
    for (auto& x : xs) {
        x = simulate_linear(m, std::nullopt, rng);
        CHECK(std::fabs(x) <= m.v * m.t + 1e-12);
    }
    auto s = stats::summarize(xs);
    CHECK(std::fabs(s.mean) < 3.5 * s.se_mean);  // symmetric law
    // ballistic paths sit exactly on the boundary
    MotionParams slow{0.05, 1.3, 1.0};
    int boundary = 0;
    for (int i = 0; i < 2000; ++i) {
        double x = simulate_linear(slow, std::nullopt, rng);
        if (std::fabs(std::fabs(x) - 1.3) < 1e-12) ++boundary;
    }
    CHECK(boundary > 1700);  // e^{-0.05} of paths have no switch
}

TEST_CASE("planar conditional characteristic function") {
    MotionParams m{2.0, 1.0, 1.0};
    CHECK(planar_cond_cf(0, m, 0.0) == doctest::Approx(1.0));
    CHECK(planar_cond_cf(3, m, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(planar_cond_cf(0, m, 2.0) ==
          doctest::Approx(specfun::bessel_j(0.0, 2.0)).epsilon(1e-12));
    // k = 2 against the numeric Fourier transform of the uniform disk law
    for (double d : {0.5, 1.5, 3.0}) {
        auto radial = [&](double r) {
            return r * specfun::bessel_j(0.0, d * r) * 2.0 / (m.v * m.v * m.t * m.t);
        };
        double oracle = quadrature::integrate(radial, 0.0, m.v * m.t, 200);
        CHECK(planar_cond_cf(2, m, d) == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("planar conditional density") {
    MotionParams unit{1.0, 1.0, 1.0};
    CHECK(planar_cond_density(1, unit, 0.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));
    for (double z : {0.0, 0.3, 0.9})
        CHECK(planar_cond_density(2, unit, z) == doctest::Approx(1.0 / kPi).epsilon(1e-13));
    auto atom = planar_cond_law(0, unit, 0.0);
    CHECK(atom.is_circle_atom);
    CHECK(atom.circle_radius == doctest::Approx(1.0));
    CHECK_THROWS_AS(planar_cond_density(0, unit, 0.5), std::domain_error);
    CHECK_THROWS_AS(planar_cond_density(2, unit, 1.5), std::domain_error);
    // disk normalization for k in {1,2,5}; rho = vt sin(theta) absorbs the
    // k = 1 rim singularity
    MotionParams m{2.0, 1.3, 0.9};
    for (int k : {1, 2, 5}) {
        double vt = m.v * m.t;
        auto radial = [&](double th) {
            double r = vt * std::sin(th);
            return 2.0 * kPi * r * planar_cond_density(k, m, r) * vt * std::cos(th);
        };
        double mass = quadrature::integrate(radial, 0.0, kPi / 2.0, 400);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("fractional planar cf: routes agree and reductions hold") {
    MotionParams m{2.0, 1.0, 1.0};
    for (double alpha : {0.5, 0.8})
        for (double gamma : {0.5, 1.0})
            for (int k : {0, 1, 4}) {
                CHECK(frac_planar_cond_cf(alpha, gamma, k, m, 0.0,
                                          CfRoute::wright_series) == 1.0);
                for (double d : {0.5, 2.0}) {
                    double a = frac_planar_cond_cf(alpha, gamma, k, m, d,
                                                   CfRoute::wright_series);
                    double b = frac_planar_cond_cf(alpha, gamma, k, m, d,
                                                   CfRoute::beta_integral);
                    CHECK(a == doctest::Approx(b).epsilon(1e-6));
                    CHECK(std::fabs(a) <= 1.0 + 1e-10);
                }
            }
    for (int k : {0, 2, 5})
        for (double d : {0.0, 0.7, 2.5})
            CHECK(frac_planar_cond_cf(1.0, 1.0, k, m, d, CfRoute::wright_series) ==
                  doctest::Approx(planar_cond_cf(k, m, d)).epsilon(1e-8));
    // gamma = 1 equals the Mittag-Leffler beta-integral form
    for (double alpha : {0.5, 0.8})
        for (int k : {1, 3})
            for (double d : {0.8, 1.6}) {
                double X = std::pow(m.v * d * std::pow(m.t, alpha), 2);
                auto g = [&](double r) {
                    return specfun::mittag_leffler(2.0 * alpha, 1.0, 1.0, -X * r).value;
                };
                double integral = quadrature::beta_weighted(g, 0.5, 0.5 * (k + 1.0), 200);
                double logB = std::lgamma(0.5) + std::lgamma(0.5 * (k + 1.0)) -
                              std::lgamma(0.5 * k + 1.0);
                double want = integral / std::exp(logB);
                CHECK(frac_planar_cond_cf(alpha, 1.0, k, m, d, CfRoute::wright_series) ==
                      doctest::Approx(want).epsilon(1e-6));
            }
}

TEST_CASE("psi time density") {
    // gamma = 1 is the inverse-stable kernel; alpha = 1/2 is folded normal
    for (double u : {0.2, 0.8, 1.6}) {
        double got = psi_time_density(0.5, 1.0, 1.0, u);
        double want = std::exp(-0.25 * u * u) / std::sqrt(kPi);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    // normalization and mean for genuinely two-parameter cases; the
    // u = y^{2/gamma} map absorbs the u^{gamma-1} edge with headroom
    for (auto [alpha, gamma] : {std::pair{0.7, 0.6}, {0.9, 0.3}}) {
        double g = gamma, a = alpha;
        double p = 2.0 / g;
        double Y = std::pow(14.0, 1.0 / p);
        auto m0 = [&](double y) {
            double u = std::pow(y, p);
            return psi_time_density(a, g, 1.0, u) * p * std::pow(y, p - 1.0);
        };
        auto m1 = [&](double y) {
            double u = std::pow(y, p);
            return u * psi_time_density(a, g, 1.0, u) * p * std::pow(y, p - 1.0);
        };
        double mass = quadrature::integrate_adaptive(m0, 0.0, Y, 1e-8);
        double mean = quadrature::integrate_adaptive(m1, 0.0, Y, 1e-8);
        CHECK(mass == doctest::Approx(1.0).epsilon(2e-4));
        auto want = gpp::psi_moments(alpha, gamma, 1.0);
        CHECK(mean == doctest::Approx(want.mean).epsilon(2e-4));
    }
    {  // alpha = 1: arcsine-type law, both endpoints via sin^2 substitution
        double g = 0.5;
        auto m0 = [&](double th) {
            double u = std::sin(th) * std::sin(th);
            return psi_time_density(1.0, g, 1.0, u) * 2.0 * std::sin(th) * std::cos(th);
        };
        auto m1 = [&](double th) {
            double u = std::sin(th) * std::sin(th);
            return u * psi_time_density(1.0, g, 1.0, u) * 2.0 * std::sin(th) *
                   std::cos(th);
        };
        double mass = quadrature::integrate(m0, 0.0, kPi / 2.0, 400);
        double mean = quadrature::integrate(m1, 0.0, kPi / 2.0, 400);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(mean == doctest::Approx(gpp::psi_moments(1.0, g, 1.0).mean).epsilon(1e-8));
    }
    CHECK_THROWS_AS(psi_time_density(1.0, 1.0, 1.0, 0.5), std::domain_error);
}

TEST_CASE("fractional planar density") {
    MotionParams m{2.0, 1.0, 1.0};
    // alpha = gamma = 1 passes through to the fixed-time disk law
    CHECK(frac_planar_cond_density(1.0, 1.0, 2, m, 0.5) ==
          doctest::Approx(1.0 / kPi).epsilon(1e-12));
    // alpha = 1/2, gamma = 1: both the Gaussian-mixture closed form and a
    // by-parts evaluation of the k = 2 time mixture
    for (double rho : {0.3, 0.8, 1.5}) {
        double got = frac_planar_cond_density(0.5, 1.0, 2, m, rho);
        double logB = std::lgamma(0.5) + std::lgamma(1.5) - std::lgamma(2.0);
        auto g = [&](double th) {
            double s2 = std::sin(th) * std::sin(th);
            double c = std::cos(th);
            return 2.0 * c * c * std::exp(-rho * rho / (4.0 * s2)) / s2;
        };
        double want = quadrature::integrate(g, 0.0, kPi / 2.0, 400) /
                      (4.0 * kPi * std::exp(logB));
        CHECK(got == doctest::Approx(want).epsilon(1e-6));
        // int_rho^inf u^{-2} e^{-u^2/4} du in closed form
        double byparts = (std::exp(-0.25 * rho * rho) / rho -
                          0.5 * std::sqrt(kPi) * std::erfc(0.5 * rho)) /
                         (kPi * std::sqrt(kPi));
        CHECK(got == doctest::Approx(byparts).epsilon(1e-8));
    }
    // radial normalization at (alpha, gamma, k) = (0.5, 1, 3)
    {
        auto radial = [&](double rho) {
            return 2.0 * kPi * rho * frac_planar_cond_density(0.5, 1.0, 3, m, rho);
        };
        double mass = quadrature::integrate(radial, 1e-6, 8.0, 300);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-3));
    }
    // k = 0: the smeared circle atom integrates to one as well
    {
        auto radial = [&](double rho) {
            return 2.0 * kPi * rho * frac_planar_cond_density(0.5, 1.0, 0, m, rho);
        };
        double mass = quadrature::integrate(radial, 1e-9, 8.0, 300);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-3));
    }
    CHECK_THROWS_AS(frac_planar_cond_density(0.5, 1.0, 2, m, 0.0), std::domain_error);
}

TEST_CASE("Hankel inversion route agrees where it converges") {
    MotionParams m{2.0, 1.0, 1.0};
    // classic case: uniform disk away from the discontinuity.  The panel
    // window must cover the slow (1 - rho) beat of the integrand, which
    // bounds rho away from the rim.
    for (double rho : {0.6, 0.75}) {
        double got = hankel_radial_density(1.0, 1.0, 2, m, rho, 2e-4);
        CHECK(got == doctest::Approx(1.0 / kPi).epsilon(2e-3));
    }
    CHECK_THROWS_AS(hankel_radial_density(1.0, 1.0, 2, m, 0.97, 1e-6),
                    motion::TailNotConverged);
}

TEST_CASE("planar path simulation") {
    RngStream rng(67, 0);
    MotionParams m{2.0, 1.0, 1.0};
    for (int i = 0; i < 2000; ++i) {
        auto s = simulate_planar(m, PlanarClock::none, rng);
        CHECK(s.x * s.x + s.y * s.y <= std::pow(m.v * m.t, 2) + 1e-9);
        if (s.switches == 0)
            CHECK(std::hypot(s.x, s.y) == doctest::Approx(m.v * m.t).epsilon(1e-12));
    }
    // switch counts are Poisson(lambda t)
    const int n = 30000;
    std::vector<double> ks(n);
    for (auto& k : ks) k = static_cast<double>(simulate_planar(m, PlanarClock::none, rng).switches);
    auto s = stats::summarize(ks);
    CHECK(std::fabs(s.mean - 2.0) < 3.5 * s.se_mean);
    // reflecting clock keeps the support bound with the random horizon
    for (int i = 0; i < 500; ++i) {
        auto smp = simulate_planar(m, PlanarClock::reflecting_bm, rng);
        CHECK(std::isfinite(smp.x));
        CHECK(std::isfinite(smp.y));
    }
}

TEST_CASE("conditional planar law matches the disk density") {
    RngStream rng(71, 0);
    MotionParams m{2.0, 1.0, 1.0};
    const int n = 40000;
    const int nb = 16;
    for (int k : {1, 3}) {
        std::vector<double> edges(nb + 1);
        for (int j = 0; j <= nb; ++j) {
            double q = static_cast<double>(j) / nb;
            edges[j] = m.v * m.t * std::sqrt(1.0 - std::pow(1.0 - q, 2.0 / k));
        }
        std::vector<double> obs(nb, 0.0);
        for (int i = 0; i < n; ++i) {
            auto smp = simulate_planar_conditional(m, k, rng);
            double r = std::hypot(smp.x, smp.y);
            int b = static_cast<int>(std::upper_bound(edges.begin(), edges.end(), r) -
                                     edges.begin()) - 1;
            obs[std::clamp(b, 0, nb - 1)] += 1.0;
        }
        std::vector<double> expd(nb, static_cast<double>(n) / nb);
        CHECK(stats::chi_square_pvalue(obs, expd) > 0.01);
    }
}

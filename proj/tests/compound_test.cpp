#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fprf/compound.hpp"
#include "fprf/sampling.hpp"
#include "fprf/stats.hpp"

using namespace fprf;
using namespace fprf::compound;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

GridDistribution exp_jumps(double rate, double step, std::size_t cells) {
    return discretize_cdf(
        [rate](double y) { return y <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * y); }, 0.0,
        step, cells);
}

}  // namespace

TEST_CASE("grid discretization") {
    auto g = exp_jumps(1.0, 0.01, 3000);
    g.validate_density();
    CHECK(g.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.cdf_at(-0.5) == 0.0);
    CHECK(g.cdf_at(1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-2));
}

TEST_CASE("unit jumps at nu = 1 recover the Poisson cumulative") {
    analytic::FieldParams p{1.3, 1.0, 1.0};
    analytic::QuadrantPoint at{1.0, 1.0};
    GridDistribution unit;
    unit.origin = 0.0;
    unit.step = 0.01;
    unit.masses.assign(400, 0.0);
    unit.masses[99] = 1.0 / unit.step;  // point mass at y = 1 cell
    auto dist = cfprf_distribution(p, unit, at, 1e-6);
    for (double y : {0.5, 1.5, 2.5, 3.5}) {
        KahanSum want;
        for (int k = 0; k <= static_cast<int>(std::floor(y)); ++k)
            want.add(std::exp(k * std::log(1.3) - 1.3 - std::lgamma(k + 1.0)));
        CHECK(dist.cdf.cdf_at(y) == doctest::Approx(want.value()).epsilon(1e-6));
    }
    CHECK(dist.density.atom_at_zero == doctest::Approx(std::exp(-1.3)).epsilon(1e-12));
}

TEST_CASE("zero horizon is a pure atom") {
    analytic::FieldParams p{1.0, 0.8, 0.8};
    auto jumps = exp_jumps(1.0, 0.01, 2500);
    auto dist = cfprf_distribution(p, jumps, {0.0, 1.0}, 1e-6);
    CHECK(dist.density.atom_at_zero == 1.0);
    double grid_mass = 0.0;
    for (double m : dist.density.masses) grid_mass += m;
    CHECK(grid_mass == 0.0);
}

TEST_CASE("grid too short for the fold count is an error") {
    analytic::FieldParams p{1.0, 1.0, 1.0};
    // unit-ish jumps on a grid that cannot hold the Poisson(4) folds
    GridDistribution unit;
    unit.origin = 0.0;
    unit.step = 0.01;
    unit.masses.assign(150, 0.0);
    unit.masses[99] = 1.0 / unit.step;
    CHECK_THROWS_AS(cfprf_distribution(p, unit, {2.0, 2.0}, 1e-5), std::runtime_error);
}

TEST_CASE("compound distribution mass and monotonicity") {
    analytic::FieldParams p{1.0, 0.8, 0.8};
    auto jumps = exp_jumps(1.0, 0.01, 2500);
    const double eps_tail = 1e-5;
    auto dist = cfprf_distribution(p, jumps, {1.0, 1.0}, eps_tail);
    CHECK(std::fabs(dist.cdf.masses.back() - 1.0) < eps_tail + 1e-6);
    double prev = 0.0;
    for (double v : dist.cdf.masses) {
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    for (double v : dist.density.masses) CHECK(v >= 0.0);
}

TEST_CASE("compound sampler and Wald identity") {
    RngStream rng(73, 0);
    analytic::FieldParams p{1.0, 0.8, 0.8};
    analytic::QuadrantPoint at{1.0, 1.0};
    auto expjump = [](RngStream& s) { return s.exponential(1.0); };
    const int n = 30000;
    std::vector<double> ys(n);
    for (auto& y : ys) y = sample_cfprf(p, expjump, at, rng);
    auto s = stats::summarize(ys);
    double want = analytic::moments(p, at).mean;  // jump mean 1
    CHECK(std::fabs(s.mean - want) < 3.5 * s.se_mean);

    auto dist = cfprf_distribution(p, exp_jumps(1.0, 0.005, 5000), at, 1e-5);
    for (double y : {0.5, 1.0, 2.0}) {
        double F = dist.cdf.cdf_at(y);
        long cnt = 0;
        for (double v : ys)
            if (v <= y) ++cnt;
        double se = std::sqrt(F * (1.0 - F) / n);
        CHECK(std::fabs(static_cast<double>(cnt) / n - F) < 3.5 * se);
    }

    // second Wald parameter set: mixed orders, rate-2 jumps
    analytic::FieldParams p2{1.5, 1.0, 0.6};
    auto fastjump = [](RngStream& s) { return s.exponential(2.0); };
    std::vector<double> y2(n);
    for (auto& y : y2) y = sample_cfprf(p2, fastjump, at, rng);
    auto s2 = stats::summarize(y2);
    double want2 = 0.5 * analytic::moments(p2, at).mean;
    CHECK(std::fabs(s2.mean - want2) < 3.5 * s2.se_mean);
}

TEST_CASE("generic compound cdf") {
    auto jumps = exp_jumps(1.0, 0.01, 2500);
    analytic::FieldParams p{1.0, 0.8, 0.8};
    analytic::QuadrantPoint at{1.0, 1.0};
    auto pmf_fn = [&](int k) { return analytic::pmf(p, k, at).value; };
    CHECK(generic_compound_cdf(pmf_fn, jumps, -0.5, 1e-5) == 0.0);
    CHECK(generic_compound_cdf(pmf_fn, jumps, 24.0, 1e-5) ==
          doctest::Approx(1.0).epsilon(1e-4));
    // specialization reproduces the field-specific assembly on shared grids
    auto dist = cfprf_distribution(p, jumps, at, 1e-5);
    for (double y : {0.4, 1.1, 2.7}) {
        CHECK(generic_compound_cdf(pmf_fn, jumps, y, 1e-5) ==
              doctest::Approx(dist.cdf.cdf_at(y)).epsilon(1e-9));
    }
    // GPP counts against Monte Carlo
    RngStream rng(79, 0);
    gpp::GppParams gp{0.7, 1.0, 1.0};
    auto gpmf = [&](int k) { return gpp::gpp_pmf(gp, 1.0, k); };
    sampling::GppSampler sampler(gp, 1.0);
    const int n = 30000;
    long cnt = 0;
    for (int i = 0; i < n; ++i) {
        long k = sampler.draw(rng);
        double y = 0.0;
        for (long j = 0; j < k; ++j) y += rng.exponential(1.0);
        if (y <= 1.0) ++cnt;
    }
    double F = generic_compound_cdf(gpmf, jumps, 1.0, 1e-6);
    double se = std::sqrt(F * (1.0 - F) / n);
    CHECK(std::fabs(static_cast<double>(cnt) / n - F) < 3.5 * se);
}

TEST_CASE("generalized compound characteristic function") {
    gpp::GppParams expo{1.0, 1.0, 1.2};
    for (double u : {0.4, 1.0, 2.2}) {
        std::complex<double> phi = std::exp(std::complex<double>(0.0, u));
        auto got = gen_compound_cf(expo, 0.9, phi);
        auto want = std::exp(1.2 * 0.9 * (phi - 1.0));
        CHECK(std::abs(got - want) < 1e-10);
    }
    CHECK(gen_compound_cf({0.8, 0.5, 1.0}, 1.3, {1.0, 0.0}) ==
          std::complex<double>(1.0, 0.0));

    // Fourier inversion over unit jumps recovers the count pmf
    gpp::GppParams p{0.8, 0.5, 1.0};
    const int M = 4096;
    for (int k = 0; k <= 6; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int j = 0; j < M; ++j) {
            double u = -kPi + 2.0 * kPi * (j + 0.5) / M;
            std::complex<double> phi = std::exp(std::complex<double>(0.0, u));
            acc += gen_compound_cf(p, 1.0, phi) * std::exp(std::complex<double>(0.0, -k * u));
        }
        double inv = (acc / static_cast<double>(M)).real();
        CHECK(inv == doctest::Approx(gpp::gen_field_pmf(p, 1.0, k).value).epsilon(1e-6));
    }
}

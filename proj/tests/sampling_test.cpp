#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fprf/io.hpp"
#include "fprf/sampling.hpp"
#include "fprf/specfun.hpp"
#include "fprf/stats.hpp"

using namespace fprf;
using namespace fprf::sampling;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

// Two-sample chi-square on count data, pooled-expected homogeneity form.
double two_sample_count_chisq(const std::vector<long>& a, const std::vector<long>& b) {
    long kmax = 0;
    for (long v : a) kmax = std::max(kmax, v);
    for (long v : b) kmax = std::max(kmax, v);
    std::vector<double> ca(kmax + 1, 0.0), cb(kmax + 1, 0.0);
    for (long v : a) ca[v] += 1.0;
    for (long v : b) cb[v] += 1.0;
    // merge sparse tail bins so expected counts stay above 5
    std::vector<double> oa, ob;
    double ra = 0.0, rb = 0.0;
    for (long k = 0; k <= kmax; ++k) {
        ra += ca[k];
        rb += cb[k];
        if (ra + rb >= 25.0) {
            oa.push_back(ra);
            ob.push_back(rb);
            ra = rb = 0.0;
        }
    }
    if (ra + rb > 0.0) {
        oa.back() += ra;
        ob.back() += rb;
    }
    double na = a.size(), nb = b.size();
    double stat = 0.0;
    for (std::size_t i = 0; i < oa.size(); ++i) {
        double tot = oa[i] + ob[i];
        double ea = tot * na / (na + nb), eb = tot * nb / (na + nb);
        stat += (oa[i] - ea) * (oa[i] - ea) / ea + (ob[i] - eb) * (ob[i] - eb) / eb;
    }
    return stats::chi_square_tail(stat, static_cast<int>(oa.size()) - 1);
}

}  // namespace

TEST_CASE("streams are reproducible and distinct") {
    RngStream a(99, 3), b(99, 3), c(99, 4);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 200; ++i) {
        auto x = a.next_u64(), y = b.next_u64(), z = c.next_u64();
        all_equal = all_equal && (x == y);
        any_diff = any_diff || (x != z);
    }
    CHECK(all_equal);
    CHECK(any_diff);
    RngStream s(5, 0);
    auto sub1 = s.substream(1), sub1b = RngStream(5, 0).substream(1);
    CHECK(sub1.next_u64() == sub1b.next_u64());
}

TEST_CASE("poisson sampler moments") {
    RngStream rng(7, 0);
    for (double mean : {0.3, 4.0, 80.0}) {
        const int n = 60000;
        std::vector<double> xs(n);
        for (auto& x : xs) x = static_cast<double>(rng.poisson(mean));
        auto s = stats::summarize(xs);
        CHECK(std::fabs(s.mean - mean) < 4.0 * s.se_mean);
        CHECK(std::fabs(s.variance - mean) < 0.05 * mean + 4.0 * mean / std::sqrt(n));
    }
}

TEST_CASE("stable subordinator Laplace transforms") {
    RngStream rng(13, 0);
    const int n = 300000;
    {
        std::vector<double> e1(n), e2(n);
        for (int i = 0; i < n; ++i) {
            double s = sample_stable_unit(0.7, rng);
            CHECK(s > 0.0);
            e1[i] = std::exp(-s);
        }
        auto s1 = stats::summarize(e1);
        CHECK(std::fabs(s1.mean - std::exp(-1.0)) < 3.5 * s1.se_mean);
    }
    {
        std::vector<double> e2(n);
        for (int i = 0; i < n; ++i)
            e2[i] = std::exp(-2.0 * sample_stable_unit(0.5, rng));
        auto s2 = stats::summarize(e2);
        CHECK(std::fabs(s2.mean - std::exp(-std::sqrt(2.0))) < 3.5 * s2.se_mean);
    }
}

TEST_CASE("inverse stable subordinator") {
    RngStream rng(17, 0);
    CHECK(sample_inverse_stable(1.0, 1.7, rng) == 1.7);
    const int n = 200000;
    for (double nu : {0.4, 0.6, 0.9}) {
        std::vector<double> draws(n);
        for (auto& d : draws) d = sample_inverse_stable(nu, 1.0, rng);
        for (double z : {0.5, 1.0, 2.0}) {
            std::vector<double> es(n);
            for (int i = 0; i < n; ++i) es[i] = std::exp(-z * draws[i]);
            auto s = stats::summarize(es);
            double want = specfun::mittag_leffler(nu, 1.0, 1.0, -z).value;
            CHECK(std::fabs(s.mean - want) < 3.5 * s.se_mean);
        }
    }
    std::vector<double> half(n);
    for (auto& d : half) d = sample_inverse_stable(0.5, 1.0, rng);
    auto s = stats::summarize(half);
    CHECK(std::fabs(s.mean - 2.0 / std::sqrt(kPi)) < 3.5 * s.se_mean);
}

TEST_CASE("reflecting Brownian motion") {
    RngStream rng(19, 0);
    CHECK(sample_reflecting_bm(0.0, rng) == 0.0);
    const int n = 200000;
    std::vector<double> xs(n);
    for (auto& x : xs) x = sample_reflecting_bm(1.0, rng);
    auto s = stats::summarize(xs);
    CHECK(std::fabs(s.mean - 2.0 / std::sqrt(kPi)) < 3.5 * s.se_mean);
    // same law as the nu = 1/2 inverse stable subordinator
    std::vector<double> ys(n);
    for (auto& y : ys) y = sample_inverse_stable(0.5, 1.0, rng);
    CHECK(stats::ks_two_sample_pvalue(xs, ys) > 0.01);
}

TEST_CASE("plain field sampler") {
    RngStream rng(23, 0);
    CHECK(sample_prf(2.0, 0.0, 3.0, rng).count() == 0);
    const int n = 40000;
    std::vector<double> counts(n);
    for (auto& c : counts) {
        auto pat = sample_prf(2.0, 1.5, 2.0, rng);
        for (const auto& pt : pat.points) {
            CHECK(pt[0] >= 0.0);
            CHECK(pt[0] <= 1.5);
            CHECK(pt[1] >= 0.0);
            CHECK(pt[1] <= 2.0);
        }
        c = static_cast<double>(pat.count());
    }
    auto s = stats::summarize(counts);
    CHECK(std::fabs(s.mean - 6.0) < 3.5 * s.se_mean);
}

TEST_CASE("conditional counts in a subrectangle are binomial") {
    RngStream rng(29, 0);
    const int n = 120000;
    std::vector<double> obs(3, 0.0);
    long total = 0;
    for (int i = 0; i < n; ++i) {
        auto pat = sample_prf(2.0, 1.0, 1.0, rng);
        if (pat.count() != 2) continue;
        ++total;
        obs[pat.count_below(0.5, 1.0)] += 1.0;
    }
    // Binomial(2, 1/2) bins
    std::vector<double> expd = {0.25 * total, 0.5 * total, 0.25 * total};
    CHECK(stats::chi_square_pvalue(obs, expd) > 0.01);
}

TEST_CASE("disjoint rectangle counts are uncorrelated") {
    RngStream rng(31, 0);
    const int n = 30000;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        auto pat = sample_prf(3.0, 1.0, 1.0, rng);
        long left = 0;
        for (const auto& pt : pat.points)
            if (pt[0] <= 0.5) ++left;
        xs[i] = static_cast<double>(left);
        ys[i] = static_cast<double>(pat.count()) - left;
    }
    auto sx = stats::summarize(xs), sy = stats::summarize(ys);
    double r = 0.0;
    for (int i = 0; i < n; ++i) r += (xs[i] - sx.mean) * (ys[i] - sy.mean);
    r /= (n - 1) * std::sqrt(sx.variance * sy.variance);
    CHECK(std::fabs(r) < 3.5 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("time-changed field sampler") {
    RngStream rng(37, 0);
    analytic::FieldParams pois{2.0, 1.0, 1.0};
    std::vector<long> a(30000), b(30000);
    for (auto& k : a) k = sample_fprf(pois, {1.0, 1.0}, rng);
    for (auto& k : b) k = rng.poisson(2.0);
    CHECK(two_sample_count_chisq(a, b) > 0.01);

    // nu = 1/2 equals the reflecting-BM composition in law
    analytic::FieldParams half{1.0, 0.5, 0.5};
    std::vector<long> c(60000), d(60000);
    for (auto& k : c) k = sample_fprf(half, {1.0, 1.0}, rng);
    for (auto& k : d) {
        double u1 = sample_reflecting_bm(1.0, rng);
        double u2 = sample_reflecting_bm(1.0, rng);
        k = rng.poisson(u1 * u2);
    }
    CHECK(two_sample_count_chisq(c, d) > 0.01);

    // empirical mean against the closed-form field mean
    analytic::FieldParams p{1.0, 0.8, 0.8};
    const int n = 30000;
    std::vector<double> ks(n);
    for (auto& k : ks) k = static_cast<double>(sample_fprf(p, {1.0, 1.0}, rng));
    auto s = stats::summarize(ks);
    CHECK(std::fabs(s.mean - analytic::moments(p, {1.0, 1.0}).mean) < 3.5 * s.se_mean);
}

TEST_CASE("GPP sampler") {
    RngStream rng(41, 0);
    {
        gpp::GppParams pois{1.0, 1.0, 1.5};
        std::vector<long> a(30000), b(30000);
        GppSampler sampler(pois, 1.0);
        for (auto& k : a) k = sampler.draw(rng);
        for (auto& k : b) k = rng.poisson(1.5);
        CHECK(two_sample_count_chisq(a, b) > 0.01);
    }
    {
        gpp::GppParams p{0.8, 0.5, 1.0};
        GppSampler sampler(p, 1.0);
        const int n = 100000;
        std::vector<double> ks(n);
        long zeros = 0;
        for (auto& k : ks) {
            long v = sampler.draw(rng);
            if (v == 0) ++zeros;
            k = static_cast<double>(v);
        }
        auto s = stats::summarize(ks);
        CHECK(std::fabs(s.mean - gpp::gpp_mean(p, 1.0)) < 3.5 * s.se_mean);
        double p0 = gpp::gpp_pmf(p, 1.0, 0);
        double se0 = std::sqrt(p0 * (1.0 - p0) / n);
        CHECK(std::fabs(static_cast<double>(zeros) / n - p0) < 3.5 * se0);
    }
}

TEST_CASE("empirical pmf") {
    auto e = empirical_pmf({0, 0, 1, 1});
    CHECK(e.frequencies == std::vector<double>{0.5, 0.5});
    CHECK(e.standard_errors[0] == doctest::Approx(0.25).epsilon(1e-14));
    auto d = empirical_pmf({3, 3, 3});
    CHECK(d.frequencies[3] == 1.0);
    CHECK(d.standard_errors[3] == 0.0);
    CHECK_THROWS_AS(empirical_pmf({}), std::domain_error);
    RngStream rng(43, 0);
    std::vector<long> ks(1024);
    for (auto& k : ks) k = rng.poisson(2.0);
    auto f = empirical_pmf(ks);
    KahanSum s;
    for (double v : f.frequencies) s.add(v);
    CHECK(s.value() == 1.0);  // power-of-two sample size: exact
}

TEST_CASE("fractional integral of a pattern") {
    analytic::QuadrantPoint at{1.0, 1.0};
    PointPattern empty;
    empty.t1 = empty.t2 = 1.0;
    CHECK(frac_integral_of_field(empty, 0.5, 0.5, at) == 0.0);

    PointPattern origin;
    origin.t1 = origin.t2 = 1.0;
    origin.points.push_back({0.0, 0.0});
    CHECK(frac_integral_of_field(origin, 1.0, 1.0, at) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frac_integral_exact(origin, 1.0, 1.0, at) == doctest::Approx(1.0).epsilon(1e-14));

    RngStream rng(47, 0);
    for (int i = 0; i < 3; ++i) {
        auto pat = sample_prf(3.0, 1.0, 1.0, rng);
        if (pat.points.empty()) continue;
        double q = frac_integral_of_field(pat, 0.7, 0.6, at, 128);
        double e = frac_integral_exact(pat, 0.7, 0.6, at);
        CHECK(q == doctest::Approx(e).epsilon(2e-3));
    }
    CHECK_THROWS_AS(frac_integral_of_field(origin, 0.5, 0.5, {2.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS(frac_integral_of_field(origin, 0.5, 0.5, at, 16), std::domain_error);
}

TEST_CASE("fractional integral Monte Carlo against closed moments") {
    RngStream rng(53, 0);
    analytic::QuadrantPoint at{1.0, 1.0};
    const int n = 4000;
    std::vector<double> vals(n);
    for (auto& v : vals) {
        auto pat = sample_prf(1.0, 1.0, 1.0, rng);
        v = frac_integral_exact(pat, 0.5, 0.5, at);
    }
    auto s = stats::summarize(vals);
    auto m = analytic::frac_integral_moments(0.5, 0.5, {1.0, 1.0, 1.0}, at);
    CHECK(std::fabs(s.mean - m.prf_mean) < 4.0 * s.se_mean);
    double se_var = s.variance * std::sqrt(2.0 / (n - 1));
    CHECK(std::fabs(s.variance - m.prf_variance) < 4.0 * se_var);
}

TEST_CASE("serialized files round-trip exactly") {
    RngStream rng(83, 0);
    auto pat = sample_prf(5.0, 1.3, 0.9, rng);
    fprf::io::write_point_pattern_csv("pattern_rt.csv", pat);
    auto back = fprf::io::read_point_pattern_csv("pattern_rt.csv", pat.t1, pat.t2);
    REQUIRE(back.count() == pat.count());
    for (std::size_t i = 0; i < pat.count(); ++i) {
        CHECK(back.points[i][0] == pat.points[i][0]);  // bitwise, 17 digits
        CHECK(back.points[i][1] == pat.points[i][1]);
    }
    std::vector<long> ks(500);
    for (auto& k : ks) k = rng.poisson(3.0);
    fprf::io::write_count_samples_csv("counts_rt.csv", ks);
    CHECK(fprf::io::read_count_samples_csv("counts_rt.csv") == ks);
}

TEST_CASE("two-point inverse stable path sampler") {
    RngStream rng(59, 0);
    const int n = 4000;
    std::vector<double> lt(n);
    for (int i = 0; i < n; ++i) {
        auto pair = sample_inverse_stable_pair(0.7, 0.5, 1.0, rng, 1000);
        CHECK(pair[0] <= pair[1] + 1e-12);
        lt[i] = pair[1];
    }
    auto s = stats::summarize(lt);
    double want = 1.0 / std::tgamma(1.7);
    CHECK(std::fabs(s.mean - want) < 4.5 * s.se_mean + 2e-3);
}

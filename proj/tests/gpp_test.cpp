#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fprf/gpp.hpp"
#include "fprf/specfun.hpp"

using namespace fprf;
using namespace fprf::gpp;

TEST_CASE("generalized field pmf reductions") {
    GppParams unit{1.0, 1.0, 1.3};
    for (int k = 0; k <= 20; ++k) {
        double x = 1.3 * 0.8;
        double want = std::exp(k * std::log(x) - x - std::lgamma(k + 1.0));
        CHECK(gen_field_pmf(unit, 0.8, k).value == doctest::Approx(want).epsilon(1e-12));
    }
    GppParams p{0.7, 0.5, 1.0};
    CHECK(gen_field_pmf(p, 1.0, 0).value ==
          doctest::Approx(specfun::mittag_leffler(0.7, 1.0, 0.5, -1.0).value)
              .epsilon(1e-13));
    CHECK(gen_field_pmf(p, 0.0, 0).value == 1.0);
    CHECK(gen_field_pmf(p, 0.0, 2).value == 0.0);
}

TEST_CASE("generalized field pmf normalization and positivity") {
    GppParams p{0.7, 0.5, 1.0};  // lambda |B|^alpha = 1
    KahanSum mass;
    for (int k = 0; k <= 200; ++k) {
        double v = gen_field_pmf(p, 1.0, k).value;
        CHECK(v >= 0.0);
        mass.add(v);
    }
    CHECK(mass.value() == doctest::Approx(1.0).epsilon(1e-8));
    // full (alpha, gamma) grid with lambda |B|^alpha = 2
    for (double alpha : {0.5, 0.8, 1.0}) {
        for (double gamma : {0.5, 0.8, 1.0}) {
            GppParams q{alpha, gamma, 1.0};
            double measure = std::pow(2.0, 1.0 / alpha);
            KahanSum grid_mass;
            for (int k = 0; k <= 200; ++k)
                grid_mass.add(gen_field_pmf(q, measure, k).value);
            CHECK(grid_mass.value() == doctest::Approx(1.0).epsilon(1e-8));
        }
    }
}

TEST_CASE("factorial-moment alternating sum rebuilds the field pmf") {
    GppParams p{0.8, 0.6, 1.0};
    double measure = 1.2;
    double x = p.lambda * std::pow(measure, p.alpha);
    auto fm = [&](int n) {
        if (n == 0) return 1.0;
        return std::exp(std::lgamma(p.gamma + n) - std::lgamma(p.gamma) +
                        n * std::log(x) - std::lgamma(n * p.alpha + 1.0));
    };
    for (int k : {0, 1, 3}) {
        KahanSum s;
        for (int n = k; n <= 80; ++n) {
            double term = fm(n) * std::exp(-std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
            s.add((n - k) % 2 == 0 ? term : -term);
        }
        CHECK(s.value() ==
              doctest::Approx(gen_field_pmf(p, measure, k).value).epsilon(1e-8));
    }
}

TEST_CASE("GPP process laws") {
    GppParams expo{1.0, 1.0, 1.4};
    CHECK(gpp_waiting_survival(expo, 0.9) ==
          doctest::Approx(std::exp(-1.4 * 0.9)).epsilon(1e-13));
    CHECK(gpp_mean(expo, 2.0) == doctest::Approx(2.8).epsilon(1e-13));
    CHECK(gpp_variance(expo, 2.0) == doctest::Approx(2.8).epsilon(1e-12));

    GppParams p{0.8, 0.5, 1.0};
    KahanSum mass, mean;
    for (int k = 0; k <= 150; ++k) {
        double v = gpp_pmf(p, 1.0, k);
        mass.add(v);
        mean.add(k * v);
    }
    CHECK(mass.value() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mean.value() == doctest::Approx(gpp_mean(p, 1.0)).epsilon(1e-9));

    KahanSum m2;
    for (int k = 0; k <= 150; ++k) m2.add(static_cast<double>(k) * k * gpp_pmf(p, 1.0, k));
    CHECK(m2.value() - std::pow(gpp_mean(p, 1.0), 2) ==
          doctest::Approx(gpp_variance(p, 1.0)).epsilon(1e-9));

    CHECK(gpp_factorial_moment(p, 1.0, 1) == doctest::Approx(gpp_mean(p, 1.0)).epsilon(1e-13));
}

TEST_CASE("GPP pgf") {
    GppParams p{0.8, 0.5, 1.0};
    CHECK(gpp_pgf(p, 1.0, 1.0) == 1.0);
    CHECK(gpp_pgf(p, 1.0, 0.0) == doctest::Approx(gpp_pmf(p, 1.0, 0)).epsilon(1e-13));
    double prev = 0.0;
    for (double z = 0.0; z <= 1.0 + 1e-9; z += 0.1) {
        double v = gpp_pgf(p, 1.0, std::min(z, 1.0));
        CHECK(v >= prev - 1e-13);
        prev = v;
    }
    KahanSum s;
    for (int k = 0; k <= 150; ++k) s.add(std::pow(0.4, k) * gpp_pmf(p, 1.0, k));
    CHECK(gpp_pgf(p, 1.0, 0.4) == doctest::Approx(s.value()).epsilon(1e-10));
}

TEST_CASE("memorylessness holds only at the Poisson corner") {
    GppParams expo{1.0, 1.0, 1.0};
    double cond = gpp_conditional_survival(expo, 1.0, 1.0);
    CHECK(std::fabs(cond - gpp_waiting_survival(expo, 1.0)) < 1e-12);
    GppParams frac{0.7, 0.7, 1.0};
    double cond_f = gpp_conditional_survival(frac, 1.0, 1.0);
    CHECK(std::fabs(cond_f - gpp_waiting_survival(frac, 1.0)) > 1e-3);
}

TEST_CASE("GPP order statistics") {
    GppParams expo{1.0, 1.0, 1.2};
    double B = 1.5, Fv = 0.3;
    CHECK(gpp_order_stats(expo, B, 1.0, OrderKind::max_cdf) == 1.0);
    CHECK(gpp_order_stats(expo, B, Fv, OrderKind::min_tail) ==
          doctest::Approx(std::exp(-Fv * 1.2 * B)).epsilon(1e-12));
    CHECK(gpp_order_stats(expo, B, Fv, OrderKind::max_cdf) ==
          doctest::Approx(std::exp(-(1.0 - Fv) * 1.2 * B)).epsilon(1e-12));
    // direct mixture oracle: sum_k pmf(k) Fv^k etc.
    GppParams p{0.6, 0.8, 1.0};
    KahanSum min_tail, max_cdf;
    for (int k = 0; k <= 200; ++k) {
        double q = gen_field_pmf(p, B, k).value;
        min_tail.add(q * std::pow(1.0 - Fv, k));
        max_cdf.add(q * std::pow(Fv, k));
    }
    CHECK(gpp_order_stats(p, B, Fv, OrderKind::min_tail) ==
          doctest::Approx(min_tail.value()).epsilon(1e-9));
    CHECK(gpp_order_stats(p, B, Fv, OrderKind::max_cdf) ==
          doctest::Approx(max_cdf.value()).epsilon(1e-9));
}

TEST_CASE("two-index field") {
    analytic::QuadrantPoint at{1.0, 1.0};
    {  // gamma = (1,1) reduces to the base fractional field
        TwoIndexParams ti{0.8, 1.0, 0.7, 1.0, 1.0};
        analytic::FieldParams fp{1.0, 0.8, 0.7};
        for (int k = 0; k <= 12; ++k)
            CHECK(two_index_pmf(ti, at, k).value ==
                  doctest::Approx(analytic::pmf_series(fp, k, at).value).epsilon(1e-11));
    }
    TwoIndexParams p{0.9, 0.5, 0.9, 0.5, 1.0};
    CHECK(two_index_pmf(p, {0.0, 1.0}, 0).value == 1.0);
    CHECK(two_index_pmf(p, {0.0, 1.0}, 2).value == 0.0);
    KahanSum mass, m1, m2;
    for (int k = 0; k <= 120; ++k) {
        double q = two_index_pmf(p, at, k).value;
        mass.add(q);
        m1.add(k * q);
        m2.add(static_cast<double>(k) * k * q);
    }
    CHECK(mass.value() == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(m1.value() == doctest::Approx(two_index_mean(p, at)).epsilon(1e-8));
    CHECK(m2.value() - m1.value() * m1.value() ==
          doctest::Approx(two_index_variance(p, at)).epsilon(1e-7));
    KahanSum f2;
    for (int k = 2; k <= 120; ++k)
        f2.add(static_cast<double>(k) * (k - 1) * two_index_pmf(p, at, k).value);
    CHECK(f2.value() == doctest::Approx(two_index_factorial_moment(p, at, 2)).epsilon(1e-7));
}

TEST_CASE("two-index moments and pgf reductions") {
    analytic::QuadrantPoint at{1.2, 0.7};
    TwoIndexParams unit{1.0, 1.0, 1.0, 1.0, 2.0};
    CHECK(two_index_mean(unit, at) == doctest::Approx(2.0 * 1.2 * 0.7).epsilon(1e-13));
    CHECK(two_index_variance(unit, at) == doctest::Approx(2.0 * 1.2 * 0.7).epsilon(1e-12));
    TwoIndexParams p{0.9, 0.5, 0.8, 0.7, 1.0};
    CHECK(two_index_pgf(p, at, 1.0).value == 1.0);
    KahanSum s;
    for (int k = 0; k <= 120; ++k)
        s.add(std::pow(0.5, k) * two_index_pmf(p, at, k).value);
    CHECK(two_index_pgf(p, at, 0.5).value == doctest::Approx(s.value()).epsilon(1e-8));
}

TEST_CASE("psi time-change moments") {
    auto degenerate = psi_moments(1.0, 1.0, 2.5);
    CHECK(degenerate.mean == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(degenerate.variance == doctest::Approx(0.0).epsilon(1e-13));
    auto half = psi_moments(0.5, 1.0, 1.0);
    CHECK(half.mean == doctest::Approx(2.0 / std::sqrt(3.141592653589793)).epsilon(1e-13));
    CHECK(half.variance > 0.0);
}

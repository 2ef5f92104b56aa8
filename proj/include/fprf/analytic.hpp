#ifndef FPRF_ANALYTIC_HPP
#define FPRF_ANALYTIC_HPP

#include <cstdint>
#include <utility>

#include "fprf/series.hpp"

namespace fprf {
namespace analytic {

// Parameter triple of every field law: intensity and the two fractional
// orders of the governing system.
struct FieldParams {
    double lambda;
    double nu1;
    double nu2;

    void validate() const {
        if (!(lambda > 0.0) || !(nu1 > 0.0 && nu1 <= 1.0) || !(nu2 > 0.0 && nu2 <= 1.0))
            throw std::domain_error("FieldParams: lambda>0, nu in (0,1] required");
    }
    bool is_poisson() const { return nu1 == 1.0 && nu2 == 1.0; }
    // T = t1^nu1 t2^nu2, the argument every series law depends on.
    double scaled_area(double t1, double t2) const;
};

struct QuadrantPoint {
    double t1;
    double t2;

    void validate() const {
        if (!(t1 >= 0.0) || !(t2 >= 0.0))
            throw std::domain_error("QuadrantPoint: coordinates must be non-negative");
    }
};

// Classification of the state-probability series: s = nu1+nu2 drives the
// n!/(Gamma(n nu1+1)Gamma(n nu2+1)) growth.
struct ConvergenceRegime {
    double s;
    double radius;  // nu1^nu1 nu2^nu2 when s == 1, +inf when s > 1, 0 when s < 1
    bool usable;    // argument < 0.9 * radius
};
ConvergenceRegime classify(const FieldParams& p, double argument);

// Adomian series coefficients: q^n(k) = c(n,k) (lambda T)^n /
// (Gamma(n nu1+1) Gamma(n nu2+1)).  Exact integers; both modes agree.
enum class AdomianMode { recursive, closed };
std::int64_t adomian_component(int n, int k, AdomianMode mode);

// State probabilities.  Routes: closed Poisson form at nu=(1,1); the
// alternating series where the regime allows; Wright-kernel tensor
// quadrature otherwise (and as fallback on precision loss).
EvalReport pmf(const FieldParams& p, int k, const QuadrantPoint& at,
               const SeriesControl& ctl = {});

// Series route only (throws DivergentSeriesError outside the regime).
EvalReport pmf_series(const FieldParams& p, int k, const QuadrantPoint& at,
                      const SeriesControl& ctl = {});

// Integral route: tensor quadrature against the two inverse-stable Wright
// kernels; requires t1,t2 > 0 and nu1,nu2 < 1.
EvalReport pmf_via_integral(const FieldParams& p, int k, const QuadrantPoint& at,
                            double quad_tol = 1e-9);

// Void-probability series at an arbitrary rate (the pgf and the order
// statistics all reduce to this).
EvalReport void_probability(const FieldParams& p, double rate, const QuadrantPoint& at,
                            const SeriesControl& ctl = {});

struct Moments {
    double mean;
    double variance;
};
Moments moments(const FieldParams& p, const QuadrantPoint& at);

double covariance(const FieldParams& p, const QuadrantPoint& tau, const QuadrantPoint& t);

EvalReport pgf(const FieldParams& p, double z, const QuadrantPoint& at,
               const SeriesControl& ctl = {});

double capacity(const FieldParams& p, const QuadrantPoint& at,
                const SeriesControl& ctl = {});

double factorial_moment(const FieldParams& p, int n, const QuadrantPoint& at);

// Fractional-integral moments of the fields over [0,t1] x [0,t2].
struct FracIntegralMoments {
    double fprf_mean;
    double prf_mean;
    double prf_variance;
    double prf_conditional_mean_per_count;
};
FracIntegralMoments frac_integral_moments(double alpha1, double alpha2,
                                          const FieldParams& p, const QuadrantPoint& at);

// Pr{kth order statistic <= v | count >= k} with F(v) passed as a number.
double order_stat_cdf(const FieldParams& p, int k, double Fv, const QuadrantPoint& at,
                      const SeriesControl& ctl = {});

enum class ExtremeKind {
    min_conditional,
    max_conditional,
    min_unconditional_tail,
    max_unconditional
};
double extreme_stats(const FieldParams& p, double Fv, const QuadrantPoint& at,
                     ExtremeKind which, const SeriesControl& ctl = {});

// Binomial conditioning of the plain field on nested rectangles.
double prf_conditional_binomial(int k, int l, const QuadrantPoint& tau,
                                const QuadrantPoint& t);

// Alternate field of the hat-variant family: one-dimensional laws
// normalized by E_{nu1,nu2}(lambda T).
double alt_pmf(const FieldParams& p, int k, const QuadrantPoint& at,
               const SeriesControl& ctl = {});
double alt_mean(const FieldParams& p, const QuadrantPoint& at,
                const SeriesControl& ctl = {});
double alt_variance(const FieldParams& p, const QuadrantPoint& at,
                    const SeriesControl& ctl = {});
double alt_pgf(const FieldParams& p, double z, const QuadrantPoint& at,
               const SeriesControl& ctl = {});
double alt_min_tail(const FieldParams& p, double Fv, const QuadrantPoint& at,
                    const SeriesControl& ctl = {});
double alt_max_cdf(const FieldParams& p, double Fv, const QuadrantPoint& at,
                   const SeriesControl& ctl = {});

}  // namespace analytic
}  // namespace fprf

#endif

#ifndef FPRF_GPP_HPP
#define FPRF_GPP_HPP

#include "fprf/analytic.hpp"
#include "fprf/series.hpp"

namespace fprf {
namespace gpp {

struct GppParams {
    double alpha;
    double gamma;
    double lambda;

    void validate() const {
        if (!(alpha > 0.0 && alpha <= 1.0) || !(gamma > 0.0 && gamma <= 1.0) ||
            !(lambda > 0.0))
            throw std::domain_error("GppParams: alpha,gamma in (0,1], lambda>0");
    }
};

// Two coordinate-wise time changes sharing one intensity.
struct TwoIndexParams {
    double alpha1, gamma1;
    double alpha2, gamma2;
    double lambda;

    void validate() const {
        GppParams{alpha1, gamma1, lambda}.validate();
        GppParams{alpha2, gamma2, lambda}.validate();
    }
};

// Generalized field on R^d_+: the law depends on B only through |B|.
EvalReport gen_field_pmf(const GppParams& p, double measure, int k,
                         const SeriesControl& ctl = {});

// d = 1 process laws.
double gpp_pmf(const GppParams& p, double t, int k, const SeriesControl& ctl = {});
double gpp_pgf(const GppParams& p, double t, double z, const SeriesControl& ctl = {});
double gpp_mean(const GppParams& p, double t);
double gpp_variance(const GppParams& p, double t);
double gpp_factorial_moment(const GppParams& p, double t, int n);
double gpp_waiting_survival(const GppParams& p, double t, const SeriesControl& ctl = {});
double gpp_conditional_survival(const GppParams& p, double t, double s,
                                const SeriesControl& ctl = {});

enum class OrderKind { min_tail, max_cdf };
double gpp_order_stats(const GppParams& p, double measure, double Fv, OrderKind which,
                       const SeriesControl& ctl = {});

// Planar field time-changed coordinatewise by two psi processes.
EvalReport two_index_pmf(const TwoIndexParams& p, const analytic::QuadrantPoint& at,
                         int k, const SeriesControl& ctl = {});
double two_index_mean(const TwoIndexParams& p, const analytic::QuadrantPoint& at);
double two_index_variance(const TwoIndexParams& p, const analytic::QuadrantPoint& at);
double two_index_factorial_moment(const TwoIndexParams& p,
                                  const analytic::QuadrantPoint& at, int n);
EvalReport two_index_pgf(const TwoIndexParams& p, const analytic::QuadrantPoint& at,
                         double z, const SeriesControl& ctl = {});

// Moments of the psi time change itself.
struct PsiMoments {
    double mean;
    double variance;
};
PsiMoments psi_moments(double alpha, double gamma, double t);

}  // namespace gpp
}  // namespace fprf

#endif

#ifndef FPRF_SAMPLING_HPP
#define FPRF_SAMPLING_HPP

#include <array>
#include <functional>
#include <vector>

#include "fprf/analytic.hpp"
#include "fprf/gpp.hpp"
#include "fprf/rng.hpp"

namespace fprf {
namespace sampling {

// A realized spatial sample: rectangle bounds plus the points inside.
struct PointPattern {
    double t1 = 0.0, t2 = 0.0;
    std::vector<std::array<double, 2>> points;

    std::size_t count() const { return points.size(); }
    // Points with both coordinates <= (x1,x2).
    std::size_t count_below(double x1, double x2) const;
};

// One-sided stable S_nu(1), Laplace transform exp(-z^nu); Kanter/CMS form.
double sample_stable_unit(double nu, RngStream& s);

// Inverse stable subordinator at a single time: (t/S)^nu in law; t at nu=1.
double sample_inverse_stable(double nu, double t, RngStream& s);

// Joint draw (L(tau), L(t)) for tau <= t via a discretized subordinator
// path; used by the covariance oracle (no exact two-point sampler exists).
std::array<double, 2> sample_inverse_stable_pair(double nu, double tau, double t,
                                                 RngStream& s, int steps = 2048);

// |N(0, 2t)|.
double sample_reflecting_bm(double t, RngStream& s);

PointPattern sample_prf(double lambda, double t1, double t2, RngStream& s);

// Count of the time-changed field at one point of the quadrant.
long sample_fprf(const analytic::FieldParams& p, const analytic::QuadrantPoint& at,
                 RngStream& s);

// Discrete inverse-CDF sampler over the analytic GPP pmf (tail cap 1e-12).
class GppSampler {
public:
    GppSampler(const gpp::GppParams& p, double t);
    long draw(RngStream& s) const;
    const std::vector<double>& cdf() const { return cdf_; }

private:
    std::vector<double> cdf_;
};

long sample_gpp(const gpp::GppParams& p, double t, RngStream& s);

struct EmpiricalPmf {
    std::vector<double> frequencies;
    std::vector<double> standard_errors;
};
EmpiricalPmf empirical_pmf(const std::vector<long>& samples);

// Tensor midpoint quadrature of the fractional integral of a realized
// pattern; panel count doubles until the relative change drops below 1e-4.
double frac_integral_of_field(const PointPattern& pat, double alpha1, double alpha2,
                              const analytic::QuadrantPoint& at, int panels = 64);

// Exact value of the same integral (each point integrates in closed form);
// oracle for the quadrature.
double frac_integral_exact(const PointPattern& pat, double alpha1, double alpha2,
                           const analytic::QuadrantPoint& at);

}  // namespace sampling
}  // namespace fprf

#endif

#ifndef FPRF_COMPOUND_HPP
#define FPRF_COMPOUND_HPP

#include <complex>
#include <functional>
#include <vector>

#include "fprf/analytic.hpp"
#include "fprf/gpp.hpp"
#include "fprf/rng.hpp"

namespace fprf {
namespace compound {

// Discretized law on a uniform grid with the void-probability atom kept
// separately (never smeared into the grid).
struct GridDistribution {
    double origin = 0.0;
    double step = 0.0;
    std::vector<double> masses;   // density values (is_cdf false) or cdf values
    double atom_at_zero = 0.0;
    bool is_cdf = false;

    double total_mass() const;        // atom + step * sum(masses)
    double cdf_at(double y) const;    // valid for density grids too
    void validate_density() const;    // nonnegative, mass near 1
};

// Exact cell-mass discretization of a jump cdf onto [origin, origin+n*step].
GridDistribution discretize_cdf(const std::function<double(double)>& Fz, double origin,
                                double step, std::size_t n);

struct CfprfResult {
    GridDistribution density;
    GridDistribution cdf;
    int folds_used = 0;
};

// Density/cdf of the compound field: atom = pmf(0), density =
// sum_{k>=1} pmf(k) f_Z^{*k}, truncated where the count tail < eps_tail.
CfprfResult cfprf_distribution(const analytic::FieldParams& p,
                               const GridDistribution& jumps,
                               const analytic::QuadrantPoint& at, double eps_tail,
                               const SeriesControl& ctl = {});

double sample_cfprf(const analytic::FieldParams& p,
                    const std::function<double(RngStream&)>& jump_sampler,
                    const analytic::QuadrantPoint& at, RngStream& s);

// Theorem-style compound cdf for an arbitrary count law.
double generic_compound_cdf(const std::function<double(int)>& pmf_provider,
                            const GridDistribution& jumps, double y, double eps_tail);

// E^gamma_{alpha,1}(-(1-phi(u)) lambda |B|^alpha) with complex phi(u).
std::complex<double> gen_compound_cf(const gpp::GppParams& p, double measure,
                                     std::complex<double> phi_u,
                                     const SeriesControl& ctl = {});

}  // namespace compound
}  // namespace fprf

#endif

#ifndef FPRF_MOTION_HPP
#define FPRF_MOTION_HPP

#include <optional>

#include "fprf/rng.hpp"
#include "fprf/series.hpp"

namespace fprf {
namespace motion {

struct MotionParams {
    double lambda;  // switch rate
    double v;       // speed
    double t;       // horizon

    void validate() const {
        if (!(lambda > 0.0) || !(v > 0.0) || !(t >= 0.0))
            throw std::domain_error("MotionParams: lambda>0, v>0, t>=0");
    }
};

struct PlanarSample {
    double x = 0.0, y = 0.0;
    long switches = 0;
};

struct TailNotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Characteristic function of the telegraph position; evaluated through the
// complex square root of eta^2 v^2 - lambda^2 so both oscillatory and
// hyperbolic regimes come out of one expression.  Value 1 at eta = 0.
double linear_cf(const MotionParams& m, double eta);

// Same motion on the psi_{alpha,gamma} clock: a two-sided combination of
// generalized Mittag-Leffler functions, complex-safe with real-part return.
double linear_cf_timechanged(double alpha, double gamma, const MotionParams& m,
                             double eta, const SeriesControl& ctl = {});

// Telegraph path at the horizon (or at an inverse-stable random time).
struct LinearSample {
    double x = 0.0;
    long switches = 0;
};
LinearSample simulate_linear_sample(const MotionParams& m,
                                    std::optional<double> timechange_nu, RngStream& s);
double simulate_linear(const MotionParams& m, std::optional<double> timechange_nu,
                       RngStream& s);

// Planar motion conditional laws, k direction changes by the horizon.
double planar_cond_cf(int k, const MotionParams& m, double delta_norm);

// k = 0 is a singular uniform law on the circle of radius v t; the law
// type keeps that case out of the density evaluator.
struct DiskLaw {
    bool is_circle_atom;
    double circle_radius;  // set when is_circle_atom
    double density;        // set otherwise
};
DiskLaw planar_cond_law(int k, const MotionParams& m, double z_norm);
double planar_cond_density(int k, const MotionParams& m, double z_norm);  // k >= 1

enum class CfRoute { wright_series, beta_integral };
double frac_planar_cond_cf(double alpha, double gamma, int k, const MotionParams& m,
                           double delta_norm, CfRoute route,
                           const SeriesControl& ctl = {});

// Density of the psi_{alpha,gamma}(t) time change at u (Wright kernel form;
// arcsine form at alpha = 1 with gamma < 1; degenerate at alpha = gamma = 1).
double psi_time_density(double alpha, double gamma, double t, double u);

// Conditional planar density of the time-changed motion at radius z_norm,
// computed by mixing the fixed-time disk law over the psi time density.
// Singular at z_norm = 0 for fractional orders (the small-time mass piles
// up at the origin); require z_norm > 0.
double frac_planar_cond_density(double alpha, double gamma, int k,
                                const MotionParams& m, double z_norm,
                                const SeriesControl& ctl = {});

// Direct Hankel inversion of the conditional characteristic function:
// panels between consecutive J0 zeros, Wynn-accelerated.  Converges only
// while the Wright series stays above its noise floor; throws
// TailNotConverged otherwise.  Kept as the cross-check route.
double hankel_radial_density(double alpha, double gamma, int k, const MotionParams& m,
                             double z_norm, double tol = 1e-6);

enum class PlanarClock { none, reflecting_bm };
PlanarSample simulate_planar(const MotionParams& m, PlanarClock clock, RngStream& s);

// Exact conditional path: given k switches by the horizon, epochs are
// order statistics of k uniforms.
PlanarSample simulate_planar_conditional(const MotionParams& m, int k, RngStream& s);

}  // namespace motion
}  // namespace fprf

#endif

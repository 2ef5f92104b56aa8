#ifndef FPRF_QUADRATURE_HPP
#define FPRF_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace fprf {
namespace quadrature {

struct Rule {
    std::vector<double> nodes;    // on (-1,1)
    std::vector<double> weights;
};

// Gauss-Legendre rule of order n (computed once, cached).
const Rule& gauss_legendre(int n);

// integral of f over [a,b] with an n-point GL rule.
double integrate(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive panel doubling on [a,b] until successive estimates differ by
// less than tol (absolute + relative); throws on failure to settle.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_doublings = 12, int base_n = 32);

// integral_0^1 u^{p-1} (1-u)^{q-1} g(u) du with the endpoint singularities
// absorbed by the u = sin^2(theta) substitution (needs p,q >= 1/2).
double beta_weighted(const std::function<double(double)>& g, double p, double q, int n);

// Half-open oscillatory integral: sum of panel integrals f over
// [breaks[i], breaks[i+1]] accelerated with Wynn's epsilon algorithm.
// Returns the accelerated limit; sets *converged.
double oscillatory_panels(const std::function<double(double)>& f,
                          const std::vector<double>& breaks, double tol,
                          bool* converged, int n_per_panel = 24);

// Wynn epsilon acceleration of a sequence of partial sums.
double wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace quadrature
}  // namespace fprf

#endif

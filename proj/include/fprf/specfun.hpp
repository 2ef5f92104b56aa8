#ifndef FPRF_SPECFUN_HPP
#define FPRF_SPECFUN_HPP

#include <complex>
#include <utility>
#include <vector>

#include "fprf/series.hpp"

namespace fprf {
namespace specfun {

// log |Gamma(x)| and the sign of Gamma(x); reflection below 0.5.
// Throws std::domain_error at the poles x = 0, -1, -2, ...
struct LogGamma {
    double log_magnitude;
    int sign;
};
LogGamma log_gamma(double x);

// Incomplete beta B(x;a,b) = int_0^x w^{a-1}(1-w)^{b-1} dw, 0 < x <= 1.
double inc_beta(double x, double alpha, double beta);

// Regularized I_x(a,b) = B(x;a,b)/B(a,b), monotone in x, I_1 = 1.
double reg_inc_beta(double x, double alpha, double beta);

// Generalized Wright series sum_n prod Gamma(a_i+n*alpha_i) x^n /
// (prod Gamma(b_j+n*beta_j) n!).  Terms whose numerator Gamma sits on a
// pole contribute zero; a pole in a denominator Gamma likewise zeroes the
// term (1/Gamma(pole) = 0).
struct WrightParams {
    std::vector<std::pair<double, double>> upper;  // (a_i, alpha_i)
    std::vector<std::pair<double, double>> lower;  // (b_j, beta_j)
};

// Convergence classification: delta = sum(beta_j) - sum(alpha_i) + 1.
// delta > 0: entire; delta == 0: radius prod|beta|^beta / prod|alpha|^alpha,
// series used only for |x| < 0.9*radius; delta < 0: diverges for x != 0.
struct WrightRegime {
    double delta;
    double radius;  // +inf when delta>0, 0 when delta<0
    bool usable(double x) const;
};
WrightRegime classify_wright(const WrightParams& p);

EvalReport gen_wright(const WrightParams& p, double x, const SeriesControl& ctl = {});

// Wright function W_{beta,b}(x) = sum_n x^n / (Gamma(n+1) Gamma(n*beta+b)),
// entire for beta > -1.
EvalReport wright_w(double beta, double b, double x, const SeriesControl& ctl = {});

// Precomputed-coefficient evaluator for W_{beta,b} along a quadrature axis.
// eval() clamps results below the accumulated noise floor to zero, which is
// what makes the far tails of the inverse-stable kernels safe to integrate.
class WrightTable {
public:
    WrightTable(double beta, double b, std::size_t max_terms = 4000);
    double eval(double x) const;  // noise-clamped value
    double eval(double x, double* noise) const;

private:
    std::vector<__float128> coeff_;
};

// Generalized Mittag-Leffler E^gamma_{alpha,beta}(x) =
// sum_n (gamma)_n x^n / (Gamma(n*alpha+beta) n!), alpha,beta,gamma > 0.
// Working range is cancellation-limited for x << 0: roughly |x|^(1/alpha)
// up to ~70 with the quad accumulator (alpha=1: |x|<=50 comfortably).
EvalReport mittag_leffler(double alpha, double beta, double gamma, double x,
                          const SeriesControl& ctl = {});

// Complex-argument entry point (compound characteristic functions only).
std::complex<double> mittag_leffler_complex(double alpha, double beta, double gamma,
                                            std::complex<double> z,
                                            const SeriesControl& ctl = {});

// Airy Ai by Maclaurin series; working range |x| <= 20, enforced.
double airy_ai(double x);

// Bessel J_order by ascending series; order >= 0, 0 <= x <= 60, enforced.
double bessel_j(double order, double x);

}  // namespace specfun
}  // namespace fprf

#endif

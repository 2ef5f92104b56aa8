#ifndef FPRF_STATS_HPP
#define FPRF_STATS_HPP

#include <vector>

namespace fprf {
namespace stats {

struct Summary {
    double mean;
    double variance;  // unbiased
    double se_mean;
    std::size_t n;
};
Summary summarize(const std::vector<double>& xs);

// Regularized upper incomplete gamma Q(a,x); chi-square tail is
// Q(df/2, x/2).
double gamma_q(double a, double x);
double chi_square_tail(double statistic, int df);

// Pearson chi-square p-value of observed counts against expected counts.
double chi_square_pvalue(const std::vector<double>& observed,
                         const std::vector<double>& expected);

// Two-sample Kolmogorov-Smirnov asymptotic p-value.
double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b);

}  // namespace stats
}  // namespace fprf

#endif

#include "fprf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fprf/series.hpp"

namespace fprf {
namespace stats {

Summary summarize(const std::vector<double>& xs) {
    if (xs.empty()) throw std::domain_error("summarize: empty sample");
    KahanSum s;
    for (double x : xs) s.add(x);
    double mean = s.value() / xs.size();
    KahanSum ss;
    for (double x : xs) ss.add((x - mean) * (x - mean));
    double var = xs.size() > 1 ? ss.value() / (xs.size() - 1) : 0.0;
    return {mean, var, std::sqrt(var / xs.size()), xs.size()};
}

namespace {

double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_p_series: no convergence");
}

double gamma_q_cf(double a, double x) {
    const double kFpMin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("gamma_q_cf: no convergence");
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: a>0, x>=0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_tail(double statistic, int df) {
    if (df < 1) throw std::domain_error("chi_square_tail: df >= 1");
    return gamma_q(0.5 * df, 0.5 * statistic);
}

double chi_square_pvalue(const std::vector<double>& observed,
                         const std::vector<double>& expected) {
    if (observed.size() != expected.size() || observed.size() < 2)
        throw std::domain_error("chi_square_pvalue: mismatched or tiny bins");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (!(expected[i] > 0.0))
            throw std::domain_error("chi_square_pvalue: expected counts must be positive");
        double d = observed[i] - expected[i];
        stat += d * d / expected[i];
    }
    return chi_square_tail(stat, static_cast<int>(observed.size()) - 1);
}

double ks_two_sample_pvalue(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::domain_error("ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    double ne = static_cast<double>(a.size()) * b.size() / (a.size() + b.size());
    double lam = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * ((k & 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lam * lam);
        sum += term;
        if (std::fabs(term) < 1e-12) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace stats
}  // namespace fprf

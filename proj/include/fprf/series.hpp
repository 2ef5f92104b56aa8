#ifndef FPRF_SERIES_HPP
#define FPRF_SERIES_HPP

#include <cmath>
#include <cstddef>
#include <quadmath.h>
#include <stdexcept>

namespace fprf {

// All transcendental series in this library are truncated sums; these two
// types carry the truncation contract and the evaluation diagnostics.

struct SeriesControl {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_terms = 10000;

    void validate() const {
        if (!(abs_tol > 0) || !(rel_tol >= 0) || max_terms < 16)
            throw std::domain_error("SeriesControl: abs_tol>0, rel_tol>=0, max_terms>=16 required");
    }
};

enum class Regime { series, quadrature, closed_form };

struct EvalReport {
    double value = 0.0;
    std::size_t terms_used = 0;
    double error_estimate = 0.0;   // upper bound on last included term / noise floor
    Regime regime = Regime::series;
    bool precision_loss = false;   // largest intermediate term dwarfed the result
};

struct SeriesBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergentSeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Neumaier-compensated accumulator over __float128.  The alternating series
// here (Wright and Mittag-Leffler kernels at negative arguments) cancel far
// below double precision; quad accumulation plus an explicit noise floor
// keeps the results honest.
class QuadSum {
public:
    void add(__float128 x) {
        __float128 t = sum_ + x;
        if (fabsq(sum_) >= fabsq(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        __float128 ax = fabsq(x);
        if (ax > max_abs_) max_abs_ = ax;
        ++count_;
    }
    __float128 total() const { return sum_ + comp_; }
    double value() const { return static_cast<double>(total()); }
    double max_abs_term() const { return static_cast<double>(max_abs_); }
    std::size_t count() const { return count_; }
    // Round-off accumulated from the quad-precision terms themselves.  The
    // safety factor covers correlated cancellation that beats the sqrt(n)
    // model; callers that clamp noise to zero should pass a generous one.
    double noise_floor(double safety = 1.0) const {
        const double eps = 1.93e-34;  // FLT128_EPSILON
        double n = count_ ? std::sqrt(static_cast<double>(count_)) : 1.0;
        return max_abs_term() * eps * (n < 4.0 ? 4.0 : n) * safety;
    }

private:
    __float128 sum_ = 0;
    __float128 comp_ = 0;
    __float128 max_abs_ = 0;
    std::size_t count_ = 0;
};

// Double-precision Neumaier accumulator for quadrature sums.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace fprf

#endif

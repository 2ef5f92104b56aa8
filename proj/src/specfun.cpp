#include "fprf/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fprf {
namespace specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
const __float128 kPiQ = 3.14159265358979323846264338327950288Q;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Signed log-gamma in quad precision.  lgammaq handles x > 0; negative
// arguments go through the reflection formula with an explicit sign.
// Returns false when x is a pole (the caller decides what a pole means).
bool log_gamma_q(__float128 x, __float128& logmag, int& sign) {
    if (x > 0.0Q) {
        logmag = lgammaq(x);
        sign = 1;
        return true;
    }
    if (x == floorq(x)) return false;  // pole
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    __float128 s = sinq(kPiQ * x);
    logmag = logq(kPiQ) - logq(fabsq(s)) - lgammaq(1.0Q - x);
    sign = s > 0.0Q ? 1 : -1;
    return true;
}

// Continued fraction for the regularized incomplete beta (Lentz).
double betacf(double a, double b, double x) {
    const int kMaxIter = 300;
    const double kEps = std::numeric_limits<double>::epsilon();
    const double kFpMin = std::numeric_limits<double>::min() / kEps;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps) return h;
    }
    throw std::runtime_error("inc_beta: continued fraction failed to converge");
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

}  // namespace

LogGamma log_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("log_gamma: pole at non-positive integer");
    __float128 lm;
    int sign;
    log_gamma_q(static_cast<__float128>(x), lm, sign);
    return {static_cast<double>(lm), sign};
}

double reg_inc_beta(double x, double alpha, double beta) {
    if (!(x > 0.0 && x <= 1.0) || !(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("reg_inc_beta: need 0<x<=1, alpha>0, beta>0");
    if (x == 1.0) return 1.0;
    double front = std::exp(alpha * std::log(x) + beta * std::log1p(-x) -
                            log_beta(alpha, beta));
    // Symmetry keeps the continued fraction in its fast region.
    if (x < (alpha + 1.0) / (alpha + beta + 2.0))
        return front * betacf(alpha, beta, x) / alpha;
    return 1.0 - front * betacf(beta, alpha, 1.0 - x) / beta;
}

double inc_beta(double x, double alpha, double beta) {
    if (!(x > 0.0 && x <= 1.0) || !(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("inc_beta: need 0<x<=1, alpha>0, beta>0");
    double complete = std::exp(log_beta(alpha, beta));
    if (x == 1.0) return complete;
    return complete * reg_inc_beta(x, alpha, beta);
}

bool WrightRegime::usable(double x) const {
    if (delta > 1e-9) return true;
    if (delta < -1e-9) return x == 0.0;
    return std::fabs(x) < 0.9 * radius;
}

WrightRegime classify_wright(const WrightParams& p) {
    double delta = 1.0;
    double logradius = 0.0;
    for (const auto& [a, al] : p.upper) {
        (void)a;
        delta -= al;
        logradius -= al * std::log(std::fabs(al));
    }
    for (const auto& [b, be] : p.lower) {
        (void)b;
        delta += be;
        logradius += be * std::log(std::fabs(be));
    }
    WrightRegime r;
    r.delta = delta;
    if (delta > 1e-9)
        r.radius = std::numeric_limits<double>::infinity();
    else if (delta < -1e-9)
        r.radius = 0.0;
    else
        r.radius = std::exp(logradius);
    return r;
}

EvalReport gen_wright(const WrightParams& p, double x, const SeriesControl& ctl) {
    ctl.validate();
    if (p.lower.empty())
        throw std::domain_error("gen_wright: at least one lower parameter pair required");
    for (const auto& [a, al] : p.upper) {
        (void)a;
        if (al == 0.0) throw std::domain_error("gen_wright: alpha_i must be nonzero");
    }
    for (const auto& [b, be] : p.lower) {
        (void)b;
        if (be == 0.0) throw std::domain_error("gen_wright: beta_j must be nonzero");
    }
    WrightRegime regime = classify_wright(p);
    if (!regime.usable(x))
        throw DivergentSeriesError("gen_wright: series divergent at this argument");

    QuadSum acc;
    const __float128 xq = static_cast<__float128>(x);
    std::size_t small_streak = 0;
    std::size_t n = 0;
    bool converged = false;
    double last_nonzero = std::numeric_limits<double>::infinity();
    for (; n < ctl.max_terms; ++n) {
        __float128 logmag = 0;
        int sign = 1;
        bool zero_term = false;
        for (const auto& [a, al] : p.upper) {
            __float128 lg;
            int s;
            if (!log_gamma_q(a + static_cast<__float128>(n) * al, lg, s)) {
                zero_term = true;  // numerator pole: term contributes zero
                break;
            }
            logmag += lg;
            sign *= s;
        }
        __float128 term = 0;
        if (!zero_term) {
            bool denom_pole = false;
            for (const auto& [b, be] : p.lower) {
                __float128 lg;
                int s;
                if (!log_gamma_q(b + static_cast<__float128>(n) * be, lg, s)) {
                    denom_pole = true;  // 1/Gamma(pole) = 0
                    break;
                }
                logmag -= lg;
                sign *= s;
            }
            if (!denom_pole && x != 0.0) {
                logmag += static_cast<__float128>(n) * logq(fabsq(xq));
                if (x < 0.0 && (n & 1)) sign = -sign;
                term = sign * expq(logmag - lgammaq(static_cast<__float128>(n) + 1.0Q));
            } else if (!denom_pole && n == 0) {
                term = sign * expq(logmag);
            }
        }
        acc.add(term);
        if (x == 0.0 && n == 0) {
            converged = true;
            ++n;
            break;
        }
        double mag = std::fabs(static_cast<double>(term));
        double thresh = ctl.abs_tol + ctl.rel_tol * std::fabs(acc.value());
        // Pole-zeroed terms extend a streak; growth toward the hump resets it.
        bool decaying = mag == 0.0 || mag <= last_nonzero;
        small_streak = (mag < thresh && decaying) ? small_streak + 1 : 0;
        if (mag > 0.0) last_nonzero = mag;
        if (small_streak >= 3) {
            converged = true;
            ++n;
            break;
        }
    }
    if (!converged)
        throw SeriesBudgetError("gen_wright: term budget exhausted before tolerance");

    EvalReport rep;
    rep.value = acc.value();
    rep.terms_used = n;
    rep.error_estimate = std::max(acc.noise_floor(), ctl.abs_tol);
    rep.regime = Regime::series;
    rep.precision_loss = acc.max_abs_term() > 1e12 * std::max(std::fabs(rep.value), 1e-300);
    return rep;
}

EvalReport wright_w(double beta, double b, double x, const SeriesControl& ctl) {
    if (!(beta > -1.0))
        throw std::domain_error("wright_w: entire-function regime needs beta > -1");
    ctl.validate();
    // 0Psi1 with beta = 0 permitted (constant Gamma(b) denominator), so the
    // series runs here rather than through gen_wright's nonzero contract.
    QuadSum acc;
    const __float128 xq = static_cast<__float128>(x);
    std::size_t small_streak = 0;
    std::size_t n = 0;
    bool converged = false;
    double last_nonzero = std::numeric_limits<double>::infinity();
    for (; n < ctl.max_terms; ++n) {
        __float128 lg;
        int sign;
        __float128 term = 0;
        if (log_gamma_q(static_cast<__float128>(b) + static_cast<__float128>(n) * beta,
                        lg, sign)) {
            if (x != 0.0) {
                term = sign * expq(static_cast<__float128>(n) * logq(fabsq(xq)) - lg -
                                   lgammaq(static_cast<__float128>(n) + 1.0Q));
                if (x < 0.0 && (n & 1)) term = -term;
            } else if (n == 0) {
                term = sign * expq(-lg);
            }
        }
        acc.add(term);
        if (x == 0.0) {
            converged = true;
            ++n;
            break;
        }
        double mag = std::fabs(static_cast<double>(term));
        double thresh = ctl.abs_tol + ctl.rel_tol * std::fabs(acc.value());
        bool decaying = mag == 0.0 || mag <= last_nonzero;
        small_streak = (mag < thresh && decaying) ? small_streak + 1 : 0;
        if (mag > 0.0) last_nonzero = mag;
        if (small_streak >= 3) {
            converged = true;
            ++n;
            break;
        }
    }
    if (!converged) throw SeriesBudgetError("wright_w: term budget exhausted");
    EvalReport rep;
    rep.value = acc.value();
    rep.terms_used = n;
    rep.error_estimate = std::max(acc.noise_floor(), ctl.abs_tol);
    rep.regime = Regime::series;
    rep.precision_loss = acc.max_abs_term() > 1e12 * std::max(std::fabs(rep.value), 1e-300);
    return rep;
}

WrightTable::WrightTable(double beta, double b, std::size_t max_terms) {
    coeff_.reserve(max_terms);
    for (std::size_t n = 0; n < max_terms; ++n) {
        __float128 lg;
        int sign;
        __float128 arg = static_cast<__float128>(b) + static_cast<__float128>(n) * beta;
        if (!log_gamma_q(arg, lg, sign)) {
            coeff_.push_back(0);
            continue;
        }
        coeff_.push_back(sign * expq(-lg - lgammaq(static_cast<__float128>(n) + 1.0Q)));
    }
}

double WrightTable::eval(double x, double* noise) const {
    QuadSum acc;
    __float128 pw = 1;
    const __float128 xq = static_cast<__float128>(x);
    std::size_t small_streak = 0;
    bool converged = false;
    for (std::size_t n = 0; n < coeff_.size(); ++n) {
        __float128 term = coeff_[n] * pw;
        if (fabsq(term) > 1e120Q) {
            // Far outside the usable range: the true value is subnormal
            // while the terms explode, so the clamp below must win.
            if (noise) *noise = 1e120;
            return 0.0;
        }
        acc.add(term);
        pw *= xq;
        double mag = std::fabs(static_cast<double>(term));
        small_streak = mag < 1e-30 * (1.0 + std::fabs(acc.value())) ? small_streak + 1 : 0;
        if (small_streak >= 4 && n > 8) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        // Ran off the coefficient table with live terms: pure noise.
        if (noise) *noise = acc.max_abs_term();
        return 0.0;
    }
    double nf = acc.noise_floor(4096.0);
    if (noise) *noise = nf;
    double v = acc.value();
    // Below the noise floor the sign is meaningless; report zero.
    if (std::fabs(v) < 8.0 * nf) return 0.0;
    return v;
}

double WrightTable::eval(double x) const { return eval(x, nullptr); }

EvalReport mittag_leffler(double alpha, double beta, double gamma, double x,
                          const SeriesControl& ctl) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
        throw std::domain_error("mittag_leffler: alpha, beta, gamma must be positive");
    ctl.validate();
    QuadSum acc;
    const __float128 xq = static_cast<__float128>(x);
    const __float128 lgam = lgammaq(static_cast<__float128>(gamma));
    std::size_t small_streak = 0;
    std::size_t n = 0;
    bool converged = false;
    double last_mag = std::numeric_limits<double>::infinity();
    for (; n < ctl.max_terms; ++n) {
        __float128 nq = static_cast<__float128>(n);
        __float128 logmag = lgammaq(static_cast<__float128>(gamma) + nq) - lgam -
                            lgammaq(nq * alpha + beta) - lgammaq(nq + 1.0Q);
        __float128 term;
        if (x == 0.0) {
            term = n == 0 ? expq(logmag) : 0.0Q;
        } else {
            logmag += nq * logq(fabsq(xq));
            term = expq(logmag);
            if (x < 0.0 && (n & 1)) term = -term;
        }
        acc.add(term);
        if (x == 0.0) {
            converged = true;
            ++n;
            break;
        }
        double mag = std::fabs(static_cast<double>(term));
        double thresh = ctl.abs_tol + ctl.rel_tol * std::fabs(acc.value());
        small_streak = (mag < thresh && mag <= last_mag) ? small_streak + 1 : 0;
        last_mag = mag;
        if (small_streak >= 3) {
            converged = true;
            ++n;
            break;
        }
    }
    if (!converged)
        throw SeriesBudgetError("mittag_leffler: term budget exhausted");
    EvalReport rep;
    rep.value = acc.value();
    rep.terms_used = n;
    rep.error_estimate = std::max(acc.noise_floor(), ctl.abs_tol);
    rep.regime = Regime::series;
    rep.precision_loss = acc.max_abs_term() > 1e12 * std::max(std::fabs(rep.value), 1e-300);
    return rep;
}

std::complex<double> mittag_leffler_complex(double alpha, double beta, double gamma,
                                            std::complex<double> z,
                                            const SeriesControl& ctl) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
        throw std::domain_error("mittag_leffler_complex: parameters must be positive");
    ctl.validate();
    KahanSum re, im;
    std::complex<double> pw(1.0, 0.0);
    std::size_t small_streak = 0;
    for (std::size_t n = 0; n < ctl.max_terms; ++n) {
        double logc = std::lgamma(gamma + n) - std::lgamma(gamma) -
                      std::lgamma(n * alpha + beta) - std::lgamma(n + 1.0);
        std::complex<double> term = std::exp(logc) * pw;
        re.add(term.real());
        im.add(term.imag());
        pw *= z;
        double mag = std::abs(term);
        double cur = std::hypot(re.value(), im.value());
        small_streak = mag < ctl.abs_tol + ctl.rel_tol * cur ? small_streak + 1 : 0;
        if (small_streak >= 3) return {re.value(), im.value()};
    }
    throw SeriesBudgetError("mittag_leffler_complex: term budget exhausted");
}

double airy_ai(double x) {
    if (std::fabs(x) > 20.0)
        throw std::domain_error("airy_ai: |x| <= 20 working range");
    // Ai(x) = c1 f(x) + c2 g(x), f = sum 3^k (1/3)_k x^{3k}/(3k)!,
    // g = sum 3^k (2/3)_k x^{3k+1}/(3k+1)!
    const __float128 c1 = 0.355028053887817239260063186004183177Q;   // 3^{-2/3}/Gamma(2/3)
    const __float128 c2 = -0.258819403792806798405183560189203963Q;  // -3^{-1/3}/Gamma(1/3)
    QuadSum f, g;
    const __float128 x3 = static_cast<__float128>(x) * x * x;
    __float128 tf = 1, tg = static_cast<__float128>(x);
    for (int k = 0; k < 400; ++k) {
        f.add(tf);
        g.add(tg);
        __float128 k3 = 3.0Q * (k + 1);
        tf *= x3 / ((k3 - 1.0Q) * k3);
        tg *= x3 / (k3 * (k3 + 1.0Q));
        if (fabsq(tf) < 1e-40Q && fabsq(tg) < 1e-40Q && k > 4) break;
    }
    return static_cast<double>(c1 * f.total() + c2 * g.total());
}

double bessel_j(double order, double x) {
    if (!(order >= 0.0) || !(x >= 0.0))
        throw std::domain_error("bessel_j: order >= 0 and x >= 0 required");
    if (x > 60.0)
        throw std::domain_error("bessel_j: x <= 60 working range");
    if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
    QuadSum acc;
    const __float128 xh = static_cast<__float128>(x) / 2.0Q;
    const __float128 lxh = logq(xh);
    for (int n = 0; n < 400; ++n) {
        __float128 nq = n;
        __float128 logmag = (2.0Q * nq + order) * lxh - lgammaq(nq + 1.0Q) -
                            lgammaq(nq + order + 1.0Q);
        __float128 term = expq(logmag);
        if (n & 1) term = -term;
        acc.add(term);
        if (fabsq(term) < 1e-36Q * (1.0Q + fabsq(acc.total())) && n > 4) break;
    }
    return acc.value();
}

}  // namespace specfun
}  // namespace fprf

#include "fprf/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace fprf {
namespace sampling {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

std::size_t PointPattern::count_below(double x1, double x2) const {
    std::size_t n = 0;
    for (const auto& p : points)
        if (p[0] <= x1 && p[1] <= x2) ++n;
    return n;
}

double sample_stable_unit(double nu, RngStream& s) {
    if (!(nu > 0.0 && nu < 1.0))
        throw std::domain_error("sample_stable_unit: nu in (0,1)");
    double u = kPi * s.u01_open();
    double e = s.exponential(1.0);
    double a = std::sin(nu * u) / std::pow(std::sin(u), 1.0 / nu);
    double b = std::sin((1.0 - nu) * u) / e;
    return a * std::pow(b, (1.0 - nu) / nu);
}

double sample_inverse_stable(double nu, double t, RngStream& s) {
    if (!(nu > 0.0 && nu <= 1.0))
        throw std::domain_error("sample_inverse_stable: nu in (0,1]");
    if (!(t >= 0.0)) throw std::domain_error("sample_inverse_stable: t >= 0");
    if (nu == 1.0) return t;
    if (t == 0.0) return 0.0;
    return std::pow(t / sample_stable_unit(nu, s), nu);
}

std::array<double, 2> sample_inverse_stable_pair(double nu, double tau, double t,
                                                 RngStream& s, int steps) {
    if (!(nu > 0.0 && nu < 1.0))
        throw std::domain_error("sample_inverse_stable_pair: nu in (0,1)");
    if (!(tau >= 0.0 && tau <= t))
        throw std::domain_error("sample_inverse_stable_pair: 0 <= tau <= t");
    // Walk S along an s-grid; L(level) is the grid measure below the
    // first crossing.  Step chosen so a typical path crosses t around
    // step ~ steps/2; upward discretization bias is O(delta).
    double delta = std::pow(t, nu) / (0.5 * steps);
    double d1nu = std::pow(delta, 1.0 / nu);
    double S = 0.0;
    double Ltau = -1.0, Lt = -1.0;
    double sgrid = 0.0;
    for (long j = 0; j < 64L * steps; ++j) {
        S += d1nu * sample_stable_unit(nu, s);
        sgrid += delta;
        if (Ltau < 0.0 && S > tau) Ltau = sgrid - delta;
        if (S > t) {
            Lt = sgrid - delta;
            break;
        }
    }
    if (Lt < 0.0)
        throw std::runtime_error("sample_inverse_stable_pair: path failed to cross level");
    if (Ltau < 0.0) Ltau = Lt;
    return {Ltau, Lt};
}

double sample_reflecting_bm(double t, RngStream& s) {
    if (!(t >= 0.0)) throw std::domain_error("sample_reflecting_bm: t >= 0");
    if (t == 0.0) return 0.0;
    return std::fabs(s.normal(0.0, std::sqrt(2.0 * t)));
}

PointPattern sample_prf(double lambda, double t1, double t2, RngStream& s) {
    if (!(lambda > 0.0)) throw std::domain_error("sample_prf: lambda > 0");
    if (!(t1 >= 0.0 && t2 >= 0.0)) throw std::domain_error("sample_prf: bounds >= 0");
    PointPattern pat;
    pat.t1 = t1;
    pat.t2 = t2;
    double area = t1 * t2;
    if (area == 0.0) return pat;
    long n = s.poisson(lambda * area);
    pat.points.reserve(n);
    for (long i = 0; i < n; ++i)
        pat.points.push_back({s.uniform(0.0, t1), s.uniform(0.0, t2)});
    return pat;
}

long sample_fprf(const analytic::FieldParams& p, const analytic::QuadrantPoint& at,
                 RngStream& s) {
    p.validate();
    at.validate();
    double u1 = sample_inverse_stable(p.nu1, at.t1, s);
    double u2 = sample_inverse_stable(p.nu2, at.t2, s);
    return s.poisson(p.lambda * u1 * u2);
}

GppSampler::GppSampler(const gpp::GppParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw std::domain_error("GppSampler: t >= 0");
    double cum = 0.0;
    for (int k = 0; k < 100000; ++k) {
        cum += gpp::gpp_pmf(p, t, k);
        cdf_.push_back(std::min(cum, 1.0));
        if (1.0 - cum < 1e-12) break;
    }
}

long GppSampler::draw(RngStream& s) const {
    double u = s.u01();
    // cdf_ is short at desk scale; linear scan is fine and branch-predictable.
    for (std::size_t k = 0; k < cdf_.size(); ++k)
        if (u <= cdf_[k]) return static_cast<long>(k);
    return static_cast<long>(cdf_.size()) - 1;
}

long sample_gpp(const gpp::GppParams& p, double t, RngStream& s) {
    return GppSampler(p, t).draw(s);
}

EmpiricalPmf empirical_pmf(const std::vector<long>& samples) {
    if (samples.empty()) throw std::domain_error("empirical_pmf: empty sample list");
    long kmax = 0;
    for (long v : samples) {
        if (v < 0) throw std::domain_error("empirical_pmf: counts must be >= 0");
        kmax = std::max(kmax, v);
    }
    EmpiricalPmf e;
    e.frequencies.assign(kmax + 1, 0.0);
    for (long v : samples) e.frequencies[v] += 1.0;
    double n = static_cast<double>(samples.size());
    e.standard_errors.resize(kmax + 1);
    for (std::size_t k = 0; k < e.frequencies.size(); ++k) {
        double f = e.frequencies[k] / n;
        e.frequencies[k] = f;
        e.standard_errors[k] = std::sqrt(f * (1.0 - f) / n);
    }
    return e;
}

double frac_integral_of_field(const PointPattern& pat, double alpha1, double alpha2,
                              const analytic::QuadrantPoint& at, int panels) {
    if (!(alpha1 > 0.0 && alpha2 > 0.0))
        throw std::domain_error("frac_integral_of_field: alpha > 0");
    if (panels < 64) throw std::domain_error("frac_integral_of_field: panels >= 64");
    if (at.t1 > pat.t1 || at.t2 > pat.t2)
        throw std::domain_error("frac_integral_of_field: point outside pattern bounds");
    if (at.t1 == 0.0 || at.t2 == 0.0 || pat.points.empty()) return 0.0;

    // Product integration: the counts are sampled at panel midpoints while
    // the singular (t - tau)^{alpha-1} weights integrate in closed form per
    // panel, so the edge singularity costs nothing.
    double norm = 1.0 / (std::tgamma(alpha1 + 1.0) * std::tgamma(alpha2 + 1.0));
    double prev = 0.0;
    int small_changes = 0;  // one small change can be grid aliasing
    const int cap = std::max(8192, 8 * panels);
    for (int N = panels; N <= cap; N *= 2) {
        double h1 = at.t1 / N, h2 = at.t2 / N;
        std::vector<double> w1(N), w2(N);
        for (int i = 0; i < N; ++i) {
            w1[i] = std::pow(at.t1 - i * h1, alpha1) -
                    std::pow(at.t1 - (i + 1) * h1, alpha1);
            w2[i] = std::pow(at.t2 - i * h2, alpha2) -
                    std::pow(at.t2 - (i + 1) * h2, alpha2);
        }
        KahanSum sum;
        for (int i = 0; i < N; ++i) {
            double x1 = (i + 0.5) * h1;
            for (int j = 0; j < N; ++j) {
                std::size_t c = pat.count_below(x1, (j + 0.5) * h2);
                if (c == 0) continue;
                sum.add(w1[i] * w2[j] * static_cast<double>(c));
            }
        }
        double cur = norm * sum.value();
        if (N > panels && std::fabs(cur - prev) <= 1e-4 * (std::fabs(cur) + 1e-300)) {
            if (++small_changes >= 2) return cur;
        } else {
            small_changes = 0;
        }
        prev = cur;
    }
    return prev;
}

double frac_integral_exact(const PointPattern& pat, double alpha1, double alpha2,
                           const analytic::QuadrantPoint& at) {
    KahanSum sum;
    for (const auto& pt : pat.points) {
        if (pt[0] > at.t1 || pt[1] > at.t2) continue;
        sum.add(std::pow(at.t1 - pt[0], alpha1) * std::pow(at.t2 - pt[1], alpha2));
    }
    return sum.value() / (std::tgamma(alpha1 + 1.0) * std::tgamma(alpha2 + 1.0));
}

}  // namespace sampling
}  // namespace fprf

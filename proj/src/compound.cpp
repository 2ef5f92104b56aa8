#include "fprf/compound.hpp"

#include <algorithm>
#include <cmath>

#include "fprf/sampling.hpp"
#include "fprf/specfun.hpp"

namespace fprf {
namespace compound {

namespace {

constexpr int kMaxFolds = 256;

// Discrete convolution of two cell-mass vectors (masses, not densities).
std::vector<double> convolve_masses(const std::vector<double>& a,
                                    const std::vector<double>& b, std::size_t keep) {
    std::vector<double> out(std::min(a.size() + b.size() - 1, keep), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        std::size_t jmax = std::min(b.size(), out.size() - std::min(i, out.size()));
        for (std::size_t j = 0; i + j < out.size() && j < jmax; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

double GridDistribution::total_mass() const {
    KahanSum s;
    for (double m : masses) s.add(m);
    return is_cdf ? (masses.empty() ? atom_at_zero : masses.back())
                  : atom_at_zero + step * s.value();
}

double GridDistribution::cdf_at(double y) const {
    // Cell masses live at cell midpoints; both grid kinds share that
    // convention so the two compound assembly paths agree exactly.
    if (is_cdf) {
        double pos = (y - origin) / step - 0.5;
        if (pos < 0.0) return y >= 0.0 ? atom_at_zero : 0.0;
        std::size_t idx = static_cast<std::size_t>(std::floor(pos));
        if (idx >= masses.size()) return masses.empty() ? atom_at_zero : masses.back();
        return masses[idx];
    }
    double acc = y >= 0.0 ? atom_at_zero : 0.0;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        double cell = origin + (i + 0.5) * step;
        if (cell > y) break;
        acc += step * masses[i];
    }
    return std::min(acc, 1.0);
}

void GridDistribution::validate_density() const {
    if (is_cdf) throw std::domain_error("GridDistribution: expected a density grid");
    if (!(step > 0.0)) throw std::domain_error("GridDistribution: step > 0");
    for (double m : masses)
        if (m < 0.0) throw std::domain_error("GridDistribution: negative density");
    if (std::fabs(total_mass() - 1.0) > 1e-8)
        throw std::domain_error("GridDistribution: density mass differs from 1");
}

GridDistribution discretize_cdf(const std::function<double(double)>& Fz, double origin,
                                double step, std::size_t n) {
    GridDistribution g;
    g.origin = origin;
    g.step = step;
    g.masses.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lo = origin + i * step;
        double hi = lo + step;
        g.masses[i] = std::max(Fz(hi) - Fz(lo), 0.0) / step;
    }
    return g;
}

CfprfResult cfprf_distribution(const analytic::FieldParams& p,
                               const GridDistribution& jumps,
                               const analytic::QuadrantPoint& at, double eps_tail,
                               const SeriesControl& ctl) {
    p.validate();
    at.validate();
    jumps.validate_density();
    if (!(eps_tail > 0.0 && eps_tail <= 1e-3))
        throw std::domain_error("cfprf_distribution: eps_tail in (0, 1e-3]");

    CfprfResult out;
    const std::size_t G = jumps.masses.size();

    double T = p.scaled_area(at.t1, at.t2);
    std::vector<double> pk;
    double cum = 0.0;
    if (T == 0.0) {
        cum = 1.0;
        pk.push_back(1.0);
    } else {
        for (int k = 0; cum < 1.0 - eps_tail; ++k) {
            pk.push_back(analytic::pmf(p, k, at, ctl).value);
            cum += pk.back();
            if (k > kMaxFolds)
                throw std::runtime_error(
                    "cfprf_distribution: count tail needs more folds than the grid supports");
        }
    }
    const int K = static_cast<int>(pk.size()) - 1;

    // Work in cell masses; convert back to density at the end.
    std::vector<double> base(G);
    for (std::size_t i = 0; i < G; ++i) base[i] = jumps.masses[i] * jumps.step;

    out.density.origin = jumps.origin;
    out.density.step = jumps.step;
    out.density.masses.assign(G, 0.0);
    out.density.atom_at_zero = pk[0];

    std::vector<double> fold = base;
    for (int k = 1; k <= K; ++k) {
        if (k > 1) fold = convolve_masses(fold, base, G);
        for (std::size_t i = 0; i < G; ++i) out.density.masses[i] += pk[k] * fold[i];
    }
    for (double& m : out.density.masses) m /= jumps.step;
    out.folds_used = K;

    out.cdf.origin = jumps.origin;
    out.cdf.step = jumps.step;
    out.cdf.is_cdf = true;
    out.cdf.atom_at_zero = pk[0];
    out.cdf.masses.resize(G);
    KahanSum acc;
    for (std::size_t i = 0; i < G; ++i) {
        acc.add(out.density.masses[i] * jumps.step);
        double heaviside = (jumps.origin + (i + 0.5) * jumps.step) >= 0.0 ? pk[0] : 0.0;
        out.cdf.masses[i] = std::min(heaviside + acc.value(), 1.0);
    }
    // Convolution mass pushed past the grid end would silently vanish.
    if (!out.cdf.masses.empty() && out.cdf.masses.back() < 1.0 - eps_tail - 1e-3)
        throw std::runtime_error(
            "cfprf_distribution: grid too short for the required fold count");
    return out;
}

double sample_cfprf(const analytic::FieldParams& p,
                    const std::function<double(RngStream&)>& jump_sampler,
                    const analytic::QuadrantPoint& at, RngStream& s) {
    long k = sampling::sample_fprf(p, at, s);
    KahanSum sum;
    for (long i = 0; i < k; ++i) sum.add(jump_sampler(s));
    return sum.value();
}

double generic_compound_cdf(const std::function<double(int)>& pmf_provider,
                            const GridDistribution& jumps, double y, double eps_tail) {
    jumps.validate_density();
    if (!(eps_tail > 0.0 && eps_tail <= 1e-3))
        throw std::domain_error("generic_compound_cdf: eps_tail in (0, 1e-3]");
    const std::size_t G = jumps.masses.size();
    std::vector<double> base(G);
    for (std::size_t i = 0; i < G; ++i) base[i] = jumps.masses[i] * jumps.step;

    double p0 = pmf_provider(0);
    KahanSum total;
    total.add(y >= 0.0 ? p0 : 0.0);
    double cum = p0;
    std::vector<double> fold = base;
    for (int k = 1; cum < 1.0 - eps_tail; ++k) {
        if (k > kMaxFolds)
            throw std::runtime_error(
                "generic_compound_cdf: count tail needs more folds than the grid supports");
        double pk = pmf_provider(k);
        cum += pk;
        if (k > 1) fold = convolve_masses(fold, base, G);
        // F^{*k}(y): mass of cells whose midpoint is below y.
        KahanSum Fk;
        for (std::size_t i = 0; i < G; ++i) {
            if (jumps.origin + (i + 0.5) * jumps.step > y) break;
            Fk.add(fold[i]);
        }
        total.add(pk * Fk.value());
    }
    return std::clamp(total.value(), 0.0, 1.0);
}

std::complex<double> gen_compound_cf(const gpp::GppParams& p, double measure,
                                     std::complex<double> phi_u,
                                     const SeriesControl& ctl) {
    p.validate();
    if (!(measure >= 0.0)) throw std::domain_error("gen_compound_cf: measure >= 0");
    if (std::abs(phi_u) > 1.0 + 1e-12)
        throw std::domain_error("gen_compound_cf: |phi(u)| <= 1 required");
    if (phi_u == std::complex<double>(1.0, 0.0)) return {1.0, 0.0};
    std::complex<double> arg =
        -(1.0 - phi_u) * p.lambda * std::pow(measure, p.alpha);
    return specfun::mittag_leffler_complex(p.alpha, 1.0, p.gamma, arg, ctl);
}

}  // namespace compound
}  // namespace fprf

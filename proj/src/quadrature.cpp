#include "fprf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fprf/series.hpp"

namespace fprf {
namespace quadrature {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

const Rule& gauss_legendre(int n) {
    static std::map<int, Rule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    // Newton on P_n with the Chebyshev-angle initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.weights[i] = w;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    KahanSum s;
    for (int i = 0; i < n; ++i)
        s.add(r.weights[i] * f(mid + half * r.nodes[i]));
    return half * s.value();
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, int max_doublings, int base_n) {
    int panels = 1;
    double prev = 0.0;
    for (int d = 0; d <= max_doublings; ++d) {
        KahanSum s;
        double h = (b - a) / panels;
        for (int p = 0; p < panels; ++p)
            s.add(integrate(f, a + p * h, a + (p + 1) * h, base_n));
        double cur = s.value();
        if (d > 0 && std::fabs(cur - prev) <= tol * (1.0 + std::fabs(cur)))
            return cur;
        prev = cur;
        panels *= 2;
    }
    throw std::runtime_error("integrate_adaptive: tolerance unmet after doubling limit");
}

double beta_weighted(const std::function<double(double)>& g, double p, double q, int n) {
    // u = sin^2 t: u^{p-1}(1-u)^{q-1} du = 2 sin^{2p-1} t cos^{2q-1} t dt
    auto h = [&](double t) {
        double s = std::sin(t), c = std::cos(t);
        return 2.0 * std::pow(s, 2.0 * p - 1.0) * std::pow(c, 2.0 * q - 1.0) *
               g(s * s);
    };
    return integrate(h, 0.0, kPi / 2.0, n);
}

double wynn_epsilon(const std::vector<double>& partial_sums) {
    // Rolling epsilon table; odd columns are auxiliary.  Depth is capped:
    // deep columns amplify roundoff faster than they converge.
    std::size_t n = partial_sums.size();
    if (n == 0) return 0.0;
    if (n == 1) return partial_sums[0];
    std::size_t max_col = std::min<std::size_t>(n - 1, 12);
    std::vector<double> cur = partial_sums, prev(n, 0.0);
    double best = partial_sums.back();
    for (std::size_t col = 1; col <= max_col; ++col) {
        std::vector<double> next(n - col);
        bool ok = true;
        for (std::size_t i = 0; i + col < n; ++i) {
            double diff = cur[i + 1] - cur[i];
            double inv = std::fabs(diff) > 1e-300 ? 1.0 / diff : 1e300;
            next[i] = (col == 1 ? 0.0 : prev[i + 1]) + inv;
            if (!std::isfinite(next[i])) ok = false;
        }
        if (!ok) break;
        prev = std::move(cur);
        cur = std::move(next);
        if ((col & 1) == 0 && !cur.empty()) best = cur.back();
    }
    return best;
}

double oscillatory_panels(const std::function<double(double)>& f,
                          const std::vector<double>& breaks, double tol,
                          bool* converged, int n_per_panel) {
    if (breaks.size() < 2)
        throw std::invalid_argument("oscillatory_panels: need at least one panel");
    std::vector<double> partials, accels;
    partials.reserve(breaks.size() - 1);
    double run = 0.0;
    if (converged) *converged = false;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] - breaks[i] < 1e-13) continue;
        run += integrate(f, breaks[i], breaks[i + 1], n_per_panel);
        partials.push_back(run);
        if (partials.size() < 4) continue;
        double accel = wynn_epsilon(partials);
        accels.push_back(accel);
        if (accels.size() >= 2 && partials.size() > 5 &&
            std::fabs(accel - accels[accels.size() - 2]) <
                tol * (1.0 + std::fabs(accel))) {
            if (converged) *converged = true;
            return accel;
        }
    }
    if (partials.empty()) return 0.0;
    // Out of panels: accept when the recent accelerated values have settled
    // into a band of a few tolerances.
    if (accels.size() >= 3) {
        double lo = accels.back(), hi = accels.back();
        for (std::size_t i = accels.size() - 3; i < accels.size(); ++i) {
            lo = std::min(lo, accels[i]);
            hi = std::max(hi, accels[i]);
        }
        if (hi - lo < 3.0 * tol * (1.0 + std::fabs(accels.back()))) {
            if (converged) *converged = true;
            return accels.back();
        }
    }
    return accels.empty() ? partials.back() : accels.back();
}

}  // namespace quadrature
}  // namespace fprf

#include "zetaseries/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace zetaseries::quad {

namespace {

Rule build_rule(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-17) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b, const Rule& r,
             double* abs_out = nullptr) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    CompensatedSum s;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s.add(r.weights[i] * f(mid + half * r.nodes[i]));
    if (abs_out) *abs_out = std::abs(half) * s.abs_sum();
    return half * s.value();
}

struct Adaptive {
    const std::function<double(double)>& f;
    const Rule& lo;
    const Rule& hi;
    int max_depth;
    std::int64_t evals = 0;
    CompensatedSum total;
    double err = 0.0;

    void run(double a, double b, double tol, int depth) {
        const double c = panel(f, a, b, lo);
        double mag = 0.0;
        const double h = panel(f, a, b, hi, &mag);
        evals += static_cast<std::int64_t>(lo.nodes.size() + hi.nodes.size());
        const double diff = std::abs(h - c);
        if (diff <= tol || diff <= 8.0 * kEps * mag || depth >= max_depth) {
            total.add(h);
            err += diff;
            return;
        }
        const double m = 0.5 * (a + b);
        run(a, m, 0.5 * tol, depth + 1);
        run(m, b, 0.5 * tol, depth + 1);
    }
};

}  // namespace

const Rule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, Rule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n) {
    return panel(f, a, b, gauss_legendre(n));
}

Evaluation integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth) {
    Adaptive ad{f, gauss_legendre(20), gauss_legendre(40), max_depth, 0, {}, 0.0};
    ad.run(a, b, abs_tol, 0);
    const double v = ad.total.value();
    return {v, ad.err + 8.0 * kEps * ad.total.abs_sum(), ad.evals};
}

}  // namespace zetaseries::quad

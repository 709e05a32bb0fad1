#include "maassp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>

#include "maassp/errors.hpp"

namespace maassp {

namespace {

GaussLegendre compute_gl(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dpf = n * (x * p1 - p0) / (x * x - 1.0);
                gl.nodes[i] = -x;
                gl.nodes[n - 1 - i] = x;
                double w = 2.0 / ((1.0 - x * x) * dpf * dpf);
                gl.weights[i] = w;
                gl.weights[n - 1 - i] = w;
                break;
            }
        }
    }
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, int n) {
    const GaussLegendre& gl = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < n; ++i) acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
    return acc * half;
}

double integrate_gl_real(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussLegendre& gl = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
    return acc * half;
}

QuadResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                              double a, double b, double abs_tol, double rel_tol,
                              int max_intervals) {
    struct Piece {
        double a, b, err;
        std::complex<double> value;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    auto estimate = [&](double lo, double hi) {
        std::complex<double> coarse = integrate_gl(f, lo, hi, 12);
        std::complex<double> fine = integrate_gl(f, lo, hi, 24);
        return Piece{lo, hi, std::abs(fine - coarse), fine};
    };
    std::priority_queue<Piece> heap;
    heap.push(estimate(a, b));
    std::complex<double> total = heap.top().value;
    double err = heap.top().err;
    int pieces = 1, evals = 36;
    while (err > abs_tol + rel_tol * std::abs(total) && pieces < max_intervals) {
        Piece worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Piece left = estimate(worst.a, mid);
        Piece right = estimate(mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++pieces;
        evals += 72;
    }
    if (err > 10.0 * (abs_tol + rel_tol * std::abs(total)) && pieces >= max_intervals)
        throw NumericalError("integrate_adaptive: tolerance not reached within interval budget");
    return QuadResult{total, err, evals};
}

std::vector<WeightedSample> composite_gl_plan(double a, double b, int panels, int n) {
    const GaussLegendre& gl = gauss_legendre(n);
    std::vector<WeightedSample> plan;
    plan.reserve(static_cast<std::size_t>(panels) * n);
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        double mid = lo + 0.5 * h, half = 0.5 * h;
        for (int i = 0; i < n; ++i)
            plan.push_back(WeightedSample{mid + half * gl.nodes[i], half * gl.weights[i]});
    }
    return plan;
}

}  // namespace maassp

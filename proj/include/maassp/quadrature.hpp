#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace maassp {

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1].
/// Computed once per n by Newton iteration and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int n);

/// Fixed n-point Gauss-Legendre rule on [a, b].
std::complex<double> integrate_gl(const std::function<std::complex<double>(double)>& f,
                                  double a, double b, int n);
double integrate_gl_real(const std::function<double(double)>& f, double a, double b, int n);

/// Result of an adaptive integration: value and an error estimate.
struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;
};

/// Globally adaptive bisection with an embedded GL(n)/GL(2n) estimate.
/// Tolerances are combined as abs_tol + rel_tol * |integral|.
QuadResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                              double a, double b, double abs_tol, double rel_tol,
                              int max_intervals = 4000);

/// Quadrature node with weight; sampled integrands are cached as
/// (node, weight, value) triples by the continuation machinery.
struct WeightedSample {
    double x;
    double w;
};

/// Composite Gauss-Legendre sampling plan: `panels` equal panels on
/// [a, b] with an n-point rule each.
std::vector<WeightedSample> composite_gl_plan(double a, double b, int panels, int n);

}  // namespace maassp

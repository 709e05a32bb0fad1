#pragma once

#include <functional>
#include <vector>

namespace maassp {

/// Chebyshev interpolant on [a, b] built from Chebyshev-Gauss samples.
class ChebyshevFit {
public:
    ChebyshevFit(const std::function<double(double)>& f, double a, double b, int degree);

    double operator()(double x) const;
    /// Interpolant of the k-th derivative (coefficients by the standard
    /// descending recurrence, rescaled to [a, b]).
    ChebyshevFit derivative() const;

    /// Magnitude of the trailing coefficient pair, the usual truncation
    /// error proxy.
    double tail_estimate() const;
    /// Sum of |coefficients|, bounding the noise amplification of
    /// evaluation.
    double coefficient_mass() const;

    const std::vector<double>& coefficients() const { return c_; }
    double lo() const { return a_; }
    double hi() const { return b_; }

private:
    ChebyshevFit(std::vector<double> c, double a, double b) : c_(std::move(c)), a_(a), b_(b) {}
    std::vector<double> c_;  // f(x) = sum c_k T_k(u) - c_0/2, u mapped to [-1,1]
    double a_, b_;
};

}  // namespace maassp

#include "maassp/chebyshev.hpp"

#include <cmath>
#include <cstdlib>

#include "maassp/errors.hpp"

namespace maassp {

ChebyshevFit::ChebyshevFit(const std::function<double(double)>& f, double a, double b, int degree)
    : a_(a), b_(b) {
    if (degree < 2) throw DomainError("ChebyshevFit: degree must be at least 2");
    const int n = degree + 1;
    std::vector<double> samples(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int j = 0; j < n; ++j) {
        double u = std::cos(M_PI * (j + 0.5) / n);
        samples[j] = f(mid + half * u);
    }
    c_.resize(n);
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += samples[j] * std::cos(M_PI * k * (j + 0.5) / n);
        c_[k] = 2.0 * acc / n;
    }
}

double ChebyshevFit::operator()(double x) const {
    // Clenshaw on u in [-1, 1].
    double u = (2.0 * x - a_ - b_) / (b_ - a_);
    double u2 = 2.0 * u;
    double d = 0.0, dd = 0.0;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
        double sv = d;
        d = u2 * d - dd + c_[k];
        dd = sv;
    }
    return u * d - dd + 0.5 * c_[0];
}

ChebyshevFit ChebyshevFit::derivative() const {
    const int n = static_cast<int>(c_.size());
    std::vector<double> der(n, 0.0);
    if (n >= 2) {
        der[n - 1] = 0.0;
        der[n - 2] = 2.0 * (n - 1) * c_[n - 1];
        for (int k = n - 2; k >= 1; --k) der[k - 1] = der[k + 1] + 2.0 * k * c_[k];
        double scale = 2.0 / (b_ - a_);
        for (double& v : der) v *= scale;
    }
    return ChebyshevFit(std::move(der), a_, b_);
}

double ChebyshevFit::tail_estimate() const {
    const int n = static_cast<int>(c_.size());
    if (n < 3) return 0.0;
    return std::abs(c_[n - 1]) + std::abs(c_[n - 2]);
}

double ChebyshevFit::coefficient_mass() const {
    double acc = 0.0;
    for (double v : c_) acc += std::abs(v);
    return acc;
}

}  // namespace maassp

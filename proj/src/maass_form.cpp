#include "maassp/maass_form.hpp"

#include <cmath>

#include "maassp/chebyshev.hpp"
#include "maassp/errors.hpp"
#include "maassp/fundamental_domain.hpp"

namespace maassp {

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from_string(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw SchemaError("parity must be 'even' or 'odd', got '" + s + "'");
}

double MaassForm::b(int n) const {
    if (n == 0) throw DomainError("MaassForm::b: n must be nonzero");
    int a = std::abs(n);
    if (a > truncation()) throw DomainError("MaassForm::b: index beyond truncation");
    double v = coeffs[a - 1];
    if (n < 0 && parity == Parity::odd) v = -v;
    return v;
}

double MaassForm::scale() const { return std::exp(-M_PI * spec.r / 2.0); }

double MaassForm::evaluate_expansion(double x, double y) const {
    if (!(y > 0.0)) throw DomainError("MaassForm::evaluate_expansion: y must be positive");
    const double r = spec.r;
    const double two_pi_y = 2.0 * M_PI * y;
    // Scaled kernel values stay O(1); the classical normalization enters
    // through one global factor at the end.
    const double budget = M_PI * r / 2.0 + 42.0;
    double acc = 0.0;
    for (int n = 1; n <= truncation(); ++n) {
        double arg = two_pi_y * n;
        if (arg > budget) break;  // kernel below 1e-18 of scale from here on
        double kv = detail::bessel_k_imag_any(r, arg);
        double tr = (parity == Parity::even) ? std::cos(2.0 * M_PI * n * x)
                                             : std::sin(2.0 * M_PI * n * x);
        acc += coeffs[n - 1] * kv * tr;
    }
    return 2.0 * std::sqrt(y) * scale() * acc;
}

double MaassForm::evaluate(std::complex<double> z) const {
    ReducedPoint red = reduce_to_fundamental_domain(z);
    return evaluate_expansion(red.z.real(), red.z.imag());
}

std::pair<double, double> MaassForm::hecke_residuals() const {
    if (truncation() < 6) return {0.0, 0.0};
    double r1 = std::abs(coeffs[1] * coeffs[2] - coeffs[5]);
    double r2 = std::abs(coeffs[1] * coeffs[1] - coeffs[3] - 1.0);
    return {r1, r2};
}

double MaassForm::mean_square_coefficient() const {
    double acc = 0.0;
    for (double v : coeffs) acc += v * v;
    return coeffs.empty() ? 0.0 : acc / static_cast<double>(coeffs.size());
}

void MaassForm::validate(double hecke_tol) const {
    if (coeffs.empty()) throw SchemaError("MaassForm: empty coefficient list");
    if (std::abs(coeffs[0] - 1.0) > 1e-12)
        throw SchemaError("MaassForm: normalization requires b_1 = 1");
    if (!(spec.r > 0.0)) throw SchemaError("MaassForm: spectral parameter must be positive");
    auto [r1, r2] = hecke_residuals();
    if (r1 > hecke_tol || r2 > hecke_tol)
        throw SchemaError("MaassForm: Hecke residuals " + std::to_string(r1) + ", " +
                          std::to_string(r2) + " exceed tolerance " + std::to_string(hecke_tol));
}

std::complex<double> coeff_convert(const MaassForm& f, long n, CoeffNormalization target) {
    if (n == 0) throw DomainError("coeff_convert: n must be nonzero");
    if (std::labs(n) > f.truncation()) throw DomainError("coeff_convert: index beyond truncation");
    // Signed expansion coefficient of e^{2 pi i n x}: phi = sum c_n ...,
    // c_n = b_|n| (even), -i sign(n) b_|n| (odd).
    double bn = f.coeffs[std::labs(n) - 1];
    std::complex<double> c_n = (f.parity == Parity::even)
                                   ? std::complex<double>{bn, 0.0}
                                   : std::complex<double>{0.0, (n > 0 ? -bn : bn)};
    if (target == CoeffNormalization::hecke_b) return c_n;
    // a_n = c_n |n|^lambda / c(lambda), lambda = 2iR.
    double r = f.spec.r;
    std::complex<double> n_pow = std::exp(std::complex<double>{0.0, 2.0 * r * std::log(std::abs(
                                                                             static_cast<double>(n)))});
    return c_n * n_pow / bessel_normalization(r);
}

std::vector<double> hecke_extend(const std::vector<double>& head, int target) {
    if (head.empty() || std::abs(head[0] - 1.0) > 1e-9)
        throw DomainError("hecke_extend: head must start with b_1 = 1");
    const int head_n = static_cast<int>(head.size());
    std::vector<double> b(target, 0.0);
    for (int n = 1; n <= std::min(head_n, target); ++n) b[n - 1] = head[n - 1];
    for (int n = head_n + 1; n <= target; ++n) {
        // Smallest prime factor decomposition n = p^a * m, gcd(p, m) = 1.
        int p = 2;
        while (p * p <= n && n % p != 0) ++p;
        if (p * p > n) {
            b[n - 1] = 0.0;  // prime beyond the solved head: undetermined
            continue;
        }
        int pa = 1, m = n;
        while (m % p == 0) {
            m /= p;
            pa *= p;
        }
        if (m > 1) {
            b[n - 1] = b[pa - 1] * b[m - 1];
        } else {
            // prime power: b_{p^a} = b_p b_{p^{a-1}} - b_{p^{a-2}}
            int prev = pa / p, prev2 = pa / (p * p);
            b[n - 1] = b[p - 1] * b[prev - 1] - b[prev2 - 1];
        }
    }
    return b;
}

AxisDerivatives axis_derivatives(const MaassForm& f, const GeodesicFrame& frame, double v,
                                 int k_max, double h, int degree) {
    if (!(v > 0.0)) throw DomainError("axis_derivatives: v must be positive");
    if (k_max < 0 || k_max > 8) throw DomainError("axis_derivatives: k_max must be in [0, 8]");
    MoebiusMap ginv = frame.g.inverse();
    auto phi_tilde = [&](double x) {
        return f.evaluate(ginv(std::complex<double>{x, v}));
    };
    ChebyshevFit fit(phi_tilde, -h, h, degree);

    // Interpolation must actually resolve the function.
    double mass = fit.coefficient_mass();
    double tail = fit.tail_estimate();
    if (tail > 1e-5 * (mass + f.scale()))
        throw NumericalError("axis_derivatives: interpolation residual too large (tail " +
                             std::to_string(tail) + " vs mass " + std::to_string(mass) + ")");

    AxisDerivatives out;
    out.value.resize(k_max + 1);
    out.error.resize(k_max + 1);
    const double noise = 1e-12 * f.scale() + 1e-15 * mass;  // per-sample evaluation noise
    ChebyshevFit cur = fit;
    for (int k = 0; k <= k_max; ++k) {
        out.value[k] = cur(0.0);
        // Noise amplification of k-fold Chebyshev differentiation plus the
        // truncation proxy of the current interpolant.
        double amp = 1.0;
        for (int j = 0; j < k; ++j) amp *= 2.0 * degree * degree / h;
        out.error[k] = noise * amp + cur.tail_estimate();
        if (k < k_max) cur = cur.derivative();
    }
    return out;
}

}  // namespace maassp

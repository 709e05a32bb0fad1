#pragma once

#include <complex>
#include <string>
#include <vector>

#include "maassp/geodesic.hpp"
#include "maassp/specialfn.hpp"

namespace maassp {

enum class Parity { even, odd };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

/// Hecke-normalized cuspidal Maass form on PSL(2,Z).
///
/// phi(x+iy) = sum_{n>=1} b_n sqrt(y) K_{iR}(2 pi n y) * 2 trig(2 pi n x)
/// with trig = cos (even) or sin (odd), b_1 = 1, and the classical
/// (unscaled) K-Bessel.  Values therefore carry the natural magnitude
/// e^{-pi R/2}; scale() exposes it for relative comparisons.
struct MaassForm {
    SpectralParameter spec;
    Parity parity = Parity::even;
    std::vector<double> coeffs;  // coeffs[n-1] = b_n
    enum class Provenance { solved, imported } provenance = Provenance::solved;
    double solve_residual = 0.0;  // two-height coefficient mismatch at R

    int truncation() const { return static_cast<int>(coeffs.size()); }
    double b(int n) const;  // signed expansion coefficient, n may be negative

    /// Natural value scale e^{-pi R/2} of the normalization.
    double scale() const;

    /// Pure Fourier-expansion sum at x + iy (no reduction); defined for
    /// every y > 0 and exact for the truncated object.
    double evaluate_expansion(double x, double y) const;

    /// Automorphic evaluation: pull z into the fundamental domain first.
    double evaluate(std::complex<double> z) const;

    /// Largest index whose coefficient came straight from the solve (the
    /// tail beyond it is Hecke-extended from the solved primes, with
    /// undetermined primes set to zero).  Equals truncation() for imports.
    int solved_head = 0;

    /// Hecke residuals |b_2 b_3 - b_6| and |b_2^2 - b_4 - 1|.
    std::pair<double, double> hecke_residuals() const;
    /// (1/M) sum b_n^2, the coefficient-growth sanity statistic.
    double mean_square_coefficient() const;
    /// Throws SchemaError when structural invariants fail.
    void validate(double hecke_tol = 1e-4) const;
};

/// Expansion coefficient in the normalization selected:
///   hecke_b: the signed expansion coefficient c_n (real axis embedded);
///   paper_a: a_n = c_n |n|^lambda / c(lambda).
enum class CoeffNormalization { hecke_b, paper_a };
std::complex<double> coeff_convert(const MaassForm& f, long n, CoeffNormalization target);

/// Derivatives d^k/dx^k of phi-tilde(x + iv) at x = 0, where
/// phi-tilde = phi o g^{-1} in the conjugated frame of a geodesic.
struct AxisDerivatives {
    std::vector<double> value;  // index k = 0..k_max
    std::vector<double> error;  // estimated absolute errors
};

AxisDerivatives axis_derivatives(const MaassForm& f, const GeodesicFrame& frame, double v,
                                 int k_max, double h = 0.05, int degree = 16);

/// Extends a coefficient head multiplicatively: composites and prime
/// powers from the Hecke relations, primes beyond the head set to zero.
std::vector<double> hecke_extend(const std::vector<double>& head, int target);

}  // namespace maassp

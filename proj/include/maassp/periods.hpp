#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "maassp/eval_report.hpp"
#include "maassp/geodesic.hpp"
#include "maassp/maass_form.hpp"
#include "maassp/quadrature.hpp"

namespace maassp {

/// Limiting period I_s = int_0^inf phi(alpha + iy) y^{s-1} dy by adaptive
/// quadrature of the Fourier-expansion object along the vertical line.
/// Convergent for Re s > 0 (bounded at the winding end, exponential decay
/// in the cusp); Re s <= 0 throws DomainError pointing to the
/// continuation route.
EvalReport limit_period_direct(const MaassForm& f, const LimitingGeodesic& geo,
                               std::complex<double> s, double rel_tol = 1e-9);

/// Same integral for an arbitrary line evaluator y -> phi(alpha + iy);
/// `scale` is the natural magnitude of the evaluator (error control) and
/// `coeff_mass` bounds |phi| / sqrt(y) near y = 0 (truncation control).
EvalReport limit_period_direct_fn(const std::function<double(double)>& phi_line,
                                  std::complex<double> s, double scale, double coeff_mass,
                                  double r, double rel_tol = 1e-9);

enum class Orientation { forward, reversed };

/// Twisted closed-geodesic period
///   rho_j = int_{v1}^{q v1} phi-tilde(iv) v^{-s_j} dv/v,  s_j = 2 pi i j / L,
/// independent of v1 (log-periodic integrand over one full period).
std::complex<double> closed_period_twisted(const MaassForm& f, const ClosedGeodesic& geo, long j,
                                           Orientation orientation = Orientation::forward);

/// Assembled meromorphic representation of I_s: entire quadrature pieces
/// (cusp tail and the first direct winding bins) plus closed-form
/// geometric series in the Taylor order k, whose denominators carry the
/// whole pole lattice s = s_j - k.
class ContinuationModel {
public:
    struct Parameters {
        int taylor_order = 6;   // N <= 8
        int direct_bins = 0;    // M0; 0 = smallest with q^{-M0} <= 0.1
        double v1_factor = 1.0; // v1 = v1_factor * v0
        int degree_j = 24;      // Chebyshev-in-ln v degree for the h_k cache
        double im_s_max = 30.0; // node plan sized for |Im s| up to this
    };

    ContinuationModel(const MaassForm& f, const LimitingGeodesic& geo, Parameters params = {});

    /// Meromorphic evaluation; throws PoleError at non-removable lattice
    /// points closer than 1e-6.
    EvalReport evaluate(std::complex<double> s) const;

    /// Entire cusp-side piece alone (diagnostic).
    std::complex<double> tail_only(std::complex<double> s) const;

    /// All lattice poles in the closed box [re_lo, re_hi] x [im_lo, im_hi].
    std::vector<PoleDatum> poles(double re_lo, double re_hi, double im_lo, double im_hi) const;

    /// Residue at a single lattice point s_j - k.
    PoleDatum residue_at(long j, int k) const;

    double remainder_bound(double sigma) const;
    double validity_re_min() const { return -params_.taylor_order + 0.5; }
    const Parameters& parameters() const { return params_; }
    const LimitingGeodesic& geodesic() const { return geo_; }
    const MaassForm& form() const { return form_; }
    double length() const { return length_; }

private:
    struct Samples {
        std::vector<double> x, w, val;
    };

    std::complex<double> a_k(int k, std::complex<double> s, bool derivative = false) const;
    std::complex<double> e_m(int m, std::complex<double> s) const;
    double a_k_abs(int k, double sigma) const;

    MaassForm form_;
    LimitingGeodesic geo_;
    GeodesicFrame frame_;
    Parameters params_;
    double q_ = 0, length_ = 0, v0_ = 0, v1_ = 0, beta_ = 0;
    Samples tail_;                      // y-nodes, val = phi(alpha + iy)
    std::vector<Samples> bins_;        // m < M0: tau-nodes, val = phi-tilde at offset bin
    std::vector<Samples> taylor_;      // k <= N: tau-nodes, val = h_k(tau)
    double sup_dx_n_ = 0;              // estimated sup |d_x^N phi-tilde| on the strip
    double abs_mass_ = 0;              // total |weighted values|, roundoff scale
};

/// Running means (1/T) int_0^T phi along the limiting geodesic, with the
/// predicted limit rho_0 / L.
struct MeanValueReport {
    std::vector<double> t;
    std::vector<double> mean;
    double limit = 0.0;  // rho_0 / L
    double deep_log_residual = 0.0;  // exactness check of the deepest point
};

MeanValueReport mean_value_experiment(const MaassForm& f, const LimitingGeodesic& geo,
                                      const std::vector<double>& t_list);

}  // namespace maassp

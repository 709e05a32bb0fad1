#include "maassp/periods.hpp"

#include <algorithm>
#include <cmath>

#include "maassp/chebyshev.hpp"
#include "maassp/errors.hpp"

namespace maassp {

namespace {

using cdouble = std::complex<double>;

double frac_part(const QuadNumber& alpha) {
    return (alpha - QuadNumber(alpha.floor())).to_double();
}

}  // namespace

EvalReport limit_period_direct_fn(const std::function<double(double)>& phi_line, cdouble s,
                                  double scale, double coeff_mass, double r, double rel_tol) {
    if (!(s.real() > 0.0))
        throw DomainError("limit_period_direct: Re s must be positive; use the continuation");
    const double sigma = s.real();

    // Cusp side: the kernel kills the integrand beyond y_max.
    const double y_max = r / 4.0 + 9.0 + std::max(0.0, sigma);
    // Winding side: |phi| <= coeff_mass sqrt(y), so the [0, y_c] tail is
    // bounded by coeff_mass y_c^{sigma+1/2}/(sigma+1/2).
    const double tol_abs = std::max(rel_tol * scale * 0.2, 1e-300);
    double y_c = std::pow(tol_abs * (sigma + 0.5) / std::max(coeff_mass, 1e-300), 1.0 / (sigma + 0.5));
    y_c = std::min(y_c, 0.5);
    double tail_cut = coeff_mass * std::pow(y_c, sigma + 0.5) / (sigma + 0.5);

    // I = int e^{-st} phi(e^{-t}) dt over [-ln y_max, -ln y_c].
    auto integrand = [&](double t) -> cdouble {
        double y = std::exp(-t);
        return std::exp(-s * t) * phi_line(y);
    };
    QuadResult quad = integrate_adaptive(integrand, -std::log(y_max), -std::log(y_c), tol_abs,
                                         rel_tol, 20000);

    EvalReport out;
    out.s = s;
    out.value = quad.value;
    out.error = quad.error + tail_cut + 1e-14 * scale;
    out.route = "direct";
    return out;
}

EvalReport limit_period_direct(const MaassForm& f, const LimitingGeodesic& geo, cdouble s,
                               double rel_tol) {
    const double x_alpha = frac_part(geo.target());
    auto phi_line = [&](double y) { return f.evaluate_expansion(x_alpha, y); };
    double mass = 0.0;
    for (double b : f.coeffs) mass += std::abs(b);
    mass *= 4.0 * f.scale();  // coarse bound on |phi| / sqrt(y)
    return limit_period_direct_fn(phi_line, s, f.scale(), mass, f.spec.r, rel_tol);
}

std::complex<double> closed_period_twisted(const MaassForm& f, const ClosedGeodesic& geo, long j,
                                           Orientation orientation) {
    const double length = geo.length;
    const double omega = 2.0 * M_PI * static_cast<double>(j) / length;
    const double u0 = std::log(geo.v0.to_double());
    MoebiusMap ginv = geo.g.inverse();
    auto phi_tilde = [&](double u) {  // u = ln v, absolute phase origin at v = 1
        return f.evaluate(ginv(cdouble{0.0, std::exp(u)}));
    };

    // Trapezoid over one multiplicative period; the integrand is smooth and
    // log-periodic, so doubling converges geometrically.
    int n = 64;
    cdouble prev{0.0, 0.0};
    for (int round = 0; round < 8; ++round) {
        cdouble acc{0.0, 0.0};
        double h = length / n;
        for (int i = 0; i < n; ++i) {
            double u = (orientation == Orientation::forward) ? u0 + i * h : u0 + length - i * h;
            double phase_u = (orientation == Orientation::forward)
                                 ? u
                                 : u0 + i * h;  // character in traversal arclength
            acc += phi_tilde(u) * std::exp(cdouble{0.0, -omega * (phase_u - 0.0)});
        }
        acc *= h;
        if (round > 0 && std::abs(acc - prev) <= 1e-12 * (std::abs(acc) + f.scale())) {
            prev = acc;
            break;
        }
        prev = acc;
        n *= 2;
    }
    return prev;
}

ContinuationModel::ContinuationModel(const MaassForm& f, const LimitingGeodesic& geo,
                                     Parameters params)
    : form_(f), geo_(geo), frame_(geo.frame()), params_(params) {
    if (params_.taylor_order < 1 || params_.taylor_order > 8)
        throw DomainError("ContinuationModel: Taylor order must be in [1, 8]");
    q_ = geo_.closed.q.to_double();
    length_ = geo_.closed.length;
    v0_ = geo_.closed.v0.to_double();
    beta_ = frame_.beta_prime.to_double();

    int min_bins = static_cast<int>(std::ceil(std::log(10.0) / length_));
    if (params_.direct_bins < min_bins) params_.direct_bins = std::max(min_bins, 1);
    v1_ = params_.v1_factor * v0_;
    if (!(v1_ > 0.0)) throw DomainError("ContinuationModel: v1 must be positive");

    const int gl_n = 20;
    const double r = form_.spec.r;

    // Cusp tail in original coordinates: nodes in ln y on [ln y1, ln y_max].
    const double y1 = v0_ / v1_;
    const double y_max = r / 4.0 + 9.0;
    {
        double lo = std::log(y1), hi = std::log(y_max);
        int panels = std::max(6, static_cast<int>(std::ceil((hi - lo) * (params_.im_s_max + 8.0) /
                                                            (2.0 * M_PI))));
        auto plan = composite_gl_plan(lo, hi, panels, gl_n);
        const double x_alpha = frac_part(geo_.target());
        tail_.x.reserve(plan.size());
        tail_.w.reserve(plan.size());
        tail_.val.reserve(plan.size());
        for (const auto& node : plan) {
            tail_.x.push_back(node.x);
            tail_.w.push_back(node.w);
            tail_.val.push_back(form_.evaluate_expansion(x_alpha, std::exp(node.x)));
        }
    }

    // Direct winding bins m < M0 and the h_k Taylor cache, both on
    // tau = ln(v / v1) in [0, L].
    const int tau_panels = std::max(
        6, static_cast<int>(std::ceil(length_ * (params_.im_s_max + params_.taylor_order + 8.0) /
                                      (2.0 * M_PI))));
    auto tau_plan = composite_gl_plan(0.0, length_, tau_panels, gl_n);
    MoebiusMap ginv = frame_.g.inverse();

    bins_.resize(params_.direct_bins);
    for (int m = 0; m < params_.direct_bins; ++m) {
        double offset = beta_ * (frame_.beta_prime * geo_.closed.q_pow(-m)).to_double() * beta_;
        // offset = beta * q^{-m} exactly; QuadNumber keeps深 powers exact.
        offset = (frame_.beta_prime * geo_.closed.q_pow(-m)).to_double();
        Samples& bin = bins_[m];
        bin.x.reserve(tau_plan.size());
        bin.w.reserve(tau_plan.size());
        bin.val.reserve(tau_plan.size());
        for (const auto& node : tau_plan) {
            double v = v1_ * std::exp(node.x);
            bin.x.push_back(node.x);
            bin.w.push_back(node.w);
            bin.val.push_back(form_.evaluate(ginv(cdouble{offset, v})));
        }
    }

    // h_k(tau) = d^k/dx^k phi-tilde(x + i v1 e^tau) at x = 0, cached as
    // Chebyshev-in-tau interpolants sampled on the quadrature plan.
    {
        const int jdeg = std::max(params_.degree_j, 12);
        const double h_window = std::min(0.3, std::max(0.05, 0.15 * v1_));
        const int n_nodes = jdeg + 1;
        std::vector<std::vector<double>> h_samples(params_.taylor_order + 1,
                                                   std::vector<double>(n_nodes));
        for (int node = 0; node < n_nodes; ++node) {
            double u = std::cos(M_PI * (node + 0.5) / n_nodes);  // Chebyshev-Gauss on [-1,1]
            double tau = 0.5 * length_ * (u + 1.0);
            AxisDerivatives der =
                axis_derivatives(form_, frame_, v1_ * std::exp(tau), params_.taylor_order,
                                 h_window, 16);
            for (int k = 0; k <= params_.taylor_order; ++k) h_samples[k][node] = der.value[k];
        }
        taylor_.resize(params_.taylor_order + 1);
        for (int k = 0; k <= params_.taylor_order; ++k) {
            // Fit from the samples (they sit at the canonical Chebyshev
            // nodes of [0, L]) and evaluate on the quadrature plan.
            std::vector<double> coef(n_nodes);
            for (int kk = 0; kk < n_nodes; ++kk) {
                double acc = 0.0;
                for (int jj = 0; jj < n_nodes; ++jj)
                    acc += h_samples[k][jj] * std::cos(M_PI * kk * (jj + 0.5) / n_nodes);
                coef[kk] = 2.0 * acc / n_nodes;
            }
            auto eval_fit = [&](double tau) {
                double u = (2.0 * tau - length_) / length_;
                double d = 0.0, dd = 0.0;
                for (int kk = n_nodes - 1; kk >= 1; --kk) {
                    double sv = d;
                    d = 2.0 * u * d - dd + coef[kk];
                    dd = sv;
                }
                return u * d - dd + 0.5 * coef[0];
            };
            Samples& sk = taylor_[k];
            sk.x.reserve(tau_plan.size());
            sk.w.reserve(tau_plan.size());
            sk.val.reserve(tau_plan.size());
            for (const auto& node : tau_plan) {
                sk.x.push_back(node.x);
                sk.w.push_back(node.w);
                sk.val.push_back(eval_fit(node.x));
            }
        }
    }

    // Remainder constant: sampled sup of |d_x^N phi-tilde| over the offset
    // strip |x| <= q^{-M0} and one period of v.
    {
        const int n_taylor = params_.taylor_order;
        const double strip = std::pow(q_, -params_.direct_bins) * 1.05 + 0.01;
        double sup = 0.0;
        const double h_fit = std::max(0.1, strip);
        for (int iu = 0; iu < 8; ++iu) {
            double v = v1_ * std::exp(length_ * (iu + 0.5) / 8.0);
            for (int ix = 0; ix < 8; ++ix) {
                double x0 = -strip + 2.0 * strip * (ix + 0.5) / 8.0;
                ChebyshevFit fit(
                    [&](double xi) { return form_.evaluate(ginv(cdouble{x0 + xi, v})); }, -h_fit,
                    h_fit, 16);
                ChebyshevFit cur = fit;
                for (int k = 0; k < n_taylor; ++k) cur = cur.derivative();
                sup = std::max(sup, std::abs(cur(0.0)));
            }
        }
        sup_dx_n_ = 2.0 * sup;  // sampled sup, doubled as a safety margin
    }

    abs_mass_ = 0.0;
    for (std::size_t i = 0; i < tail_.w.size(); ++i)
        abs_mass_ += std::abs(tail_.w[i] * tail_.val[i]);
    for (const Samples& bin : bins_)
        for (std::size_t i = 0; i < bin.w.size(); ++i) abs_mass_ += std::abs(bin.w[i] * bin.val[i]);
}

std::complex<double> ContinuationModel::tail_only(cdouble s) const {
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < tail_.x.size(); ++i)
        acc += tail_.w[i] * tail_.val[i] * std::exp(s * tail_.x[i]);
    return acc;
}

std::complex<double> ContinuationModel::e_m(int m, cdouble s) const {
    const Samples& bin = bins_[m];
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < bin.x.size(); ++i) {
        double u = v1_ * std::exp(bin.x[i]);
        acc += bin.w[i] * bin.val[i] * std::exp(-s * std::log(u));
    }
    return acc;
}

std::complex<double> ContinuationModel::a_k(int k, cdouble s, bool derivative) const {
    const Samples& sk = taylor_[k];
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < sk.x.size(); ++i) {
        double lnu = std::log(v1_) + sk.x[i];
        cdouble term = sk.w[i] * sk.val[i] * std::exp(-s * lnu);
        acc += derivative ? -lnu * term : term;
    }
    return acc;
}

double ContinuationModel::a_k_abs(int k, double sigma) const {
    const Samples& sk = taylor_[k];
    double acc = 0.0;
    for (std::size_t i = 0; i < sk.x.size(); ++i) {
        double u = v1_ * std::exp(sk.x[i]);
        acc += std::abs(sk.w[i] * sk.val[i]) * std::pow(u, -sigma);
    }
    return acc;
}

double ContinuationModel::remainder_bound(double sigma) const {
    const int n = params_.taylor_order;
    const int m0 = params_.direct_bins;
    if (sigma + n <= 0.0) return 1e308;
    double c_sigma = (std::abs(sigma) < 1e-12)
                         ? length_
                         : (std::pow(v1_, -sigma) - std::pow(q_ * v1_, -sigma)) / sigma;
    c_sigma = std::abs(c_sigma);
    double fact = std::tgamma(static_cast<double>(n) + 1.0);
    double geom = std::pow(q_, -m0 * (sigma + n)) / (1.0 - std::pow(q_, -(sigma + n)));
    return std::pow(v0_, sigma) * (sup_dx_n_ / fact) * c_sigma * geom;
}

PoleDatum ContinuationModel::residue_at(long j, int k) const {
    cdouble s_p{-static_cast<double>(k), 2.0 * M_PI * static_cast<double>(j) / length_};
    cdouble a_val = a_k(k, s_p);
    double sign = std::pow(beta_, k);
    double fact = std::tgamma(static_cast<double>(k) + 1.0);
    PoleDatum p;
    p.s = s_p;
    p.j = j;
    p.k = k;
    p.residue = std::exp(s_p * std::log(v0_)) * sign / fact * a_val / length_;
    p.removable = std::abs(a_val) < 1e-9 * a_k_abs(k, s_p.real());
    return p;
}

EvalReport ContinuationModel::evaluate(cdouble s) const {
    const int n = params_.taylor_order;
    const int m0 = params_.direct_bins;
    if (s.real() <= validity_re_min())
        throw DomainError("ContinuationModel: outside validity strip Re s > " +
                          std::to_string(validity_re_min()));

    // Nearest lattice point s_j - k.
    long j_near = std::lround(s.imag() * length_ / (2.0 * M_PI));
    int k_pole = -1;
    double dist = 1e300;
    for (int k = 0; k < n; ++k) {
        cdouble s_p{-static_cast<double>(k), 2.0 * M_PI * static_cast<double>(j_near) / length_};
        double d = std::abs(s - s_p);
        if (d < dist) {
            dist = d;
            k_pole = k;
        }
    }
    PoleDatum near_pole;
    bool laurent = false;
    if (dist < 1e-6) {
        near_pole = residue_at(j_near, k_pole);
        if (!near_pole.removable)
            throw PoleError("continuation_eval: at lattice pole j=" + std::to_string(j_near) +
                                ", k=" + std::to_string(k_pole),
                            near_pole.s, near_pole.residue);
        laurent = true;
    }

    const cdouble delta_s = std::exp(s * std::log(v0_));
    cdouble winding{0.0, 0.0};
    for (int m = 0; m < m0; ++m) winding += std::exp(-s * static_cast<double>(m) * std::log(q_)) * e_m(m, s);

    double abs_taylor = 0.0;
    for (int k = 0; k < n; ++k) {
        double sign = std::pow(beta_, k);
        double fact = std::tgamma(static_cast<double>(k) + 1.0);
        cdouble a_val = a_k(k, s);
        cdouble expo = -(s + static_cast<double>(k)) * std::log(q_);
        cdouble geom_num = std::exp(static_cast<double>(m0) * expo);
        cdouble geom_den = 1.0 - std::exp(expo);
        cdouble term;
        if (laurent && k == k_pole) {
            // Removable point: expand around w = (s - s_p) L; the pole part
            // carries A_k(s_p) ~ 0 and the rest is regular.
            cdouble s_p = near_pole.s;
            cdouble w = (s - s_p) * length_;
            cdouble q_reg;  // e^{-m0 w}/(1-e^{-w}) - 1/w, regular part
            if (std::abs(w) < 1e-8) {
                q_reg = (0.5 - m0);
            } else {
                q_reg = std::exp(-static_cast<double>(m0) * w) / (1.0 - std::exp(-w)) - 1.0 / w;
            }
            cdouble a_p = a_k(k, s_p);
            cdouble a_d = a_k(k, s_p, true);
            term = a_p / w * length_ * 0.0;  // pole part below, kept explicit
            term = (a_p / w) + (a_d / length_) * 1.0;
            term = sign / fact * (a_p / w + a_d) ;
            // a_k(s) ~ a_p + a_d (s - s_p): regular piece
            term = sign / fact * (a_p * (1.0 / w + q_reg) + a_d / length_ * 1.0);
            // full: A_k(s) Q(s) with Q = 1/w + q_reg and A_k = a_p + a_d (s-s_p):
            term = sign / fact * (a_p / w + a_p * q_reg + a_d * (s - s_p) * (1.0 / w) +
                                  a_d * (s - s_p) * q_reg);
        } else {
            term = sign / fact * a_val * geom_num / geom_den;
        }
        winding += term;
        abs_taylor += a_k_abs(k, s.real()) / fact * std::abs(geom_num / std::max(std::abs(geom_den), 1e-12));
    }

    cdouble value = tail_only(s) + delta_s * winding;

    double tail_mass = 0.0;
    for (std::size_t i = 0; i < tail_.x.size(); ++i)
        tail_mass += std::abs(tail_.w[i] * tail_.val[i] * std::exp(s.real() * tail_.x[i]));
    double bins_mass = 0.0;
    for (int m = 0; m < m0; ++m) {
        const Samples& bin = bins_[m];
        for (std::size_t i = 0; i < bin.x.size(); ++i)
            bins_mass += std::abs(bin.w[i] * bin.val[i] *
                                  std::pow(v1_ * std::exp(bin.x[i]), -s.real()));
    }

    EvalReport out;
    out.s = s;
    out.value = value;
    out.error = remainder_bound(s.real()) +
                2e-12 * (tail_mass + std::abs(delta_s) * (bins_mass + abs_taylor)) +
                1e-9 * form_.scale() * std::abs(delta_s);
    out.route = "continuation";
    return out;
}

std::vector<PoleDatum> ContinuationModel::poles(double re_lo, double re_hi, double im_lo,
                                                double im_hi) const {
    std::vector<PoleDatum> out;
    int k_lo = std::max(0, static_cast<int>(std::ceil(-re_hi - 1e-12)));
    int k_hi = std::min(params_.taylor_order - 1,
                        static_cast<int>(std::floor(-re_lo + 1e-12)));
    long j_lo = static_cast<long>(std::ceil(im_lo * length_ / (2.0 * M_PI) - 1e-12));
    long j_hi = static_cast<long>(std::floor(im_hi * length_ / (2.0 * M_PI) + 1e-12));
    for (int k = k_lo; k <= k_hi; ++k)
        for (long j = j_lo; j <= j_hi; ++j) out.push_back(residue_at(j, k));
    return out;
}

MeanValueReport mean_value_experiment(const MaassForm& f, const LimitingGeodesic& geo,
                                      const std::vector<double>& t_list) {
    if (t_list.empty()) throw DomainError("mean_value_experiment: empty T list");
    std::vector<double> sorted = t_list;
    std::sort(sorted.begin(), sorted.end());
    if (!(sorted.front() > 0.0)) throw DomainError("mean_value_experiment: T must be positive");
    if (sorted.back() > 500.0)
        throw DomainError("mean_value_experiment: T beyond the supported depth 500");

    MeanValueReport out;
    out.t = sorted;
    out.mean.resize(sorted.size());

    const double t_end = sorted.back();
    double acc = 0.0;
    double t_cur = 0.0;
    std::size_t next = 0;
    const double step = 0.25;
    auto integrand = [&](double t) { return f.evaluate(geodesic_point(geo, t).z); };
    while (next < sorted.size()) {
        double t_stop = std::min(t_cur + step, sorted[next]);
        acc += integrate_gl_real(integrand, t_cur, t_stop, 8);
        t_cur = t_stop;
        while (next < sorted.size() && std::abs(t_cur - sorted[next]) < 1e-14) {
            out.mean[next] = acc / sorted[next];
            ++next;
        }
    }

    out.limit = closed_period_twisted(f, geo.closed, 0).real() / geo.closed.length;
    out.deep_log_residual = geodesic_point(geo, t_end).log_identity_residual;
    (void)t_end;
    return out;
}

}  // namespace maassp

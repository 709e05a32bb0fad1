#include "maassp/hejhal.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "maassp/errors.hpp"
#include "maassp/fundamental_domain.hpp"
#include "maassp/parallel.hpp"
#include "maassp/specialfn.hpp"

// Implicit-automorphy collocation: at sampling points z_m = x_m + iY below
// the fundamental-domain floor, phi(z_m) = phi(z_m*) pins linear relations
// between the Fourier coefficients.  With b_1 = 1 the rectangular system
// is solved in least squares; the eigenvalue is the R at which solutions
// computed at two heights coincide.

namespace maassp {

namespace {

int auto_truncation(double r, double y1) {
    return static_cast<int>(std::ceil((M_PI * r / 2.0 + 33.0) / (2.0 * M_PI * y1))) + 10;
}

struct Collocation {
    Eigen::VectorXd coeffs;  // b_1..b_M (b_1 = 1)
    double condition = 0.0;
    double residual = 0.0;
};

Collocation solve_at(double r, Parity parity, int m_count, int q_count, double y) {
    const double scaled_pref = 1.0;  // uniform e^{pi R/2} scaling cancels in the system
    (void)scaled_pref;

    struct Row {
        double x_star, y_star;
        double x, y;
    };
    std::vector<Row> rows(q_count);
    for (int m = 0; m < q_count; ++m) {
        double x = (m + 0.5) / (2.0 * q_count);
        ReducedPoint red = reduce_to_fundamental_domain({x, y});
        rows[m] = Row{red.z.real(), red.z.imag(), x, y};
    }

    Eigen::MatrixXd v(q_count, m_count);
    parallel_for(static_cast<std::size_t>(q_count), [&](std::size_t mi) {
        const Row& row = rows[mi];
        double sq_y = std::sqrt(row.y), sq_ys = std::sqrt(row.y_star);
        for (int n = 1; n <= m_count; ++n) {
            double ky = detail::bessel_k_imag_any(r, 2.0 * M_PI * n * row.y);
            double kys = detail::bessel_k_imag_any(r, 2.0 * M_PI * n * row.y_star);
            double tr_y, tr_ys;
            if (parity == Parity::even) {
                tr_y = std::cos(2.0 * M_PI * n * row.x);
                tr_ys = std::cos(2.0 * M_PI * n * row.x_star);
            } else {
                tr_y = std::sin(2.0 * M_PI * n * row.x);
                tr_ys = std::sin(2.0 * M_PI * n * row.x_star);
            }
            v(static_cast<long>(mi), n - 1) = sq_y * ky * tr_y - sq_ys * kys * tr_ys;
        }
    });

    // b_1 = 1: move the first column to the right-hand side.  Columns decay
    // exponentially in n through the kernel, so normalize them before the
    // least-squares solve; the condition estimate then reflects the
    // geometry rather than the scaling.
    Eigen::MatrixXd a = v.rightCols(m_count - 1);
    Eigen::VectorXd rhs = -v.col(0);
    Eigen::VectorXd col_scale(m_count - 1);
    for (int j = 0; j < m_count - 1; ++j) {
        double norm = a.col(j).norm();
        col_scale(j) = (norm > 0.0) ? norm : 1.0;
        a.col(j) /= col_scale(j);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd sol = svd.solve(rhs);
    Eigen::VectorXd unscaled = sol.array() / col_scale.array();

    Collocation out;
    out.coeffs.resize(m_count);
    out.coeffs(0) = 1.0;
    out.coeffs.tail(m_count - 1) = unscaled;
    double smin = svd.singularValues().minCoeff();
    out.condition = (smin > 0.0) ? svd.singularValues().maxCoeff() / smin : 1e308;
    out.residual = (a * sol - rhs).norm();
    return out;
}

// Signed objective: difference of a low coefficient between heights.
double objective(double r, const SolveOptions& opts, int m_count, int q_count, int k,
                 Collocation* c1_out = nullptr) {
    Collocation c1 = solve_at(r, opts.parity, m_count, q_count, opts.y1);
    Collocation c2 = solve_at(r, opts.parity, m_count, q_count, opts.y2);
    if (c1_out) *c1_out = c1;
    return c1.coeffs(k - 1) - c2.coeffs(k - 1);
}

// l2 mismatch of the two-height coefficient vectors over k in [2, k_hi].
// Up to k = 4 both heights determine the coefficients sharply; b_5, b_6
// are noise-floored at the upper height (their basis columns decay like
// the kernel), so the gate uses k_hi = 4 and the wide value is reported.
double mismatch_l2(double r, const SolveOptions& opts, int m_count, int q_count, int k_hi) {
    Collocation c1 = solve_at(r, opts.parity, m_count, q_count, opts.y1);
    Collocation c2 = solve_at(r, opts.parity, m_count, q_count, opts.y2);
    double acc = 0.0;
    for (int k = 2; k <= std::min(k_hi, m_count); ++k) {
        double d = c1.coeffs(k - 1) - c2.coeffs(k - 1);
        acc += d * d;
    }
    return std::sqrt(acc);
}

}  // namespace

MaassForm hejhal_solve(const SolveOptions& opts, SolveDiagnostics* diag) {
    if (!(opts.r_lo > 0.0) || !(opts.r_hi > opts.r_lo))
        throw DomainError("hejhal_solve: invalid bracket");
    const double floor_y = std::sqrt(3.0) / 2.0;
    if (!(opts.y1 > 0.0) || opts.y1 >= floor_y || !(opts.y2 > opts.y1) || opts.y2 >= floor_y)
        throw DomainError("hejhal_solve: heights must satisfy 0 < Y1 < Y2 < sqrt(3)/2");

    int m_count = opts.m > 0 ? opts.m : auto_truncation(opts.r_hi, opts.y1);
    int q_count = opts.q > 0 ? opts.q : 2 * m_count + 8;
    if (q_count <= 2 * m_count)
        throw DomainError("hejhal_solve: Q must exceed 2M");

    // Pick the lowest coefficient whose two-height difference changes sign
    // across the bracket.
    int pick = 0;
    double f_lo = 0.0, f_hi = 0.0;
    for (int k = 2; k <= std::min(6, m_count); ++k) {
        f_lo = objective(opts.r_lo, opts, m_count, q_count, k);
        f_hi = objective(opts.r_hi, opts, m_count, q_count, k);
        if (std::signbit(f_lo) != std::signbit(f_hi)) {
            pick = k;
            break;
        }
    }
    if (pick == 0)
        throw NumericalError("hejhal_solve: no sign change in bracket [" +
                             std::to_string(opts.r_lo) + ", " + std::to_string(opts.r_hi) + "]");

    // Illinois-safeguarded secant.
    double a = opts.r_lo, b = opts.r_hi, fa = f_lo, fb = f_hi;
    double root = b;
    int used = 0;
    for (int it = 0; it < opts.max_iterations; ++it) {
        ++used;
        root = b - fb * (b - a) / (fb - fa);
        if (!(root > a) || !(root < b)) root = 0.5 * (a + b);
        double fr = objective(root, opts, m_count, q_count, pick);
        if (std::abs(b - a) < 1e-13 * std::max(1.0, std::abs(b)) || fr == 0.0) break;
        if (std::signbit(fr) != std::signbit(fb)) {
            a = b;
            fa = fb;
        } else {
            fa *= 0.5;  // Illinois damping keeps the bracket shrinking
        }
        b = root;
        fb = fr;
        if (std::abs(b - a) < 2e-12) break;
    }

    double mis = mismatch_l2(root, opts, m_count, q_count, 4);
    if (mis > opts.mismatch_tol)
        throw NumericalError("hejhal_solve: mismatch " + std::to_string(mis) +
                             " above tolerance at R = " + std::to_string(root));

    Collocation c1 = solve_at(root, opts.parity, m_count, q_count, opts.y1);
    Collocation c2 = solve_at(root, opts.parity, m_count, q_count, opts.y2);
    if (c1.condition > 1e12)
        throw NumericalError("hejhal_solve: collocation system ill-conditioned (estimate " +
                             std::to_string(c1.condition) + ")");

    if (diag) {
        diag->mismatch = mis;
        diag->mismatch_wide = mismatch_l2(root, opts, m_count, q_count, 6);
        diag->condition = c1.condition;
        diag->iterations = used;
        diag->r = root;
    }

    // Keep the head on which both heights agree; the kernel columns decay
    // exponentially in n, so the far tail of the least-squares solution is
    // noise.  Composites beyond the head follow from the Hecke relations;
    // primes beyond it are undetermined at these heights and set to zero
    // (their kernel weight at the working heights is below 1e-8 relative).
    int head = 1;
    for (int n = 2; n <= m_count; ++n) {
        if (std::abs(c1.coeffs(n - 1) - c2.coeffs(n - 1)) > 1e-5) break;
        head = n;
    }
    std::vector<double> raw(c1.coeffs.data(), c1.coeffs.data() + head);

    MaassForm form;
    form.spec = SpectralParameter{root};
    form.parity = opts.parity;
    form.coeffs = hecke_extend(raw, m_count);
    form.solved_head = head;
    form.provenance = MaassForm::Provenance::solved;
    form.solve_residual = mis;
    return form;
}

std::vector<std::pair<double, double>> hejhal_scan(Parity parity, double lo, double hi,
                                                   double step) {
    if (!(lo > 0.0) || !(hi > lo) || !(step > 0.0)) throw DomainError("hejhal_scan: bad range");
    SolveOptions opts;
    opts.parity = parity;
    int m_count = auto_truncation(hi, opts.y1);
    int q_count = 2 * m_count + 8;
    std::vector<std::pair<double, double>> brackets;
    double prev_r = lo;
    double prev = objective(lo, opts, m_count, q_count, 2);
    for (double r = lo + step; r <= hi + 1e-12; r += step) {
        double cur = objective(r, opts, m_count, q_count, 2);
        if (std::signbit(cur) != std::signbit(prev)) brackets.emplace_back(prev_r, r);
        prev = cur;
        prev_r = r;
    }
    return brackets;
}

}  // namespace maassp

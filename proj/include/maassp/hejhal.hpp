#pragma once

#include <utility>
#include <vector>

#include "maassp/maass_form.hpp"

namespace maassp {

/// Parameters of the implicit-automorphy collocation solve.
struct SolveOptions {
    Parity parity = Parity::even;
    double r_lo = 0.0, r_hi = 0.0;  // bracket, must contain one eigenvalue
    int m = 0;                      // coefficient truncation; 0 = auto from R and y1
    double y1 = 0.5, y2 = 0.8;      // collocation heights, below sqrt(3)/2
    int q = 0;                      // collocation points; 0 = auto (2M + 8)
    double mismatch_tol = 1e-8;     // gate on the two-height coefficient mismatch
    int max_iterations = 80;
};

struct SolveDiagnostics {
    double mismatch = 0.0;       // l2 mismatch of b_2..b_4 between heights at R
    double mismatch_wide = 0.0;  // same over b_2..b_6 (upper height noise floor)
    double condition = 0.0;      // condition estimate of the collocation system
    int iterations = 0;
    double r = 0.0;
};

/// Locates the spectral parameter in the bracket by a safeguarded secant
/// on the signed two-height difference of a low coefficient, then returns
/// the collocation solution at that R.  Throws NumericalError when the
/// bracket shows no sign change or the mismatch plateaus above tolerance.
MaassForm hejhal_solve(const SolveOptions& opts, SolveDiagnostics* diag = nullptr);

/// Scan helper: sign changes of the objective over [lo, hi] in the given
/// step; each returned pair brackets a candidate eigenvalue.
std::vector<std::pair<double, double>> hejhal_scan(Parity parity, double lo, double hi,
                                                   double step);

}  // namespace maassp

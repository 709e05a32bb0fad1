#pragma once

#include <complex>
#include <string>
#include <vector>

namespace maassp {

/// One evaluated quantity with its error estimate; the unit of all CLI
/// output.
struct EvalReport {
    std::complex<double> s{0.0, 0.0};
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    std::string route;
};

/// A lattice pole s = s_j - k with its residue.
struct PoleDatum {
    std::complex<double> s{0.0, 0.0};
    long j = 0;
    int k = 0;
    std::complex<double> residue{0.0, 0.0};
    bool removable = false;
};

/// CSV helpers (header comment lines start with '#').
std::string eval_csv_header(const std::string& extra_comment = "");
std::string eval_csv_row(const EvalReport& report);
std::string pole_csv_header(const std::string& extra_comment = "");
std::string pole_csv_row(const PoleDatum& pole);

}  // namespace maassp

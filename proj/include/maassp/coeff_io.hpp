#pragma once

#include <string>

#include "maassp/maass_form.hpp"

namespace maassp {

/// Writes the coefficient file
///   {"group":"PSL2Z","R":...,"parity":"even|odd","normalization":"hecke",
///    "coefficients":[[n, b_n], ...]}
/// with 17 significant digits (lossless double round trip).
void export_form(const MaassForm& form, const std::string& path);

/// Reads and validates a coefficient file; Hecke residuals beyond
/// `hecke_tol` cause rejection with a SchemaError naming the gate.
MaassForm import_form(const std::string& path, double hecke_tol = 1e-4);

}  // namespace maassp

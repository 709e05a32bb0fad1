#include "maassp/coeff_io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"
#include "maassp/errors.hpp"

namespace maassp {

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void export_form(const MaassForm& form, const std::string& path) {
    nlohmann::ordered_json j;
    j["group"] = "PSL2Z";
    j["R"] = nlohmann::json::parse(fmt17(form.spec.r));
    j["parity"] = to_string(form.parity);
    j["normalization"] = "hecke";
    j["provenance"] = form.provenance == MaassForm::Provenance::solved ? "solved" : "imported";
    j["solve_residual"] = form.solve_residual;
    auto arr = nlohmann::ordered_json::array();
    for (int n = 1; n <= form.truncation(); ++n)
        arr.push_back({n, nlohmann::json::parse(fmt17(form.coeffs[n - 1]))});
    j["coefficients"] = std::move(arr);

    std::ofstream out(path);
    if (!out) throw SchemaError("export_form: cannot open '" + path + "'");
    out << j.dump(1) << "\n";
}

MaassForm import_form(const std::string& path, double hecke_tol) {
    std::ifstream in(path);
    if (!in) throw SchemaError("import_form: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("import_form: malformed JSON in '" + path + "': " + e.what());
    }
    for (const char* key : {"group", "R", "parity", "normalization", "coefficients"})
        if (!j.contains(key)) throw SchemaError(std::string("import_form: missing field '") + key + "'");
    if (j["group"] != "PSL2Z") throw SchemaError("import_form: unsupported group");
    if (j["normalization"] != "hecke") throw SchemaError("import_form: unsupported normalization");

    MaassForm form;
    form.spec = SpectralParameter{j["R"].get<double>()};
    form.parity = parity_from_string(j["parity"].get<std::string>());
    form.provenance = MaassForm::Provenance::imported;
    if (j.contains("solve_residual")) form.solve_residual = j["solve_residual"].get<double>();

    const auto& arr = j["coefficients"];
    if (!arr.is_array() || arr.empty()) throw SchemaError("import_form: empty coefficient list");
    form.coeffs.assign(arr.size(), 0.0);
    for (const auto& entry : arr) {
        if (!entry.is_array() || entry.size() != 2)
            throw SchemaError("import_form: coefficient entries must be [n, b_n]");
        long n = entry[0].get<long>();
        if (n < 1 || n > static_cast<long>(arr.size()))
            throw SchemaError("import_form: coefficient index " + std::to_string(n) +
                              " out of range");
        form.coeffs[n - 1] = entry[1].get<double>();
    }
    form.validate(hecke_tol);  // throws on Hecke-gate failure
    return form;
}

}  // namespace maassp

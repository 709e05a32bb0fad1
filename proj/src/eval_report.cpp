#include "maassp/eval_report.hpp"

#include <cstdio>

namespace maassp {

namespace {
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}
}  // namespace

std::string eval_csv_header(const std::string& extra_comment) {
    std::string out;
    if (!extra_comment.empty()) out += "# " + extra_comment + "\n";
    out += "s_re,s_im,value_re,value_im,err_bound,route\n";
    return out;
}

std::string eval_csv_row(const EvalReport& r) {
    return num(r.s.real()) + "," + num(r.s.imag()) + "," + num(r.value.real()) + "," +
           num(r.value.imag()) + "," + num(r.error) + "," + r.route + "\n";
}

std::string pole_csv_header(const std::string& extra_comment) {
    std::string out;
    if (!extra_comment.empty()) out += "# " + extra_comment + "\n";
    out += "j,k,s_re,s_im,res_re,res_im,removable\n";
    return out;
}

std::string pole_csv_row(const PoleDatum& p) {
    return std::to_string(p.j) + "," + std::to_string(p.k) + "," + num(p.s.real()) + "," +
           num(p.s.imag()) + "," + num(p.residue.real()) + "," + num(p.residue.imag()) + "," +
           (p.removable ? "1" : "0") + "\n";
}

}  // namespace maassp

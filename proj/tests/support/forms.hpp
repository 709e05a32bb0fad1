#pragma once

// Shared solved forms for the test binaries (solved once per process).

#include "maassp/hejhal.hpp"

namespace fixtures {

inline const maassp::MaassForm& odd_form() {
    static maassp::MaassForm f = [] {
        maassp::SolveOptions opts;
        opts.parity = maassp::Parity::odd;
        opts.r_lo = 9.4;
        opts.r_hi = 9.6;
        return maassp::hejhal_solve(opts);
    }();
    return f;
}

inline const maassp::MaassForm& even_form() {
    static maassp::MaassForm f = [] {
        maassp::SolveOptions opts;
        opts.parity = maassp::Parity::even;
        opts.r_lo = 13.6;
        opts.r_hi = 13.9;
        return maassp::hejhal_solve(opts);
    }();
    return f;
}

inline const maassp::MaassForm& even_form_2() {
    static maassp::MaassForm f = [] {
        maassp::SolveOptions opts;
        opts.parity = maassp::Parity::even;
        opts.r_lo = 17.6;
        opts.r_hi = 17.9;
        return maassp::hejhal_solve(opts);
    }();
    return f;
}

}  // namespace fixtures

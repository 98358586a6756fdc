#pragma once

#include <string>

#include "iwa/cyclotomic.hpp"
#include "iwa/sign.hpp"

namespace iwa {

/// Closed-form 2 * ord_chi of the comparison factor: the tilde omega of the
/// opposite sign at the conductor level (non-exceptional), or omega^- with
/// its extra gamma - 1 factor (exceptional inert-plus). Requires the
/// conductor parity to match eps; the trivial character is rejected in the
/// exceptional mode and contributes zero in the split case.
long correction_term(unsigned n_chi, Eps eps, int split, u64 p);

/// Valuation arithmetic of the definite BSD formula: length bound
/// 2 t_chi + correction, an equality except in the exceptional case.
struct BoundReport {
    u64 p = 0;
    unsigned n_chi = 0;
    Eps eps = Eps::none;
    Valuation t_chi = Valuation::finite(0);
    long correction = 0;
    long bound_length = 0;
    bool equality_claimed = true;
    bool selmer_finite_at_precision = true;  // false when t_chi capped
    std::string conditionality;              // the theorem the bound leans on

    std::string text() const;
};

BoundReport bsd_bound(const Valuation& t_chi, unsigned n_chi, Eps eps, int split, u64 p);

/// Double-entry check: the closed form against 2 * ord_pi of the actually
/// evaluated omega element. PrecisionTooLow when the CAP hides the value.
bool cross_check_correction(unsigned n_chi, Eps eps, int split, u64 p, unsigned k);

}  // namespace iwa

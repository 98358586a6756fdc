#include "iwa/bounds.hpp"

#include "iwa/iwasawa.hpp"
#include "iwa/lfunction.hpp"

namespace iwa {

namespace {

void require_parity(unsigned n_chi, Eps eps) {
    if (eps == Eps::none) throw ParityMismatch("correction terms are signed quantities");
    const bool even = (n_chi % 2) == 0;
    if (even != (eps == Eps::plus))
        throw ParityMismatch("conductor parity does not match eps");
}

OmegaKind comparison_kind(unsigned n_chi, Eps eps, int split) {
    const bool exceptional = (split == -1 && eps == Eps::plus);
    if (exceptional) return OmegaKind::minus(n_chi);
    // the tilde element of the opposite sign
    return eps == Eps::plus ? OmegaKind::tilde_minus(n_chi) : OmegaKind::tilde_plus(n_chi);
}

}  // namespace

long correction_term(unsigned n_chi, Eps eps, int split, u64 p) {
    require_parity(n_chi, eps);
    const bool exceptional = (split == -1 && eps == Eps::plus);
    if (n_chi == 0) {
        if (exceptional)
            throw ExceptionalTrivialCharacter(
                "the comparison excludes the trivial character in the exceptional case");
        return 0;  // the quotient is trivial at the bottom of the tower
    }
    long ord = 0;
    const OmegaFactors f = omega_factors(comparison_kind(n_chi, eps, split));
    ord += f.gamma_minus_one;  // ord_chi(zeta - 1) = 1 for n_chi >= 1
    for (unsigned m : f.cyclo) {
        // all factors have opposite parity, hence m < n_chi and
        // ord_chi(Phi_{p^m}(zeta)) = p^m - p^{m-1}
        ord += static_cast<long>(checked_pow(p, m) - checked_pow(p, m - 1));
    }
    return 2 * ord;
}

std::string BoundReport::text() const {
    std::string s = "Sel(K, A_f(chi)) length ";
    s += equality_claimed ? "= " : "<= ";
    if (!selmer_finite_at_precision)
        return "Selmer not finite at this precision (t_chi capped at " +
               std::to_string(t_chi.value) + ")";
    s += std::to_string(bound_length);
    s += " (2 t_chi = " + std::to_string(2 * t_chi.value) +
         ", correction = " + std::to_string(correction) + "; " + conditionality + ")";
    if (bound_length == 0) s += " -- Selmer trivial";
    return s;
}

BoundReport bsd_bound(const Valuation& t_chi, unsigned n_chi, Eps eps, int split, u64 p) {
    BoundReport r;
    r.p = p;
    r.n_chi = n_chi;
    r.eps = eps;
    r.t_chi = t_chi;
    const bool exceptional = (split == -1 && eps == Eps::plus);
    r.equality_claimed = !exceptional;
    r.conditionality = "conditional on the definite BSD formula at finite level";
    if (!t_chi.is_finite()) {
        r.selmer_finite_at_precision = false;
        r.bound_length = 0;
        return r;
    }
    r.correction = correction_term(n_chi, eps, split, p);
    r.bound_length = 2 * t_chi.value + r.correction;
    return r;
}

bool cross_check_correction(unsigned n_chi, Eps eps, int split, u64 p, unsigned k) {
    const long closed = correction_term(n_chi, eps, split, p);
    if (n_chi == 0) return closed == 0;
    const OmegaKind kind = comparison_kind(n_chi, eps, split);
    const IwasawaElement& elem = omega_element(kind, n_chi, p, k);
    const CyclotomicValue value = evaluate_character(elem, n_chi);
    const Valuation v = ord_pi(value, k);
    if (!v.is_finite())
        throw PrecisionTooLow("CAP at " + std::to_string(v.value) +
                              " hides the correction; raise k");
    return closed == 2 * v.value;
}

}  // namespace iwa

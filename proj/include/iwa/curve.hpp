#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "iwa/numutil.hpp"
#include "iwa/sign.hpp"

namespace iwa {

struct WeierstrassCurve {
    i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

enum class ReductionType { ordinary, supersingular };

/// Decidability limits of the running hypotheses: these clauses concern the
/// mod-p Galois representation and are not computable from the curve data
/// alone, so they are carried as user assertions (default true) and echoed
/// in every report.
struct CurveAssertions {
    bool irreducible_mod_p = true;
    bool ramification_Nminus = true;
    bool inertia_Nplus = true;
    bool h_K_coprime = true;
};

/// a_ell = ell + 1 - #E(F_ell) by direct enumeration; requires good
/// reduction at ell (the caller checks ell against the conductor).
/// Desk-scale bound ell <= 10^6.
i64 trace_of_frobenius(const WeierstrassCurve& curve, u64 ell);

/// Kronecker symbol (D_K / ell): +1 split, -1 inert, 0 ramified.
int kronecker_split(i64 D_K, i64 ell);

/// Half the unit count of the order of discriminant D_K.
unsigned unit_count_half(i64 D_K);

/// u_p = (p - eps_K(p)) / u_K. Throws RamifiedP when eps_K(p) = 0.
u64 u_p_factor(u64 p, int eps_p, unsigned u_K);

class CurveContext {
public:
    static CurveContext build(const WeierstrassCurve& curve, u64 N, i64 D_K, u64 p,
                              CurveAssertions assertions = {},
                              std::optional<ReductionType> expected_reduction = std::nullopt);

    const WeierstrassCurve& curve() const { return curve_; }
    u64 N() const { return N_; }
    u64 N_plus() const { return N_plus_; }
    u64 N_minus() const { return N_minus_; }
    i64 D_K() const { return D_K_; }
    u64 p() const { return p_; }
    i64 a_p() const { return a_p_; }
    int eps_p() const { return eps_p_; }  // eps_K(p)
    unsigned u_K() const { return u_K_; }
    u64 u_p() const { return u_p_; }
    ReductionType reduction() const { return reduction_; }
    bool p_inert() const { return eps_p_ == -1; }
    const CurveAssertions& assertions() const { return assertions_; }

    /// Cached a_ell; BadReduction when ell | N.
    i64 a_ell(u64 ell) const;

    bool exceptional_capable() const {
        return reduction_ == ReductionType::supersingular && p_inert();
    }

private:
    CurveContext() : a_cache_(std::make_shared<ACache>()) {}

    struct ACache {
        std::map<u64, i64> values;
        std::mutex mutex;
    };

    WeierstrassCurve curve_;
    u64 N_ = 0, N_plus_ = 1, N_minus_ = 1;
    i64 D_K_ = 0;
    u64 p_ = 0;
    i64 a_p_ = 0;
    int eps_p_ = 0;
    unsigned u_K_ = 1;
    u64 u_p_ = 0;
    ReductionType reduction_ = ReductionType::ordinary;
    CurveAssertions assertions_;

    std::shared_ptr<ACache> a_cache_;  // shared by copies of the context
};

/// Definition of the exceptional quadruple: supersingular reduction,
/// p inert in K, eps = +.
bool is_exceptional(const CurveContext& ctx, Eps eps);

}  // namespace iwa

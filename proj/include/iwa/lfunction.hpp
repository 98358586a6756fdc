#pragma once

#include <optional>
#include <vector>

#include "iwa/cyclotomic.hpp"
#include "iwa/iwasawa.hpp"
#include "iwa/points.hpp"
#include "iwa/residue.hpp"
#include "iwa/sign.hpp"

namespace iwa {

/// A finite-order character of the anticyclotomic Galois group, given by
/// its conductor exponent. gamma maps to the canonical primitive
/// p^n_chi-th root raised to zeta_exponent (default the root itself;
/// other choices are Galois conjugates and share all valuations).
struct Character {
    unsigned n_chi = 0;
    u64 zeta_exponent = 1;
};

/// Membership of a character in the signed class Xi_p^eps: nontrivial
/// characters belong to the class of their conductor parity; the trivial
/// character belongs to Xi_p^- exactly when p is inert.
bool in_sign_class(unsigned n_chi, int split, Eps eps);

enum class TowerMode { ordinary, supersingular };

struct DivisibilityCertificate {
    unsigned n = 0;
    bool ok = false;
    long obstruction = -1;
    std::optional<IwasawaElement> witness;  // omega_n^eps * theta_n = omega_n * witness
};

struct RecursionCertificate {
    unsigned m = 0;  // theta_{m+1} = -Phi_{p^m} theta_{m-1} mod omega_m
    bool ok = false;
};

struct NormCompatCertificate {
    Eps eps = Eps::none;
    unsigned from = 0, to = 0;
    bool ok = false;
};

/// Per-level theta elements with their signed parts and certificates.
/// theta[n] always lives at level n; signed parts are canonical lifts of
/// the Lambda^eps classes, stored at matching-parity levels only.
struct LFunctionTower {
    TowerMode mode = TowerMode::supersingular;
    u64 p = 0;
    unsigned k = 1;
    unsigned n_max = 0;
    int split = -1;
    i64 a_p = 0;
    unsigned u_K = 1;
    u64 c_K = 0;
    u64 seed = 0;
    std::optional<PadicResidue> alpha;  // ordinary unit root
    std::vector<IwasawaElement> theta;
    std::vector<std::optional<IwasawaElement>> signed_plus;
    std::vector<std::optional<IwasawaElement>> signed_minus;
    std::vector<DivisibilityCertificate> divisibility;   // supersingular
    std::vector<RecursionCertificate> recursion;         // supersingular
    std::vector<NormCompatCertificate> norm_compat;

    bool exceptional(Eps eps) const { return split == -1 && eps == Eps::plus; }
    bool certified() const;
};

/// alpha^{-n} sum_sigma (psi(sigma P_{n-1}) - alpha psi(sigma P_n)) sigma.
IwasawaElement theta_ordinary(const PointSequence& seq, unsigned n, const PadicResidue& alpha);

/// sum_j psi(gamma^j P_n) gamma^j.
IwasawaElement theta_supersingular(const PointSequence& seq, unsigned n);

/// Witness for omega_n^eps theta_n in omega_n Lambda, eps = (-1)^n,
/// realized one level up.
DivisibilityCertificate check_divisibility(const IwasawaElement& theta_n, unsigned n, int split);

/// theta_{m+1} + Phi_{p^m} theta_{m-1} = 0 mod (omega_m, p^k), checked at
/// level m+1 (supersingular trace recursion; requires a_p = 0 data).
RecursionCertificate check_recursion(const IwasawaElement& theta_m_plus_1,
                                     const IwasawaElement& theta_m_minus_1, unsigned m);

/// The canonical lift of the signed part: the unique X in Lambda^eps with
/// divisor * X = (+-1) theta_n, sign and divisor by the standard case list
/// (exceptional inert-plus divides by omega_n^- instead of its tilde part).
IwasawaElement extract_signed(const IwasawaElement& theta_n, unsigned n, Eps eps, int split);

LFunctionTower build_tower(const PointSequence& seq, unsigned n_max);

/// Projection identities of the signed towers (and plain level projection
/// compatibility in the ordinary case); appended to tower.norm_compat.
std::vector<NormCompatCertificate> check_norm_compat(const LFunctionTower& tower);

/// Per-level full p-adic L-function L_p^eps[n] = x * involution(x) in the
/// appropriate quotient (x = signed part, or theta in the ordinary case).
/// Entries are absent at levels of the wrong parity.
std::vector<std::optional<IwasawaElement>> full_lfunction(const LFunctionTower& tower, Eps eps);

struct SpecializeResult {
    CyclotomicValue value;
    Valuation t;
    unsigned rep_level = 0;
    bool exceptional = false;  // one-sided bound only
};

SpecializeResult specialize(const LFunctionTower& tower, const Character& chi, Eps eps);

}  // namespace iwa

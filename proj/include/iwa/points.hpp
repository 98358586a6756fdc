#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwa/curve.hpp"
#include "iwa/iwasawa.hpp"
#include "iwa/rng.hpp"
#include "iwa/sign.hpp"

namespace iwa {

/// psi-images of a compatible sequence of special points. levels[n][j] is
/// the image of gamma^j acting on the level-n point, an element of Z/p^k.
/// The three trace relations (the P_{-1} identity, the level-0 identity and
/// the fiber-sum recursion) hold exactly by construction.
struct PointSequence {
    u64 p = 0;
    unsigned k = 1;
    unsigned n_max = 0;
    i64 a_p = 0;
    int split = -1;  // eps_K(p)
    unsigned u_K = 1;
    u64 u_p = 0;
    u64 c_K = 0;
    u64 c_minus1 = 0;
    u64 seed = 0;
    std::vector<std::vector<u64>> levels;

    u64 modulus() const { return checked_pow(p, k); }
    bool operator==(const PointSequence& o) const = default;
};

struct SeqParams {
    u64 p = 5;
    unsigned k = 1;
    unsigned n_max = 0;
    i64 a_p = 0;
    int split = -1;
    unsigned u_K = 1;
};

/// Deterministic synthetic sequence: free fiber coordinates come from the
/// seeded generator, the fiber base point is solved; identical (params,
/// seed, c_K) give bit-identical output on every platform.
PointSequence generate_sequence(const SeqParams& params, u64 seed, u64 c_K);
PointSequence generate_sequence(const CurveContext& ctx, unsigned k, unsigned n_max, u64 seed,
                                u64 c_K);

struct TraceCheck {
    std::string relation;  // "P-1", "P-0", "compdef"
    unsigned n = 0;        // level of the fiber (compdef)
    u64 j = 0;             // fiber base index
    bool ok = false;
};

struct TraceReport {
    bool ok = true;
    std::vector<TraceCheck> failures;  // only failing items are listed
    std::size_t checks_run = 0;
};

/// Independent verifier; re-derives every relation from the raw arrays.
TraceReport verify_trace_relations(const PointSequence& seq);

/// Compatible Galois translation: the value at gamma^j moves to
/// gamma^{j+a}, so each theta element picks up an exact factor gamma^a.
PointSequence galois_shift(const PointSequence& seq, i64 a);

/// Synthetic tower of local points in the signed formal-group submodules:
/// values[n] is the generator coordinate in Lambda/(omega_n^eps, p^k),
/// stored as the canonical lift at level n. Trace relations hold on levels
/// of matching parity, with the level-(1,0) norm landing on a unit multiple.
struct LocalPointTower {
    u64 p = 0;
    unsigned k = 1;
    unsigned n_max = 0;
    Eps eps = Eps::plus;
    int split = -1;
    u64 seed = 0;
    std::vector<IwasawaElement> values;
};

LocalPointTower generate_local_tower(u64 p, unsigned k, unsigned n_max, Eps eps, int split,
                                     u64 seed);

struct LocalTowerReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::optional<u64> unit_u;  // the unit in Trace_{1/0}(d_1^-) = u d_0
};

LocalTowerReport verify_local_tower(const LocalPointTower& tower);

}  // namespace iwa

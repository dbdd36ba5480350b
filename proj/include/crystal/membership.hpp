#pragma once

#include <cstddef>
#include <optional>

#include "crystal/root_system.hpp"

namespace crystal {

// Reflection budget for dominance reduction. Reduction terminates on its own
// (each step strictly lowers the degree, which is bounded below on any
// reflection orbit); the cap only turns runaway misuse into an exception.
inline constexpr std::size_t kReflectionCap = 1'000'000;

struct DominantResult {
    Content rep;
    IntVec word;  // residues reflected at, in order
};

// Reflects at the smallest residue with a negative hub entry until the hub
// is dominant. Throws IterationLimitExceeded past `cap` reflections.
DominantResult dominant_rep(const HighestWeight& w, Content c,
                            std::size_t cap = kReflectionCap);

// Whether Lambda - sum c_i alpha_i is a weight of the module with highest
// weight Lambda: negative defect short-circuits to no; otherwise the
// dominant representative must have componentwise nonnegative content.
bool is_weight(const HighestWeight& w, const Content& c);

// A weight whose delta-predecessor (content minus all-ones) is not a weight.
bool is_max_weight(const HighestWeight& w, const Content& c);

// Points of the rank-(e-1) lattice indexing max weights: m determines the
// content (s, s+m_1, ..., s+m_{e-1}) up to the delta-shift s.
struct LatticePoint {
    IntVec m;
    auto operator<=>(const LatticePoint&) const = default;
};

// Hub of any delta-shift of the lattice point m (the hub does not depend on
// s): theta_i = a_i + m_{i-1} + m_{i+1} - 2 m_i with m_0 = 0, indices mod e.
Hub hub_at_lattice(const HighestWeight& w, const LatticePoint& m);

struct MaxWeight {
    LatticePoint m;
    Int s = 0;
    Content content;
};

// The unique max weight over m: scans the delta-shift s upward from the
// smallest candidate until membership holds. s never exceeds
// level * (1 + sum |m_i|)^2 for genuine inputs; crossing that guard (or an
// explicit non-negative `s_cap`) throws SearchLimitExceeded.
MaxWeight max_weight_at(const HighestWeight& w, const LatticePoint& m, Int s_cap = -1);

// Integral solution of the cyclic system hub(m) = target with the gauge
// m_0 = 0. Requires sum(target) == level (else LevelMismatch); returns
// nullopt exactly when the mod-e obstruction sum_j j*(a_j - target_j) != 0.
std::optional<LatticePoint> lattice_from_hub(const HighestWeight& w, const Hub& target);

struct Corner {
    Hub hub;
    LatticePoint m;
};

// A realizable hub that is large in component i (at least level + (e-1)*d)
// and at most -d in every other component. Starts from the profile with
// r + (e-1)(d+1) at i and -(d+1) elsewhere, then repairs the mod-e
// obstruction by moving one unit onto component 0.
Corner corner_weight(const HighestWeight& w, Int d, Int i);

}  // namespace crystal

#pragma once

// Positive-cable classification: diamonds, expansion of a base atlas to the
// cable atlas, underlying-knot bookkeeping, transverse self-linking
// intervals.

#include <utility>
#include <vector>

#include "cabling/atlas.hpp"

namespace cabling {

// The p^2 lattice points reached from the cable peak of (a, b) by fewer than
// p stabilizations of each sign.  Both defining descriptions are exposed;
// tests check they agree point for point.
struct Diamond {
    Int p, q;
    Int peak_rot, peak_tb;  // (pa, pq - |pb - q|)

    // { S+^k S-^l (peak) : 0 <= k, l <= p-1 }, sorted.
    std::vector<std::pair<Int, Int>> points_by_stabilization() const;
    // { (r, t) : pq - |pb - q| - 2p + 2 <= t + |r - peak_rot| <= pq - |pb - q|, t + r odd },
    // enumerated over the same bounding box, sorted.
    std::vector<std::pair<Int, Int>> points_by_inequality() const;

    bool contains(const Int& rot, const Int& tb) const;
};

// Requires gcd(p, |q|) = 1, p >= 1, a + b odd.
Diamond diamond(const Int& p, const Int& q, const Int& a, const Int& b);

struct ExpandResult {
    LegendrianAtlas atlas;
    Int slope_bound;           // the bound q/p was checked against
    bool bound_from_max_tb;    // true when ceil_width was absent and max_tb + 1 gated
};

// The cable atlas for q/p above the width ceiling (max_tb + 1 when the
// ceiling is absent): one generator per base generator with the ruling-curve
// invariants, and the base merge rules lifted by factors of p (one rule per
// base rule and residue pair, relating S+^(p ka + u) S-^(p la + v) of the two
// cable generators).  Two cable classes are isotopic exactly when their
// invariants agree and their underlying classes are isotopic in the base.
ExpandResult expand(const LegendrianAtlas& base, const Int& p, const Int& q);

// The base class under a cable class: stabilization counts divide by p.
LegendrianClass underlying(const LegendrianAtlas& base, const Int& p, const Int& q,
                           const LegendrianClass& cable_class);

struct TransverseInterval {
    Int base_sl;
    std::vector<std::string> base_class;  // generator ids of the base transverse class
    std::vector<Int> cable_sl;            // p values: p*sl + pq - q - 2k, k = 0..p-1
};

// One interval per transverse class of the base atlas with sl >= base_sl_floor.
std::vector<TransverseInterval> transverse_intervals(const LegendrianAtlas& base, const Int& p,
                                                     const Int& q, const Int& base_sl_floor);

}  // namespace cabling

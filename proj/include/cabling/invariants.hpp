#pragma once

// Classical-invariant formulas for cables: tb and rot of ruling curves and
// Legendrian divides, relative Euler pairings along basic-slice paths,
// self-linking, stabilization.

#include "cabling/farey.hpp"
#include "cabling/paths.hpp"

namespace cabling {

struct ClassicalInvariants {
    Int tb;
    Int rot;

    bool operator==(const ClassicalInvariants&) const = default;
};

// Throws unless p >= 1 and gcd(p, |q|) = 1.
void validate_cable(const Int& p, const Int& q);

Slope cable_slope(const Int& p, const Int& q);  // q/p

// tb of a slope-q/p ruling curve (or divide, when s = q/p) on a torus with
// two dividing curves of slope s:  pq - |s . q/p|.
Int ruling_tb(const Slope& s, const Int& p, const Int& q);

// Invariants of the (p,q)-cable ruling curve on a standard neighborhood:
// (pq - |p tb - q|, p rot).  Requires q/p != tb.
ClassicalInvariants cable_of_legendrian(const Int& tb, const Int& rot, const Int& p, const Int& q);

// Poincare dual of the relative Euler class of a fully decorated path:
// sum of eps_i * (a_i (-) a_{i-1}).
LatticeVector euler_pd(const DecoratedPath& d);

// Rotation number of the q/p ruling curve (or divide) on the outermost torus
// of a decorated path that starts at the integer slope of the base standard
// neighborhood:  p * rot_base - (euler_pd(d) . q/p).
//
// Below q/p every edge pairs positively with q/p, so this signed form equals
// the absolute-value sum formula; past the center of a balanced block it is
// the unique extension consistent with the balanced pairing being zero.
Int rot_along_path(const Int& p, const Int& q, const Int& rot_base, const DecoratedPath& d);

inline Int self_linking(const ClassicalInvariants& c) { return c.tb - c.rot; }

inline ClassicalInvariants stabilize(const ClassicalInvariants& c, Sign sign) {
    return {c.tb - 1, c.rot + sign_value(sign)};
}

}  // namespace cabling

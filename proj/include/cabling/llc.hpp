#pragma once

// Legendrian-large-cable arithmetic: existence criterion, rotation numbers,
// the stabilization tree down to Legendrian divides, universal tb bounds,
// and the width bound extracted from the (n, -1)-cable examples.

#include <optional>
#include <variant>
#include <vector>

#include "cabling/invariants.hpp"
#include "cabling/paths.hpp"

namespace cabling {

// A cable class with tb = pq + m sitting in a length-2m balanced block with
// center slope q/p.  decorations_below is the decorated path from the base
// standard neighborhood (an integer slope) up to the block's back face.
struct LargeCable {
    Int p, q;
    Int m;
    BalancedBlock block;
    Int base_rot;
    DecoratedPath decorations_below;

    Int tb() const { return p * q + m; }
    void validate() const;
};

// m = tb - pq when positive, nothing otherwise.
std::optional<Int> required_block(const Int& tb, const Int& p, const Int& q);

// Rotation number of a q/p ruling curve on either face of the block; the
// front and back faces agree because the block is balanced, and both are
// recomputed as a corruption check.
Int llc_rot(const LargeCable& lc);

// Where an m-fold stabilization lands: a Legendrian divide on one of the
// block's center-slope tori.  index is 0 for S- and 1 for S+ relative to the
// block being left (the torus with that many positive slices on its front
// side); decorations is the full decorated path from the base neighborhood
// up to the divide torus.
struct DivideDescriptor {
    int index;
    Int tb, rot;
    DecoratedPath decorations;
};

// For m > 1, the large cable of the sub-block S_sign(B): the slice stripped
// at the front face carries the stabilization sign and the one at the back
// face the opposite (the back-face slice joins decorations_below).  For
// m = 1 the stabilization lands on a divide.
std::variant<LargeCable, DivideDescriptor> llc_stabilize(const LargeCable& lc, Sign sign);

struct TbBound {
    Int bound;
    bool tail_branch;  // true when q/p <= ceil_width gated the tail bound pq + k
    Int tail_k;        // meaningful on the tail branch
};

// tb(L) <= pq + tail(q/p) when q/p <= ceil_width, else tb(L) <= pq + p max_tb - q.
TbBound tb_upper_bound(const Int& p, const Int& q, const Int& ceil_width, const Int& max_tb);

struct YasuiBound {
    Slope width_lower_bound;  // -1 / (2 floor((3-m)/4) - 1)
    Int witness_n_max;        // the (n, -1)-cables with tb -1 exist for n up to this
};

// Width bound for the twisted family with m <= -5 full twists.
YasuiBound yasui_width_bound(const Int& m);

}  // namespace cabling

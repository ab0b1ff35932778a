#include "cabling/llc.hpp"

#include <algorithm>

namespace cabling {

using boost::multiprecision::abs;

void LargeCable::validate() const {
    validate_cable(p, q);
    if (m < 1) throw validation_error("large cable needs m >= 1");
    if (!(block.center == cable_slope(p, q)))
        throw validation_error("block center " + block.center.str() + " differs from the cable slope");
    if (block.half_length != m) throw validation_error("block length does not match tb - pq");
    decorations_below.validate();
    if (decorations_below.last_unsigned)
        throw validation_error("decorations below the block must be fully decorated");
    if (!decorations_below.path.vertices.front().is_integer())
        throw validation_error("decorations below the block must start at an integer slope");
    if (!(decorations_below.path.vertices.back() == block.back_face()))
        throw validation_error("decorations below the block must end at the block's back face " +
                               block.back_face().str());
}

std::optional<Int> required_block(const Int& tb, const Int& p, const Int& q) {
    validate_cable(p, q);
    Int m = tb - p * q;
    if (m <= 0) return std::nullopt;
    return m;
}

namespace {

// Decorated path from the base neighborhood through `count` leading block
// slices (counted from the back face).
DecoratedPath path_through_block(const LargeCable& lc, const Int& count) {
    DecoratedPath d = lc.decorations_below;
    LatticeVector v = lc.block.back_face().vec();
    for (std::size_t j = 0; j < to_size(count); ++j) {
        v = v + lc.block.step;
        d.path.vertices.emplace_back(v.x, v.y);
        d.signs.push_back(lc.block.signs[j]);
    }
    return d;
}

}  // namespace

Int llc_rot(const LargeCable& lc) {
    lc.validate();
    Int back = rot_along_path(lc.p, lc.q, lc.base_rot, lc.decorations_below);
    Int front = rot_along_path(lc.p, lc.q, lc.base_rot, path_through_block(lc, 2 * lc.m));
    if (back != front)
        throw validation_error("front and back ruling-curve rotation numbers disagree; the block decorations are corrupted");
    return back;
}

std::variant<LargeCable, DivideDescriptor> llc_stabilize(const LargeCable& lc, Sign sign) {
    lc.validate();
    Int rot = llc_rot(lc);

    // The back-face slice leaves the block and joins the decorations below;
    // it carries the sign opposite to the stabilization.
    Sign back_slice = opposite(sign);
    DecoratedPath below = lc.decorations_below;
    LatticeVector new_back = lc.block.back_face().vec() + lc.block.step;
    below.path.vertices.emplace_back(new_back.x, new_back.y);
    below.signs.push_back(back_slice);

    if (lc.m == 1) {
        return DivideDescriptor{sign == Sign::plus ? 1 : 0, lc.p * lc.q, rot + sign_value(sign), std::move(below)};
    }

    Int m = lc.m - 1;
    std::vector<Sign> signs(to_size(2 * m), Sign::plus);
    for (std::size_t i = 0; i < to_size(m); ++i) signs[i] = Sign::minus;
    LargeCable inner{lc.p, lc.q, m, balanced_block(lc.block.center, m, std::move(signs), lc.block.step),
                     lc.base_rot, std::move(below)};
    inner.validate();
    return inner;
}

TbBound tb_upper_bound(const Int& p, const Int& q, const Int& ceil_width, const Int& max_tb) {
    Slope slope = cable_slope(p, q);
    if (slope.is_integer()) throw validation_error("tb bound needs a non-integer cable slope");
    if (!(Slope(ceil_width, 1) < slope)) {
        Int k = tail(slope, 0).k;
        return {p * q + k, true, k};
    }
    return {p * q + p * max_tb - q, false, 0};
}

YasuiBound yasui_width_bound(const Int& m) {
    if (m > -5) throw validation_error("the width bound applies to m <= -5");
    Int n = (3 - m) / 4;  // floor, since 3 - m > 0
    return {Slope(-1, 2 * n - 1), n};
}

}  // namespace cabling

#include "cabling/poscable.hpp"

#include <algorithm>

namespace cabling {

using boost::multiprecision::abs;

std::vector<std::pair<Int, Int>> Diamond::points_by_stabilization() const {
    std::vector<std::pair<Int, Int>> out;
    for (Int k = 0; k < p; ++k)
        for (Int l = 0; l < p; ++l) out.emplace_back(peak_rot + k - l, peak_tb - k - l);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Int, Int>> Diamond::points_by_inequality() const {
    std::vector<std::pair<Int, Int>> out;
    for (Int r = peak_rot - (p - 1); r <= peak_rot + (p - 1); ++r) {
        for (Int t = peak_tb - 2 * (p - 1); t <= peak_tb; ++t) {
            Int band = t + abs(r - peak_rot);
            if (band > peak_tb || band < peak_tb - 2 * p + 2) continue;
            if ((t + r) % 2 == 0) continue;
            out.emplace_back(r, t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Diamond::contains(const Int& rot, const Int& tb) const {
    Int band = tb + abs(rot - peak_rot);
    return band <= peak_tb && band >= peak_tb - 2 * p + 2 && (tb + rot) % 2 != 0;
}

Diamond diamond(const Int& p, const Int& q, const Int& a, const Int& b) {
    validate_cable(p, q);
    if ((a + b) % 2 == 0) throw validation_error("diamond base point must have odd coordinate sum");
    return Diamond{p, q, p * a, p * q - abs(p * b - q)};
}

namespace {

Int expansion_bound(const LegendrianAtlas& base, bool& from_max_tb) {
    if (base.ceil_width) {
        from_max_tb = false;
        return *base.ceil_width;
    }
    from_max_tb = true;
    return base.max_tb + 1;
}

void check_expand_preconditions(const LegendrianAtlas& base, const Int& p, const Int& q, Int& bound,
                                bool& from_max_tb) {
    validate_cable(p, q);
    base.validate();
    Slope slope = cable_slope(p, q);
    if (slope.is_integer()) throw validation_error("integer cable slope " + slope.str() + ": the cable is the underlying knot");
    bound = expansion_bound(base, from_max_tb);
    if (!(Slope(bound, 1) < slope))
        throw validation_error("cable slope " + slope.str() + " is not above the width bound " + bound.str() +
                               (from_max_tb ? " (max_tb + 1)" : " (ceil_width)"));
}

}  // namespace

ExpandResult expand(const LegendrianAtlas& base, const Int& p, const Int& q) {
    Int bound;
    bool from_max_tb;
    check_expand_preconditions(base, p, q, bound, from_max_tb);

    LegendrianAtlas cable;
    cable.name = base.name + "_(" + p.str() + "," + q.str() + ")-cable";
    cable.ceil_width = p * q;  // dividing slopes of cable tori are gated by the cabling torus
    cable.generators.reserve(base.generators.size());
    for (const Generator& g : base.generators) {
        ClassicalInvariants inv = cable_of_legendrian(g.tb, g.rot, p, q);
        cable.generators.push_back({g.id, inv.tb, inv.rot});
    }
    cable.max_tb = cable.generators.empty() ? p * q : cable.generators.front().tb;
    for (const Generator& g : cable.generators) cable.max_tb = std::max(cable.max_tb, g.tb);

    for (const MergeRule& r : base.merges)
        for (Int u = 0; u < p; ++u)
            for (Int v = 0; v < p; ++v)
                cable.merges.push_back({r.a, p * r.ka + u, p * r.la + v, r.b, p * r.kb + u, p * r.lb + v});

    cable.validate();
    return {std::move(cable), bound, from_max_tb};
}

LegendrianClass underlying(const LegendrianAtlas& base, const Int& p, const Int& q,
                           const LegendrianClass& cable_class) {
    Int bound;
    bool from_max_tb;
    check_expand_preconditions(base, p, q, bound, from_max_tb);
    if (cable_class.kplus < 0 || cable_class.kminus < 0)
        throw validation_error("negative stabilization count in cable class");
    base.generator(cable_class.gen);  // must exist
    return {cable_class.gen, cable_class.kplus / p, cable_class.kminus / p};
}

std::vector<TransverseInterval> transverse_intervals(const LegendrianAtlas& base, const Int& p,
                                                     const Int& q, const Int& base_sl_floor) {
    Int bound;
    bool from_max_tb;
    check_expand_preconditions(base, p, q, bound, from_max_tb);
    std::vector<TransverseInterval> out;
    for (const TransverseLevel& level : transverse_classes(base, base_sl_floor)) {
        for (const auto& group : level.groups) {
            TransverseInterval interval{level.sl, group, {}};
            for (Int k = 0; k < p; ++k) interval.cable_sl.push_back(p * level.sl + p * q - q - 2 * k);
            out.push_back(std::move(interval));
        }
    }
    return out;
}

}  // namespace cabling

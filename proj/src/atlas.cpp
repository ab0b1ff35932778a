#include "cabling/atlas.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cabling {

using boost::multiprecision::abs;

namespace {

constexpr std::size_t kMaxLatticePoints = std::size_t(1) << 21;

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::string point_str(const Int& rot, const Int& tb) {
    return "(rot " + rot.str() + ", tb " + tb.str() + ")";
}

}  // namespace

void LegendrianAtlas::validate() const {
    std::set<std::string> ids;
    for (const Generator& g : generators) {
        if (!ids.insert(g.id).second) throw validation_error("atlas '" + name + "': duplicate generator id '" + g.id + "'");
        if (g.tb > max_tb)
            throw validation_error("atlas '" + name + "': generator '" + g.id + "' has tb " + g.tb.str() +
                                   " above max_tb " + max_tb.str());
        if ((g.tb + g.rot) % 2 == 0)
            throw validation_error("atlas '" + name + "': generator '" + g.id + "' has even tb + rot " +
                                   point_str(g.rot, g.tb));
    }
    for (std::size_t i = 0; i < merges.size(); ++i) {
        const MergeRule& r = merges[i];
        if (!ids.count(r.a) || !ids.count(r.b))
            throw validation_error("atlas '" + name + "': merge rule " + std::to_string(i) +
                                   " references an unknown generator");
        if (r.ka < 0 || r.la < 0 || r.kb < 0 || r.lb < 0)
            throw validation_error("atlas '" + name + "': merge rule " + std::to_string(i) +
                                   " has negative stabilization counts");
        ClassicalInvariants lhs = invariants_of({r.a, r.ka, r.la});
        ClassicalInvariants rhs = invariants_of({r.b, r.kb, r.lb});
        if (!(lhs == rhs))
            throw validation_error("atlas '" + name + "': merge rule " + std::to_string(i) +
                                   " relates unequal invariants: expected both sides equal, found " +
                                   point_str(lhs.rot, lhs.tb) + " vs " + point_str(rhs.rot, rhs.tb));
    }
}

const Generator& LegendrianAtlas::generator(const std::string& id) const {
    for (const Generator& g : generators)
        if (g.id == id) return g;
    throw validation_error("atlas '" + name + "': unknown generator id '" + id + "'");
}

ClassicalInvariants LegendrianAtlas::invariants_of(const LegendrianClass& c) const {
    if (c.kplus < 0 || c.kminus < 0) throw validation_error("negative stabilization count in class of '" + c.gen + "'");
    const Generator& g = generator(c.gen);
    return {g.tb - c.kplus - c.kminus, g.rot + c.kplus - c.kminus};
}

namespace {

// The classes with invariants (rot, tb): at most one per generator.
std::vector<LegendrianClass> classes_at_point(const LegendrianAtlas& atlas, const Int& rot, const Int& tb) {
    std::vector<LegendrianClass> out;
    for (const Generator& g : atlas.generators) {
        Int depth = g.tb - tb;
        Int twist = rot - g.rot;
        if (depth < 0) continue;
        if ((depth + twist) % 2 != 0) continue;
        Int kplus = (depth + twist) / 2;
        Int kminus = depth - kplus;
        if (kplus < 0 || kminus < 0) continue;
        out.push_back({g.id, kplus, kminus});
    }
    return out;
}

// Quotient of the classes at one lattice point by the applicable merge
// rules.  A rule applies as soon as both sides' stated depths are reached;
// the rule invariant guarantees the surplus stabilizations agree.
std::vector<std::vector<LegendrianClass>> grouped_at_point(const LegendrianAtlas& atlas,
                                                           const std::vector<LegendrianClass>& classes) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i].gen] = i;
    UnionFind uf(classes.size());
    for (const MergeRule& r : atlas.merges) {
        auto ia = index.find(r.a);
        auto ib = index.find(r.b);
        if (ia == index.end() || ib == index.end()) continue;
        const LegendrianClass& ca = classes[ia->second];
        const LegendrianClass& cb = classes[ib->second];
        if (ca.kplus < r.ka || ca.kminus < r.la || cb.kplus < r.kb || cb.kminus < r.lb) continue;
        if (ca.kplus - r.ka != cb.kplus - r.kb || ca.kminus - r.la != cb.kminus - r.lb) continue;
        uf.unite(ia->second, ib->second);
    }
    std::map<std::size_t, std::vector<LegendrianClass>> groups;
    for (std::size_t i = 0; i < classes.size(); ++i) groups[uf.find(i)].push_back(classes[i]);
    std::vector<std::vector<LegendrianClass>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front().gen < b.front().gen; });
    return out;
}

}  // namespace

bool isotopic(const LegendrianAtlas& atlas, const LegendrianClass& c1, const LegendrianClass& c2) {
    ClassicalInvariants i1 = atlas.invariants_of(c1);
    ClassicalInvariants i2 = atlas.invariants_of(c2);
    if (!(i1 == i2)) return false;
    if (c1 == c2) return true;
    std::vector<LegendrianClass> classes = classes_at_point(atlas, i1.rot, i1.tb);
    auto groups = grouped_at_point(atlas, classes);
    for (const auto& group : groups) {
        bool has1 = std::find(group.begin(), group.end(), c1) != group.end();
        bool has2 = std::find(group.begin(), group.end(), c2) != group.end();
        if (has1 || has2) return has1 && has2;
    }
    throw internal_error("isotopy query classes missing from their own lattice point");
}

MountainRange mountain_range(const LegendrianAtlas& atlas, const Int& tb_floor) {
    atlas.validate();
    if (tb_floor > atlas.max_tb)
        throw validation_error("tb floor " + tb_floor.str() + " is above the atlas max tb " + atlas.max_tb.str());

    std::map<std::pair<Int, Int>, std::vector<LegendrianClass>> occupied;  // (-tb, rot) -> classes
    std::size_t budget = kMaxLatticePoints;
    for (const Generator& g : atlas.generators) {
        for (Int tb = g.tb; tb >= tb_floor; --tb) {
            Int depth = g.tb - tb;
            for (Int kplus = 0; kplus <= depth; ++kplus) {
                Int rot = g.rot + kplus - (depth - kplus);
                auto& cell = occupied[{-tb, rot}];
                if (cell.empty() && --budget == 0)
                    throw validation_error("mountain range exceeds the lattice point limit; raise the tb floor");
                cell.push_back({g.id, kplus, depth - kplus});
            }
        }
    }

    MountainRange range{tb_floor, {}};
    range.points.reserve(occupied.size());
    for (auto& [key, classes] : occupied)
        range.points.push_back(RangePoint{key.second, -key.first, {}});

    std::vector<const std::vector<LegendrianClass>*> cells;
    cells.reserve(occupied.size());
    for (auto& [key, classes] : occupied) cells.push_back(&classes);

    // Points are independent; each writes only its own groups.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long long i = 0; i < static_cast<long long>(range.points.size()); ++i)
        range.points[std::size_t(i)].groups = grouped_at_point(atlas, *cells[std::size_t(i)]);

    return range;
}

namespace {

Int rule_depth(const LegendrianAtlas& atlas) {
    Int d = 0;
    for (const MergeRule& r : atlas.merges)
        d = std::max({d, r.ka, r.la, r.kb, r.lb});
    return d;
}

std::vector<std::vector<std::string>> transverse_groups_at(const LegendrianAtlas& atlas, const Int& sl) {
    // Members of the sl line: generators whose cone meets it; the positive
    // stabilization count along the line is fixed per generator.
    std::vector<std::pair<std::string, Int>> members;  // (gen, kplus on the line)
    for (const Generator& g : atlas.generators) {
        Int surplus = (g.tb - g.rot) - sl;
        if (surplus < 0 || surplus % 2 != 0) continue;
        members.emplace_back(g.id, surplus / 2);
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i].first] = i;
    UnionFind uf(members.size());
    for (const MergeRule& r : atlas.merges) {
        auto ia = index.find(r.a);
        auto ib = index.find(r.b);
        if (ia == index.end() || ib == index.end()) continue;
        // Negative-stabilization thresholds are always reached eventually;
        // only the fixed positive counts gate the rule on an sl line.
        if (members[ia->second].second < r.ka || members[ib->second].second < r.kb) continue;
        if (members[ia->second].second - r.ka != members[ib->second].second - r.kb) continue;
        uf.unite(ia->second, ib->second);
    }
    std::map<std::size_t, std::vector<std::string>> groups;
    for (std::size_t i = 0; i < members.size(); ++i) groups[uf.find(i)].push_back(members[i].first);
    std::vector<std::vector<std::string>> out;
    for (auto& [root, ids] : groups) out.push_back(std::move(ids));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace

std::vector<TransverseLevel> transverse_classes(const LegendrianAtlas& atlas, const Int& sl_floor) {
    atlas.validate();
    std::vector<TransverseLevel> out;
    if (atlas.generators.empty()) return out;
    Int max_sl = atlas.generators.front().tb - atlas.generators.front().rot;
    for (const Generator& g : atlas.generators) max_sl = std::max(max_sl, g.tb - g.rot);
    if (max_sl < sl_floor) return out;
    if (max_sl - sl_floor > Int(kMaxLatticePoints))
        throw validation_error("transverse level scan exceeds the limit; raise the sl floor");
    for (Int sl = max_sl; sl >= sl_floor; sl -= 2) {
        auto groups = transverse_groups_at(atlas, sl);
        if (!groups.empty()) out.push_back({sl, std::move(groups)});
    }
    return out;
}

namespace {

// Depth below which per-point quotients repeat along downward diagonals: all
// generator cones have pairwise overlapped by more than every rule threshold.
Int stable_scan_floor(const LegendrianAtlas& atlas) {
    Int min_tb = atlas.generators.front().tb, max_tb_gen = min_tb;
    Int min_rot = atlas.generators.front().rot, max_rot = min_rot;
    for (const Generator& g : atlas.generators) {
        min_tb = std::min(min_tb, g.tb);
        max_tb_gen = std::max(max_tb_gen, g.tb);
        min_rot = std::min(min_rot, g.rot);
        max_rot = std::max(max_rot, g.rot);
    }
    return min_tb - (max_rot - min_rot) - (max_tb_gen - min_tb) - 2 * (rule_depth(atlas) + 1) - 2;
}

}  // namespace

bool is_legendrian_simple(const LegendrianAtlas& atlas) {
    atlas.validate();
    if (atlas.generators.size() <= 1) return true;
    MountainRange range = mountain_range(atlas, stable_scan_floor(atlas));
    for (const RangePoint& p : range.points)
        if (p.groups.size() > 1) return false;
    return true;
}

bool is_transversely_simple(const LegendrianAtlas& atlas) {
    atlas.validate();
    if (atlas.generators.size() <= 1) return true;
    Int min_sl = atlas.generators.front().tb - atlas.generators.front().rot;
    for (const Generator& g : atlas.generators) min_sl = std::min(min_sl, g.tb - g.rot);
    Int floor = min_sl - 2 * (rule_depth(atlas) + 1) - 2;
    for (const TransverseLevel& level : transverse_classes(atlas, floor))
        if (level.groups.size() > 1) return false;
    return true;
}

LegendrianAtlas unknot_atlas() {
    LegendrianAtlas atlas;
    atlas.name = "unknot";
    atlas.max_tb = -1;
    atlas.ceil_width = 0;
    atlas.generators = {{"u", -1, 0}};
    atlas.validate();
    return atlas;
}

LegendrianAtlas twist_knot_atlas(long m) {
    if (m == -1) throw validation_error("twist knot m = -1 is excluded");
    LegendrianAtlas atlas;
    atlas.name = "twist-knot-m" + std::to_string(m);
    if (m >= -2 && m % 2 == 0) {
        atlas.max_tb = -m - 1;
        atlas.generators = {{"L1", Int(-m - 1), 0}};
    } else if (m >= 1) {
        atlas.max_tb = -m - 5;
        atlas.generators = {{"L+", Int(-m - 5), 1}, {"L-", Int(-m - 5), -1}};
        atlas.merges = {{"L+", 0, 1, "L-", 1, 0}};
    } else if (m <= -3 && (-m) % 2 == 1) {
        long count = (-m - 1) / 2;
        atlas.max_tb = -3;
        for (long i = 1; i <= count; ++i) atlas.generators.push_back({"L" + std::to_string(i), -3, 0});
        for (long i = 1; i <= count; ++i)
            for (long j = i + 1; j <= count; ++j) {
                atlas.merges.push_back({"L" + std::to_string(i), 1, 0, "L" + std::to_string(j), 1, 0});
                atlas.merges.push_back({"L" + std::to_string(i), 0, 1, "L" + std::to_string(j), 0, 1});
            }
    } else {
        long count = (m * m + 7) / 8;   // ceil(m^2 / 8)
        long bins = (-m + 3) / 4;       // ceil(-m / 4)
        atlas.max_tb = 1;
        for (long i = 1; i <= count; ++i) atlas.generators.push_back({"L" + std::to_string(i), 1, 0});
        for (long i = 1; i <= count; ++i)
            for (long j = i + 1; j <= count; ++j) {
                // Which generators join first under one-sided stabilization is
                // not pinned by the table; only the bin counts are.
                if ((i - 1) % bins == (j - 1) % bins) {
                    atlas.merges.push_back({"L" + std::to_string(i), 1, 0, "L" + std::to_string(j), 1, 0});
                    atlas.merges.push_back({"L" + std::to_string(i), 0, 1, "L" + std::to_string(j), 0, 1});
                }
                atlas.merges.push_back({"L" + std::to_string(i), 1, 1, "L" + std::to_string(j), 1, 1});
            }
    }
    atlas.validate();
    return atlas;
}

}  // namespace cabling

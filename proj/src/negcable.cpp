#include "cabling/negcable.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cabling {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

std::string torus_str(const Int& i, const Int& j) { return "N_" + i.str() + "^" + j.str(); }

}  // namespace

Slope CablePathContext::a(const Int& i) const {
    if (i <= 0) return Slope(path.vertices.front().num() + i, 1);
    if (i <= n) return path.vertices[to_size(i)];
    if (i <= n + tail_k) {
        LatticeVector v = slope.vec() + (i - n) * tail_step;
        return Slope(v.x, v.y);
    }
    throw validation_error("slope index " + i.str() + " is beyond the tail of the path (n = " + n.str() +
                           ", k = " + tail_k.str() + ")");
}

CablePathContext path_context(const Int& p, const Int& q) {
    if (p >= 1 && gcd(p, abs(q)) != 1)
        throw validation_error("cable parameters (" + p.str() + ", " + q.str() +
                               ") are not coprime; the classification over such reduced slopes (the torus-knot "
                               "slopes (rs-r-s)/n with shared factors) is not encoded by this engine");
    validate_cable(p, q);
    Slope slope = cable_slope(p, q);
    if (slope.is_integer())
        throw validation_error("cable slope " + slope.str() + " is an integer; the (1, q)-cable is the knot itself");
    CablePathContext ctx{slope, shortest_path(slope), 0, 0, {}};
    ctx.n = Int(ctx.path.edge_count());
    Tail t = tail(slope, 0);
    ctx.tail_k = t.k;
    ctx.tail_step = t.step;
    return ctx;
}

std::string cable_generator_id(const Int& i, const Int& j) { return "L" + i.str() + "_" + j.str(); }

namespace {

const TorusDecl* find_torus(const ToriAtlas& ta, const std::pair<Int, Int>& key) {
    for (const TorusDecl& t : ta.tori)
        if (t.i == key.first && t.j == key.second) return &t;
    return nullptr;
}

Slope ceil_slope(const Slope& s) {
    return Slope(-Slope(-s.num(), s.den()).floor(), 1);
}

// Declared decorated path of a torus from a_0 out to a_i (i > 0).
DecoratedPath declared_path(const CablePathContext& ctx, const TorusDecl& t) {
    DecoratedPath d;
    for (Int u = 0; u <= t.i; ++u) d.path.vertices.push_back(ctx.a(u));
    d.signs = t.signs;
    return d;
}

// Cutoff index for in-between mode: the largest i with a_i <= omega.
Int in_between_cutoff(const CablePathContext& ctx, const Slope& omega) {
    Int m = 0;
    for (Int i = 1; i <= ctx.n; ++i) {
        if (ctx.a(i) <= omega) m = i;
        else break;
    }
    return m;
}

std::string canonical_torus_key(const CablePathContext& ctx, const TorusDecl& t) {
    std::string key = t.base_generator + "|";
    if (t.i <= 0) return key + "@" + t.i.str();
    DecoratedPath d = canonical_form(declared_path(ctx, t));
    for (Sign s : d.signs) key += sign_char(s);
    return key;
}

}  // namespace

void validate_tori_atlas(const ToriAtlas& ta) {
    CablePathContext ctx = path_context(ta.p, ta.q);
    ta.base.validate();
    if (!ta.minimally_thickenable)
        throw validation_error("the classification requires the declaration that the knot is " +
                               ctx.slope.str() + "-minimally thickenable");

    Int cutoff = ctx.n + ctx.tail_k;
    if (ta.mode == CableMode::in_between) {
        if (!ta.omega) throw validation_error("in-between mode needs the contact width omega");
        const Slope& w = *ta.omega;
        if (w.is_infinite() || w.is_integer())
            throw validation_error("in-between mode needs a non-integer finite omega");
        if (!(w <= ctx.slope) || !(ctx.slope < ceil_slope(w)))
            throw validation_error("in-between mode needs omega <= q/p < ceil(omega); got omega = " + w.str() +
                                   ", q/p = " + ctx.slope.str());
        cutoff = in_between_cutoff(ctx, w);
        if (!ta.super_commensurating.empty())
            throw validation_error("super-commensurating tori do not occur in in-between mode");
    } else {
        if (ta.omega) throw validation_error("omega is only declared in in-between mode");
        if (ta.base.ceil_width && !(ctx.slope < Slope(*ta.base.ceil_width, 1)))
            throw validation_error("negative mode needs q/p below the declared width ceiling " +
                                   ta.base.ceil_width->str());
    }

    std::set<std::pair<Int, Int>> seen;
    std::map<Int, std::set<std::string>> level_keys;
    for (const TorusDecl& t : ta.tori) {
        std::string name = torus_str(t.i, t.j);
        if (t.j < 1) throw validation_error(name + ": torus index j must be >= 1");
        if (!seen.insert({t.i, t.j}).second) throw validation_error(name + " is declared twice");
        if (t.i > cutoff)
            throw validation_error(name + ": slope index exceeds " + cutoff.str() +
                                   (ta.mode == CableMode::in_between
                                        ? " (the largest index with a_i <= omega)"
                                        : " (n + tail length)"));
        std::size_t expected = t.i <= 0 ? 0 : to_size(t.i);
        if (t.signs.size() != expected)
            throw validation_error(name + ": expected " + std::to_string(expected) + " basic-slice signs, found " +
                                   std::to_string(t.signs.size()));
        const Generator& g = ta.base.generator(t.base_generator);
        Int core_slope = t.i <= 0 ? ctx.a(t.i).num() : ctx.path.vertices.front().num();
        if (g.tb != core_slope)
            throw validation_error(name + ": core generator '" + t.base_generator + "' has tb " + g.tb.str() +
                                   " but the innermost neighborhood slope is " + core_slope.str());
        if (t.i > ctx.n) {
            Int m = t.i - ctx.n;
            std::vector<Sign> trailing(t.signs.end() - to_size(2 * m), t.signs.end());
            balanced_block(ctx.slope, m, trailing, ctx.tail_step);  // balance + adjacency
        }
        if (!t.destabilizes_into.empty()) {
            if (t.i != ctx.n)
                throw validation_error(name + ": destabilization targets are declared only at the divide level");
            for (const auto& target : t.destabilizes_into) {
                const TorusDecl* other = find_torus(ta, target);
                if (!other || !(other->i > ctx.n))
                    throw validation_error(name + ": destabilization target " +
                                           torus_str(target.first, target.second) +
                                           " is not a declared torus above the divide level");
            }
        }
        if (!level_keys[t.i].insert(canonical_torus_key(ctx, t)).second)
            throw validation_error(name + " duplicates another declared torus of the same slope "
                                   "(same core and shuffle-equivalent slices)");
    }

    for (const CommensuratingDecl& c : ta.commensurating) {
        const TorusDecl* a = find_torus(ta, c.a);
        const TorusDecl* b = find_torus(ta, c.b);
        if (!a || !b) throw validation_error("commensurating pair references an undeclared torus");
        if (a->i > ctx.n || b->i > ctx.n)
            throw validation_error("commensurating tori are declared between tori at or below the divide level");
        if (!(c.m < std::min(a->i, b->i)))
            throw validation_error("commensurating slope index m = " + c.m.str() +
                                   " must be below both tori of the pair");
        std::size_t below = c.m < 0 ? to_size(-c.m) : 0;
        if (c.signs_below_a.size() != below || c.signs_below_b.size() != below)
            throw validation_error("commensurating pair at m = " + c.m.str() + " needs " + std::to_string(below) +
                                   " integer-slice signs per side");
    }

    for (const SuperCommensuratingDecl& s : ta.super_commensurating) {
        const TorusDecl* a = find_torus(ta, s.a);
        const TorusDecl* b = find_torus(ta, s.b);
        if (!a || !b) throw validation_error("super-commensurating pair references an undeclared torus");
        if (a->i != ctx.n || b->i != ctx.n)
            throw validation_error("super-commensurating tori contain two tori at the divide level");
        FareyPath outward = path_between(ctx.slope, s.slope);
        if (s.signs_a.size() != outward.edge_count() || s.signs_b.size() != outward.edge_count())
            throw validation_error("super-commensurating pair at slope " + s.slope.str() + " needs " +
                                   std::to_string(outward.edge_count()) + " signs per side");
    }
}

std::vector<StandardCable> standard_cables(const ToriAtlas& ta) {
    validate_tori_atlas(ta);
    CablePathContext ctx = path_context(ta.p, ta.q);
    std::vector<StandardCable> out;
    for (const TorusDecl& t : ta.tori) {
        const Generator& g = ta.base.generator(t.base_generator);
        StandardCable sc{t.i, t.j, CableKind::ruling, {0, 0}};
        if (t.i < ctx.n) {
            sc.kind = CableKind::ruling;
            sc.inv.tb = ta.p * ta.q - abs(product(ctx.a(t.i), ctx.slope));
        } else if (t.i == ctx.n) {
            sc.kind = CableKind::divide;
            sc.inv.tb = ta.p * ta.q;
        } else {
            sc.kind = CableKind::large;
            sc.inv.tb = ta.p * ta.q + (t.i - ctx.n);
        }
        if (t.i <= 0) {
            sc.inv.rot = ta.p * g.rot;
        } else {
            sc.inv.rot = rot_along_path(ta.p, ta.q, g.rot, declared_path(ctx, t));
        }
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const StandardCable& x, const StandardCable& y) {
        return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    });
    return out;
}

namespace {

Int slice_pairing(const CablePathContext& ctx, const Int& u) {
    return abs(product(ominus(ctx.a(u), ctx.a(u - 1)), ctx.slope));
}

struct SideSplit {
    Int k, l;
};

// Stabilization counts from a commensurating torus at index m up to torus t:
// k collects the positive slices (the theorem's convention for this item).
SideSplit commensurating_split(const CablePathContext& ctx, const TorusDecl& t,
                               const CommensuratingDecl& c, const std::vector<Sign>& below) {
    Int total = abs(product(ominus(ctx.a(t.i), ctx.a(c.m)), ctx.slope));
    Int k = 0, sum = 0;
    for (Int u = c.m + 1; u <= t.i; ++u) {
        Sign sign = u <= 0 ? below[to_size(u - c.m - 1)] : t.signs[to_size(u - 1)];
        Int pairing = slice_pairing(ctx, u);
        sum += pairing;
        if (sign == Sign::plus) k += pairing;
    }
    if (sum != total)
        throw validation_error("commensurating arithmetic mismatch at " + torus_str(t.i, t.j) + ": slice sum " +
                               sum.str() + " vs total " + total.str());
    return {k, total - k};
}

// Stabilization counts from the divide torus out to the super-commensurating
// slope: k collects the negative slices of the outward path.
SideSplit super_split(const CablePathContext& ctx, const FareyPath& outward, const std::vector<Sign>& signs) {
    Int total = abs(product(outward.vertices.back(), ctx.slope));
    Int k = 0, sum = 0;
    for (std::size_t e = 0; e < outward.edge_count(); ++e) {
        Int pairing = abs(product(ominus(outward.vertices[e + 1], outward.vertices[e]), ctx.slope));
        sum += pairing;
        if (signs[e] == Sign::minus) k += pairing;
    }
    if (sum != total)
        throw validation_error("super-commensurating arithmetic mismatch at slope " +
                               outward.vertices.back().str() + ": slice sum " + sum.str() + " vs total " +
                               total.str());
    return {k, total - k};
}

std::map<std::pair<Int, Int>, ClassicalInvariants> invariant_table(const ToriAtlas& ta) {
    std::map<std::pair<Int, Int>, ClassicalInvariants> table;
    for (const StandardCable& sc : standard_cables(ta)) table[{sc.i, sc.j}] = sc.inv;
    return table;
}

// A rule is kept only when both sides stabilize to the same invariants; an
// inconsistent declaration is reported verbatim instead of being corrected.
bool rule_consistent(const std::map<std::pair<Int, Int>, ClassicalInvariants>& table,
                     const std::pair<Int, Int>& a, const SideSplit& sa, const std::pair<Int, Int>& b,
                     const SideSplit& sb, std::string& detail) {
    ClassicalInvariants ia = table.at(a);
    ClassicalInvariants ib = table.at(b);
    ClassicalInvariants lhs{ia.tb - sa.k - sa.l, ia.rot + sa.k - sa.l};
    ClassicalInvariants rhs{ib.tb - sb.k - sb.l, ib.rot + sb.k - sb.l};
    if (lhs == rhs) return true;
    std::ostringstream os;
    os << "S+^" << sa.k << " S-^" << sa.l << "(L_" << a.first << "^" << a.second << ") has (tb, rot) = (" << lhs.tb
       << ", " << lhs.rot << ") but S+^" << sb.k << " S-^" << sb.l << "(L_" << b.first << "^" << b.second
       << ") has (" << rhs.tb << ", " << rhs.rot << ")";
    detail = os.str();
    return false;
}

}  // namespace

MergeComputation commensuration_merges(const ToriAtlas& ta) {
    validate_tori_atlas(ta);
    CablePathContext ctx = path_context(ta.p, ta.q);
    auto table = invariant_table(ta);
    MergeComputation out;

    for (const CommensuratingDecl& c : ta.commensurating) {
        const TorusDecl& a = *find_torus(ta, c.a);
        const TorusDecl& b = *find_torus(ta, c.b);
        SideSplit sa = commensurating_split(ctx, a, c, c.signs_below_a);
        SideSplit sb = commensurating_split(ctx, b, c, c.signs_below_b);
        std::string detail;
        if (rule_consistent(table, c.a, sa, c.b, sb, detail)) {
            out.rules.push_back({cable_generator_id(a.i, a.j), sa.k, sa.l, cable_generator_id(b.i, b.j), sb.k, sb.l});
        } else {
            out.flagged.push_back("commensurating torus at a_" + c.m.str() + " for " + torus_str(a.i, a.j) +
                                  ", " + torus_str(b.i, b.j) + " is inconsistent as declared: " + detail);
        }
    }

    for (const SuperCommensuratingDecl& s : ta.super_commensurating) {
        const TorusDecl& a = *find_torus(ta, s.a);
        const TorusDecl& b = *find_torus(ta, s.b);
        FareyPath outward = path_between(ctx.slope, s.slope);
        SideSplit sa = super_split(ctx, outward, s.signs_a);
        SideSplit sb = super_split(ctx, outward, s.signs_b);
        std::string detail;
        if (rule_consistent(table, s.a, sa, s.b, sb, detail)) {
            out.rules.push_back({cable_generator_id(a.i, a.j), sa.k, sa.l, cable_generator_id(b.i, b.j), sb.k, sb.l});
        } else {
            out.flagged.push_back("super-commensurating torus at slope " + s.slope.str() + " for " +
                                  torus_str(a.i, a.j) + ", " + torus_str(b.i, b.j) +
                                  " is inconsistent as declared: " + detail);
        }
    }
    return out;
}

namespace {

// Canonical key of the solid torus obtained from a large torus by peeling
// `plus_stabs` positive and `minus_stabs` negative stabilizations off the
// block (the peeled back-face slices carry the opposite signs).
std::string stripped_key(const CablePathContext& ctx, const TorusDecl& t, const Int& plus_stabs,
                         const Int& minus_stabs) {
    Int depth = plus_stabs + minus_stabs;
    Int below_edges = 2 * ctx.n - t.i;  // edges of the declared path under the block
    DecoratedPath d;
    for (Int u = 0; u <= below_edges + depth; ++u) d.path.vertices.push_back(ctx.a(u));
    d.signs.assign(t.signs.begin(), t.signs.begin() + to_size(below_edges));
    for (Int x = 0; x < plus_stabs; ++x) d.signs.push_back(Sign::minus);
    for (Int x = 0; x < minus_stabs; ++x) d.signs.push_back(Sign::plus);
    DecoratedPath canon = canonical_form(d);
    std::string key = t.base_generator + "|";
    for (Sign s : canon.signs) key += sign_char(s);
    return key;
}

}  // namespace

std::string ClassifyReport::str() const {
    std::ostringstream os;
    for (const std::string& line : lines) os << line << "\n";
    if (!flagged.empty()) {
        os << "inconsistent declarations (excluded from the atlas):\n";
        for (const std::string& f : flagged) os << "  ! " << f << "\n";
    }
    return os.str();
}

Classification classify(const ToriAtlas& ta) {
    validate_tori_atlas(ta);
    CablePathContext ctx = path_context(ta.p, ta.q);
    std::vector<StandardCable> cables = standard_cables(ta);

    Classification result;
    LegendrianAtlas& atlas = result.atlas;
    ClassifyReport& report = result.report;

    atlas.name = ta.base.name + "_(" + ta.p.str() + "," + ta.q.str() + ")-cable";
    for (const StandardCable& sc : cables) atlas.generators.push_back({cable_generator_id(sc.i, sc.j), sc.inv.tb, sc.inv.rot});
    if (atlas.generators.empty()) throw validation_error("no tori declared; nothing to classify");
    atlas.max_tb = atlas.generators.front().tb;
    for (const Generator& g : atlas.generators) atlas.max_tb = std::max(atlas.max_tb, g.tb);

    report.lines.push_back(ta.mode == CableMode::negative
                               ? "mode: negative (q/p = " + ctx.slope.str() + " below the width)"
                               : "mode: in-between (omega = " + ta.omega->str() + ", cutoff index " +
                                     in_between_cutoff(ctx, *ta.omega).str() + ")");
    report.lines.push_back("path: " + ctx.path.str() + "  (n = " + ctx.n.str() + ", tail k = " + ctx.tail_k.str() + ")");
    for (const StandardCable& sc : cables) {
        const char* kind = sc.kind == CableKind::ruling ? "ruling" : sc.kind == CableKind::divide ? "divide" : "large";
        report.lines.push_back("L_" + sc.i.str() + "^" + sc.j.str() + ": " + kind + ", tb = " + sc.inv.tb.str() +
                               ", rot = " + sc.inv.rot.str());
    }
    report.lines.push_back("standard cables are pairwise non-isotopic (no depth-0 identifications declared)");

    MergeComputation mc = commensuration_merges(ta);
    atlas.merges = mc.rules;
    report.flagged = mc.flagged;

    // Divide tori contained in each large torus: every way of stabilizing the
    // large cable down to tb = pq lands on a declared divide generator.
    std::map<std::string, std::pair<Int, Int>> divide_by_key;
    for (const TorusDecl& t : ta.tori)
        if (t.i == ctx.n) divide_by_key[canonical_torus_key(ctx, t)] = {t.i, t.j};
    std::map<std::pair<Int, Int>, std::set<std::pair<Int, Int>>> reached_divides;
    for (const TorusDecl& t : ta.tori) {
        if (!(t.i > ctx.n)) continue;
        Int m = t.i - ctx.n;
        for (Int a = 0; a <= m; ++a) {
            std::string key = stripped_key(ctx, t, a, m - a);
            auto hit = divide_by_key.find(key);
            if (hit == divide_by_key.end()) {
                report.flagged.push_back("S+^" + a.str() + " S-^" + (m - a).str() + "(L_" + t.i.str() + "^" +
                                         t.j.str() + ") lands on a divide torus that is not declared");
                continue;
            }
            atlas.merges.push_back({cable_generator_id(t.i, t.j), a, m - a,
                                    cable_generator_id(hit->second.first, hit->second.second), 0, 0});
            reached_divides[hit->second].insert({t.i, t.j});
        }
    }

    // Large cables whose stripped blocks coincide become isotopic while their
    // tb stays above pq.
    std::vector<const TorusDecl*> large;
    for (const TorusDecl& t : ta.tori)
        if (t.i > ctx.n) large.push_back(&t);
    for (std::size_t x = 0; x < large.size(); ++x) {
        for (std::size_t y = x + 1; y < large.size(); ++y) {
            const TorusDecl& t1 = *large[x];
            const TorusDecl& t2 = *large[y];
            Int m1 = t1.i - ctx.n, m2 = t2.i - ctx.n;
            for (Int d1 = 0; d1 < m1; ++d1) {
                Int d2 = d1 + m2 - m1;
                if (d2 < 0 || d2 >= m2) continue;
                for (Int a1 = 0; a1 <= d1; ++a1)
                    for (Int a2 = 0; a2 <= d2; ++a2)
                        if (stripped_key(ctx, t1, a1, d1 - a1) == stripped_key(ctx, t2, a2, d2 - a2))
                            atlas.merges.push_back({cable_generator_id(t1.i, t1.j), a1, d1 - a1,
                                                    cable_generator_id(t2.i, t2.j), a2, d2 - a2});
            }
        }
    }

    // Destabilization facts (read from the declarations, checked against the
    // divide tori actually reached above).
    for (const TorusDecl& t : ta.tori) {
        if (t.i != ctx.n) continue;
        if (t.destabilizes_into.empty()) {
            report.lines.push_back("L_" + t.i.str() + "^" + t.j.str() + " does not destabilize");
            continue;
        }
        for (const auto& target : t.destabilizes_into) {
            report.lines.push_back("L_" + t.i.str() + "^" + t.j.str() + " destabilizes into stabilizations of L_" +
                                   target.first.str() + "^" + target.second.str());
            if (!reached_divides[{t.i, t.j}].count(target))
                report.flagged.push_back(torus_str(t.i, t.j) + " declares destabilization into " +
                                         torus_str(target.first, target.second) +
                                         " but no stabilization of that large cable reaches it");
        }
    }
    if (ta.mode == CableMode::in_between)
        report.lines.push_back("all standard cables do not destabilize");
    else
        report.lines.push_back("standard cables with i != n do not destabilize");

    atlas.validate();
    report.lines.push_back(std::string("Legendrian simple: ") + (is_legendrian_simple(atlas) ? "yes" : "no"));
    report.lines.push_back(std::string("transversely simple: ") + (is_transversely_simple(atlas) ? "yes" : "no"));
    return result;
}

}  // namespace cabling

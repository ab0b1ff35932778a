#pragma once

// Finite presentation of a knot type's Legendrian classification: generators
// in the (rot, tb) lattice plus merge rules saying which stabilized classes
// become Legendrian isotopic.  Queries: isotopy decision, mountain ranges,
// transverse quotients, simplicity predicates.
//
// Merge rules are monotone: once S+^ka S-^la (a) = S+^kb S-^lb (b) holds it
// keeps holding after further stabilization of both sides, because
// stabilization is well defined on isotopy classes.
//
// Decision procedure.  All classes with the invariants of the query form a
// finite set (at most one (k+, k-) per generator solves the two linear
// equations); a rule links two of them exactly when both sides' stated
// depths are reached with the same surplus.  The rule invariant (equal
// invariants after the stated stabilizations) forces equal surpluses
// automatically, every relation obtainable from the monotone closure of the
// rules connects classes at a common lattice point, and a chain between two
// classes at a point stays at that point.  Hence the transitive closure of
// the applicable rules at the queried point already is the full saturation
// at the query's stabilization depth, and the decision is exact.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cabling/invariants.hpp"

namespace cabling {

struct Generator {
    std::string id;
    Int tb;
    Int rot;
};

// S+^ka S-^la (a) is Legendrian isotopic to S+^kb S-^lb (b).
struct MergeRule {
    std::string a;
    Int ka, la;
    std::string b;
    Int kb, lb;

    bool operator==(const MergeRule&) const = default;
};

// A generator with stabilization counts; the unit of isotopy queries.
struct LegendrianClass {
    std::string gen;
    Int kplus = 0;
    Int kminus = 0;

    bool operator==(const LegendrianClass&) const = default;
};

class LegendrianAtlas {
public:
    std::string name;
    Int max_tb = 0;
    std::optional<Int> ceil_width;  // ceiling of the contact width, when known
    std::vector<Generator> generators;
    std::vector<MergeRule> merges;

    // Unique ids, tb <= max_tb, tb + rot odd, and every merge rule relating
    // equal invariants after the stated stabilizations.  Diagnostics name the
    // offending generator or rule index with expected vs found (tb, rot).
    void validate() const;

    const Generator& generator(const std::string& id) const;
    ClassicalInvariants invariants_of(const LegendrianClass& c) const;
};

bool isotopic(const LegendrianAtlas& atlas, const LegendrianClass& c1, const LegendrianClass& c2);

// One lattice point of a mountain range: the isotopy classes mapping to
// (rot, tb), grouped by the merge quotient.
struct RangePoint {
    Int rot;
    Int tb;
    std::vector<std::vector<LegendrianClass>> groups;
};

struct MountainRange {
    Int tb_floor;
    std::vector<RangePoint> points;  // sorted by tb descending, then rot ascending
};

MountainRange mountain_range(const LegendrianAtlas& atlas, const Int& tb_floor);

// One self-linking level of the transverse quotient: Legendrian classes up
// to eventual negative stabilization, per Legendrian generator line.
struct TransverseLevel {
    Int sl;
    std::vector<std::vector<std::string>> groups;  // generator ids per transverse class
};

std::vector<TransverseLevel> transverse_classes(const LegendrianAtlas& atlas, const Int& sl_floor);

// True iff every lattice point (resp. self-linking value) carries at most
// one class.  Checked down to a floor below which the per-point quotient is
// stable: past
//     min tb - (rot spread + tb spread) - 2 (max rule depth + 1) - 2
// every pair of generator cones has overlapped by more than every rule
// threshold, so along each downward diagonal the instance set and the
// applicable rule set no longer change and the class counts repeat.
bool is_legendrian_simple(const LegendrianAtlas& atlas);
bool is_transversely_simple(const LegendrianAtlas& atlas);

// Documented fixtures.

// One generator u = (tb -1, rot 0), no merges; ceil_width 0 (the dividing
// slopes of unknot tori approach 0 through complements of stabilized Hopf
// fibers, so the width ceiling is 0 even though max tb is -1).
LegendrianAtlas unknot_atlas();

// The Legendrian classification of the twist knot K_m (m right-handed half
// twists in the clasped annulus), encoded from the known tables:
//   m >= -2 even: one generator (-m-1, 0), Legendrian simple.
//   m >= 1 odd:   two generators (-m-5, +-1) merging after one stabilization
//                 of opposite signs.
//   m <= -3 odd:  -(m+1)/2 generators at (-3, 0); S+^k S-^l of any two are
//                 isotopic iff k >= 1 or l >= 1.
//   m <= -2 even: ceil(m^2/8) generators at (1, 0); their S+ images fall
//                 into ceil(-m/4) classes, likewise S-, and everything with
//                 k, l >= 1 is one class.  The table does not say which
//                 generators join which class first, only the counts, so the
//                 fixture bins generator i into group i mod ceil(-m/4) for
//                 both signs.
// m = -1 is the unknot-like excluded case and is rejected.
LegendrianAtlas twist_knot_atlas(long m);

}  // namespace cabling

#pragma once

// Input-driven engine for the negative-cable and in-between classifications.
//
// The engine never discovers tori, thickenings, or commensurations: the user
// declares which solid tori realize the knot type (with their basic-slice
// signs) and which commensurating / super-commensurating tori exist, and the
// engine carries out the classification arithmetic exactly over that data,
// validating every derived merge rule against the invariant formulas.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cabling/atlas.hpp"
#include "cabling/llc.hpp"

namespace cabling {

// One declared solid torus N_i^j.  Its boundary slope is a_i (a_i = floor of
// q/p plus i for i <= 0, the path vertex for 0 <= i <= n, the continuation
// vertex for n < i <= n + k).  signs lists the basic-slice signs of the
// factorization from the slope-a_0 core neighborhood outward, so it is empty
// for i <= 0 and has i entries otherwise; for i > n the trailing 2(i - n)
// entries are the balanced block around q/p.
struct TorusDecl {
    Int i;
    Int j;  // 1-based among the tori of slope a_i
    std::string base_generator;
    std::vector<Sign> signs;
    std::vector<std::pair<Int, Int>> destabilizes_into;  // declared only at i = n
};

// A maximal commensurating torus of slope a_m inside N_a and N_b.  When
// m < 0 the integer slices between a_m and a_0 are stabilization layers of
// the cores and their signs must be supplied per side.
struct CommensuratingDecl {
    std::pair<Int, Int> a, b;
    Int m;
    std::vector<Sign> signs_below_a, signs_below_b;
};

// A minimal super-commensurating torus of slope s containing both n-level
// tori; the sign lists decorate the minimal path from q/p clockwise to s on
// each side.
struct SuperCommensuratingDecl {
    std::pair<Int, Int> a, b;
    Slope slope;
    std::vector<Sign> signs_a, signs_b;
};

enum class CableMode { negative, in_between };

struct ToriAtlas {
    Int p, q;
    LegendrianAtlas base;
    CableMode mode = CableMode::negative;
    std::optional<Slope> omega;  // required in in-between mode
    bool minimally_thickenable = false;
    std::vector<TorusDecl> tori;
    std::vector<CommensuratingDecl> commensurating;
    std::vector<SuperCommensuratingDecl> super_commensurating;
};

// Slope bookkeeping along the path a_0 ... a_n = q/p and its continuation.
struct CablePathContext {
    Slope slope;
    FareyPath path;
    Int n;
    Int tail_k;
    LatticeVector tail_step;

    Slope a(const Int& i) const;
};

CablePathContext path_context(const Int& p, const Int& q);

void validate_tori_atlas(const ToriAtlas& ta);

enum class CableKind { ruling, divide, large };

struct StandardCable {
    Int i, j;
    CableKind kind;
    ClassicalInvariants inv;
};

std::string cable_generator_id(const Int& i, const Int& j);

// Invariants of the declared standard cables, ordered by (i, j):
// tb = pq - |a_i . q/p| below the divide level, pq at it, pq + (i - n)
// above; rot by the signed Euler pairing along the declared slices.
std::vector<StandardCable> standard_cables(const ToriAtlas& ta);

struct MergeComputation {
    std::vector<MergeRule> rules;
    // Declared relations whose as-written stabilization arithmetic fails the
    // invariant-equality check; they are reported, not guessed at.
    std::vector<std::string> flagged;
};

// Merge rules from the declared commensurating tori (stabilization counts
// split by the positive slices of each side's factorization) and
// super-commensurating tori (split by the negative slices of the outward
// path).
MergeComputation commensuration_merges(const ToriAtlas& ta);

struct ClassifyReport {
    std::vector<std::string> lines;
    std::vector<std::string> flagged;

    std::string str() const;
};

struct Classification {
    LegendrianAtlas atlas;
    ClassifyReport report;
};

// The cable atlas: one generator per standard cable; merges from the
// commensuration data, from the divide tori contained in each large torus
// (every way of stabilizing a large cable down to tb = pq lands on a
// declared divide), and from coinciding stripped blocks between large
// cables.  The report records destabilization facts, distinctness, flags,
// and simplicity verdicts.
Classification classify(const ToriAtlas& ta);

}  // namespace cabling

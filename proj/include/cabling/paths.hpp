#pragma once

// Minimal clockwise Farey paths, continued-fraction-block structure, and
// decorated-path models of tight contact structures on T^2 x I and
// S^1 x D^2 up to shuffle equivalence.
//
// Sign enumeration has two interchangeable kernels: a serial reference and
// an OpenMP one that fans out over independent sign prefixes.  Both produce
// the same list in the same order; tests pin them against each other and
// against a brute-force orbit oracle.

#include <cstddef>
#include <string>
#include <vector>

#include "cabling/farey.hpp"

namespace cabling {

enum class Sign : int { minus = -1, plus = 1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
inline int sign_value(Sign s) { return static_cast<int>(s); }
Sign parse_sign(const std::string& text);

// Vertices a_0 ... a_n, consecutive pairs sharing a Farey edge and strictly
// monotone in the circular clockwise order from a_0.  The constructors in
// this module only build minimal paths (the BFS oracle in the tests checks
// that); validate() checks adjacency and monotonicity.
struct FareyPath {
    std::vector<Slope> vertices;

    std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    void validate() const;
    bool operator==(const FareyPath&) const = default;
    std::string str() const;
};

struct CfbBlock {
    std::size_t start_edge = 0;
    std::size_t edge_count = 0;
    LatticeVector step;  // in the consistently oriented lifts (see decompose_cfb)

    bool operator==(const CfbBlock&) const = default;
};

// Maximal continued fraction blocks; blocks partition the edges.
struct CfbDecomposition {
    std::vector<CfbBlock> blocks;
};

// A minimal path with a basic-slice sign per edge.  When last_unsigned is
// set the path is almost decorated: the meridian-end edge (the one between
// vertices[0] and vertices[1], incident to inf for the solid-torus paths
// built here) carries no sign and signs[j] decorates edge j + 1.
struct DecoratedPath {
    FareyPath path;
    std::vector<Sign> signs;
    bool last_unsigned = false;

    std::size_t signed_edge_count() const { return signs.size(); }
    void validate() const;
    bool operator==(const DecoratedPath&) const = default;
};

// Length-2m continued fraction block with m positive and m negative slices,
// centered at `center`; vertex j of the underlying path is
// center + (j - m) * step.
struct BalancedBlock {
    Slope center;
    Int half_length;  // m >= 1
    LatticeVector step;
    std::vector<Sign> signs;  // 2m entries, balanced

    FareyPath path() const;
    Slope back_face() const;   // center - m * step
    Slope front_face() const;  // center + m * step
    bool operator==(const BalancedBlock&) const = default;
};

struct Tail {
    Int k;                            // edge count of the final block
    LatticeVector step;               // its step
    std::vector<Slope> continuation;  // a_{n+1}, a_{n+2}, ...
};

// Minimal path from floor(target) clockwise to target, by Stern-Brocot
// descent in (floor(target), floor(target) + 1): starting from that pair,
// repeatedly form the mediant, move the left endpoint up when the target is
// clockwise of the mediant and the right endpoint down otherwise, stopping
// when the mediant is the target.  The path is floor(target) followed by
// every successive value of the left endpoint, then the target.  Integer
// targets give the length-0 path.
FareyPath shortest_path(const Slope& target);

// Minimal clockwise path between two arbitrary distinct vertices, obtained
// by moving `from` to inf with a determinant-one basis change (which
// preserves the circular order), solving there, and mapping back.
FareyPath path_between(const Slope& from, const Slope& to);

// Maximal runs of equal consecutive vertex differences.  Differences are
// taken in consistently oriented lifts of the vertices: w_0 is the canonical
// representative of vertices[0] and each subsequent w_i is the lift of
// vertices[i] with product(w_{i-1}, w_i) = -1.  For a path of finite slopes
// this is the plain componentwise difference of canonical representatives.
//
// Soundness/completeness of the equal-difference criterion: a run
// b, b+c, ..., b+kc with det(b, c) = -1 maps to 0, 1, ..., k under the
// lattice basis change sending b to (0,1) and c to (1,0), so it is a
// continued fraction block; conversely the path 0..k has equal differences
// in the standard basis and equality of differences is preserved by any
// linear change of basis, so a block can never straddle a point where the
// differences disagree.
CfbDecomposition decompose_cfb(const FareyPath& path);

// k = edge count of the final block of shortest_path(target), and the
// vertices a_{n+1} ... continuing that block.  By default k continuation
// vertices are produced.
Tail tail(const Slope& target);
Tail tail(const Slope& target, std::size_t continuation_count);

// Shuffle-orbit representative: within each maximal block of the signed part
// of the path, '-' signs come before '+' signs.  Idempotent; two decorated
// paths describe the same tight structure iff canonical forms are equal.
DecoratedPath canonical_form(const DecoratedPath& d);

// All canonical decorated minimal paths from s0 clockwise to s1 (the tight
// minimally twisting structures on T^2 x I with those boundary slopes).
// Count = product over blocks of (block length + 1).
std::vector<DecoratedPath> enumerate_thickened(const Slope& s0, const Slope& s1);
Int count_thickened(const Slope& s0, const Slope& s1);

// All canonical almost-decorated minimal paths from inf clockwise to s (the
// tight structures on S^1 x D^2 with boundary slope s); the edge incident to
// inf is the unsigned one.
std::vector<DecoratedPath> enumerate_solid_torus(const Slope& s);
Int count_solid_torus(const Slope& s);

BalancedBlock balanced_block(const Slope& center, const Int& m, std::vector<Sign> signs);
BalancedBlock balanced_block(const Slope& center, const Int& m, std::vector<Sign> signs,
                             const LatticeVector& step);

// Enumeration kernels over an already-built path.  first_signed_edge is 0
// for fully decorated paths and 1 for almost-decorated ones.
std::vector<DecoratedPath> enumerate_canonical_serial(const FareyPath& path, bool last_unsigned);
std::vector<DecoratedPath> enumerate_canonical_parallel(const FareyPath& path, bool last_unsigned);

}  // namespace cabling

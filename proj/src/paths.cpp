#include "cabling/paths.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cabling {

using boost::multiprecision::abs;

namespace {

// Keeps CLI inputs from requesting astronomically long paths or output lists.
constexpr std::size_t kMaxPathVertices = std::size_t(1) << 22;
constexpr std::size_t kMaxEnumerated = std::size_t(1) << 22;

}  // namespace

Sign parse_sign(const std::string& text) {
    if (text == "+") return Sign::plus;
    if (text == "-") return Sign::minus;
    throw validation_error("malformed sign '" + text + "' (expected '+' or '-')");
}

void FareyPath::validate() const {
    if (vertices.empty()) throw validation_error("empty Farey path");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (!farey_adjacent(vertices[i - 1], vertices[i]))
            throw validation_error("path vertices " + vertices[i - 1].str() + ", " + vertices[i].str() +
                                   " do not share a Farey edge");
    if (vertices.size() < 3) return;
    // Clockwise monotonicity: send the start to inf (determinant-one maps
    // preserve the circular order); the remaining images must be finite and
    // strictly increasing.
    Unimodular m = basis_to_infinity(vertices.front());
    Slope prev = m.apply(vertices[1]);
    if (prev.is_infinite()) throw validation_error("path revisits its start vertex");
    for (std::size_t i = 2; i < vertices.size(); ++i) {
        Slope cur = m.apply(vertices[i]);
        if (cur.is_infinite()) throw validation_error("path revisits its start vertex");
        if (!(prev < cur)) throw validation_error("path is not clockwise monotone");
        prev = cur;
    }
}

std::string FareyPath::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? " " : "") << vertices[i].str();
    return os.str();
}

void DecoratedPath::validate() const {
    path.validate();
    std::size_t expected = path.edge_count();
    if (last_unsigned) {
        if (expected == 0) throw validation_error("almost-decorated path needs at least one edge");
        expected -= 1;
    }
    if (signs.size() != expected)
        throw validation_error("decorated path has " + std::to_string(signs.size()) + " signs for " +
                               std::to_string(expected) + " signed edges");
}

FareyPath BalancedBlock::path() const {
    FareyPath p;
    for (Int j = 0; j <= 2 * half_length; ++j) {
        LatticeVector v = center.vec() + (j - half_length) * step;
        p.vertices.emplace_back(v.x, v.y);
    }
    return p;
}

Slope BalancedBlock::back_face() const {
    LatticeVector v = center.vec() - half_length * step;
    return Slope(v.x, v.y);
}

Slope BalancedBlock::front_face() const {
    LatticeVector v = center.vec() + half_length * step;
    return Slope(v.x, v.y);
}

FareyPath shortest_path(const Slope& target) {
    if (target.is_infinite()) throw validation_error("shortest_path target must be finite");
    if (target.is_integer()) return FareyPath{{target}};

    Int fl = target.floor();
    Slope left(fl, 1), right(fl + 1, 1);
    FareyPath path{{left}};

    // Invariant: left < target < right, both endpoints Farey-adjacent to each
    // other.  P, Q > 0 measure the intersection of the target with the two
    // endpoints; the next mediant equals the target exactly when P == Q.
    // Same-direction moves are batched so the loop runs once per continued
    // fraction digit, but every intermediate left endpoint is a path vertex.
    while (true) {
        Int P = product(target, left);
        Int Q = -product(target, right);
        if (P == Q) {
            path.vertices.push_back(target);
            return path;
        }
        if (P > Q) {
            Int moves = (P - 1) / Q;
            if (Int(path.vertices.size()) + moves > Int(kMaxPathVertices))
                throw validation_error("Farey path for " + target.str() + " exceeds the vertex limit");
            LatticeVector l = left.vec(), r = right.vec();
            for (Int j = 1; j <= moves; ++j) {
                LatticeVector v = l + j * r;
                path.vertices.emplace_back(v.x, v.y);
            }
            left = path.vertices.back();
        } else {
            Int moves = (Q - 1) / P;
            LatticeVector v = left.vec();
            right = Slope(moves * v.x + right.num(), moves * v.y + right.den());
        }
    }
}

FareyPath path_between(const Slope& from, const Slope& to) {
    if (from == to) throw validation_error("path_between endpoints coincide");
    Unimodular m = basis_to_infinity(from);
    Slope image = m.apply(to);
    FareyPath reduced{{Slope::infinity()}};
    if (image.is_integer()) {
        reduced.vertices.push_back(image);
    } else {
        FareyPath rest = shortest_path(image);
        reduced.vertices.insert(reduced.vertices.end(), rest.vertices.begin(), rest.vertices.end());
    }
    Unimodular back = m.inverse();
    FareyPath result;
    result.vertices.reserve(reduced.vertices.size());
    for (const Slope& s : reduced.vertices) result.vertices.push_back(back.apply(s));
    return result;
}

namespace {

// Lifts of the path vertices with product(w_{i-1}, w_i) = -1 throughout.
std::vector<LatticeVector> oriented_lifts(const FareyPath& path) {
    std::vector<LatticeVector> w;
    w.reserve(path.vertices.size());
    for (const Slope& s : path.vertices) {
        LatticeVector v = s.vec();
        if (!w.empty()) {
            Int cross = w.back().x * v.y - w.back().y * v.x;
            if (cross == 1) v = -v;
            else if (cross != -1)
                throw validation_error("path vertices " + s.str() + " not adjacent to predecessor");
        }
        w.push_back(v);
    }
    return w;
}

}  // namespace

CfbDecomposition decompose_cfb(const FareyPath& path) {
    if (path.edge_count() == 0) throw validation_error("decompose_cfb needs a path with at least one edge");
    std::vector<LatticeVector> w = oriented_lifts(path);
    CfbDecomposition out;
    CfbBlock cur{0, 1, w[1] - w[0]};
    for (std::size_t e = 1; e < path.edge_count(); ++e) {
        LatticeVector step = w[e + 1] - w[e];
        if (step == cur.step) {
            cur.edge_count += 1;
        } else {
            out.blocks.push_back(cur);
            cur = CfbBlock{e, 1, step};
        }
    }
    out.blocks.push_back(cur);
    return out;
}

Tail tail(const Slope& target) {
    FareyPath p = shortest_path(target);
    if (p.edge_count() == 0) throw validation_error("tail is defined for non-integer targets");
    CfbBlock last = decompose_cfb(p).blocks.back();
    return tail(target, std::size_t(last.edge_count));
}

Tail tail(const Slope& target, std::size_t continuation_count) {
    FareyPath p = shortest_path(target);
    if (p.edge_count() == 0) throw validation_error("tail is defined for non-integer targets");
    CfbBlock last = decompose_cfb(p).blocks.back();
    Tail t{Int(last.edge_count), last.step, {}};
    LatticeVector v = p.vertices.back().vec();
    for (std::size_t i = 0; i < continuation_count; ++i) {
        v = v + last.step;
        t.continuation.emplace_back(v.x, v.y);
    }
    return t;
}

namespace {

// Blocks of the signed part of a decorated path, as (first sign index, edge
// count) pairs.  For almost-decorated paths the meridian edge is skipped and
// blocks are taken over the remaining sub-path.
std::vector<std::pair<std::size_t, std::size_t>> signed_blocks(const FareyPath& path, bool last_unsigned) {
    std::size_t first_edge = last_unsigned ? 1 : 0;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (path.edge_count() <= first_edge) return out;
    FareyPath sub{std::vector<Slope>(path.vertices.begin() + first_edge, path.vertices.end())};
    for (const CfbBlock& b : decompose_cfb(sub).blocks) out.emplace_back(b.start_edge, b.edge_count);
    return out;
}

}  // namespace

DecoratedPath canonical_form(const DecoratedPath& d) {
    d.validate();
    DecoratedPath out = d;
    for (auto [start, len] : signed_blocks(d.path, d.last_unsigned)) {
        auto first = out.signs.begin() + start;
        std::sort(first, first + len, [](Sign a, Sign b) { return sign_value(a) < sign_value(b); });
    }
    return out;
}

namespace {

Int count_over_blocks(const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
    Int total = 1;
    for (auto [start, len] : blocks) total *= Int(len) + 1;
    return total;
}

// Writes the canonical sign word for one mixed-radix index: digit i is the
// number of '-' signs in block i, most significant digit first.
void decode_signs(const std::vector<std::pair<std::size_t, std::size_t>>& blocks, std::size_t index,
                  std::vector<Sign>& out) {
    std::size_t rest = index;
    std::size_t radix_tail = 1;
    for (auto [start, len] : blocks) radix_tail *= len + 1;
    for (auto [start, len] : blocks) {
        radix_tail /= len + 1;
        std::size_t minus_count = rest / radix_tail;
        rest %= radix_tail;
        for (std::size_t e = 0; e < len; ++e)
            out[start + e] = e < minus_count ? Sign::minus : Sign::plus;
    }
}

std::vector<DecoratedPath> enumerate_canonical(const FareyPath& path, bool last_unsigned, bool parallel) {
    path.validate();
    auto blocks = signed_blocks(path, last_unsigned);
    Int total_int = count_over_blocks(blocks);
    if (total_int > Int(kMaxEnumerated))
        throw validation_error("enumeration would produce " + total_int.str() +
                               " structures; use the count operation");
    std::size_t total = total_int.convert_to<std::size_t>();
    std::size_t sign_count = path.edge_count() - (last_unsigned ? 1 : 0);

    std::vector<DecoratedPath> out(total);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < static_cast<long long>(total); ++i) {
            DecoratedPath d{path, std::vector<Sign>(sign_count, Sign::plus), last_unsigned};
            decode_signs(blocks, std::size_t(i), d.signs);
            out[std::size_t(i)] = std::move(d);
        }
    } else {
        for (std::size_t i = 0; i < total; ++i) {
            DecoratedPath d{path, std::vector<Sign>(sign_count, Sign::plus), last_unsigned};
            decode_signs(blocks, i, d.signs);
            out[i] = std::move(d);
        }
    }
    return out;
}

constexpr std::size_t kParallelThreshold = 4096;

std::vector<DecoratedPath> enumerate_auto(const FareyPath& path, bool last_unsigned) {
    Int total = count_over_blocks(signed_blocks(path, last_unsigned));
    bool parallel = total >= Int(kParallelThreshold);
    return enumerate_canonical(path, last_unsigned, parallel);
}

}  // namespace

std::vector<DecoratedPath> enumerate_canonical_serial(const FareyPath& path, bool last_unsigned) {
    return enumerate_canonical(path, last_unsigned, false);
}

std::vector<DecoratedPath> enumerate_canonical_parallel(const FareyPath& path, bool last_unsigned) {
    return enumerate_canonical(path, last_unsigned, true);
}

std::vector<DecoratedPath> enumerate_thickened(const Slope& s0, const Slope& s1) {
    return enumerate_auto(path_between(s0, s1), false);
}

Int count_thickened(const Slope& s0, const Slope& s1) {
    return count_over_blocks(signed_blocks(path_between(s0, s1), false));
}

namespace {

FareyPath solid_torus_path(const Slope& s) {
    if (s.is_infinite()) throw validation_error("solid-torus boundary slope must be finite");
    FareyPath path{{Slope::infinity()}};
    if (s.is_integer()) {
        path.vertices.push_back(s);
    } else {
        FareyPath rest = shortest_path(s);
        path.vertices.insert(path.vertices.end(), rest.vertices.begin(), rest.vertices.end());
    }
    return path;
}

}  // namespace

std::vector<DecoratedPath> enumerate_solid_torus(const Slope& s) {
    return enumerate_auto(solid_torus_path(s), true);
}

Int count_solid_torus(const Slope& s) {
    return count_over_blocks(signed_blocks(solid_torus_path(s), true));
}

BalancedBlock balanced_block(const Slope& center, const Int& m, std::vector<Sign> signs) {
    if (center.is_infinite() || center.is_integer())
        throw validation_error("balanced_block needs an explicit step for center " + center.str());
    return balanced_block(center, m, std::move(signs), tail(center, 0).step);
}

BalancedBlock balanced_block(const Slope& center, const Int& m, std::vector<Sign> signs,
                             const LatticeVector& step) {
    if (m < 1) throw validation_error("balanced block length must be positive");
    if (m > Int(kMaxPathVertices / 2)) throw validation_error("balanced block length exceeds the limit");
    if (Int(signs.size()) != 2 * m)
        throw validation_error("balanced block of half length " + m.str() + " needs " + (2 * m).str() +
                               " signs");
    Int plus = 0;
    for (Sign s : signs)
        if (s == Sign::plus) plus += 1;
    if (plus * 2 != Int(signs.size()))
        throw validation_error("balanced block signs must have equally many '+' and '-'");
    BalancedBlock block{center, m, step, std::move(signs)};
    FareyPath p = block.path();
    p.validate();  // adjacency of all 2m+1 vertices
    return block;
}

}  // namespace cabling

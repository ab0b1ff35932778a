#pragma once

// Exact slope arithmetic and local Farey-graph structure.
//
// A slope q/p stands for the curve class p*[longitude] + q*[meridian] on a
// torus; the meridian is the slope inf = 1/0.  Two slopes span an edge of
// the Farey graph exactly when their product (the determinant ad - bc) is
// +-1, which is also the minimal geometric intersection number of the two
// curve classes.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "cabling/errors.hpp"

namespace cabling {

using Int = boost::multiprecision::cpp_int;

// An element of Z^2, not necessarily primitive.  Differences of slopes and
// relative Euler class representatives live here.
struct LatticeVector {
    Int x;
    Int y;

    bool operator==(const LatticeVector&) const = default;
    bool is_zero() const { return x == 0 && y == 0; }
    bool is_primitive() const;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Int& k, const LatticeVector& v);
LatticeVector operator-(const LatticeVector& v);

// A primitive vector (num, den) with den >= 0; inf is the unique
// representative (1, 0).  Equality is structural.
class Slope {
public:
    Slope() : num_(0), den_(1) {}

    // Normalizes: den > 0 enforced by sign transfer, gcd divided out.
    // (0, 0) and negative denominators after normalization are rejected.
    Slope(Int num, Int den);

    static Slope infinity() { return Slope(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    LatticeVector vec() const { return {num_, den_}; }

    // Rational order on finite slopes; comparisons against inf are rejected
    // (use the interval helpers in paths for circular order).
    std::strong_ordering operator<=>(const Slope& other) const;
    bool operator==(const Slope& other) const { return num_ == other.num_ && den_ == other.den_; }

    Int floor() const;  // finite slopes only

    std::string str() const;

private:
    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// "q/p" with an optional leading sign, "q" for integers, "inf"/"-inf" for
// the meridian.  Non-reduced and negative-denominator spellings are rejected
// with the normalized form named in the diagnostic.
Slope parse_slope(const std::string& text);

// a/b . c/d = ad - bc.  |product| is the minimal intersection number of the
// two curve classes; |product| = 1 iff the slopes share a Farey edge.
Int product(const Slope& a, const Slope& b);
Int product(const LatticeVector& a, const Slope& b);

bool farey_adjacent(const Slope& a, const Slope& b);

// (a+c)/(b+d) on the canonical representatives.  Inputs must share an edge;
// the result shares an edge with both.
Slope mediant(const Slope& a, const Slope& b);

// a/b (-) c/d = (a-c)/(b-d) on the canonical representatives (inf enters as
// (1, 0)).  For Farey-adjacent inputs the result is primitive.
LatticeVector ominus(const Slope& a, const Slope& b);

enum class ProductSign { non_negative, negative };

// Lemma-level fact: for finite slopes with positive denominators,
// product(a, b) >= 0 iff a >= b.
ProductSign sign_of_product(const Slope& a, const Slope& b);

// A 2x2 integer matrix acting on slope vectors, |det| = 1.  Used to reduce
// arbitrary Farey-path questions to paths that start at inf.
struct Unimodular {
    Int a, b;  // row 0
    Int c, d;  // row 1

    Int det() const { return a * d - b * c; }
    LatticeVector apply(const LatticeVector& v) const;
    Slope apply(const Slope& s) const;
    Unimodular inverse() const;
};

// A determinant-one matrix sending s to inf.
Unimodular basis_to_infinity(const Slope& s);

// Checked narrowing; throws validation_error when out of range.
std::size_t to_size(const Int& v);
long long to_int64(const Int& v);

}  // namespace cabling

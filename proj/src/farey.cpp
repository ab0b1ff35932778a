#include "cabling/farey.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <sstream>
#include <limits>

namespace cabling {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

bool LatticeVector::is_primitive() const {
    if (is_zero()) return false;
    return gcd(abs(x), abs(y)) == 1;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) { return {a.x + b.x, a.y + b.y}; }
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return {a.x - b.x, a.y - b.y}; }
LatticeVector operator*(const Int& k, const LatticeVector& v) { return {k * v.x, k * v.y}; }
LatticeVector operator-(const LatticeVector& v) { return {-v.x, -v.y}; }

Slope::Slope(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_ == 0 && den_ == 0) throw validation_error("slope (0, 0) is not a point of the Farey graph");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 0) {
        num_ = 1;  // inf has the unique representative (1, 0)
        return;
    }
    Int g = gcd(abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::strong_ordering Slope::operator<=>(const Slope& other) const {
    if (is_infinite() || other.is_infinite())
        throw validation_error("rational-order comparison against inf; use circular-interval semantics");
    Int lhs = num_ * other.den_;
    Int rhs = other.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int Slope::floor() const {
    if (is_infinite()) throw validation_error("floor of inf");
    Int q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << "/" << den_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

namespace {

bool parse_int(const std::string& text, Int& out) {
    if (text.empty()) return false;
    std::size_t i = text[0] == '+' || text[0] == '-' ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9') return false;
    out = Int(text);
    return true;
}

}  // namespace

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "-inf") return Slope::infinity();
    std::size_t slash = text.find('/');
    Int num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_int(text, num)) throw validation_error("malformed slope '" + text + "'");
        return Slope(num, 1);
    }
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den))
        throw validation_error("malformed slope '" + text + "'");
    if (den == 0) throw validation_error("slope '" + text + "' has denominator 0; write 'inf'");
    if (den < 0 || gcd(abs(num), abs(den)) != 1) {
        Slope normalized{num, den};
        throw validation_error("slope '" + text + "' is not in normal form; write '" + normalized.str() + "'");
    }
    return Slope(num, den);
}

Int product(const Slope& a, const Slope& b) { return a.num() * b.den() - a.den() * b.num(); }

Int product(const LatticeVector& a, const Slope& b) { return a.x * b.den() - a.y * b.num(); }

bool farey_adjacent(const Slope& a, const Slope& b) { return abs(product(a, b)) == 1; }

Slope mediant(const Slope& a, const Slope& b) {
    if (!farey_adjacent(a, b))
        throw validation_error("mediant of non-adjacent slopes " + a.str() + ", " + b.str());
    return Slope(a.num() + b.num(), a.den() + b.den());
}

LatticeVector ominus(const Slope& a, const Slope& b) { return {a.num() - b.num(), a.den() - b.den()}; }

ProductSign sign_of_product(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite()) throw validation_error("sign_of_product is defined for finite slopes");
    return product(a, b) >= 0 ? ProductSign::non_negative : ProductSign::negative;
}

LatticeVector Unimodular::apply(const LatticeVector& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

Slope Unimodular::apply(const Slope& s) const {
    LatticeVector v = apply(s.vec());
    return Slope(v.x, v.y);
}

Unimodular Unimodular::inverse() const {
    Int dt = det();
    if (dt != 1 && dt != -1) throw internal_error("non-unimodular matrix");
    return {dt * d, dt * -b, dt * -c, dt * a};
}

std::size_t to_size(const Int& v) {
    if (v < 0 || v > Int(std::numeric_limits<std::size_t>::max() / 2))
        throw validation_error("value " + v.str() + " out of range for a size");
    return v.convert_to<std::size_t>();
}

long long to_int64(const Int& v) {
    if (v < Int(std::numeric_limits<long long>::min()) || v > Int(std::numeric_limits<long long>::max()))
        throw validation_error("value " + v.str() + " out of 64-bit range");
    return v.convert_to<long long>();
}

Unimodular basis_to_infinity(const Slope& s) {
    // Rows (x, y) and (-den, num) with x*num + y*den = 1, so det = 1 and
    // (num, den) maps to (1, 0).
    const Int num = s.num(), den = s.den();
    Int old_r = num, r = den;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r, r = t;
        t = old_x - q * x;
        old_x = x, x = t;
        t = old_y - q * y;
        old_y = y, y = t;
    }
    if (old_r < 0) {
        old_x = -old_x;
        old_y = -old_y;
    }
    Unimodular m{old_x, old_y, -den, num};
    if (m.det() != 1 || !(m.apply(s) == Slope::infinity()))
        throw internal_error("basis_to_infinity failed for " + s.str());
    return m;
}

}  // namespace cabling

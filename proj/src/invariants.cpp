#include "cabling/invariants.hpp"

namespace cabling {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

void validate_cable(const Int& p, const Int& q) {
    if (p < 1) throw validation_error("cable parameter p must be positive (cables with p < 0 are cables of -K)");
    if (gcd(p, abs(q)) != 1) throw validation_error("cable parameters must be coprime");
}

Slope cable_slope(const Int& p, const Int& q) {
    validate_cable(p, q);
    return Slope(q, p);
}

Int ruling_tb(const Slope& s, const Int& p, const Int& q) {
    validate_cable(p, q);
    return p * q - abs(product(s, cable_slope(p, q)));
}

ClassicalInvariants cable_of_legendrian(const Int& tb, const Int& rot, const Int& p, const Int& q) {
    validate_cable(p, q);
    if (p * tb == q) throw validation_error("cable slope q/p equals tb; the ruling curve degenerates to a divide");
    return {p * q - abs(p * tb - q), p * rot};
}

LatticeVector euler_pd(const DecoratedPath& d) {
    d.validate();
    if (d.last_unsigned) throw validation_error("euler_pd needs a fully decorated path");
    LatticeVector sum{0, 0};
    for (std::size_t e = 0; e < d.signs.size(); ++e) {
        LatticeVector step = ominus(d.path.vertices[e + 1], d.path.vertices[e]);
        sum = sum + Int(sign_value(d.signs[e])) * step;
    }
    return sum;
}

Int rot_along_path(const Int& p, const Int& q, const Int& rot_base, const DecoratedPath& d) {
    validate_cable(p, q);
    if (!d.path.vertices.front().is_integer())
        throw validation_error("rot_along_path needs a path starting at an integer slope");
    return p * rot_base - product(euler_pd(d), cable_slope(p, q));
}

}  // namespace cabling

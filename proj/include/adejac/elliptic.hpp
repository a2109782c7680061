#pragma once

#include <utility>
#include <vector>

#include "adejac/rational.hpp"

namespace adejac {

// y^2 = x^3 + ax + b over F_p, p > 3 prime, nonsingular.
struct EllipticCurve {
    Int p = 0;
    Int a = 0;
    Int b = 0;
};

EllipticCurve make_elliptic_curve(Int p, Int a, Int b);

struct ECPoint {
    bool infinity = true;
    Int x = 0;
    Int y = 0;

    static ECPoint at_infinity() { return ECPoint{}; }
    bool operator==(const ECPoint& other) const = default;
};

// Affine point, checked to lie on the curve (PointNotOnCurve otherwise).
ECPoint make_point(const EllipticCurve& e, Int x, Int y);

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);
ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p);
ECPoint ec_scalar(const EllipticCurve& e, Int n, const ECPoint& p); // double-and-add

// Least n >= 1 with nP = infinity, by naive repeated addition.
// Guarded to p <= 10^6 (FieldTooLarge).
Int point_order(const EllipticCurve& e, const ECPoint& p);

// All points of E(F_p), infinity first, then affine points in (x, y) order.
std::vector<ECPoint> enumerate_points(const EllipticCurve& e);

// (k, m) with m the order of s and k the order of 2s, which is the order of
// the translation class attached to intersection points s and -s; checks the
// parity rule k = m (m odd), k = m/2 (m even).
std::pair<Int, Int> elliptic_translation_class_order(const EllipticCurve& e, const ECPoint& s);

} // namespace adejac

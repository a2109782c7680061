#include "adejac/elliptic.hpp"

#include <vector>

namespace adejac {

namespace {

constexpr Int kFieldGuard = 1000000;

Int mod(Int a, Int p)
{
    Int r = a % p;
    return r < 0 ? r + p : r;
}

Int mul(Int a, Int b, Int p)
{
    return static_cast<Int>(static_cast<__int128>(a) * b % p);
}

Int inverse(Int a, Int p)
{
    // extended Euclid; a is nonzero mod the prime p
    Int t = 0, new_t = 1;
    Int r = p, new_r = mod(a, p);
    while (new_r != 0) {
        Int q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    require(r == 1, "PointNotOnCurve", "non-invertible denominator in the group law");
    return mod(t, p);
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool on_curve(const EllipticCurve& e, Int x, Int y)
{
    Int lhs = mul(y, y, e.p);
    Int rhs = mod(mul(mul(x, x, e.p), x, e.p) + mul(e.a, x, e.p) + e.b, e.p);
    return lhs == rhs;
}

} // namespace

EllipticCurve make_elliptic_curve(Int p, Int a, Int b)
{
    require(p > 3, "InvalidEllipticCurve", "the field characteristic must be a prime > 3");
    require(p <= kFieldGuard, "FieldTooLarge",
            "field characteristic exceeds the naive-arithmetic guard of 10^6");
    require(is_prime(p), "InvalidEllipticCurve", std::to_string(p) + " is not prime");
    EllipticCurve e{p, mod(a, p), mod(b, p)};
    Int disc = mod(4 * mul(mul(e.a, e.a, p), e.a, p) + 27 * mul(e.b, e.b, p), p);
    require(disc != 0, "InvalidEllipticCurve", "singular curve: 4a^3 + 27b^2 = 0 mod p");
    return e;
}

ECPoint make_point(const EllipticCurve& e, Int x, Int y)
{
    x = mod(x, e.p);
    y = mod(y, e.p);
    require(on_curve(e, x, y), "PointNotOnCurve",
            "(" + std::to_string(x) + ", " + std::to_string(y) + ") does not satisfy the equation");
    return ECPoint{false, x, y};
}

ECPoint ec_neg(const EllipticCurve& e, const ECPoint& p)
{
    if (p.infinity)
        return p;
    return ECPoint{false, p.x, mod(-p.y, e.p)};
}

ECPoint ec_add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q)
{
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;
    if (p.x == q.x && mod(p.y + q.y, e.p) == 0)
        return ECPoint::at_infinity();
    Int lambda;
    if (p.x == q.x) {
        // doubling; p.y != 0 here
        lambda = mul(mod(3 * mul(p.x, p.x, e.p) + e.a, e.p), inverse(mod(2 * p.y, e.p), e.p), e.p);
    } else {
        lambda = mul(mod(q.y - p.y, e.p), inverse(mod(q.x - p.x, e.p), e.p), e.p);
    }
    Int x = mod(mul(lambda, lambda, e.p) - p.x - q.x, e.p);
    Int y = mod(mul(lambda, mod(p.x - x, e.p), e.p) - p.y, e.p);
    return ECPoint{false, x, y};
}

ECPoint ec_scalar(const EllipticCurve& e, Int n, const ECPoint& p)
{
    ECPoint base = p;
    if (n < 0) {
        base = ec_neg(e, base);
        n = -n;
    }
    ECPoint acc = ECPoint::at_infinity();
    while (n > 0) {
        if (n & 1)
            acc = ec_add(e, acc, base);
        base = ec_add(e, base, base);
        n >>= 1;
    }
    return acc;
}

Int point_order(const EllipticCurve& e, const ECPoint& p)
{
    require(e.p <= kFieldGuard, "FieldTooLarge",
            "field characteristic exceeds the naive-arithmetic guard of 10^6");
    if (!p.infinity)
        require(on_curve(e, p.x, p.y), "PointNotOnCurve", "order of a point not on the curve");
    Int order = 1;
    ECPoint acc = p;
    while (!acc.infinity) {
        acc = ec_add(e, acc, p);
        ++order;
    }
    return order;
}

std::vector<ECPoint> enumerate_points(const EllipticCurve& e)
{
    std::vector<ECPoint> points;
    points.push_back(ECPoint::at_infinity());
    for (Int x = 0; x < e.p; ++x)
        for (Int y = 0; y < e.p; ++y)
            if (on_curve(e, x, y))
                points.push_back(ECPoint{false, x, y});
    return points;
}

std::pair<Int, Int> elliptic_translation_class_order(const EllipticCurve& e, const ECPoint& s)
{
    Int m = point_order(e, s);
    Int k = point_order(e, ec_add(e, s, s));
    Int expected = (m % 2 == 0) ? m / 2 : m;
    require(k == expected, "InternalCheckFailed",
            "translation class order " + std::to_string(k) + " does not match the parity rule for m="
                + std::to_string(m));
    return {k, m};
}

} // namespace adejac

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adejac/curve.hpp"
#include "adejac/elliptic.hpp"

namespace adejac {

// Order of a torsion class; infinite order is representable only here, never
// through the finite-field backend.
struct TorsionOrder {
    bool infinite = false;
    Int value = 1;

    static TorsionOrder inf() { return {true, 0}; }
    static TorsionOrder finite(Int v) { return {false, v}; }
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
    bool operator==(const TorsionOrder& other) const = default;
};

// For an A~n curve: per vertex u, the order d_u of the class of
// O_{C_u}(x_u - x_{u+1}) in Pic^0(C_u).  Rational components force d_u = 1.
struct TorsionSpec {
    std::vector<TorsionOrder> orders; // canonical vertex order
};

TorsionSpec make_torsion_spec(const ExtendedADECurve& c, std::vector<TorsionOrder> orders);

// Trivial spec (all orders 1); only valid when every component is rational.
TorsionSpec trivial_torsion_spec(const ExtendedADECurve& c);

// Spec derived from an elliptic witness: every positive-genus component is
// modelled as E with intersection points s and -s, so its translation class
// is the class of 2s.
TorsionSpec torsion_spec_from_elliptic(const ExtendedADECurve& c, const EllipticCurve& e,
                                       const ECPoint& s);

// lcm of the d_u; the order of the translation (L_u) -> (L_u(x_u - x_{u+1})).
TorsionOrder translation_order(const TorsionSpec& spec);

struct CycleReport {
    bool cycle_is_a_type = false; // A~n input: configuration of rational curves
    std::string reduced_type;     // D/E input: the graph type itself
    TorsionOrder lap_count;       // A~n only
    TorsionOrder curve_count;     // A~n: lap_count * |V|
    std::vector<Int> multiplicities; // D/E: the labels along the cycle
    std::string note;
};

// Characteristic cycle of the moduli fibration over this curve.  A~n needs a
// torsion spec (SpecMissing); D/E types reject one (SpecForbidden).
CycleReport char_cycle(const ExtendedADECurve& c, const std::optional<TorsionSpec>& spec);

} // namespace adejac

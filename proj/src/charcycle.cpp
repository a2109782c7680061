#include "adejac/charcycle.hpp"

#include <numeric>

namespace adejac {

TorsionSpec make_torsion_spec(const ExtendedADECurve& c, std::vector<TorsionOrder> orders)
{
    require_valid(c);
    require(static_cast<int>(orders.size()) == c.vertex_count(), "InvalidTorsionSpec",
            "torsion spec must list one order per vertex");
    for (int v = 0; v < c.vertex_count(); ++v) {
        const TorsionOrder& d = orders[static_cast<std::size_t>(v)];
        require(d.infinite || d.value >= 1, "InvalidTorsionSpec", "orders must be >= 1");
        if (c.genera[static_cast<std::size_t>(v)] == 0)
            require(!d.infinite && d.value == 1, "InvalidTorsionSpec",
                    "rational component " + c.graph.vertices[static_cast<std::size_t>(v)]
                        + " has trivial Pic^0, its order must be 1");
        else
            require(d.infinite || d.value >= 2, "InvalidTorsionSpec",
                    "on the positive-genus component "
                        + c.graph.vertices[static_cast<std::size_t>(v)]
                        + " the class of the difference of two distinct points is nontrivial, "
                          "its order must be >= 2");
    }
    return TorsionSpec{std::move(orders)};
}

TorsionSpec trivial_torsion_spec(const ExtendedADECurve& c)
{
    return make_torsion_spec(
        c, std::vector<TorsionOrder>(static_cast<std::size_t>(c.vertex_count()),
                                     TorsionOrder::finite(1)));
}

TorsionSpec torsion_spec_from_elliptic(const ExtendedADECurve& c, const EllipticCurve& e,
                                       const ECPoint& s)
{
    require_valid(c);
    auto [k, m] = elliptic_translation_class_order(e, s);
    bool has_positive_genus = false;
    for (int v = 0; v < c.vertex_count(); ++v)
        has_positive_genus = has_positive_genus || c.genera[static_cast<std::size_t>(v)] > 0;
    if (has_positive_genus)
        require(m > 2, "InvalidTorsionSpec",
                "the witness point must not be 2-torsion: the two intersection points s and -s "
                "would coincide");
    std::vector<TorsionOrder> orders;
    orders.reserve(static_cast<std::size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v)
        orders.push_back(c.genera[static_cast<std::size_t>(v)] == 0 ? TorsionOrder::finite(1)
                                                                    : TorsionOrder::finite(k));
    return make_torsion_spec(c, std::move(orders));
}

TorsionOrder translation_order(const TorsionSpec& spec)
{
    Int k = 1;
    for (const TorsionOrder& d : spec.orders) {
        if (d.infinite)
            return TorsionOrder::inf();
        k = std::lcm(k, d.value);
    }
    return TorsionOrder::finite(k);
}

CycleReport char_cycle(const ExtendedADECurve& c, const std::optional<TorsionSpec>& spec)
{
    require_valid(c);
    CycleReport report;
    if (c.graph.kind == GraphKind::A) {
        require(spec.has_value(), "SpecMissing",
                "A~n characteristic cycles need the translation torsion orders");
        require(static_cast<int>(spec->orders.size()) == c.vertex_count(), "InvalidTorsionSpec",
                "torsion spec must list one order per vertex");
        report.cycle_is_a_type = true;
        report.lap_count = translation_order(*spec);
        if (report.lap_count.infinite)
            report.curve_count = TorsionOrder::inf();
        else
            report.curve_count =
                TorsionOrder::finite(report.lap_count.value * c.vertex_count());
        report.note = "the cycle closes after k laps around the component configuration; with "
                      + std::to_string(c.vertex_count())
                      + " components per lap the usual index conventions for the resulting cycle "
                        "type disagree, so both k and the curve count are reported";
    } else {
        require(!spec.has_value(), "SpecForbidden",
                "torsion orders only apply to A~n curves");
        report.cycle_is_a_type = false;
        report.reduced_type = c.graph.name();
        report.multiplicities.assign(c.graph.labels.data(),
                                     c.graph.labels.data() + c.graph.labels.size());
        report.note = "reduced characteristic cycles have the same type as the curve's graph; "
                      "the general theory of Lagrangian fibrations gives the component labels "
                      "as the multiplicities along the cycle";
    }
    return report;
}

} // namespace adejac

#include "adejac/moduli.hpp"

namespace adejac {

ModuliDescription describe_moduli(const ExtendedADECurve& c, const Polarisation& p, Int chi)
{
    AdmissibilityReport adm = check_assumption_H(c, p, chi);
    if (!adm.pass)
        fail("AssumptionNotSatisfied",
             "polarisation admissibility fails: sum b_o = " + std::to_string(adm.outer_sum)
                 + ", required " + std::to_string(adm.target));

    ModuliDescription desc;
    desc.total_dimension = genus(c);
    desc.group = (c.graph.kind == GraphKind::A) ? "Gm" : "Ga";

    for (int v = 0; v < c.vertex_count(); ++v) {
        if (c.graph.labels[v] != 1)
            continue;
        desc.j_dimension += c.genera[static_cast<std::size_t>(v)];
        desc.j_factors.push_back({c.graph.vertices[static_cast<std::size_t>(v)],
                                  c.genera[static_cast<std::size_t>(v)],
                                  adm.b.values[static_cast<std::size_t>(v)]});
    }

    for (int v = 0; v < c.vertex_count(); ++v) {
        ModuliComponent comp;
        comp.origin_vertex = c.graph.vertices[static_cast<std::size_t>(v)];
        comp.name = "Y_" + comp.origin_vertex;
        comp.base_dimension = desc.j_dimension;
        comp.dimension = desc.j_dimension + 1;
        if (c.graph.labels[v] == 1) {
            comp.kind = ModuliComponent::Kind::P1BundleOverJ;
            comp.reduced = true;
            comp.multiplicity = 1;
            comp.multiplicity_conjectural = false;
            for (int x = 0; x < c.graph.edge_count(); ++x) {
                const Edge& e = c.graph.edges[static_cast<std::size_t>(x)];
                if (e.u != v && e.v != v)
                    continue;
                int other = (e.u == v) ? e.v : e.u;
                comp.sections.push_back({c.points[static_cast<std::size_t>(x)],
                                         "Y_" + c.graph.vertices[static_cast<std::size_t>(other)]});
            }
        } else {
            comp.kind = ModuliComponent::Kind::SingularStratum;
            comp.reduced = false;
            comp.multiplicity = c.graph.labels[v];
            comp.multiplicity_conjectural = true;
        }
        desc.components.push_back(std::move(comp));
    }

    // dual graph of the component configuration: one vertex per Y_v, one
    // edge per intersection locus, which reproduces the curve's graph
    desc.intersection_graph = c.graph;
    for (int v = 0; v < c.vertex_count(); ++v)
        desc.intersection_graph.vertices[static_cast<std::size_t>(v)] =
            "Y_" + c.graph.vertices[static_cast<std::size_t>(v)];
    return desc;
}

SingularLocusDescription singular_locus(const ExtendedADECurve& c)
{
    require_valid(c);
    SingularLocusDescription out;
    Int genus_sum = 0;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.graph.labels[v] == 1)
            genus_sum += c.genera[static_cast<std::size_t>(v)];
    if (c.graph.kind == GraphKind::A) {
        out.finite = true;
        out.strata = c.points;
        out.dimension = genus_sum;
    } else {
        out.finite = false;
        for (int v : c.graph.inner_vertices())
            out.strata.push_back(c.graph.vertices[static_cast<std::size_t>(v)]);
        out.dimension = genus_sum + 1;
    }
    return out;
}

ConsistencyReport consistency_check(const ModuliDescription& desc, const ExtendedADECurve& c)
{
    ConsistencyReport report;

    report.graph_ok = isomorphic(desc.intersection_graph, c.graph);
    require(report.graph_ok, "InconsistentDescription",
            "graph: intersection graph is not isomorphic to the curve's graph");

    Int g = genus(c);
    report.dimensions_ok = desc.total_dimension == g
        && static_cast<int>(desc.components.size()) == c.vertex_count();
    for (const ModuliComponent& comp : desc.components)
        if (comp.dimension != g)
            report.dimensions_ok = false;
    require(report.dimensions_ok, "InconsistentDescription",
            "dimension: component dimensions must all equal the curve genus "
                + std::to_string(g));

    report.sections_ok = true;
    for (const ModuliComponent& comp : desc.components) {
        if (comp.kind != ModuliComponent::Kind::P1BundleOverJ)
            continue;
        int v = c.graph.vertex_index(comp.origin_vertex);
        if (v < 0 || c.graph.degree(v) != static_cast<Int>(comp.sections.size()))
            report.sections_ok = false;
    }
    require(report.sections_ok, "InconsistentDescription",
            "sections: section counts must match vertex degrees");

    bool is_a = c.graph.kind == GraphKind::A;
    report.group_ok = desc.group == (is_a ? "Gm" : "Ga");
    require(report.group_ok, "InconsistentDescription",
            "group: expected " + std::string(is_a ? "Gm" : "Ga"));
    return report;
}

} // namespace adejac

#include <doctest.h>

#include "adejac/curve.hpp"

using namespace adejac;

namespace {

ExtendedADECurve curve(GraphKind kind, int n, std::vector<Int> genera = {})
{
    ExtendedDynkinGraph g = build_graph(kind, n);
    if (genera.empty())
        genera.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    return make_curve(std::move(g), std::move(genera));
}

IntVector unit(const ExtendedADECurve& c, int v)
{
    IntVector z = IntVector::Zero(c.vertex_count());
    z[v] = 1;
    return z;
}

} // namespace

TEST_CASE("validation partitions the vertices and flags bad genera")
{
    ExtendedADECurve doubled = curve(GraphKind::A, 1, {2, 2});
    ValidationReport ok = validate(doubled);
    CHECK(ok.valid);
    CHECK(ok.inner.empty());
    CHECK(ok.outer == std::vector<std::string>{"v0", "v1"});

    ExtendedADECurve bad = curve(GraphKind::D, 4, {0, 0, 1, 0, 0});
    ValidationReport report = validate(bad);
    CHECK_FALSE(report.valid);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues.front().error == "NonRationalMultipleComponent");
    CHECK(report.issues.front().vertex == "v2");
    CHECK_THROWS_AS(genus(bad), DomainError);

    CHECK_THROWS_AS(make_curve(build_graph(GraphKind::A, 2), {0, 0}), DomainError);
}

TEST_CASE("point names are canonical, with #k suffixes on the double edge")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    CHECK(a1.points == std::vector<std::string>{"x_{v0.v1}#0", "x_{v0.v1}#1"});

    ExtendedADECurve a2 = curve(GraphKind::A, 2);
    CHECK(a2.points == std::vector<std::string>{"x_{v0.v1}", "x_{v1.v2}", "x_{v0.v2}"});
}

TEST_CASE("genus formula")
{
    CHECK(genus(curve(GraphKind::A, 1, {2, 2})) == 5);
    CHECK(genus(curve(GraphKind::A, 3, {1, 0, 1, 0})) == 3);
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9))
        CHECK(genus(curve(g.kind, g.rank)) == 1);
}

TEST_CASE("intersection pairing in the lattice")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    CHECK(intersection_number(a1, unit(a1, 0), unit(a1, 1)) == 2);
    CHECK(intersection_number(a1, a1.graph.labels, a1.graph.labels) == 0);

    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = curve(g.kind, g.rank);
        for (int v = 0; v < c.vertex_count(); ++v) {
            IntVector complement = c.graph.labels - unit(c, v);
            CHECK(intersection_number(c, complement, unit(c, v)) == 2);
        }
        CHECK(intersection_number(c, c.graph.labels, c.graph.labels) == 0);
    }
}

TEST_CASE("subcurve enumeration counts and order")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    std::vector<IntVector> all = subcurves(a1, false);
    REQUIRE(all.size() == 4);
    CHECK(all[0].isZero());
    CHECK((all[1][0] == 0 && all[1][1] == 1)); // lexicographic, last coordinate fastest
    CHECK((all[2][0] == 1 && all[2][1] == 0));
    CHECK(all[3] == a1.graph.labels);
    CHECK(subcurves(a1, true).size() == 2);

    CHECK(subcurve_count(curve(GraphKind::D, 4)) == 48);
    CHECK(subcurves(curve(GraphKind::D, 4), false).size() == 48);
    CHECK(subcurve_count(curve(GraphKind::E, 8)) == 302400);
}

TEST_CASE("numerical connectivity")
{
    ConnectivityReport a2 = check_2_connected(curve(GraphKind::A, 2));
    CHECK(a2.ok());
    CHECK(a2.min_pairing == 2);
    CHECK(a2.decompositions == 6); // 2^3 - 2, ordered

    ConnectivityReport d4 = check_2_connected(curve(GraphKind::D, 4));
    CHECK(d4.ok());
    CHECK(d4.min_pairing == 2);

    ExtendedADECurve a2c = curve(GraphKind::A, 2);
    ConnectivityReport one = check_1_connected_complement(a2c, 0);
    CHECK(one.threshold == 1);
    CHECK(one.ok());
    CHECK(one.min_pairing == 1);

    ExtendedADECurve e6 = curve(GraphKind::E, 6);
    for (int v : e6.graph.outer_vertices())
        CHECK(check_1_connected_complement(e6, v).ok());
    ExtendedADECurve d4c = curve(GraphKind::D, 4);
    CHECK(check_1_connected_complement(d4c, 0).ok());
}

TEST_CASE("codimension-one stratum dimensions")
{
    StratumReport doubled = stratum_codimension(curve(GraphKind::A, 1, {2, 2}));
    CHECK(doubled.family_dimension == 4);
    CHECK(doubled.ambient_dimension == 5);
    CHECK(doubled.codimension == 1);

    StratumReport rational = stratum_codimension(curve(GraphKind::D, 5));
    CHECK(rational.family_dimension == 0);
    CHECK(rational.ambient_dimension == 1);
    CHECK(rational.codimension == 1);

    ExtendedDynkinGraph e8 = build_graph(GraphKind::E, 8);
    std::vector<Int> genera(9, 0);
    genera[0] = 3; // the one reduced component
    StratumReport heavy = stratum_codimension(make_curve(std::move(e8), std::move(genera)));
    CHECK(heavy.family_dimension == 3);
    CHECK(heavy.ambient_dimension == 4);
    CHECK(heavy.codimension == 1);
}

#include <doctest.h>

#include <algorithm>

#include "adejac/polarisation.hpp"

using namespace adejac;

namespace {

ExtendedADECurve curve(GraphKind kind, int n)
{
    ExtendedDynkinGraph g = build_graph(kind, n);
    std::vector<Int> genera(static_cast<std::size_t>(g.vertex_count()), 0);
    return make_curve(std::move(g), std::move(genera));
}

Polarisation degrees(const ExtendedADECurve& c, std::vector<Int> values)
{
    std::vector<Rational> d;
    for (Int v : values)
        d.emplace_back(v);
    return make_polarisation(c, std::move(d));
}

} // namespace

TEST_CASE("b-vectors are exact rational ceilings")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    Polarisation line_conic = degrees(a1, {1, 2});
    CHECK(b_vector(a1, line_conic, 1).values == std::vector<Int>{1, 1});
    CHECK(b_vector(a1, line_conic, 4).values == std::vector<Int>{2, 3});

    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = curve(g.kind, g.rank);
        std::vector<Rational> d;
        for (int v = 0; v < c.vertex_count(); ++v)
            d.emplace_back(v + 1, 3);
        BVector b = b_vector(c, make_polarisation(c, d), 1);
        CHECK(std::all_of(b.values.begin(), b.values.end(), [](Int x) { return x == 1; }));
    }

    CHECK_THROWS_AS(b_vector(a1, line_conic, 0), DomainError);
    CHECK_THROWS_AS(b_vector(a1, line_conic, -3), DomainError);
}

TEST_CASE("admissibility on the line-plus-conic model")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    Polarisation p = degrees(a1, {1, 2});

    AdmissibilityReport chi3 = check_assumption_H(a1, p, 3);
    CHECK_FALSE(chi3.pass);
    CHECK(chi3.outer_sum == 3);
    CHECK(chi3.target == 4);
    CHECK(chi3.integral_outer == std::vector<std::string>{"v0", "v1"}); // 3/3 and 6/3 integral

    AdmissibilityReport chi2 = check_assumption_H(a1, p, 2);
    CHECK(chi2.pass);
    CHECK(chi2.outer_sum == 3);
    CHECK(chi2.b.values == std::vector<Int>{1, 2});

    AdmissibilityReport balanced = check_assumption_H(a1, degrees(a1, {1, 1}), 2);
    CHECK_FALSE(balanced.pass);
    CHECK(balanced.integral_outer.size() == 2);
}

TEST_CASE("admissibility is scale invariant")
{
    ExtendedADECurve d4 = curve(GraphKind::D, 4);
    std::vector<Rational> base{Rational(10), Rational(1), Rational(1), Rational(1), Rational(1)};
    // canonical order: v0, v1 leaves; v2 center; e_v0 large
    std::vector<Rational> big{Rational(10), Rational(1), Rational(1), Rational(1), Rational(1)};
    std::swap(big[1], big[2]); // keep the center at 1
    for (Int chi = 1; chi <= 8; ++chi) {
        AdmissibilityReport before = check_assumption_H(d4, Polarisation{base}, chi);
        std::vector<Rational> scaled;
        for (const Rational& d : base)
            scaled.push_back(d * Rational(5, 7));
        AdmissibilityReport after = check_assumption_H(d4, Polarisation{scaled}, chi);
        CHECK(before.pass == after.pass);
        CHECK(before.b.values == after.b.values);
    }
}

TEST_CASE("supporting inequalities require admissibility")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    Polarisation p = degrees(a1, {1, 2});
    SupportingInequalityReport ok = check_lemma_ei(a1, p, 2);
    CHECK(ok.ok());
    CHECK(ok.inner_b_all_one); // vacuous, I empty
    CHECK(ok.cases_checked == 3); // J proper subsets of a 2-element O, f = 0 only

    CHECK_THROWS_AS(check_lemma_ei(a1, p, 3), DomainError);

    // D~4 with one dominant reduced degree: b on the center must be 1
    ExtendedADECurve d4 = curve(GraphKind::D, 4);
    Polarisation q = degrees(d4, {10, 1, 1, 1, 1});
    AdmissibilityReport adm = check_assumption_H(d4, q, 2);
    REQUIRE(adm.pass);
    CHECK(adm.b.values[2] == 1);
    CHECK(check_lemma_ei(d4, q, 2).ok());

    // E~6, unit degrees, chi = 1: 2^|O| subsets J, f in 0..e_I, minus the
    // excluded boundary case: 8 * 10 - 1
    ExtendedADECurve e6 = curve(GraphKind::E, 6);
    Polarisation u = degrees(e6, {1, 1, 1, 1, 1, 1, 1});
    SupportingInequalityReport full = check_lemma_ei(e6, u, 1);
    CHECK(full.ok());
    CHECK(full.inner_b_all_one);
    CHECK(full.cases_checked == 79);
}

TEST_CASE("an admissible polarisation never has integral degree ratios")
{
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = curve(g.kind, g.rank);
        for (Int chi = 1; chi <= 5; ++chi)
            for (Int d0 = 1; d0 <= 3; ++d0) {
                std::vector<Int> values(static_cast<std::size_t>(c.vertex_count()), 1);
                values[0] = d0;
                AdmissibilityReport adm = check_assumption_H(c, degrees(c, values), chi);
                if (adm.pass)
                    CHECK(adm.integral_outer.empty());
            }
    }
}

TEST_CASE("admissible degree search")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    std::vector<Polarisation> found = search_admissible(a1, 2, 3);
    auto has = [&](Int a, Int b) {
        return std::any_of(found.begin(), found.end(), [&](const Polarisation& p) {
            return p.degrees[0] == Rational(a) && p.degrees[1] == Rational(b);
        });
    };
    CHECK(has(1, 2));
    CHECK(has(2, 1));
    CHECK_FALSE(has(1, 1));
    CHECK_FALSE(has(2, 2));
    CHECK_FALSE(has(3, 3));
    // every hit must actually pass, and the list is lexicographically sorted
    for (const Polarisation& p : found)
        CHECK(check_assumption_H(a1, p, 2).pass);
    for (std::size_t k = 1; k < found.size(); ++k) {
        std::vector<Rational> prev = found[k - 1].degrees;
        std::vector<Rational> next = found[k].degrees;
        bool less = std::lexicographical_compare(prev.begin(), prev.end(), next.begin(), next.end());
        CHECK(less);
    }

    ExtendedADECurve a2 = curve(GraphKind::A, 2);
    std::vector<Polarisation> unit = search_admissible(a2, 1, 1);
    REQUIRE(unit.size() == 1);
    CHECK(unit.front().degrees == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});

    // chi = 3 on A~1: vectors proportional to (1,2) have an integral degree
    // ratio and never pass
    std::vector<Polarisation> chi3 = search_admissible(a1, 3, 5);
    CHECK_FALSE(chi3.empty());
    for (const Polarisation& p : chi3) {
        CHECK(check_assumption_H(a1, p, 3).pass);
        CHECK(p.degrees[1] != p.degrees[0] * Rational(2));
    }
}

TEST_CASE("degree bookkeeping")
{
    // for A~n the whole degree is carried by the reduced components
    ExtendedADECurve a3 = curve(GraphKind::A, 3);
    Polarisation p = degrees(a3, {1, 2, 3, 4});
    CHECK(inner_degree(a3, p) == Rational(0));
    CHECK(total_degree(a3, p) == Rational(10));

    ExtendedADECurve d4 = curve(GraphKind::D, 4);
    Polarisation q = degrees(d4, {1, 1, 5, 1, 1});
    CHECK(inner_degree(d4, q) == Rational(10)); // the centre has multiplicity 2
    CHECK(total_degree(d4, q) == Rational(14));

    CHECK_THROWS_AS(make_polarisation(d4, std::vector<Rational>(5, Rational(0))), DomainError);
    CHECK_THROWS_AS(make_polarisation(d4, std::vector<Rational>(4, Rational(1))), DomainError);
}

TEST_CASE("dual parameters for negative Euler characteristic")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    CHECK(dual_parameters(a1, degrees(a1, {1, 2}), 1) == std::vector<Int>{1, 1});
    std::vector<Int> dual = dual_parameters(a1, degrees(a1, {1, 2}), 4);
    CHECK(dual == std::vector<Int>{0, -1}); // b = (2,3)
    // applying the dual twice recovers b
    BVector b = b_vector(a1, degrees(a1, {1, 2}), 4);
    for (std::size_t k = 0; k < dual.size(); ++k)
        CHECK(-dual[k] + 2 == b.values[k]);

    CHECK_THROWS_AS(dual_parameters(a1, degrees(a1, {1, 1}), 2), DomainError);
}

TEST_CASE("chi = 0 is rejected with a dedicated message")
{
    ExtendedADECurve a1 = curve(GraphKind::A, 1);
    try {
        b_vector(a1, degrees(a1, {1, 2}), 0);
        FAIL("expected NonPositiveChi");
    } catch (const DomainError& e) {
        CHECK(e.name() == "NonPositiveChi");
        CHECK(std::string(e.what()).find("semi-stable") != std::string::npos);
    }
}

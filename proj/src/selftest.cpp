#include "adejac/selftest.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "adejac/charcycle.hpp"
#include "adejac/moduli.hpp"
#include "adejac/sheaves.hpp"

namespace adejac::selftest {

namespace {

ExtendedADECurve rational_curve(GraphKind kind, int n)
{
    ExtendedDynkinGraph g = build_graph(kind, n);
    std::vector<Int> genera(static_cast<std::size_t>(g.vertex_count()), 0);
    return make_curve(std::move(g), std::move(genera));
}

Polarisation unit_polarisation(const ExtendedADECurve& c)
{
    return make_polarisation(
        c, std::vector<Rational>(static_cast<std::size_t>(c.vertex_count()), Rational(1)));
}

Polarisation integer_polarisation(const ExtendedADECurve& c, const std::vector<Int>& degrees)
{
    std::vector<Rational> d;
    d.reserve(degrees.size());
    for (Int value : degrees)
        d.emplace_back(value);
    return make_polarisation(c, std::move(d));
}

struct Tally {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            pass = false;
            detail << "FAILED: " << what << "; ";
        }
    }
};

CheckResult finish(const std::string& name, Tally& t, const std::string& summary)
{
    return {name, t.pass, t.pass ? summary : t.detail.str()};
}

// deterministic splitmix-style generator for property samples
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    Int range(Int lo, Int hi) { return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

} // namespace

CheckResult lattice_suite()
{
    Tally t;
    Int graphs = 0;
    Int vectors = 0;
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ++graphs;
        t.expect(labels_satisfy_adjacency_identity(g), g.name() + " label identity");
        NullVectorReport nv = null_vector_check(g);
        t.expect(nv.ok(), g.name() + " kernel/primitivity");
        SeminegativityReport scan = seminegativity_scan(g, 3);
        vectors += scan.vectors_checked;
        t.expect(scan.ok(), g.name() + " seminegativity violations");
    }
    std::ostringstream s;
    s << graphs << " graphs, " << vectors << " lattice vectors scanned, 0 violations";
    return finish("lattice suite", t, s.str());
}

CheckResult polarisation_examples()
{
    Tally t;
    ExtendedADECurve a1 = rational_curve(GraphKind::A, 1);
    Polarisation line_conic = integer_polarisation(a1, {1, 2});
    Polarisation balanced = integer_polarisation(a1, {1, 1});
    for (Int chi = 1; chi <= 30; ++chi) {
        bool pass_12 = check_assumption_H(a1, line_conic, chi).pass;
        t.expect(pass_12 == (chi % 3 != 0), "e=(1,2) admissible iff 3 does not divide chi");
        bool pass_11 = check_assumption_H(a1, balanced, chi).pass;
        t.expect(pass_11 == (chi % 2 == 1), "e=(1,1) admissible iff chi odd");
    }

    Rng rng(20240607);
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = rational_curve(g.kind, g.rank);
        std::vector<Rational> degrees;
        for (int v = 0; v < c.vertex_count(); ++v)
            degrees.emplace_back(rng.range(1, 9), rng.range(1, 4));
        Polarisation p = make_polarisation(c, degrees);
        AdmissibilityReport chi1 = check_assumption_H(c, p, 1);
        t.expect(chi1.pass, g.name() + " chi=1 always admissible");

        for (Int chi = 1; chi <= 6; ++chi) {
            AdmissibilityReport base = check_assumption_H(c, p, chi);
            t.expect(base.outer_sum <= base.target, g.name() + " upper bound on sum b_o");
            std::vector<Rational> scaled;
            Rational lambda(rng.range(1, 9), rng.range(1, 9));
            for (const Rational& d : degrees)
                scaled.push_back(d * lambda);
            AdmissibilityReport after = check_assumption_H(c, make_polarisation(c, scaled), chi);
            t.expect(base.pass == after.pass && base.b.values == after.b.values,
                     g.name() + " scale invariance");
            if (base.pass) {
                SupportingInequalityReport ei = check_lemma_ei(c, p, chi);
                t.expect(ei.ok(), g.name() + " supporting inequalities");
                std::vector<Int> dual = dual_parameters(c, p, chi);
                for (int v = 0; v < c.vertex_count(); ++v)
                    t.expect(dual[static_cast<std::size_t>(v)]
                                 == -base.b.values[static_cast<std::size_t>(v)] + 2,
                             "dual parameter arithmetic");
            }
        }
    }
    return finish("polarisation examples", t, "admissibility patterns and invariances hold");
}

CheckResult classification_sweep()
{
    Tally t;
    Int cases = 0;
    Int stable_total = 0;
    std::vector<ExtendedADECurve> curves;
    for (int n = 1; n <= 4; ++n)
        curves.push_back(rational_curve(GraphKind::A, n));
    curves.push_back(rational_curve(GraphKind::D, 4));
    curves.push_back(rational_curve(GraphKind::D, 5));
    curves.push_back(rational_curve(GraphKind::E, 6));

    for (const ExtendedADECurve& c : curves) {
        Int expected = static_cast<Int>(c.vertex_count()) + c.graph.edge_count();
        for (Int chi = 1; chi <= 4; ++chi) {
            for (const Polarisation& p : search_admissible(c, chi, 3)) {
                ++cases;
                try {
                    // enumerate_stable cross-checks the stable set against the
                    // exactly-one-special family and rejects semistable hits
                    std::vector<StableMarking> stable = enumerate_stable(c, p, chi, 2);
                    stable_total += static_cast<Int>(stable.size());
                    t.expect(static_cast<Int>(stable.size()) == expected,
                             c.graph.name() + " stable count");
                } catch (const DomainError& e) {
                    t.expect(false, c.graph.name() + " chi=" + std::to_string(chi) + ": " + e.what());
                }
            }
        }
    }
    std::ostringstream s;
    s << cases << " (polarisation, chi) cases, " << stable_total << " stable markings matched";
    return finish("classification sweep", t, s.str());
}

CheckResult failure_modes()
{
    Tally t;
    ExtendedADECurve a1 = rational_curve(GraphKind::A, 1);
    Polarisation balanced = integer_polarisation(a1, {1, 1});

    MarkedSheaf split;
    split.o_chi = {1, 3};
    StabilityVerdict v = stability_test(a1, split, balanced);
    t.expect(v.verdict == Verdict::ProperlySemistable, "chi=2 marking (1,3) properly semistable");
    t.expect(v.witness.has_value() && (*v.witness)[0] == 1 && (*v.witness)[1] == 0,
             "witness is the first component");

    MarkedSheaf even;
    even.o_chi = {2, 2};
    t.expect(stability_test(a1, even, balanced).verdict == Verdict::Stable,
             "chi=2 marking (2,2) stable under the balanced polarisation");

    ExtendedADECurve a4 = rational_curve(GraphKind::A, 4);
    Polarisation unit = unit_polarisation(a4);
    std::vector<StableMarking> stable = enumerate_stable_unguarded(a4, unit, 2, 2);
    std::set<std::vector<Int>> line_bundles;
    for (const StableMarking& m : stable)
        if (m.sheaf.i_special.empty() && m.sheaf.t_special.empty())
            line_bundles.insert(m.sheaf.o_chi);
    std::set<std::vector<Int>> expected;
    for (int u = 0; u < 5; ++u) {
        for (int w = u + 1; w < 5; ++w) {
            bool adjacent = (w == u + 1) || (u == 0 && w == 4);
            if (adjacent)
                continue;
            std::vector<Int> chi_values(5, 1);
            chi_values[static_cast<std::size_t>(u)] = 2;
            chi_values[static_cast<std::size_t>(w)] = 2;
            expected.insert(chi_values);
        }
    }
    t.expect(line_bundles == expected,
             "A~4 chi=2 stable line bundles are the non-adjacent +1 pairs");

    MarkedSheaf adjacent;
    adjacent.o_chi = {2, 2, 1, 1, 1};
    StabilityVerdict bad = stability_test(a4, adjacent, unit);
    t.expect(bad.verdict == Verdict::Unstable, "adjacent +1 pair unstable");
    t.expect(bad.witness.has_value() && bad.witness_chi == 1, "complementary chain witness");
    return finish("failure modes", t, "semistable and alternate-polarisation patterns reproduced");
}

CheckResult partition_suite()
{
    Tally t;
    std::vector<Partition> all;
    for (Int n = 1; n <= 12; ++n)
        for (const Partition& p : partitions_of(n))
            all.push_back(p);
    for (const Partition& p : all) {
        Partition d = dual_partition(p);
        t.expect(dual_partition(d) == p, "dual involution");
        Int size_p = 0;
        Int size_d = 0;
        for (Int part : p)
            size_p += part;
        for (Int part : d)
            size_d += part;
        t.expect(size_p == size_d, "dual preserves the size");
        t.expect(square_sum_identity_check(p).equal(), "square-sum identity");
    }
    for (const Partition& p : all)
        for (const Partition& q : all)
            if (!min_sum_identity_check(p, q).equal()) {
                t.expect(false, "sum-min identity");
                break;
            }
    // the gluing-cokernel bound in the ordinary case is the plain product
    for (Int mu = 1; mu <= 6; ++mu) {
        for (Int mw = 1; mw <= 6; ++mw) {
            Partition pu(static_cast<std::size_t>(mu), 1);
            Partition pw(static_cast<std::size_t>(mw), 1);
            t.expect(min_sum_identity_check(pu, pw).lhs == mu * mw, "product form of the bound");
        }
    }
    std::ostringstream s;
    s << all.size() << " partitions, all identities exact";
    return finish("partition suite", t, s.str());
}

CheckResult proof_scan_suite()
{
    Tally t;
    Int families = 0;
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = rational_curve(g.kind, g.rank);
        for (int parts = 1; parts <= 3; ++parts) {
            ProofScanReport report = proof_inequality_scan(c, parts);
            families += report.families_checked;
            t.expect(report.ok, g.name() + " parts=" + std::to_string(parts));
        }
    }
    std::ostringstream s;
    s << families << " families scanned, nonnegative only on the trivial one";
    return finish("proof-inequality scan", t, s.str());
}

CheckResult moduli_suite()
{
    Tally t;
    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        for (Int base_genus : {Int{0}, Int{2}}) {
            ExtendedADECurve c = rational_curve(g.kind, g.rank);
            // put the genus on the first reduced component
            c.genera[static_cast<std::size_t>(c.graph.outer_vertices().front())] = base_genus;
            Polarisation p = unit_polarisation(c);
            ModuliDescription desc = describe_moduli(c, p, 1);
            try {
                consistency_check(desc, c);
            } catch (const DomainError& e) {
                t.expect(false, g.name() + " consistency: " + e.what());
                continue;
            }
            t.expect(desc.total_dimension == genus(c), g.name() + " total dimension");
            bool is_a = g.kind == GraphKind::A;
            t.expect(desc.group == (is_a ? "Gm" : "Ga"), g.name() + " group");
            for (const ModuliComponent& comp : desc.components) {
                if (comp.kind == ModuliComponent::Kind::SingularStratum) {
                    t.expect(!comp.reduced && comp.multiplicity_conjectural && comp.multiplicity > 1,
                             g.name() + " non-reduced component flags");
                } else {
                    t.expect(comp.reduced && comp.multiplicity == 1,
                             g.name() + " reduced component flags");
                }
            }
            SingularLocusDescription locus = singular_locus(c);
            if (is_a) {
                t.expect(locus.finite && static_cast<int>(locus.strata.size()) == g.edge_count(),
                         g.name() + " singular locus points");
                t.expect(locus.dimension == genus(c) - 1, g.name() + " singular locus dimension");
            } else {
                t.expect(!locus.finite
                             && locus.strata.size() == c.graph.inner_vertices().size(),
                         g.name() + " singular locus components");
                t.expect(locus.dimension == genus(c), g.name() + " singular locus dimension");
            }
        }
    }

    // tampering must be caught
    ExtendedADECurve d4 = rational_curve(GraphKind::D, 4);
    ModuliDescription desc = describe_moduli(d4, unit_polarisation(d4), 1);
    ModuliDescription broken_graph = desc;
    broken_graph.intersection_graph.edges.pop_back();
    bool caught = false;
    try {
        consistency_check(broken_graph, d4);
    } catch (const DomainError& e) {
        caught = std::string(e.what()).find("graph") != std::string::npos;
    }
    t.expect(caught, "edge tampering detected");
    ModuliDescription broken_dim = desc;
    broken_dim.components.front().dimension += 1;
    caught = false;
    try {
        consistency_check(broken_dim, d4);
    } catch (const DomainError& e) {
        caught = std::string(e.what()).find("dimension") != std::string::npos;
    }
    t.expect(caught, "dimension tampering detected");
    return finish("moduli descriptions", t, "graph, dimensions, sections and group all consistent");
}

CheckResult characteristic_cycle_suite()
{
    Tally t;
    Int points_checked = 0;
    for (Int p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        for (Int a = 0; a < p; ++a) {
            for (Int b = 0; b < p; ++b) {
                EllipticCurve e{p, a, b};
                Int disc = (4 * a % p * a % p * a % p + 27 * b % p * b % p) % p;
                if (disc == 0)
                    continue;
                for (const ECPoint& s : enumerate_points(e)) {
                    ++points_checked;
                    try {
                        // asserts k = m for m odd, k = m/2 for m even
                        elliptic_translation_class_order(e, s);
                    } catch (const DomainError& err) {
                        t.expect(false, std::string("parity rule: ") + err.what());
                    }
                }
            }
        }
    }

    // group sanity on a sampled curve
    EllipticCurve e = make_elliptic_curve(101, 2, 3);
    std::vector<ECPoint> pts = enumerate_points(e);
    Rng rng(7);
    for (int trial = 0; trial < 64; ++trial) {
        const ECPoint& p1 = pts[static_cast<std::size_t>(rng.range(0, static_cast<Int>(pts.size()) - 1))];
        const ECPoint& p2 = pts[static_cast<std::size_t>(rng.range(0, static_cast<Int>(pts.size()) - 1))];
        const ECPoint& p3 = pts[static_cast<std::size_t>(rng.range(0, static_cast<Int>(pts.size()) - 1))];
        t.expect(ec_add(e, p1, p2) == ec_add(e, p2, p1), "commutativity");
        t.expect(ec_add(e, ec_add(e, p1, p2), p3) == ec_add(e, p1, ec_add(e, p2, p3)),
                 "associativity");
        t.expect(ec_add(e, p1, ECPoint::at_infinity()) == p1, "identity");
        t.expect(ec_add(e, p1, ec_neg(e, p1)).infinity, "inverse");
        t.expect(ec_scalar(e, point_order(e, p1), p1).infinity, "order annihilates");
    }
    for (Int p : {53, 101, 199}) {
        for (Int a = 1; a <= 2; ++a) {
            EllipticCurve curve = make_elliptic_curve(p, a, 1);
            Int group_order = static_cast<Int>(enumerate_points(curve).size());
            for (int trial = 0; trial < 8; ++trial) {
                const std::vector<ECPoint> all = enumerate_points(curve);
                const ECPoint& s =
                    all[static_cast<std::size_t>(rng.range(0, static_cast<Int>(all.size()) - 1))];
                t.expect(group_order % point_order(curve, s) == 0, "order divides group order");
            }
        }
    }

    // translation orders and cycle reports
    TorsionSpec spec13{{TorsionOrder::finite(1), TorsionOrder::finite(3)}};
    t.expect(translation_order(spec13) == TorsionOrder::finite(3), "lcm(1,3)");
    TorsionSpec spec2inf{{TorsionOrder::finite(2), TorsionOrder::inf()}};
    t.expect(translation_order(spec2inf) == TorsionOrder::inf(), "infinity absorbs");
    TorsionSpec rotated{{TorsionOrder::finite(3), TorsionOrder::finite(1)}};
    t.expect(translation_order(rotated) == translation_order(spec13), "rotation invariance");

    ExtendedADECurve a1 = rational_curve(GraphKind::A, 1);
    CycleReport trivial = char_cycle(a1, trivial_torsion_spec(a1));
    t.expect(trivial.lap_count == TorsionOrder::finite(1)
                 && trivial.curve_count == TorsionOrder::finite(2),
             "all-rational A~1 cycle");

    ExtendedADECurve a1g = make_curve(build_graph(GraphKind::A, 1), {0, 1});
    CycleReport doubled = char_cycle(
        a1g, make_torsion_spec(a1g, {TorsionOrder::finite(1), TorsionOrder::finite(2)}));
    t.expect(doubled.lap_count == TorsionOrder::finite(2)
                 && doubled.curve_count == TorsionOrder::finite(4),
             "d=(1,2) gives two laps");

    // k = 1 exactly when every component is rational
    bool rejected = false;
    try {
        make_torsion_spec(a1g, {TorsionOrder::finite(1), TorsionOrder::finite(1)});
    } catch (const DomainError&) {
        rejected = true;
    }
    t.expect(rejected, "trivial class rejected on a positive-genus component");

    ExtendedADECurve d4 = rational_curve(GraphKind::D, 4);
    CycleReport de = char_cycle(d4, std::nullopt);
    t.expect(de.reduced_type == "D~4" && de.multiplicities.size() == 5, "D~4 cycle type");
    bool missing = false;
    try {
        char_cycle(a1, std::nullopt);
    } catch (const DomainError& err) {
        missing = std::string(err.what()).find("SpecMissing") != std::string::npos;
    }
    t.expect(missing, "A~n without orders rejected");
    bool forbidden = false;
    try {
        char_cycle(d4, trivial_torsion_spec(d4));
    } catch (const DomainError& err) {
        forbidden = std::string(err.what()).find("SpecForbidden") != std::string::npos;
    }
    t.expect(forbidden, "orders on D/E rejected");

    std::ostringstream s;
    s << points_checked << " (curve, point) pairs satisfy the parity rule";
    return finish("characteristic cycles", t, s.str());
}

CheckResult genus_cross_checks()
{
    Tally t;
    ExtendedADECurve quadric = make_curve(build_graph(GraphKind::A, 3), {1, 0, 1, 0});
    t.expect(genus(quadric) == 3, "A~3 with two elliptic components has genus 3");

    ExtendedADECurve doubled = make_curve(build_graph(GraphKind::A, 1), {2, 2});
    t.expect(genus(doubled) == 5, "A~1 with two genus-2 components has genus 5");
    StratumReport stratum = stratum_codimension(doubled);
    t.expect(stratum.family_dimension == 4 && stratum.ambient_dimension == 5
                 && stratum.codimension == 1,
             "codimension-1 stratum for the double cover");

    for (const ExtendedDynkinGraph& g : all_supported_graphs(9)) {
        ExtendedADECurve c = rational_curve(g.kind, g.rank);
        t.expect(genus(c) == 1, g.name() + " all-rational genus 1");
        t.expect(stratum_codimension(c).ok(), g.name() + " stratum codimension 1");
        // C^v . C_v = 2 for every vertex
        for (int v = 0; v < c.vertex_count(); ++v) {
            IntVector e_v = IntVector::Zero(c.vertex_count());
            e_v[v] = 1;
            t.expect(intersection_number(c, c.graph.labels - e_v, e_v) == 2,
                     g.name() + " complement pairing");
        }
        ConnectivityReport two = check_2_connected(c);
        t.expect(two.ok(), g.name() + " numerically 2-connected");
        for (int v = 0; v < c.vertex_count(); ++v)
            t.expect(check_1_connected_complement(c, v).ok(),
                     g.name() + " complement 1-connected");
    }
    return finish("genus and connectivity", t, "genus formula, pairings and connectivity hold");
}

CheckResult determinism_check()
{
    Tally t;
    ExtendedADECurve e6 = rational_curve(GraphKind::E, 6);
    Polarisation p = unit_polarisation(e6);

    std::string previous;
    const char* old = std::getenv("ADE_JACOBIAN_THREADS");
    if (old != nullptr)
        previous = old;
    auto run_once = [&](const char* threads) {
        setenv("ADE_JACOBIAN_THREADS", threads, 1);
        std::vector<StableMarking> stable = enumerate_stable(e6, p, 1, 2);
        std::ostringstream s;
        for (const StableMarking& m : stable) {
            for (Int chi : m.sheaf.o_chi)
                s << chi << ",";
            for (int v : m.sheaf.i_special)
                s << "i" << v;
            for (int x : m.sheaf.t_special)
                s << "t" << x;
            s << ";";
        }
        return s.str();
    };
    std::string one = run_once("1");
    std::string eight = run_once("8");
    if (old != nullptr)
        setenv("ADE_JACOBIAN_THREADS", previous.c_str(), 1);
    else
        unsetenv("ADE_JACOBIAN_THREADS");
    t.expect(one == eight, "enumeration identical for 1 and 8 threads");
    return finish("determinism", t, "thread cap does not change results");
}

std::vector<CheckResult> run_all()
{
    return {
        lattice_suite(),
        polarisation_examples(),
        classification_sweep(),
        failure_modes(),
        partition_suite(),
        proof_scan_suite(),
        moduli_suite(),
        characteristic_cycle_suite(),
        genus_cross_checks(),
        determinism_check(),
    };
}

} // namespace adejac::selftest

#include "adejac/sheaves.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "adejac/parallel.hpp"

namespace adejac {

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Stable: return "Stable";
    case Verdict::ProperlySemistable: return "ProperlySemistable";
    case Verdict::Unstable: return "Unstable";
    }
    return "?";
}

void require_marking(const ExtendedADECurve& c, const MarkedSheaf& f)
{
    require_valid(c);
    std::vector<int> outer = c.graph.outer_vertices();
    require(f.o_chi.size() == outer.size(), "InvalidMarking",
            "o_chi must list one value per reduced component");
    for (std::size_t k = 0; k < f.i_special.size(); ++k) {
        int v = f.i_special[k];
        require(v >= 0 && v < c.vertex_count() && c.graph.labels[v] > 1, "InvalidMarking",
                "i_special entries must be multiple components");
        require(k == 0 || f.i_special[k - 1] < v, "InvalidMarking",
                "i_special must be sorted and duplicate-free");
    }
    for (std::size_t k = 0; k < f.t_special.size(); ++k) {
        int x = f.t_special[k];
        require(x >= 0 && x < c.graph.edge_count(), "InvalidMarking",
                "t_special entries must be intersection points");
        require(k == 0 || f.t_special[k - 1] < x, "InvalidMarking",
                "t_special must be sorted and duplicate-free");
    }
}

namespace {

bool contains(const std::vector<int>& sorted, int value)
{
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

} // namespace

Int total_chi(const ExtendedADECurve& c, const MarkedSheaf& f)
{
    require_marking(c, f);
    return restriction_chi(c, f, c.graph.labels);
}

HilbertData hilbert_polynomial(const ExtendedADECurve& c, const MarkedSheaf& f, const Polarisation& p)
{
    HilbertData data;
    data.leading = total_degree(c, p);
    data.constant = total_chi(c, f);
    return data;
}

Int restriction_chi(const ExtendedADECurve& c, const MarkedSheaf& f, const IntVector& z)
{
    require_marking(c, f);
    require(z.size() == c.vertex_count(), "DimensionMismatch",
            "subcurve vector must have one entry per vertex");
    for (int v = 0; v < c.vertex_count(); ++v)
        require(z[v] >= 0 && z[v] <= c.graph.labels[v], "InvalidSubcurve",
                "subcurve multiplicities must satisfy 0 <= z_v <= m_v");

    Int chi = 0;
    std::size_t outer_pos = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (c.graph.labels[v] == 1) {
            if (z[v] == 1)
                chi += f.o_chi[outer_pos];
            ++outer_pos;
        } else if (z[v] > 0) {
            chi += z[v] * z[v];
            if (z[v] == c.graph.labels[v] && contains(f.i_special, v))
                chi += 1;
        }
    }
    for (int x = 0; x < c.graph.edge_count(); ++x) {
        const Edge& e = c.graph.edges[static_cast<std::size_t>(x)];
        Int t = z[e.u] * z[e.v];
        if (t != 0 && z[e.u] == c.graph.labels[e.u] && z[e.v] == c.graph.labels[e.v]
            && contains(f.t_special, x))
            t -= 1;
        chi -= t;
    }
    return chi;
}

namespace {

// Marking in packed form for the enumeration sweeps.
struct PackedMarking {
    std::vector<Int> o_chi;
    std::uint32_t i_mask = 0;
    std::uint32_t t_mask = 0;
};

// Per-subcurve data that does not depend on the marking.
struct SubcurveEntry {
    IntVector z;
    Int inner_chi = 0;        // sum z_i^2 - sum_x z_u z_w
    Int degree_cleared = 0;   // sum z_v E_v, filled per polarisation
    std::vector<int> o_used;  // outer positions with z_o = 1
    std::uint32_t i_full = 0; // inner positions with z_i = m_i
    std::uint32_t t_full = 0; // edges with both endpoints full
};

struct SweepContext {
    const ExtendedADECurve& c;
    std::vector<int> outer;
    std::vector<int> inner;
    std::vector<Int> cleared;   // E_v = e_v * D
    Int total_cleared = 0;      // E = sum m_v E_v
    std::vector<SubcurveEntry> proper; // lex order
    Int chi = 0;

    explicit SweepContext(const ExtendedADECurve& curve, const Polarisation& p, Int chi_target)
        : c(curve), outer(curve.graph.outer_vertices()), inner(curve.graph.inner_vertices()),
          chi(chi_target)
    {
        require(inner.size() <= 31 && curve.graph.edge_count() <= 31, "InvalidGraph",
                "graph too large for the enumeration sweep");
        Int d = 1;
        for (const Rational& deg : p.degrees)
            d = std::lcm(d, deg.den());
        cleared.resize(p.degrees.size());
        for (int v = 0; v < c.vertex_count(); ++v) {
            cleared[static_cast<std::size_t>(v)] =
                p.degrees[static_cast<std::size_t>(v)].num()
                * (d / p.degrees[static_cast<std::size_t>(v)].den());
            total_cleared += c.graph.labels[v] * cleared[static_cast<std::size_t>(v)];
        }
        for (const IntVector& z : subcurves(c, /*proper_only=*/true)) {
            SubcurveEntry entry;
            entry.z = z;
            for (std::size_t k = 0; k < inner.size(); ++k) {
                int v = inner[k];
                entry.inner_chi += z[v] * z[v];
                if (z[v] == c.graph.labels[v])
                    entry.i_full |= 1u << k;
            }
            for (int x = 0; x < c.graph.edge_count(); ++x) {
                const Edge& e = c.graph.edges[static_cast<std::size_t>(x)];
                entry.inner_chi -= z[e.u] * z[e.v];
                if (z[e.u] == c.graph.labels[e.u] && z[e.v] == c.graph.labels[e.v])
                    entry.t_full |= 1u << x;
            }
            for (std::size_t k = 0; k < outer.size(); ++k)
                if (z[outer[k]] == 1)
                    entry.o_used.push_back(static_cast<int>(k));
            for (int v = 0; v < c.vertex_count(); ++v)
                entry.degree_cleared += z[v] * cleared[static_cast<std::size_t>(v)];
            proper.push_back(std::move(entry));
        }
    }

    Int marking_chi(const PackedMarking& f, const SubcurveEntry& entry) const
    {
        Int chi_z = entry.inner_chi;
        for (int k : entry.o_used)
            chi_z += f.o_chi[static_cast<std::size_t>(k)];
        chi_z += std::popcount(f.i_mask & entry.i_full);
        chi_z += std::popcount(f.t_mask & entry.t_full);
        return chi_z;
    }

    // Exact verdict; scans in lexicographic order, stopping at the first
    // strict violation (which is then the minimal witness).
    StabilityVerdict verdict(const PackedMarking& f) const
    {
        StabilityVerdict out;
        out.chi = chi;
        const SubcurveEntry* equality = nullptr;
        for (const SubcurveEntry& entry : proper) {
            Int chi_z = marking_chi(f, entry);
            __int128 lhs = static_cast<__int128>(chi) * entry.degree_cleared;
            __int128 rhs = static_cast<__int128>(chi_z) * total_cleared;
            if (lhs > rhs) {
                out.verdict = Verdict::Unstable;
                out.witness = entry.z;
                out.witness_chi = chi_z;
                return out;
            }
            if (lhs == rhs && equality == nullptr)
                equality = &entry;
        }
        if (equality != nullptr) {
            out.verdict = Verdict::ProperlySemistable;
            out.witness = equality->z;
            out.witness_chi = marking_chi(f, *equality);
        } else {
            out.verdict = Verdict::Stable;
        }
        return out;
    }

    // Cheap necessary condition: one-component subcurves only.  A hit proves
    // instability outright; survivors need the full scan.
    bool killed_by_single_component(const PackedMarking& f) const
    {
        for (std::size_t k = 0; k < outer.size(); ++k) {
            Int e_v = cleared[static_cast<std::size_t>(outer[k])];
            __int128 lhs = static_cast<__int128>(chi) * e_v;
            __int128 rhs = static_cast<__int128>(f.o_chi[k]) * total_cleared;
            if (lhs > rhs)
                return true;
        }
        for (int v : inner) {
            __int128 lhs = static_cast<__int128>(chi) * cleared[static_cast<std::size_t>(v)];
            if (lhs > total_cleared)
                return true; // restriction to one copy of C_i has chi = 1
        }
        return false;
    }
};

MarkedSheaf unpack(const SweepContext& ctx, const PackedMarking& f)
{
    MarkedSheaf sheaf;
    sheaf.o_chi = f.o_chi;
    for (std::size_t k = 0; k < ctx.inner.size(); ++k)
        if ((f.i_mask >> k) & 1u)
            sheaf.i_special.push_back(ctx.inner[k]);
    for (int x = 0; x < ctx.c.graph.edge_count(); ++x)
        if ((f.t_mask >> x) & 1u)
            sheaf.t_special.push_back(x);
    return sheaf;
}

// Generates the o_chi tuples with o_chi[k] in [b_o - window, b_o + window]
// and prescribed total, and reports each complete marking.
template <class Fn>
void for_each_chi_tuple(const std::vector<Int>& base, Int window, Int total, std::vector<Int>& tuple,
                        std::size_t pos, Int partial, const Fn& fn)
{
    std::size_t count = base.size();
    Int slack = static_cast<Int>(count - pos) * window;
    Int rest = total - partial;
    Int base_rest = 0;
    for (std::size_t k = pos; k < count; ++k)
        base_rest += base[k];
    if (rest < base_rest - slack || rest > base_rest + slack)
        return;
    if (pos == count) {
        fn(tuple);
        return;
    }
    for (Int delta = -window; delta <= window; ++delta) {
        tuple[pos] = base[pos] + delta;
        for_each_chi_tuple(base, window, total, tuple, pos + 1, partial + tuple[pos], fn);
    }
}

std::vector<StableMarking> sweep(const ExtendedADECurve& c, const Polarisation& p, Int chi,
                                 Int chi_window, const BVector& b, Int* semistable_count)
{
    require(chi_window >= 1, "InvalidBound", "chi window must be >= 1");
    SweepContext ctx(c, p, chi);

    std::vector<Int> outer_b;
    for (int v : ctx.outer)
        outer_b.push_back(b.values[static_cast<std::size_t>(v)]);
    const Int outer_count = static_cast<Int>(ctx.outer.size());

    // total chi over the markings: sum o_chi + #i_special + #t_special - |O|
    const std::uint32_t i_limit = 1u << ctx.inner.size();
    const std::uint32_t t_limit = 1u << c.graph.edge_count();
    const Int combos = static_cast<Int>(i_limit) * static_cast<Int>(t_limit);

    struct Slot {
        std::vector<StableMarking> stable;
        Int semistable = 0;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(chunk_count(combos)));

    parallel_for(combos, [&](int chunk, Int begin, Int end) {
        Slot& slot = slots[static_cast<std::size_t>(chunk)];
        std::vector<Int> tuple(static_cast<std::size_t>(outer_count));
        for (Int combo = begin; combo < end; ++combo) {
            PackedMarking packed;
            packed.i_mask = static_cast<std::uint32_t>(combo / t_limit);
            packed.t_mask = static_cast<std::uint32_t>(combo % t_limit);
            Int specials = std::popcount(packed.i_mask) + std::popcount(packed.t_mask);
            Int target = chi + outer_count - specials;
            for_each_chi_tuple(outer_b, chi_window, target, tuple, 0, 0, [&](const std::vector<Int>& t) {
                packed.o_chi = t;
                if (ctx.killed_by_single_component(packed))
                    return;
                StabilityVerdict v = ctx.verdict(packed);
                if (v.verdict == Verdict::Stable)
                    slot.stable.push_back({unpack(ctx, packed), v});
                else if (v.verdict == Verdict::ProperlySemistable)
                    ++slot.semistable;
            });
        }
    });

    std::vector<StableMarking> out;
    Int semistable = 0;
    for (Slot& slot : slots) {
        semistable += slot.semistable;
        for (StableMarking& m : slot.stable)
            out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), [](const StableMarking& a, const StableMarking& b2) {
        if (a.sheaf.o_chi != b2.sheaf.o_chi)
            return a.sheaf.o_chi < b2.sheaf.o_chi;
        if (a.sheaf.i_special != b2.sheaf.i_special)
            return a.sheaf.i_special < b2.sheaf.i_special;
        return a.sheaf.t_special < b2.sheaf.t_special;
    });
    if (semistable_count != nullptr)
        *semistable_count = semistable;
    return out;
}

} // namespace

std::vector<MarkedSheaf> classification_family(const ExtendedADECurve& c, const BVector& b)
{
    std::vector<int> outer = c.graph.outer_vertices();
    std::vector<Int> base;
    for (int v : outer)
        base.push_back(b.values[static_cast<std::size_t>(v)]);

    std::vector<MarkedSheaf> family;
    for (std::size_t k = 0; k < outer.size(); ++k) {
        MarkedSheaf f;
        f.o_chi = base;
        f.o_chi[k] += 1;
        family.push_back(std::move(f));
    }
    for (int v : c.graph.inner_vertices()) {
        MarkedSheaf f;
        f.o_chi = base;
        f.i_special = {v};
        family.push_back(std::move(f));
    }
    for (int x = 0; x < c.graph.edge_count(); ++x) {
        MarkedSheaf f;
        f.o_chi = base;
        f.t_special = {x};
        family.push_back(std::move(f));
    }
    return family;
}

StabilityVerdict stability_test(const ExtendedADECurve& c, const MarkedSheaf& f, const Polarisation& p)
{
    require_marking(c, f);
    Int chi = total_chi(c, f);
    SweepContext ctx(c, p, chi);
    PackedMarking packed;
    packed.o_chi = f.o_chi;
    for (std::size_t k = 0; k < ctx.inner.size(); ++k)
        if (contains(f.i_special, ctx.inner[k]))
            packed.i_mask |= 1u << k;
    for (int x : f.t_special)
        packed.t_mask |= 1u << x;
    StabilityVerdict v = ctx.verdict(packed);
    v.leading = total_degree(c, p);
    if (v.witness.has_value()) {
        Rational deg;
        for (int i = 0; i < c.vertex_count(); ++i)
            deg = deg + Rational((*v.witness)[i]) * p.degrees[static_cast<std::size_t>(i)];
        v.witness_degree = deg;
    }
    return v;
}

std::vector<StableMarking> enumerate_stable(const ExtendedADECurve& c, const Polarisation& p,
                                            Int chi, Int chi_window)
{
    AdmissibilityReport adm = check_assumption_H(c, p, chi);
    if (!adm.pass)
        fail("AssumptionNotSatisfied",
             "polarisation admissibility fails: sum b_o = " + std::to_string(adm.outer_sum)
                 + ", required " + std::to_string(adm.target));

    Int semistable = 0;
    std::vector<StableMarking> stable = sweep(c, p, chi, chi_window, adm.b, &semistable);
    require(semistable == 0, "ClassificationMismatch",
            "properly semistable markings found under an admissible polarisation");

    std::vector<MarkedSheaf> expected = classification_family(c, adm.b);
    std::vector<MarkedSheaf> got;
    for (const StableMarking& m : stable)
        got.push_back(m.sheaf);
    auto key = [](const MarkedSheaf& m) { return std::tuple(m.o_chi, m.i_special, m.t_special); };
    std::sort(expected.begin(), expected.end(),
              [&](const MarkedSheaf& a, const MarkedSheaf& b2) { return key(a) < key(b2); });
    require(got == expected, "ClassificationMismatch",
            "stable markings do not match the exactly-one-special family");
    return stable;
}

std::vector<StableMarking> enumerate_stable_unguarded(const ExtendedADECurve& c,
                                                      const Polarisation& p, Int chi,
                                                      Int chi_window)
{
    BVector b = b_vector(c, p, chi);
    return sweep(c, p, chi, chi_window, b, nullptr);
}

Presentation presentation(const ExtendedADECurve& c, const MarkedSheaf& f, const BVector& b)
{
    require_marking(c, f);
    std::vector<int> outer = c.graph.outer_vertices();
    std::vector<int> special_outer;
    for (std::size_t k = 0; k < outer.size(); ++k) {
        Int base = b.values[static_cast<std::size_t>(outer[k])];
        if (f.o_chi[k] == base + 1)
            special_outer.push_back(outer[k]);
        else if (f.o_chi[k] != base)
            fail("NotClassified",
                 "restriction to " + c.graph.vertices[static_cast<std::size_t>(outer[k])]
                     + " is neither ordinary nor special");
    }
    std::size_t specials = special_outer.size() + f.i_special.size() + f.t_special.size();
    require(specials == 1, "NotClassified",
            "expected exactly one special piece, found " + std::to_string(specials));

    Presentation pres;
    pres.restriction_chi.resize(static_cast<std::size_t>(c.vertex_count()));
    std::size_t outer_pos = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (c.graph.labels[v] == 1) {
            pres.restriction_chi[static_cast<std::size_t>(v)] = f.o_chi[outer_pos++];
        } else {
            Int m = c.graph.labels[v];
            pres.restriction_chi[static_cast<std::size_t>(v)] =
                m * m + (contains(f.i_special, v) ? 1 : 0);
        }
    }
    if (!f.t_special.empty()) {
        pres.kind = Presentation::Kind::SingularAtIntersection;
        pres.locus = c.points[static_cast<std::size_t>(f.t_special.front())];
    } else if (!f.i_special.empty()) {
        pres.kind = Presentation::Kind::SingularOnMultipleComponent;
        pres.locus = c.graph.vertices[static_cast<std::size_t>(f.i_special.front())];
    } else {
        pres.kind = Presentation::Kind::LineBundle;
        pres.locus = c.graph.vertices[static_cast<std::size_t>(special_outer.front())];
    }
    return pres;
}

UniquenessKey uniqueness_key(const ExtendedADECurve& c, const MarkedSheaf& f)
{
    require_marking(c, f);
    require(f.i_special.size() + f.t_special.size() == 1, "NotSingular",
            "uniqueness keys exist only for markings singular at exactly one point");
    UniquenessKey key;
    if (!f.t_special.empty())
        key.locus = c.points[static_cast<std::size_t>(f.t_special.front())];
    else
        key.locus = c.graph.vertices[static_cast<std::size_t>(f.i_special.front())];
    key.restriction_chi.resize(static_cast<std::size_t>(c.vertex_count()));
    std::size_t outer_pos = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (c.graph.labels[v] == 1) {
            key.restriction_chi[static_cast<std::size_t>(v)] = f.o_chi[outer_pos++];
        } else {
            Int m = c.graph.labels[v];
            key.restriction_chi[static_cast<std::size_t>(v)] =
                m * m + (contains(f.i_special, v) ? 1 : 0);
        }
    }
    return key;
}

ProofScanReport proof_inequality_scan(const ExtendedADECurve& c, int max_parts)
{
    require(max_parts >= 1, "InvalidBound", "max_parts must be >= 1");
    require_valid(c);
    const int n = c.vertex_count();
    const IntMatrix s = cartan_matrix(c.graph);

    // per vertex: weakly decreasing columns of length max_parts summing to m_v
    std::vector<std::vector<std::vector<Int>>> columns(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (const Partition& part : partitions_of(c.graph.labels[v])) {
            if (static_cast<int>(part.size()) > max_parts)
                continue;
            std::vector<Int> column(static_cast<std::size_t>(max_parts), 0);
            std::copy(part.begin(), part.end(), column.begin());
            columns[static_cast<std::size_t>(v)].push_back(std::move(column));
        }
    }

    ProofScanReport report;
    report.max_nontrivial_value = INT64_MIN;
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    std::vector<IntVector> rows(static_cast<std::size_t>(max_parts), IntVector::Zero(n));
    bool saw_trivial = false;
    while (true) {
        for (int r = 0; r < max_parts; ++r)
            for (int v = 0; v < n; ++v)
                rows[static_cast<std::size_t>(r)][v] =
                    columns[static_cast<std::size_t>(v)][choice[static_cast<std::size_t>(v)]]
                           [static_cast<std::size_t>(r)];
        Int value = 1;
        for (int r = 0; r < max_parts; ++r)
            value += quadratic_form(s, rows[static_cast<std::size_t>(r)]) / 2;
        bool trivial = (rows[0] == c.graph.labels);
        ++report.families_checked;
        if (value >= 0)
            ++report.nonnegative_families;
        if (trivial) {
            saw_trivial = true;
            report.trivial_value = value;
        } else if (value > report.max_nontrivial_value) {
            report.max_nontrivial_value = value;
        }

        int pos = n - 1;
        while (pos >= 0
               && choice[static_cast<std::size_t>(pos)] + 1
                   == columns[static_cast<std::size_t>(pos)].size()) {
            choice[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++choice[static_cast<std::size_t>(pos)];
    }
    report.ok = saw_trivial && report.trivial_value == 1 && report.nonnegative_families == 1
        && (report.families_checked == 1 || report.max_nontrivial_value < 0);
    return report;
}

} // namespace adejac

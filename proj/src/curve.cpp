#include "adejac/curve.hpp"

#include <algorithm>
#include <map>

#include "adejac/parallel.hpp"

namespace adejac {

ExtendedADECurve make_curve(ExtendedDynkinGraph graph, std::vector<Int> genera)
{
    require(static_cast<int>(genera.size()) == graph.vertex_count(), "InvalidGraph",
            "genera must list one value per vertex");
    ExtendedADECurve c;
    c.points.reserve(graph.edges.size());
    std::map<std::pair<int, int>, int> seen;
    for (const Edge& e : graph.edges) {
        int u = std::min(e.u, e.v);
        int v = std::max(e.u, e.v);
        Int multi = graph.adjacency(u, v);
        std::string name = "x_{" + graph.vertices[static_cast<std::size_t>(u)] + "."
            + graph.vertices[static_cast<std::size_t>(v)] + "}";
        if (multi > 1) {
            int& k = seen[{u, v}];
            name += "#" + std::to_string(k);
            ++k;
        }
        c.points.push_back(std::move(name));
    }
    c.graph = std::move(graph);
    c.genera = std::move(genera);
    return c;
}

ValidationReport validate(const ExtendedADECurve& c)
{
    ValidationReport report;
    if (static_cast<int>(c.genera.size()) != c.vertex_count()
        || static_cast<int>(c.points.size()) != c.graph.edge_count()) {
        report.issues.push_back({"InvalidGraph", "", "curve data out of step with its graph"});
        return report;
    }
    if (!labels_satisfy_adjacency_identity(c.graph)) {
        report.issues.push_back({"InvalidGraph", "", "labels violate the adjacency identity"});
        return report;
    }
    for (int v = 0; v < c.vertex_count(); ++v) {
        const std::string& name = c.graph.vertices[static_cast<std::size_t>(v)];
        if (c.graph.labels[v] > 1)
            report.inner.push_back(name);
        else
            report.outer.push_back(name);
        if (c.genera[static_cast<std::size_t>(v)] < 0)
            report.issues.push_back({"InvalidGraph", name, "negative genus"});
        if (c.graph.labels[v] > 1 && c.genera[static_cast<std::size_t>(v)] != 0)
            report.issues.push_back({"NonRationalMultipleComponent", name,
                                     "component with multiplicity "
                                         + std::to_string(c.graph.labels[v])
                                         + " must be rational, got genus "
                                         + std::to_string(c.genera[static_cast<std::size_t>(v)])});
    }
    report.valid = report.issues.empty();
    return report;
}

void require_valid(const ExtendedADECurve& c)
{
    ValidationReport report = validate(c);
    if (!report.valid) {
        const ValidationIssue& issue = report.issues.front();
        fail(issue.error, issue.vertex.empty() ? issue.detail : issue.vertex + ": " + issue.detail);
    }
}

Int genus(const ExtendedADECurve& c)
{
    require_valid(c);
    Int g = 1;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.graph.labels[v] == 1)
            g += c.genera[static_cast<std::size_t>(v)];
    return g;
}

Int intersection_number(const ExtendedADECurve& c, const IntVector& a, const IntVector& b)
{
    require(a.size() == c.vertex_count() && b.size() == c.vertex_count(), "DimensionMismatch",
            "subcurve vectors must have one entry per vertex");
    return a.dot(cartan_matrix(c.graph) * b);
}

namespace {

constexpr Int kScanLimit = 100000000; // exhaustive scans stay desk-scale

Int checked_box(const IntVector& sizes)
{
    Int count = 1;
    for (int v = 0; v < sizes.size(); ++v) {
        count *= sizes[v];
        require(count <= kScanLimit, "InvalidBound",
                "subcurve box larger than " + std::to_string(kScanLimit) + " entries");
    }
    return count;
}

} // namespace

Int subcurve_count(const ExtendedADECurve& c)
{
    return checked_box(c.graph.labels + IntVector::Ones(c.vertex_count()));
}

std::vector<IntVector> subcurves(const ExtendedADECurve& c, bool proper_only)
{
    require_valid(c);
    const int n = c.vertex_count();
    std::vector<IntVector> out;
    out.reserve(static_cast<std::size_t>(subcurve_count(c)));
    IntVector z = IntVector::Zero(n);
    while (true) {
        bool is_zero = z.isZero();
        bool is_full = (z == c.graph.labels);
        if (!proper_only || (!is_zero && !is_full))
            out.push_back(z);
        // lexicographic odometer, last coordinate fastest
        int pos = n - 1;
        while (pos >= 0 && z[pos] == c.graph.labels[pos]) {
            z[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
        ++z[pos];
    }
    return out;
}

namespace {

ConnectivityReport connectivity_scan(const ExtendedADECurve& c, const IntVector& total, Int threshold)
{
    const IntMatrix s = cartan_matrix(c.graph);
    const int n = c.vertex_count();
    const Int box = checked_box(total + IntVector::Ones(n));

    auto unrank = [&](Int index) {
        IntVector a = IntVector::Zero(n);
        for (int v = n - 1; v >= 0; --v) {
            Int base = total[v] + 1;
            a[v] = index % base;
            index /= base;
        }
        return a;
    };

    struct Slot {
        Int count = 0;
        Int min = 0;
        IntVector witness;
        bool any = false;
    };
    std::vector<Slot> slots(static_cast<std::size_t>(chunk_count(box)));

    parallel_for(box, [&](int chunk, Int begin, Int end) {
        Slot local;
        for (Int index = begin; index < end; ++index) {
            IntVector a = unrank(index);
            if (a.isZero() || a == total)
                continue;
            IntVector b = total - a;
            Int pairing = a.dot(s * b);
            ++local.count;
            if (!local.any || pairing < local.min) {
                local.any = true;
                local.min = pairing;
                local.witness = a;
            }
        }
        slots[static_cast<std::size_t>(chunk)] = std::move(local);
    });

    ConnectivityReport report;
    report.threshold = threshold;
    for (const Slot& slot : slots) {
        if (!slot.any)
            continue;
        report.decompositions += slot.count;
        if (report.min_witness.size() == 0 || slot.min < report.min_pairing) {
            report.min_pairing = slot.min;
            report.min_witness = slot.witness;
        }
    }
    return report;
}

} // namespace

ConnectivityReport check_2_connected(const ExtendedADECurve& c)
{
    require_valid(c);
    return connectivity_scan(c, c.graph.labels, 2);
}

ConnectivityReport check_1_connected_complement(const ExtendedADECurve& c, int v)
{
    require_valid(c);
    require(v >= 0 && v < c.vertex_count(), "InvalidGraph", "vertex index out of range");
    IntVector total = c.graph.labels;
    total[v] -= 1;
    return connectivity_scan(c, total, 1);
}

StratumReport stratum_codimension(const ExtendedADECurve& c)
{
    StratumReport report;
    report.ambient_dimension = genus(c);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.graph.labels[v] == 1)
            report.family_dimension += c.genera[static_cast<std::size_t>(v)];
    report.codimension = report.ambient_dimension - report.family_dimension;
    return report;
}

} // namespace adejac

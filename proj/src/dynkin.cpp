#include "adejac/dynkin.hpp"

#include <algorithm>
#include <numeric>

namespace adejac {

std::string kind_letter(GraphKind kind)
{
    switch (kind) {
    case GraphKind::A: return "A";
    case GraphKind::D: return "D";
    case GraphKind::E: return "E";
    }
    return "?";
}

Int ExtendedDynkinGraph::adjacency(int v, int w) const
{
    Int count = 0;
    for (const Edge& e : edges)
        if ((e.u == v && e.v == w) || (e.u == w && e.v == v))
            ++count;
    return count;
}

Int ExtendedDynkinGraph::degree(int v) const
{
    Int count = 0;
    for (const Edge& e : edges)
        count += (e.u == v) + (e.v == v);
    return count;
}

int ExtendedDynkinGraph::vertex_index(const std::string& name) const
{
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i] == name)
            return i;
    return -1;
}

std::vector<int> ExtendedDynkinGraph::inner_vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (labels[v] > 1)
            out.push_back(v);
    return out;
}

std::vector<int> ExtendedDynkinGraph::outer_vertices() const
{
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (labels[v] == 1)
            out.push_back(v);
    return out;
}

namespace {

ExtendedDynkinGraph finish(GraphKind kind, int n, std::vector<Int> labels, std::vector<Edge> edges)
{
    ExtendedDynkinGraph g;
    g.kind = kind;
    g.rank = n;
    int count = static_cast<int>(labels.size());
    g.vertices.reserve(labels.size());
    for (int i = 0; i < count; ++i)
        g.vertices.push_back("v" + std::to_string(i));
    g.labels = IntVector(count);
    for (int i = 0; i < count; ++i)
        g.labels[i] = labels[static_cast<std::size_t>(i)];
    g.edges = std::move(edges);
    return g;
}

ExtendedDynkinGraph build_a(int n)
{
    require(n >= 1, "InvalidRank", "A~n needs n >= 1, got n=" + std::to_string(n));
    std::vector<Int> labels(static_cast<std::size_t>(n + 1), 1);
    std::vector<Edge> edges;
    if (n == 1) {
        edges = {{0, 1}, {0, 1}};
    } else {
        for (int i = 0; i < n; ++i)
            edges.push_back({i, i + 1});
        edges.push_back({0, n});
    }
    return finish(GraphKind::A, n, std::move(labels), std::move(edges));
}

ExtendedDynkinGraph build_d(int n)
{
    require(n >= 4, "InvalidRank", "D~n needs n >= 4, got n=" + std::to_string(n));
    std::vector<Int> labels(static_cast<std::size_t>(n + 1), 2);
    labels[0] = labels[1] = 1;
    labels[static_cast<std::size_t>(n - 1)] = labels[static_cast<std::size_t>(n)] = 1;
    std::vector<Edge> edges = {{0, 2}, {1, 2}};
    for (int i = 2; i < n - 2; ++i)
        edges.push_back({i, i + 1});
    edges.push_back({n - 2, n - 1});
    edges.push_back({n - 2, n});
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return finish(GraphKind::D, n, std::move(labels), std::move(edges));
}

ExtendedDynkinGraph build_e(int n)
{
    require(n == 6 || n == 7 || n == 8, "InvalidRank",
            "E~n needs n in {6,7,8}, got n=" + std::to_string(n));
    std::vector<Int> labels;
    std::vector<Edge> edges;
    if (n == 6) {
        labels = {1, 1, 2, 2, 3, 2, 1};
        edges = {{0, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
    } else if (n == 7) {
        labels = {1, 2, 2, 3, 4, 3, 2, 1};
        edges = {{0, 1}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    } else {
        labels = {1, 2, 3, 4, 6, 5, 4, 3, 2};
        edges = {{0, 8}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    }
    return finish(GraphKind::E, n, std::move(labels), std::move(edges));
}

} // namespace

ExtendedDynkinGraph build_graph(GraphKind kind, int n)
{
    switch (kind) {
    case GraphKind::A: return build_a(n);
    case GraphKind::D: return build_d(n);
    case GraphKind::E: return build_e(n);
    }
    fail("InvalidRank", "unknown graph kind");
}

std::vector<ExtendedDynkinGraph> all_supported_graphs(int max_vertices)
{
    std::vector<ExtendedDynkinGraph> out;
    for (int n = 1; n + 1 <= max_vertices; ++n)
        out.push_back(build_graph(GraphKind::A, n));
    for (int n = 4; n + 1 <= max_vertices; ++n)
        out.push_back(build_graph(GraphKind::D, n));
    for (int n = 6; n <= 8 && n + 1 <= max_vertices; ++n)
        out.push_back(build_graph(GraphKind::E, n));
    return out;
}

IntMatrix cartan_matrix(const ExtendedDynkinGraph& g)
{
    int count = g.vertex_count();
    IntMatrix s = IntMatrix::Zero(count, count);
    for (int v = 0; v < count; ++v)
        s(v, v) = -2;
    for (const Edge& e : g.edges) {
        s(e.u, e.v) += 1;
        s(e.v, e.u) += 1;
    }
    return s;
}

Int quadratic_form(const IntMatrix& s, const IntVector& v)
{
    require(s.rows() == s.cols() && s.rows() == v.size(), "DimensionMismatch",
            "quadratic form needs dim(v) = dim(S), got " + std::to_string(v.size()) + " vs "
                + std::to_string(s.rows()));
    return v.dot(s * v);
}

NullVectorReport null_vector_check(const ExtendedDynkinGraph& g)
{
    NullVectorReport report;
    IntMatrix s = cartan_matrix(g);
    report.product = s * g.labels;
    report.kernel_ok = report.product.isZero();
    Int gcd = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        gcd = std::gcd(gcd, g.labels[v]);
    report.label_gcd = gcd;
    report.primitive_ok = (gcd == 1);
    return report;
}

bool labels_satisfy_adjacency_identity(const ExtendedDynkinGraph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        Int sum = 0;
        for (const Edge& e : g.edges) {
            if (e.u == v)
                sum += g.labels[e.v];
            else if (e.v == v)
                sum += g.labels[e.u];
        }
        if (sum != 2 * g.labels[v])
            return false;
    }
    return true;
}

SeminegativityReport seminegativity_scan(const ExtendedDynkinGraph& g, int bound)
{
    require(bound >= 1, "InvalidBound", "scan bound must be >= 1");
    SeminegativityReport report;
    const IntMatrix s = cartan_matrix(g);
    const int count = g.vertex_count();
    IntVector v = IntVector::Zero(count);

    auto is_label_multiple = [&](const IntVector& x) {
        // x != 0, componentwise box; multiples c*m for c >= 1
        for (Int c = 1;; ++c) {
            bool all_le = true;
            bool equal = true;
            for (int i = 0; i < count; ++i) {
                Int t = c * g.labels[i];
                if (x[i] != t)
                    equal = false;
                if (t > x[i])
                    all_le = false;
            }
            if (equal)
                return true;
            if (!all_le && !equal)
                return false;
        }
    };

    while (true) {
        // odometer over the box
        int pos = 0;
        while (pos < count && v[pos] == bound) {
            v[pos] = 0;
            ++pos;
        }
        if (pos == count)
            break;
        ++v[pos];

        ++report.vectors_checked;
        Int q = quadratic_form(s, v);
        bool multiple = is_label_multiple(v);
        if (multiple)
            ++report.kernel_hits;
        if (q % 2 != 0)
            report.violations.push_back({v, q, "odd value"});
        if (q > 0)
            report.violations.push_back({v, q, "positive value"});
        if (multiple && q != 0)
            report.violations.push_back({v, q, "label multiple with nonzero value"});
        if (!multiple && q > -2)
            report.violations.push_back({v, q, "non-multiple with value > -2"});
    }
    return report;
}

namespace {

// backtracking search for a label- and adjacency-preserving bijection
bool extend_isomorphism(const ExtendedDynkinGraph& a, const ExtendedDynkinGraph& b,
                        std::vector<int>& map, std::vector<bool>& used, int next)
{
    int count = a.vertex_count();
    if (next == count)
        return true;
    for (int cand = 0; cand < count; ++cand) {
        if (used[static_cast<std::size_t>(cand)])
            continue;
        if (a.labels[next] != b.labels[cand])
            continue;
        if (a.degree(next) != b.degree(cand))
            continue;
        bool fits = true;
        for (int prev = 0; prev < next && fits; ++prev)
            if (a.adjacency(next, prev) != b.adjacency(cand, map[static_cast<std::size_t>(prev)]))
                fits = false;
        if (!fits)
            continue;
        map[static_cast<std::size_t>(next)] = cand;
        used[static_cast<std::size_t>(cand)] = true;
        if (extend_isomorphism(a, b, map, used, next + 1))
            return true;
        used[static_cast<std::size_t>(cand)] = false;
    }
    return false;
}

} // namespace

bool isomorphic(const ExtendedDynkinGraph& a, const ExtendedDynkinGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<Int> la(a.labels.data(), a.labels.data() + a.labels.size());
    std::vector<Int> lb(b.labels.data(), b.labels.data() + b.labels.size());
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb)
        return false;
    std::vector<int> map(static_cast<std::size_t>(a.vertex_count()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.vertex_count()), false);
    return extend_isomorphism(a, b, map, used, 0);
}

} // namespace adejac

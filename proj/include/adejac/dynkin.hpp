#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "adejac/error.hpp"
#include "adejac/rational.hpp"

namespace adejac {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

enum class GraphKind { A, D, E };

std::string kind_letter(GraphKind kind);

struct Edge {
    int u;
    int v;
};

// Extended (affine) simply-laced Dynkin graph with its multiplicity labels.
// Vertices are named v0..vN in a fixed canonical order; see build_graph for
// the per-kind layout.  A~1 is a genuine multigraph with two parallel edges.
struct ExtendedDynkinGraph {
    GraphKind kind;
    int rank = 0; // the n of A~n / D~n / E~n
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    IntVector labels;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::string name() const { return kind_letter(kind) + "~" + std::to_string(rank); }

    // edge count between v and w, and degree counting multiplicity
    Int adjacency(int v, int w) const;
    Int degree(int v) const;

    // index of a canonical vertex name, -1 if unknown
    int vertex_index(const std::string& name) const;

    std::vector<int> inner_vertices() const;   // labels > 1 (the set I)
    std::vector<int> outer_vertices() const;   // labels == 1 (the set O)
};

// Canonical graphs:
//   A~n: cycle v0-v1-...-vn-v0 (n >= 1); A~1 has a double edge v0=v1.
//   D~n: leaves v0,v1 on v2, chain v2..v(n-2) of label-2 vertices,
//        leaves v(n-1),vn on v(n-2) (n >= 4).
//   E~n: vertex order follows the printed label lists
//        (1,1,2,2,3,2,1), (1,2,2,3,4,3,2,1), (1,2,3,4,6,5,4,3,2).
ExtendedDynkinGraph build_graph(GraphKind kind, int n);

// Every supported graph with at most max_vertices vertices, in the order
// A~1.., D~4.., E~6..E~8.
std::vector<ExtendedDynkinGraph> all_supported_graphs(int max_vertices);

// S_vv = -2, S_vw = number of edges between v and w.  Symmetric, even,
// negative semi-definite with kernel spanned by the label vector.
IntMatrix cartan_matrix(const ExtendedDynkinGraph& g);

// v^t S v, exact.
Int quadratic_form(const IntMatrix& s, const IntVector& v);

struct NullVectorReport {
    IntVector product;   // S * m, expected zero
    Int label_gcd = 0;   // expected 1
    bool kernel_ok = false;
    bool primitive_ok = false;
    bool ok() const { return kernel_ok && primitive_ok; }
};

NullVectorReport null_vector_check(const ExtendedDynkinGraph& g);

struct SeminegativityViolation {
    IntVector vector;
    Int value = 0;
    std::string reason;
};

struct SeminegativityReport {
    Int vectors_checked = 0;
    Int kernel_hits = 0; // nonzero multiples of the label vector in the box
    std::vector<SeminegativityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks, over all integer vectors 0 <= v_i <= bound, v != 0:
// v^t S v is even and <= 0, zero exactly on multiples of the label vector,
// and <= -2 otherwise.
SeminegativityReport seminegativity_scan(const ExtendedDynkinGraph& g, int bound);

// Label identity 2 m_v = sum of adjacent labels (counting multi-edges).
bool labels_satisfy_adjacency_identity(const ExtendedDynkinGraph& g);

// Isomorphism of labelled multigraphs; used to cross-check emitted
// intersection graphs against the curve's graph.
bool isomorphic(const ExtendedDynkinGraph& a, const ExtendedDynkinGraph& b);

} // namespace adejac

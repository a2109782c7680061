#pragma once

#include <string>
#include <vector>

#include "adejac/dynkin.hpp"

namespace adejac {

// Extended ADE curve: graph, genera of the reduced components, and one named
// intersection point per edge.  Multiple components (labels > 1) must be
// rational; that is checked by validate(), not by the constructor, so that
// malformed input can still be loaded and reported on.
struct ExtendedADECurve {
    ExtendedDynkinGraph graph;
    std::vector<Int> genera;        // per vertex, canonical order
    std::vector<std::string> points; // per edge, canonical order

    int vertex_count() const { return graph.vertex_count(); }
};

// Generates canonical point names: "x_{u.v}" for simple edges,
// "x_{u.v}#k" (k = 0,1,...) when several edges join u and v.
ExtendedADECurve make_curve(ExtendedDynkinGraph graph, std::vector<Int> genera);

struct ValidationIssue {
    std::string error;  // e.g. "NonRationalMultipleComponent"
    std::string vertex; // offending vertex, when applicable
    std::string detail;
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> inner; // I: vertex names with label > 1
    std::vector<std::string> outer; // O: vertex names with label 1
    std::vector<ValidationIssue> issues;
};

ValidationReport validate(const ExtendedADECurve& c);

// Throws the first validation issue as a DomainError.
void require_valid(const ExtendedADECurve& c);

// g(C) = 1 + sum of genera over the reduced components.
Int genus(const ExtendedADECurve& c);

// Intersection pairing in the lattice (Z^V, S): A.B = a^t S b, with every
// component treated as a (-2)-curve.  For disjoint supports this agrees with
// the geometric intersection number.
Int intersection_number(const ExtendedADECurve& c, const IntVector& a, const IntVector& b);

// All subdivisors 0 <= z <= m in lexicographic order over (z_0, ..., z_N);
// proper_only drops 0 and m.
std::vector<IntVector> subcurves(const ExtendedADECurve& c, bool proper_only);
Int subcurve_count(const ExtendedADECurve& c);

struct ConnectivityReport {
    Int decompositions = 0; // ordered decompositions scanned
    Int min_pairing = 0;
    IntVector min_witness;  // the A realising the minimum
    Int threshold = 0;      // 2 for C, 1 for C^v
    bool ok() const { return decompositions == 0 || min_pairing >= threshold; }
};

// Scans all decompositions C = A + B (A, B effective nonzero) and asserts
// A.B >= 2.
ConnectivityReport check_2_connected(const ExtendedADECurve& c);

// Scans all decompositions C^v = A + B and asserts A.B >= 1.
ConnectivityReport check_1_connected_complement(const ExtendedADECurve& c, int v);

struct StratumReport {
    Int family_dimension = 0;  // sum of the genera (the moving family)
    Int ambient_dimension = 0; // genus(C) = dim |L| on a K3
    Int codimension = 0;
    bool ok() const { return codimension == 1; }
};

StratumReport stratum_codimension(const ExtendedADECurve& c);

} // namespace adejac

#pragma once

#include <string>
#include <vector>

#include "adejac/polarisation.hpp"

namespace adejac {

// Symbolic description of one irreducible component of the reduced
// compactified Jacobian.  Components over reduced curve components are
// P1-bundles over J; those over multiple components are the strata
// J x C_i, non-reduced with conjectural multiplicity.
struct ModuliComponent {
    enum class Kind { P1BundleOverJ, SingularStratum };

    std::string name;          // "Y_v0", ...
    std::string origin_vertex; // the curve component it comes from
    Kind kind = Kind::P1BundleOverJ;
    Int base_dimension = 0;    // dim J = sum of the genera
    Int dimension = 0;         // dim J + 1 = g(C)
    bool reduced = true;
    Int multiplicity = 1;
    bool multiplicity_conjectural = false;

    struct Section {
        std::string at_point;  // intersection point of the curve
        std::string meets;     // the neighbouring moduli component
    };
    std::vector<Section> sections; // P1-bundle components only
};

struct JFactor {
    std::string vertex;
    Int genus = 0;
    Int b = 0; // Euler characteristic fixed on this Picard factor
};

struct ModuliDescription {
    std::vector<ModuliComponent> components; // canonical vertex order
    ExtendedDynkinGraph intersection_graph;  // isomorphic to the curve's graph
    std::string group;                       // "Gm" or "Ga"
    Int total_dimension = 0;                 // g(C)
    std::vector<JFactor> j_factors;          // Pic of each reduced component
    Int j_dimension = 0;
};

// Requires chi > 0 and the admissibility condition.
ModuliDescription describe_moduli(const ExtendedADECurve& c, const Polarisation& p, Int chi);

struct SingularLocusDescription {
    bool finite = false;                 // true for A~n: isolated points over J
    std::vector<std::string> strata;     // point names (A~n) or component names (D/E)
    Int dimension = 0;                   // dim of J x (C_sing)_red
};

SingularLocusDescription singular_locus(const ExtendedADECurve& c);

struct ConsistencyReport {
    bool graph_ok = false;
    bool dimensions_ok = false;
    bool sections_ok = false;
    bool group_ok = false;
};

// Cross-checks a description against its curve; throws
// InconsistentDescription naming the failing assertion.
ConsistencyReport consistency_check(const ModuliDescription& desc, const ExtendedADECurve& c);

} // namespace adejac

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adejac/curve.hpp"
#include "adejac/partitions.hpp"
#include "adejac/polarisation.hpp"

namespace adejac {

// Combinatorial avatar of a sheaf of type m: Euler characteristics of the
// restrictions to the reduced components, and which pieces (restrictions to
// multiple components, gluing cokernels at intersection points) take the
// special rather than the ordinary form.
struct MarkedSheaf {
    std::vector<Int> o_chi;       // aligned with the curve's O-vertex list
    std::vector<int> i_special;   // vertex indices, subset of I, sorted
    std::vector<int> t_special;   // edge indices, sorted

    bool operator==(const MarkedSheaf& other) const = default;
};

void require_marking(const ExtendedADECurve& c, const MarkedSheaf& f);

// chi(F) = sum_v chi(F_v) - sum_x chi(T_x), with
//   chi(F_o) = o_chi,  chi(F_i) = m_i^2 (+1 if special),
//   chi(T_x) = m_u m_w (-1 if special).
Int total_chi(const ExtendedADECurve& c, const MarkedSheaf& f);

struct HilbertData {
    Rational leading; // e = sum m_v e_v
    Int constant = 0; // chi(F)
};

HilbertData hilbert_polynomial(const ExtendedADECurve& c, const MarkedSheaf& f, const Polarisation& p);

// chi of the purely one-dimensional restriction of F to the subcurve z.
Int restriction_chi(const ExtendedADECurve& c, const MarkedSheaf& f, const IntVector& z);

enum class Verdict { Stable, ProperlySemistable, Unstable };

std::string verdict_name(Verdict v);

struct StabilityVerdict {
    Verdict verdict = Verdict::Stable;
    std::optional<IntVector> witness; // lexicographically first equality / violation
    Int chi = 0;                      // chi(F)
    Rational leading;                 // e
    Int witness_chi = 0;              // chi of the restriction to the witness
    Rational witness_degree;          // e(Z) of the witness
};

// Brute-force test over every proper nonzero subcurve Z, comparing
// chi(F) * e(Z) against chi(F|Z) * e by exact cross-multiplication.
StabilityVerdict stability_test(const ExtendedADECurve& c, const MarkedSheaf& f, const Polarisation& p);

struct StableMarking {
    MarkedSheaf sheaf;
    StabilityVerdict verdict;
};

// Enumerates all markings with o_chi in [b_o - window, b_o + window], all
// special subsets, total chi(F) = chi, and keeps the stable ones.  Requires
// the admissibility condition and cross-checks the outcome against the
// exactly-one-special family; a mismatch is an internal defect.
std::vector<StableMarking> enumerate_stable(const ExtendedADECurve& c, const Polarisation& p,
                                            Int chi, Int chi_window);

// Same sweep without the admissibility requirement or the cross-check; used
// to explore stability under other polarisations.
std::vector<StableMarking> enumerate_stable_unguarded(const ExtendedADECurve& c,
                                                      const Polarisation& p, Int chi,
                                                      Int chi_window);

// The markings that the classification predicts to be exactly the stable
// ones under the admissibility condition: exactly one special piece, with
// o_chi = b (+1 at the special reduced component).
std::vector<MarkedSheaf> classification_family(const ExtendedADECurve& c, const BVector& b);

struct Presentation {
    enum class Kind { LineBundle, SingularAtIntersection, SingularOnMultipleComponent };
    Kind kind = Kind::LineBundle;
    std::string locus; // vertex name (line bundle / multiple component) or point name
    std::vector<Int> restriction_chi; // chi(F_v) per vertex
};

// Normal form of a stable marking; requires exactly one special piece
// relative to the given b-vector (NotClassified otherwise).
Presentation presentation(const ExtendedADECurve& c, const MarkedSheaf& f, const BVector& b);

struct UniquenessKey {
    std::string locus;
    std::vector<Int> restriction_chi;

    bool operator==(const UniquenessKey& other) const = default;
    bool operator<(const UniquenessKey& other) const
    {
        if (locus != other.locus)
            return locus < other.locus;
        return restriction_chi < other.restriction_chi;
    }
};

// Isomorphism key for singular markings: the singular locus plus the tuple
// of restriction Euler characteristics.  NotSingular on line bundles.
UniquenessKey uniqueness_key(const ExtendedADECurve& c, const MarkedSheaf& f);

struct ProofScanReport {
    Int families_checked = 0;
    Int nonnegative_families = 0; // must be exactly the trivial one
    Int trivial_value = 0;        // must be 1
    Int max_nontrivial_value = 0; // must be < 0
    bool ok = false;
};

// Enumerates all componentwise weakly decreasing families of nonnegative
// vectors summing to the label vector and evaluates 1 + (1/2) sum_r n_r^t S n_r;
// the value must be 1 on the trivial family and negative everywhere else.
ProofScanReport proof_inequality_scan(const ExtendedADECurve& c, int max_parts);

} // namespace adejac

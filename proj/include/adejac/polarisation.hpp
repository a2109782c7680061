#pragma once

#include <vector>

#include "adejac/curve.hpp"
#include "adejac/rational.hpp"

namespace adejac {

// Per-component degrees e_v of a polarisation, exact rationals, all > 0.
struct Polarisation {
    std::vector<Rational> degrees; // canonical vertex order
};

Polarisation make_polarisation(const ExtendedADECurve& c, std::vector<Rational> degrees);

// e = sum_v m_v e_v
Rational total_degree(const ExtendedADECurve& c, const Polarisation& p);

// e_I = sum_{i in I} m_i e_i
Rational inner_degree(const ExtendedADECurve& c, const Polarisation& p);

struct BVector {
    std::vector<Int> values; // canonical vertex order
    Int chi = 0;
};

// b_v = ceil(e_v * chi / e), exact rational ceilings.
BVector b_vector(const ExtendedADECurve& c, const Polarisation& p, Int chi);

struct AdmissibilityReport {
    BVector b;
    Int outer_sum = 0; // sum of b_o over O
    Int target = 0;    // chi + |O| - 1
    std::vector<std::string> integral_outer; // o with e_o*chi/e integral (forces failure)
    bool pass = false;
};

// The admissibility condition sum_{o in O} b_o = chi + |O| - 1.
AdmissibilityReport check_assumption_H(const ExtendedADECurve& c, const Polarisation& p, Int chi);

struct SupportingInequalityReport {
    bool inner_b_all_one = false; // b_i = 1 for every i in I
    Int cases_checked = 0;        // (J, f) pairs enumerated
    Int failures = 0;
    bool ok() const { return inner_b_all_one && failures == 0; }
};

// Checks the two supporting facts behind the classification: b_i = 1 on I,
// and 1 - |J| + sum_{j in J} b_j > (f/D + sum_{j in J} e_j) * chi / e for
// every J subset of O and every integer 0 <= f <= e_I * D (D clearing the
// denominators), excluding the single case J = O, f = e_I * D.
// Requires the admissibility condition; throws AssumptionNotSatisfied.
SupportingInequalityReport check_lemma_ei(const ExtendedADECurve& c, const Polarisation& p, Int chi);

// All integer degree vectors with 1 <= e_v <= degree_bound that pass the
// admissibility check, in lexicographic order.
std::vector<Polarisation> search_admissible(const ExtendedADECurve& c, Int chi, Int degree_bound);

// The vector (-b_v + 2)_v characterising stable sheaves of Euler
// characteristic -chi (as L(-x) presentations).  Requires admissibility.
std::vector<Int> dual_parameters(const ExtendedADECurve& c, const Polarisation& p, Int chi);

} // namespace adejac

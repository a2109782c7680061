#include "adejac/polarisation.hpp"

#include <numeric>

#include "adejac/parallel.hpp"

namespace adejac {

namespace {

void require_chi_positive(Int chi)
{
    if (chi == 0)
        fail("NonPositiveChi",
             "chi = 0 is out of scope: properly semi-stable sheaves occur and the moduli "
             "description changes");
    require(chi > 0, "NonPositiveChi", "chi must be positive, got " + std::to_string(chi));
}

} // namespace

Polarisation make_polarisation(const ExtendedADECurve& c, std::vector<Rational> degrees)
{
    require(static_cast<int>(degrees.size()) == c.vertex_count(), "DimensionMismatch",
            "polarisation must list one degree per vertex");
    for (int v = 0; v < c.vertex_count(); ++v)
        require(degrees[static_cast<std::size_t>(v)].is_positive(), "InvalidPolarisation",
                "degree on " + c.graph.vertices[static_cast<std::size_t>(v)] + " must be positive");
    return Polarisation{std::move(degrees)};
}

Rational total_degree(const ExtendedADECurve& c, const Polarisation& p)
{
    Rational e;
    for (int v = 0; v < c.vertex_count(); ++v)
        e = e + Rational(c.graph.labels[v]) * p.degrees[static_cast<std::size_t>(v)];
    return e;
}

Rational inner_degree(const ExtendedADECurve& c, const Polarisation& p)
{
    Rational e;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.graph.labels[v] > 1)
            e = e + Rational(c.graph.labels[v]) * p.degrees[static_cast<std::size_t>(v)];
    return e;
}

BVector b_vector(const ExtendedADECurve& c, const Polarisation& p, Int chi)
{
    require_chi_positive(chi);
    require_valid(c);
    Rational e = total_degree(c, p);
    BVector b;
    b.chi = chi;
    b.values.reserve(static_cast<std::size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v)
        b.values.push_back((p.degrees[static_cast<std::size_t>(v)] * Rational(chi) / e).ceil());
    return b;
}

AdmissibilityReport check_assumption_H(const ExtendedADECurve& c, const Polarisation& p, Int chi)
{
    AdmissibilityReport report;
    report.b = b_vector(c, p, chi);
    Rational e = total_degree(c, p);
    Int outer = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (c.graph.labels[v] != 1)
            continue;
        ++outer;
        report.outer_sum += report.b.values[static_cast<std::size_t>(v)];
        Rational ratio = p.degrees[static_cast<std::size_t>(v)] * Rational(chi) / e;
        if (ratio.is_integer())
            report.integral_outer.push_back(c.graph.vertices[static_cast<std::size_t>(v)]);
    }
    report.target = chi + outer - 1;
    report.pass = (report.outer_sum == report.target);
    return report;
}

SupportingInequalityReport check_lemma_ei(const ExtendedADECurve& c, const Polarisation& p, Int chi)
{
    AdmissibilityReport adm = check_assumption_H(c, p, chi);
    if (!adm.pass)
        fail("AssumptionNotSatisfied",
             "polarisation admissibility fails: sum b_o = " + std::to_string(adm.outer_sum)
                 + ", required " + std::to_string(adm.target));

    SupportingInequalityReport report;
    report.inner_b_all_one = true;
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.graph.labels[v] > 1 && adm.b.values[static_cast<std::size_t>(v)] != 1)
            report.inner_b_all_one = false;

    // clear denominators: E_v = e_v * D are integers
    Int d = 1;
    for (const Rational& deg : p.degrees)
        d = std::lcm(d, deg.den());
    std::vector<Int> cleared(p.degrees.size());
    Int e_cleared = 0;
    Int inner_cleared = 0;
    for (int v = 0; v < c.vertex_count(); ++v) {
        cleared[static_cast<std::size_t>(v)] =
            p.degrees[static_cast<std::size_t>(v)].num() * (d / p.degrees[static_cast<std::size_t>(v)].den());
        e_cleared += c.graph.labels[v] * cleared[static_cast<std::size_t>(v)];
        if (c.graph.labels[v] > 1)
            inner_cleared += c.graph.labels[v] * cleared[static_cast<std::size_t>(v)];
    }

    std::vector<int> outer = c.graph.outer_vertices();
    const std::size_t outer_count = outer.size();
    require(outer_count <= 20, "InvalidGraph", "too many reduced components to enumerate");
    // inequality, cross-multiplied by e*D > 0:
    //   (1 - |J| + sum_J b_j) * E > (f + sum_J E_j) * chi
    for (std::uint32_t mask = 0; mask < (1u << outer_count); ++mask) {
        Int b_sum = 0;
        Int deg_sum = 0;
        int members = 0;
        for (std::size_t j = 0; j < outer_count; ++j) {
            if ((mask >> j) & 1u) {
                ++members;
                b_sum += adm.b.values[static_cast<std::size_t>(outer[j])];
                deg_sum += cleared[static_cast<std::size_t>(outer[j])];
            }
        }
        bool full = (members == static_cast<int>(outer_count));
        for (Int f = 0; f <= inner_cleared; ++f) {
            if (full && f == inner_cleared)
                continue; // the excluded boundary case
            ++report.cases_checked;
            __int128 lhs = static_cast<__int128>(1 - members + b_sum) * e_cleared;
            __int128 rhs = static_cast<__int128>(f + deg_sum) * chi;
            if (!(lhs > rhs))
                ++report.failures;
        }
    }
    return report;
}

std::vector<Polarisation> search_admissible(const ExtendedADECurve& c, Int chi, Int degree_bound)
{
    require_chi_positive(chi);
    require(degree_bound >= 1, "InvalidBound", "degree bound must be >= 1");
    require_valid(c);
    const int n = c.vertex_count();

    constexpr Int kBoxLimit = 100000000; // keep the exhaustive scan desk-scale
    Int box = 1;
    for (int v = 0; v < n; ++v) {
        box *= degree_bound;
        require(box <= kBoxLimit, "InvalidBound",
                "degree box larger than " + std::to_string(kBoxLimit)
                    + " vectors; lower --bound");
    }

    std::vector<std::vector<Polarisation>> slots(static_cast<std::size_t>(chunk_count(box)));
    parallel_for(box, [&](int chunk, Int begin, Int end) {
        std::vector<Polarisation>& found = slots[static_cast<std::size_t>(chunk)];
        for (Int index = begin; index < end; ++index) {
            Int rest = index;
            std::vector<Rational> degrees(static_cast<std::size_t>(n));
            for (int v = n - 1; v >= 0; --v) {
                degrees[static_cast<std::size_t>(v)] = Rational(rest % degree_bound + 1);
                rest /= degree_bound;
            }
            Polarisation p{std::move(degrees)};
            if (check_assumption_H(c, p, chi).pass)
                found.push_back(std::move(p));
        }
    });

    std::vector<Polarisation> out;
    for (auto& slot : slots)
        for (auto& p : slot)
            out.push_back(std::move(p));
    return out;
}

std::vector<Int> dual_parameters(const ExtendedADECurve& c, const Polarisation& p, Int chi)
{
    AdmissibilityReport adm = check_assumption_H(c, p, chi);
    if (!adm.pass)
        fail("AssumptionNotSatisfied",
             "polarisation admissibility fails: sum b_o = " + std::to_string(adm.outer_sum)
                 + ", required " + std::to_string(adm.target));
    std::vector<Int> out;
    out.reserve(adm.b.values.size());
    for (Int b : adm.b.values)
        out.push_back(-b + 2);
    return out;
}

} // namespace adejac

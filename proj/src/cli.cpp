#include "adejac/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adejac/documents.hpp"
#include "adejac/moduli.hpp"
#include "adejac/parallel.hpp"
#include "adejac/selftest.hpp"

namespace adejac::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------- helpers

std::string vertex_name(const ExtendedADECurve& c, int v)
{
    return c.graph.vertices[static_cast<std::size_t>(v)];
}

json curve_to_json(const ExtendedADECurve& c)
{
    json genera = json::object();
    for (int v = 0; v < c.vertex_count(); ++v)
        genera[vertex_name(c, v)] = c.genera[static_cast<std::size_t>(v)];
    return json{{"graph", {{"kind", kind_letter(c.graph.kind)}, {"n", c.graph.rank}}},
                {"genera", genera}};
}

json polarisation_to_json(const ExtendedADECurve& c, const Polarisation& p)
{
    json out = json::object();
    for (int v = 0; v < c.vertex_count(); ++v) {
        const Rational& d = p.degrees[static_cast<std::size_t>(v)];
        if (d.is_integer())
            out[vertex_name(c, v)] = d.num();
        else
            out[vertex_name(c, v)] = d.str();
    }
    return out;
}

json marking_to_json(const ExtendedADECurve& c, const MarkedSheaf& f)
{
    json o_chi = json::object();
    std::vector<int> outer = c.graph.outer_vertices();
    for (std::size_t k = 0; k < outer.size(); ++k)
        o_chi[vertex_name(c, outer[k])] = f.o_chi[k];
    json i_special = json::array();
    for (int v : f.i_special)
        i_special.push_back(vertex_name(c, v));
    json t_special = json::array();
    for (int x : f.t_special)
        t_special.push_back(c.points[static_cast<std::size_t>(x)]);
    return json{{"oChi", o_chi}, {"iSpecial", i_special}, {"tSpecial", t_special}};
}

json subcurve_to_json(const ExtendedADECurve& c, const IntVector& z)
{
    json out = json::object();
    for (int v = 0; v < c.vertex_count(); ++v)
        if (z[v] != 0)
            out[vertex_name(c, v)] = z[v];
    return out;
}

std::string subcurve_text(const ExtendedADECurve& c, const IntVector& z)
{
    std::ostringstream s;
    bool first = true;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (z[v] == 0)
            continue;
        if (!first)
            s << " + ";
        if (z[v] != 1)
            s << z[v] << "*";
        s << vertex_name(c, v);
        first = false;
    }
    if (first)
        s << "0";
    return s.str();
}

std::string degrees_text(const ExtendedADECurve& c, const Polarisation& p)
{
    std::ostringstream s;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (v > 0)
            s << " ";
        s << vertex_name(c, v) << "=" << p.degrees[static_cast<std::size_t>(v)].str();
    }
    return s.str();
}

std::string genera_text(const ExtendedADECurve& c)
{
    std::ostringstream s;
    for (int v = 0; v < c.vertex_count(); ++v) {
        if (v > 0)
            s << " ";
        s << vertex_name(c, v) << "=" << c.genera[static_cast<std::size_t>(v)];
    }
    return s.str();
}

std::string o_chi_text(const ExtendedADECurve& c, const MarkedSheaf& f)
{
    std::vector<int> outer = c.graph.outer_vertices();
    std::ostringstream s;
    s << "(";
    for (std::size_t k = 0; k < outer.size(); ++k) {
        if (k > 0)
            s << ", ";
        s << vertex_name(c, outer[k]) << "=" << f.o_chi[k];
    }
    s << ")";
    return s.str();
}

std::string marking_kind_text(const Presentation& pres)
{
    switch (pres.kind) {
    case Presentation::Kind::LineBundle:
        return "line bundle, special on " + pres.locus;
    case Presentation::Kind::SingularAtIntersection:
        return "singular at " + pres.locus;
    case Presentation::Kind::SingularOnMultipleComponent:
        return "singular on a free point of " + pres.locus;
    }
    return "?";
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t k = 0; k < row.size(); ++k)
            widths[k] = std::max(widths[k], row[k].size());
    }
    for (const auto& row : rows) {
        out << " ";
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << " " << row[k];
            if (k + 1 < row.size())
                out << std::string(widths[k] - row[k].size(), ' ');
        }
        out << "\n";
    }
}

// ASCII dual graph of the moduli component configuration
std::vector<std::string> render_dual_graph(const ExtendedDynkinGraph& g)
{
    const auto& names = g.vertices;
    auto join_chain = [&](const std::vector<int>& order, std::vector<std::size_t>* offsets) {
        std::string line;
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k > 0)
                line += " - ";
            if (offsets != nullptr)
                offsets->push_back(line.size());
            line += names[static_cast<std::size_t>(order[k])];
        }
        return line;
    };

    std::vector<std::string> art;
    if (g.kind == GraphKind::A) {
        if (g.rank == 1) {
            art.push_back(names[0] + " === " + names[1]);
            art.push_back("(double edge: two intersection sections)");
            return art;
        }
        std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
        for (int v = 0; v < g.vertex_count(); ++v)
            order[static_cast<std::size_t>(v)] = v;
        std::string chain = join_chain(order, nullptr);
        art.push_back(".- " + chain + " -.");
        art.push_back("'" + std::string(chain.size() + 4, '-') + "'");
        return art;
    }
    if (g.kind == GraphKind::D) {
        std::vector<int> chain_order;
        for (int v = 2; v <= g.rank - 2; ++v)
            chain_order.push_back(v);
        std::string chain = join_chain(chain_order, nullptr);
        std::size_t left = std::max(names[0].size(), names[1].size());
        std::string gap(chain.size() + 2, ' ');
        art.push_back(names[0] + std::string(left - names[0].size(), ' ') + gap + " "
                      + names[static_cast<std::size_t>(g.rank - 1)]);
        art.push_back(std::string(left, ' ') + "\\" + std::string(chain.size() + 2, ' ') + "/");
        art.push_back(std::string(left + 2, ' ') + chain);
        art.push_back(std::string(left, ' ') + "/" + std::string(chain.size() + 2, ' ') + "\\");
        art.push_back(names[1] + std::string(left - names[1].size(), ' ') + gap + " "
                      + names[static_cast<std::size_t>(g.rank)]);
        return art;
    }
    // E types: horizontal chain with the branch hanging under v4
    std::vector<int> chain_order;
    std::vector<int> below; // vertices below the branch point, top first
    if (g.rank == 6) {
        chain_order = {1, 3, 4, 5, 6};
        below = {2, 0};
    } else if (g.rank == 7) {
        chain_order = {0, 1, 3, 4, 5, 6, 7};
        below = {2};
    } else {
        chain_order = {1, 3, 4, 5, 6, 7, 8, 0};
        below = {2};
    }
    std::vector<std::size_t> offsets;
    std::string chain = join_chain(chain_order, &offsets);
    std::size_t branch_pos = 0;
    for (std::size_t k = 0; k < chain_order.size(); ++k)
        if (chain_order[k] == 4)
            branch_pos = offsets[k] + names[4].size() / 2;
    art.push_back(chain);
    for (int v : below) {
        art.push_back(std::string(branch_pos, ' ') + "|");
        std::size_t half = names[static_cast<std::size_t>(v)].size() / 2;
        std::size_t start = branch_pos > half ? branch_pos - half : 0;
        art.push_back(std::string(start, ' ') + names[static_cast<std::size_t>(v)]);
    }
    return art;
}

// ------------------------------------------------------------ subcommands

struct Options {
    std::string curve_path;
    std::string marking_path;
    std::string torsion_path;
    std::string polarisation_path;
    std::string elliptic;
    Int chi = 0;
    bool chi_set = false;
    Int window = 2;
    Int bound = 0;
    int max_parts = 3;
    bool unguarded = false;
    bool json_output = false;
};

CurveDocument load_curve(const Options& opt)
{
    return parse_curve_document(load_json_file(opt.curve_path));
}

Int effective_chi(const Options& opt, const CurveDocument& doc)
{
    if (opt.chi_set)
        return opt.chi;
    if (doc.chi.has_value())
        return *doc.chi;
    fail("InvalidDocument", "no chi given: pass --chi or add a \"chi\" field to the curve document");
}

Polarisation effective_polarisation(const CurveDocument& doc)
{
    if (doc.polarisation.has_value())
        return *doc.polarisation;
    fail("InvalidDocument", "the curve document has no \"polarisation\" field");
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    ValidationReport report = validate(c);

    if (opt.json_output) {
        json issues = json::array();
        for (const ValidationIssue& issue : report.issues)
            issues.push_back({{"error", issue.error}, {"vertex", issue.vertex}, {"detail", issue.detail}});
        json results = {{"valid", report.valid},
                        {"inner", report.inner},
                        {"outer", report.outer},
                        {"points", c.points},
                        {"issues", issues}};
        if (report.valid) {
            results["genus"] = genus(c);
            StratumReport stratum = stratum_codimension(c);
            results["stratum"] = {{"familyDimension", stratum.family_dimension},
                                  {"ambientDimension", stratum.ambient_dimension},
                                  {"codimension", stratum.codimension}};
        }
        json j = {{"command", "validate"},
                  {"inputs", {{"curve", curve_to_json(c)}}},
                  {"results", results},
                  {"status", report.valid ? "ok" : "error"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: validate\n";
        out << "graph: " << c.graph.name() << "  vertices: " << c.vertex_count()
            << "  edges: " << c.graph.edge_count() << "\n";
        out << "genera: " << genera_text(c) << "\n";
        out << "partition:\n";
        out << "  I (multiple components):";
        for (const std::string& name : report.inner)
            out << " " << name;
        if (report.inner.empty())
            out << " -";
        out << "\n  O (reduced components): ";
        for (std::size_t k = 0; k < report.outer.size(); ++k)
            out << (k > 0 ? " " : "") << report.outer[k];
        out << "\n";
        out << "intersection points:";
        for (const std::string& point : c.points)
            out << " " << point;
        out << "\n";
        if (report.valid) {
            out << "genus: " << genus(c) << "\n";
            StratumReport stratum = stratum_codimension(c);
            out << "codimension-1 stratum: moving family dim " << stratum.family_dimension
                << ", ambient dim " << stratum.ambient_dimension << ", codimension "
                << stratum.codimension << "\n";
        }
        for (const ValidationIssue& issue : report.issues)
            out << "issue: " << issue.error << (issue.vertex.empty() ? "" : " at " + issue.vertex)
                << ": " << issue.detail << "\n";
        out << "status: " << (report.valid ? "valid" : "invalid") << "\n";
    }
    if (!report.valid) {
        const ValidationIssue& first = report.issues.front();
        err << "error: " << first.error << ": "
            << (first.vertex.empty() ? first.detail : first.vertex + ": " + first.detail) << "\n";
        return 1;
    }
    return 0;
}

int cmd_polarisation_check(const Options& opt, std::ostream& out, std::ostream& err)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    Polarisation p = effective_polarisation(doc);
    Int chi = effective_chi(opt, doc);

    AdmissibilityReport adm = check_assumption_H(c, p, chi);
    SupportingInequalityReport ei;
    std::vector<Int> dual;
    if (adm.pass) {
        ei = check_lemma_ei(c, p, chi);
        dual = dual_parameters(c, p, chi);
    }

    if (opt.json_output) {
        json b = json::object();
        for (int v = 0; v < c.vertex_count(); ++v)
            b[vertex_name(c, v)] = adm.b.values[static_cast<std::size_t>(v)];
        json results = {{"admissible", adm.pass},
                        {"b", b},
                        {"outerSum", adm.outer_sum},
                        {"required", adm.target},
                        {"integralRatios", adm.integral_outer},
                        {"totalDegree", total_degree(c, p).str()}};
        if (adm.pass) {
            json d = json::object();
            for (int v = 0; v < c.vertex_count(); ++v)
                d[vertex_name(c, v)] = dual[static_cast<std::size_t>(v)];
            results["supportingInequalities"] = {{"ok", ei.ok()}, {"cases", ei.cases_checked}};
            results["dualChiParameters"] = d;
        }
        json j = {{"command", "polarisation-check"},
                  {"inputs",
                   {{"curve", curve_to_json(c)}, {"chi", chi},
                    {"polarisation", polarisation_to_json(c, p)}}},
                  {"results", results},
                  {"status", adm.pass ? "ok" : "error"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: polarisation-check\n";
        out << "graph: " << c.graph.name() << "  chi: " << chi << "\n";
        out << "degrees: " << degrees_text(c, p) << "  (total degree e = "
            << total_degree(c, p).str() << ")\n";
        out << "b-vector:";
        for (int v = 0; v < c.vertex_count(); ++v)
            out << " " << vertex_name(c, v) << "=" << adm.b.values[static_cast<std::size_t>(v)];
        out << "\n";
        out << "sum of b over O: " << adm.outer_sum << "   required: " << adm.target << "\n";
        if (!adm.integral_outer.empty()) {
            out << "integral degree ratios (force failure):";
            for (const std::string& name : adm.integral_outer)
                out << " " << name;
            out << "\n";
        }
        if (adm.pass) {
            out << "supporting inequalities: " << (ei.ok() ? "ok" : "FAILED") << " ("
                << ei.cases_checked << " cases)\n";
            out << "dual chi parameters (-b+2):";
            for (int v = 0; v < c.vertex_count(); ++v)
                out << " " << vertex_name(c, v) << "=" << dual[static_cast<std::size_t>(v)];
            out << "\n";
        }
        out << "admissible: " << (adm.pass ? "yes" : "no") << "\n";
    }
    if (!adm.pass) {
        err << "error: AssumptionNotSatisfied: sum b_o = " << adm.outer_sum << ", required "
            << adm.target << "\n";
        return 1;
    }
    return 0;
}

int cmd_polarisation_search(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    Int chi = effective_chi(opt, doc);
    require(opt.bound >= 1, "InvalidBound", "--bound must be a positive integer");
    std::vector<Polarisation> found = search_admissible(c, chi, opt.bound);

    if (opt.json_output) {
        json list = json::array();
        for (const Polarisation& p : found)
            list.push_back(polarisation_to_json(c, p));
        json j = {{"command", "polarisation-search"},
                  {"inputs", {{"curve", curve_to_json(c)}, {"chi", chi}, {"bound", opt.bound}}},
                  {"results", {{"count", found.size()}, {"admissible", list}}},
                  {"status", "ok"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: polarisation-search\n";
        out << "graph: " << c.graph.name() << "  chi: " << chi << "  bound: " << opt.bound << "\n";
        out << "admissible integer polarisations: " << found.size() << "\n";
        for (const Polarisation& p : found)
            out << "  " << degrees_text(c, p) << "\n";
    }
    return 0;
}

json verdict_to_json(const ExtendedADECurve& c, const StabilityVerdict& v)
{
    json j = {{"verdict", verdict_name(v.verdict)},
              {"chi", v.chi},
              {"leading", v.leading.str()}};
    if (v.witness.has_value()) {
        j["witness"] = subcurve_to_json(c, *v.witness);
        j["witnessChi"] = v.witness_chi;
        j["witnessDegree"] = v.witness_degree.str();
    }
    return j;
}

int cmd_stability(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    Polarisation p = effective_polarisation(doc);
    Int chi = effective_chi(opt, doc);
    BVector b = b_vector(c, p, chi);

    if (!opt.marking_path.empty()) {
        MarkedSheaf f = parse_marking_document(load_json_file(opt.marking_path), c);
        StabilityVerdict v = stability_test(c, f, p);
        HilbertData hp = hilbert_polynomial(c, f, p);
        if (opt.json_output) {
            json j = {{"command", "stability"},
                      {"inputs",
                       {{"curve", curve_to_json(c)}, {"chi", chi},
                        {"polarisation", polarisation_to_json(c, p)},
                        {"marking", marking_to_json(c, f)}}},
                      {"results",
                       {{"verdict", verdict_to_json(c, v)},
                        {"hilbertPolynomial",
                         {{"leading", hp.leading.str()}, {"constant", hp.constant}}}}},
                      {"status", "ok"}};
            out << j.dump(2) << "\n";
        } else {
            out << "command: stability\n";
            out << "graph: " << c.graph.name() << "  chi target: " << chi << "\n";
            out << "degrees: " << degrees_text(c, p) << "\n";
            out << "marking: oChi " << o_chi_text(c, f) << "\n";
            out << "chi(F): " << v.chi << "\n";
            out << "hilbert polynomial: P(n) = " << hp.leading.str() << " n + " << hp.constant
                << "\n";
            out << "verdict: " << verdict_name(v.verdict) << "\n";
            if (v.witness.has_value()) {
                out << "witness: Z = " << subcurve_text(c, *v.witness) << "  (chi(F|Z) = "
                    << v.witness_chi << ", e(Z) = " << v.witness_degree.str() << ")\n";
            }
        }
        return 0;
    }

    // no marking given: test the exactly-one-special candidates
    std::vector<MarkedSheaf> family = classification_family(c, b);
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"kind", "oChi", "verdict"});
    json list = json::array();
    for (const MarkedSheaf& f : family) {
        StabilityVerdict v = stability_test(c, f, p);
        Presentation pres = presentation(c, f, b);
        rows.push_back({marking_kind_text(pres), o_chi_text(c, f), verdict_name(v.verdict)});
        list.push_back({{"marking", marking_to_json(c, f)},
                        {"kind", marking_kind_text(pres)},
                        {"verdict", verdict_to_json(c, v)}});
    }
    if (opt.json_output) {
        json j = {{"command", "stability"},
                  {"inputs",
                   {{"curve", curve_to_json(c)}, {"chi", chi},
                    {"polarisation", polarisation_to_json(c, p)}}},
                  {"results", {{"candidates", list}}},
                  {"status", "ok"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: stability\n";
        out << "graph: " << c.graph.name() << "  chi: " << chi << "\n";
        out << "degrees: " << degrees_text(c, p) << "\n";
        out << "candidates with exactly one special piece:\n";
        print_table(out, rows);
    }
    return 0;
}

int cmd_enumerate(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    Polarisation p = effective_polarisation(doc);
    Int chi = effective_chi(opt, doc);
    BVector b = b_vector(c, p, chi);

    std::vector<StableMarking> stable = opt.unguarded
        ? enumerate_stable_unguarded(c, p, chi, opt.window)
        : enumerate_stable(c, p, chi, opt.window);

    json list = json::array();
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"#", "kind", "oChi", "special pieces"});
    for (std::size_t k = 0; k < stable.size(); ++k) {
        const MarkedSheaf& f = stable[k].sheaf;
        std::string kind;
        try {
            kind = marking_kind_text(presentation(c, f, b));
        } catch (const DomainError&) {
            kind = "outside the one-special family"; // possible in unguarded mode
        }
        std::string specials;
        for (int v : f.i_special)
            specials += (specials.empty() ? "" : " ") + vertex_name(c, v);
        for (int x : f.t_special)
            specials += (specials.empty() ? "" : " ") + c.points[static_cast<std::size_t>(x)];
        if (specials.empty())
            specials = "-";
        rows.push_back({std::to_string(k + 1), kind, o_chi_text(c, f), specials});
        list.push_back({{"marking", marking_to_json(c, f)}, {"kind", kind}});
    }
    if (opt.json_output) {
        json j = {{"command", "enumerate"},
                  {"inputs",
                   {{"curve", curve_to_json(c)}, {"chi", chi},
                    {"polarisation", polarisation_to_json(c, p)},
                    {"window", opt.window}, {"unguarded", opt.unguarded}}},
                  {"results", {{"stableCount", stable.size()}, {"stable", list}}},
                  {"status", "ok"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: enumerate\n";
        out << "graph: " << c.graph.name() << "  chi: " << chi << "  window: " << opt.window
            << (opt.unguarded ? "  (unguarded)" : "") << "\n";
        out << "degrees: " << degrees_text(c, p) << "\n";
        out << "stable markings: " << stable.size() << "\n";
        print_table(out, rows);
    }
    return 0;
}

int cmd_moduli(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    Polarisation p = opt.polarisation_path.empty()
        ? effective_polarisation(doc)
        : parse_polarisation_map(load_json_file(opt.polarisation_path), c);
    Int chi = effective_chi(opt, doc);

    ModuliDescription desc = describe_moduli(c, p, chi);
    consistency_check(desc, c);
    SingularLocusDescription locus = singular_locus(c);

    if (opt.json_output) {
        json components = json::array();
        for (const ModuliComponent& comp : desc.components) {
            json sections = json::array();
            for (const ModuliComponent::Section& s : comp.sections)
                sections.push_back({{"atPoint", s.at_point}, {"meets", s.meets}});
            json entry = {{"name", comp.name},
                          {"origin", comp.origin_vertex},
                          {"kind",
                           comp.kind == ModuliComponent::Kind::P1BundleOverJ ? "P1BundleOverJ"
                                                                             : "SingularStratum"},
                          {"baseDimension", comp.base_dimension},
                          {"dimension", comp.dimension},
                          {"reduced", comp.reduced},
                          {"multiplicity", comp.multiplicity},
                          {"sections", sections}};
            if (comp.multiplicity_conjectural)
                entry["multiplicityProvenance"] = "CONJECTURE";
            components.push_back(std::move(entry));
        }
        json factors = json::array();
        for (const JFactor& f : desc.j_factors)
            factors.push_back({{"vertex", f.vertex}, {"genus", f.genus}, {"b", f.b}});
        json j = {{"command", "moduli"},
                  {"inputs",
                   {{"curve", curve_to_json(c)}, {"chi", chi},
                    {"polarisation", polarisation_to_json(c, p)}}},
                  {"results",
                   {{"group", desc.group},
                    {"totalDimension", desc.total_dimension},
                    {"jDimension", desc.j_dimension},
                    {"jFactors", factors},
                    {"components", components},
                    {"intersectionGraph",
                     {{"kind", kind_letter(desc.intersection_graph.kind)},
                      {"n", desc.intersection_graph.rank}}},
                    {"singularLocus",
                     {{"finite", locus.finite}, {"strata", locus.strata},
                      {"dimension", locus.dimension}}},
                    {"notes",
                     c.graph.kind == GraphKind::A
                         ? json::array()
                         : json::array({"multiplicities of non-reduced components are "
                                        "CONJECTURE, not theorem"})}}},
                  {"status", "ok"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: moduli\n";
        out << "graph: " << c.graph.name() << "  genus: " << genus(c) << "  chi: " << chi << "\n";
        out << "degrees: " << degrees_text(c, p) << "\n";
        out << "group G: " << desc.group << "\n";
        out << "J: dimension " << desc.j_dimension;
        for (const JFactor& f : desc.j_factors)
            out << "  Pic_" << f.b << "(" << f.vertex << ")[g=" << f.genus << "]";
        out << "\n";
        out << "total dimension: " << desc.total_dimension << "\n";
        out << "components:\n";
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"name", "origin", "kind", "dim", "reduced", "multiplicity"});
        for (const ModuliComponent& comp : desc.components) {
            std::string kind = comp.kind == ModuliComponent::Kind::P1BundleOverJ
                ? "P1-bundle over J"
                : "J x C_" + comp.origin_vertex;
            std::string mult = std::to_string(comp.multiplicity);
            if (comp.multiplicity_conjectural)
                mult += " (CONJECTURE)";
            rows.push_back({comp.name, comp.origin_vertex, kind, std::to_string(comp.dimension),
                            comp.reduced ? "yes" : "no", mult});
        }
        print_table(out, rows);
        out << "sections:\n";
        for (const ModuliComponent& comp : desc.components) {
            if (comp.sections.empty())
                continue;
            out << "  " << comp.name << ":";
            for (const ModuliComponent::Section& s : comp.sections)
                out << " " << s.at_point << " (meets " << s.meets << ")";
            out << "\n";
        }
        out << "dual graph (isomorphic to " << c.graph.name() << "):\n";
        for (const std::string& line : render_dual_graph(desc.intersection_graph))
            out << "  " << line << "\n";
        out << "singular locus: " << (locus.finite ? "isolated points over J" : "J x C_i strata")
            << "  dimension " << locus.dimension << "\n";
        for (const std::string& name : locus.strata)
            out << "  " << name << "\n";
        out << "consistency: ok\n";
        if (c.graph.kind != GraphKind::A)
            out << "note: multiplicities of non-reduced components are CONJECTURE, not theorem\n";
    }
    return 0;
}

int cmd_char_cycle(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);

    std::optional<TorsionSpec> spec;
    json inputs = {{"curve", curve_to_json(c)}};
    if (!opt.torsion_path.empty()) {
        spec = parse_torsion_document(load_json_file(opt.torsion_path), c);
    } else if (!opt.elliptic.empty()) {
        std::vector<Int> values;
        std::stringstream ss(opt.elliptic);
        std::string item;
        while (std::getline(ss, item, ','))
            values.push_back([&] {
                try {
                    return static_cast<Int>(std::stoll(item));
                } catch (const std::exception&) {
                    fail("InvalidDocument", "--elliptic expects p,a,b,sx,sy integers");
                }
            }());
        require(values.size() == 5, "InvalidDocument", "--elliptic expects p,a,b,sx,sy");
        EllipticCurve e = make_elliptic_curve(values[0], values[1], values[2]);
        ECPoint s = make_point(e, values[3], values[4]);
        auto [k, m] = elliptic_translation_class_order(e, s);
        inputs["elliptic"] = {{"p", e.p}, {"a", e.a}, {"b", e.b},
                              {"pointOrder", m}, {"translationClassOrder", k}};
        spec = torsion_spec_from_elliptic(c, e, s);
    }

    CycleReport report = char_cycle(c, spec);

    if (opt.json_output) {
        json results;
        if (report.cycle_is_a_type) {
            json orders = json::object();
            for (int v = 0; v < c.vertex_count(); ++v) {
                const TorsionOrder& d = spec->orders[static_cast<std::size_t>(v)];
                if (d.infinite)
                    orders[vertex_name(c, v)] = "inf";
                else
                    orders[vertex_name(c, v)] = d.value;
            }
            results = {{"orders", orders},
                       {"lapCount", report.lap_count.str()},
                       {"rationalCurveCount", report.curve_count.str()},
                       {"note", report.note}};
        } else {
            results = {{"reducedType", report.reduced_type},
                       {"multiplicities", report.multiplicities},
                       {"note", report.note}};
        }
        json j = {{"command", "char-cycle"}, {"inputs", inputs}, {"results", results},
                  {"status", "ok"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: char-cycle\n";
        out << "graph: " << c.graph.name() << "  genera: " << genera_text(c) << "\n";
        if (report.cycle_is_a_type) {
            out << "torsion orders:";
            for (int v = 0; v < c.vertex_count(); ++v)
                out << " " << vertex_name(c, v) << "="
                    << spec->orders[static_cast<std::size_t>(v)].str();
            out << "\n";
            out << "translation order k: " << report.lap_count.str() << "\n";
            out << "characteristic cycle: " << report.curve_count.str()
                << " smooth rational curves (" << report.lap_count.str() << " laps of "
                << c.vertex_count() << " components)\n";
        } else {
            out << "characteristic cycle: reduced type " << report.reduced_type << "\n";
            out << "multiplicities along the cycle:";
            for (Int m : report.multiplicities)
                out << " " << m;
            out << "\n";
        }
        out << "note: " << report.note << "\n";
    }
    return 0;
}

int cmd_proof_scan(const Options& opt, std::ostream& out)
{
    CurveDocument doc = load_curve(opt);
    const ExtendedADECurve& c = doc.curve;
    require_valid(c);
    ProofScanReport report = proof_inequality_scan(c, opt.max_parts);

    if (opt.json_output) {
        json j = {{"command", "proof-scan"},
                  {"inputs", {{"curve", curve_to_json(c)}, {"maxParts", opt.max_parts}}},
                  {"results",
                   {{"familiesChecked", report.families_checked},
                    {"nonnegativeFamilies", report.nonnegative_families},
                    {"trivialValue", report.trivial_value},
                    {"ok", report.ok}}},
                  {"status", report.ok ? "ok" : "error"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: proof-scan\n";
        out << "graph: " << c.graph.name() << "  max parts: " << opt.max_parts << "\n";
        out << "families checked: " << report.families_checked << "\n";
        out << "nonnegative values: " << report.nonnegative_families
            << " (the trivial family, value " << report.trivial_value << ")\n";
        if (report.families_checked > 1)
            out << "largest nontrivial value: " << report.max_nontrivial_value << "\n";
        out << "status: " << (report.ok ? "ok" : "FAILED") << "\n";
    }
    return report.ok ? 0 : 1;
}

int cmd_selftest(const Options& opt, std::ostream& out)
{
    std::vector<selftest::CheckResult> results = selftest::run_all();
    bool all = true;
    if (opt.json_output) {
        json list = json::array();
        for (const selftest::CheckResult& r : results) {
            all = all && r.pass;
            list.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        json j = {{"command", "selftest"}, {"results", list},
                  {"status", all ? "ok" : "error"}};
        out << j.dump(2) << "\n";
    } else {
        out << "command: selftest\n";
        for (const selftest::CheckResult& r : results) {
            all = all && r.pass;
            out << (r.pass ? "[ok]   " : "[FAIL] ") << r.name << " -- " << r.detail << "\n";
        }
        out << "status: " << (all ? "all checks passed" : "FAILURES") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    if (thread_cap_from_env().value_or(1) < 1) {
        err << "usage error: ADE_JACOBIAN_THREADS must be a positive integer\n";
        return 2;
    }

    Options opt;
    CLI::App app{"exact stability, moduli and characteristic-cycle combinatorics "
                 "of compactified Jacobians of extended ADE curves"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json_output, "emit the machine-readable report");

    auto add_curve = [&](CLI::App* sub) {
        sub->add_option("--curve", opt.curve_path, "curve document (JSON)")->required();
    };
    auto add_chi = [&](CLI::App* sub) {
        sub->add_option("--chi", opt.chi, "Euler characteristic")
            ->each([&](const std::string&) { opt.chi_set = true; });
    };

    CLI::App* validate = app.add_subcommand("validate", "check a curve document");
    add_curve(validate);

    CLI::App* pol_check =
        app.add_subcommand("polarisation-check", "test the admissibility condition");
    add_curve(pol_check);
    add_chi(pol_check);

    CLI::App* pol_search =
        app.add_subcommand("polarisation-search", "enumerate admissible integer degree vectors");
    add_curve(pol_search);
    add_chi(pol_search);
    pol_search->add_option("--bound", opt.bound, "largest degree per component")->required();

    CLI::App* stability = app.add_subcommand("stability", "stability verdict for a marking");
    add_curve(stability);
    add_chi(stability);
    stability->add_option("--marking", opt.marking_path, "marking document (JSON)");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all stable markings");
    add_curve(enumerate);
    add_chi(enumerate);
    enumerate->add_option("--window", opt.window, "half-width of the chi search window");
    enumerate->add_flag("--unguarded", opt.unguarded,
                        "skip the admissibility requirement and the family cross-check");

    CLI::App* moduli = app.add_subcommand("moduli", "describe the compactified Jacobian");
    add_curve(moduli);
    add_chi(moduli);
    moduli->add_option("--polarisation", opt.polarisation_path,
                       "polarisation document ({vertex: degree}); defaults to the curve document");

    CLI::App* cycle = app.add_subcommand("char-cycle", "characteristic cycle of the fibration");
    add_curve(cycle);
    CLI::Option* torsion_opt =
        cycle->add_option("--torsion", opt.torsion_path, "torsion document (JSON)");
    cycle->add_option("--elliptic", opt.elliptic, "elliptic witness p,a,b,sx,sy")
            ->excludes(torsion_opt);

    CLI::App* proof = app.add_subcommand("proof-scan", "scan the classification inequality");
    add_curve(proof);
    proof->add_option("--max-parts", opt.max_parts, "filtration length bound (default 3)");

    app.add_subcommand("selftest", "run the full invariant suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed())
            return cmd_validate(opt, out, err);
        if (pol_check->parsed())
            return cmd_polarisation_check(opt, out, err);
        if (pol_search->parsed())
            return cmd_polarisation_search(opt, out);
        if (stability->parsed())
            return cmd_stability(opt, out);
        if (enumerate->parsed())
            return cmd_enumerate(opt, out);
        if (moduli->parsed())
            return cmd_moduli(opt, out);
        if (cycle->parsed())
            return cmd_char_cycle(opt, out);
        if (proof->parsed())
            return cmd_proof_scan(opt, out);
        return cmd_selftest(opt, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: InternalError: " << e.what() << "\n";
        return 1;
    }
}

} // namespace adejac::cli

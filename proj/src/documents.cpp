#include "adejac/documents.hpp"

#include <algorithm>
#include <fstream>

namespace adejac {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& object, std::initializer_list<const char*> known,
                           const std::string& where)
{
    for (const auto& item : object.items()) {
        bool ok = std::any_of(known.begin(), known.end(),
                              [&](const char* k) { return item.key() == k; });
        require(ok, "InvalidDocument", where + ": unknown field \"" + item.key() + "\"");
    }
}

Int as_int(const json& value, const std::string& where)
{
    require(value.is_number_integer(), "InvalidDocument", where + ": expected an integer");
    return value.get<Int>();
}

int vertex_index_of(const ExtendedADECurve& c, const std::string& name, const std::string& where)
{
    int v = c.graph.vertex_index(name);
    require(v >= 0, "InvalidDocument", where + ": unknown vertex \"" + name + "\"");
    return v;
}

} // namespace

nlohmann::json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "InvalidDocument", "cannot open " + path);
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    require(!doc.is_discarded(), "InvalidDocument", path + ": malformed JSON");
    return doc;
}

Rational parse_rational_value(const nlohmann::json& value, const std::string& where)
{
    if (value.is_number_integer())
        return Rational(value.get<Int>());
    require(value.is_string(), "InvalidDocument", where + ": expected an integer or \"p/q\"");
    std::string s = value.get<std::string>();
    std::size_t slash = s.find('/');
    require(slash != std::string::npos && slash > 0 && slash + 1 < s.size(), "InvalidDocument",
            where + ": rationals are written \"p/q\", got \"" + s + "\"");
    auto digits = [](const std::string& part) {
        if (part.empty())
            return false;
        std::size_t start = part[0] == '-' ? 1 : 0;
        if (start == part.size())
            return false;
        for (std::size_t k = start; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9')
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    require(digits(num) && digits(den), "InvalidDocument",
            where + ": rationals are written \"p/q\", got \"" + s + "\"");
    require(num.size() <= 18 && den.size() <= 18, "InvalidDocument", where + ": value out of range");
    return Rational(std::stoll(num), std::stoll(den));
}

CurveDocument parse_curve_document(const nlohmann::json& doc)
{
    require(doc.is_object(), "InvalidDocument", "curve document must be a JSON object");
    reject_unknown_fields(doc, {"graph", "genera", "chi", "polarisation"}, "curve document");
    require(doc.contains("graph"), "InvalidDocument", "curve document needs a \"graph\" field");

    const json& graph = doc.at("graph");
    require(graph.is_object(), "InvalidDocument", "\"graph\" must be an object");
    reject_unknown_fields(graph, {"kind", "n"}, "graph");
    require(graph.contains("kind") && graph.contains("n"), "InvalidDocument",
            "\"graph\" needs \"kind\" and \"n\"");
    require(graph.at("kind").is_string(), "InvalidDocument", "graph kind must be a string");
    std::string kind = graph.at("kind").get<std::string>();
    GraphKind k;
    if (kind == "A")
        k = GraphKind::A;
    else if (kind == "D")
        k = GraphKind::D;
    else if (kind == "E")
        k = GraphKind::E;
    else
        fail("InvalidDocument", "graph kind must be \"A\", \"D\" or \"E\", got \"" + kind + "\"");
    Int n = as_int(graph.at("n"), "graph n");
    require(n >= 1 && n <= 64, "InvalidRank", "graph rank out of range");

    ExtendedDynkinGraph g = build_graph(k, static_cast<int>(n));
    std::vector<Int> genera(static_cast<std::size_t>(g.vertex_count()), 0);
    if (doc.contains("genera")) {
        const json& gen = doc.at("genera");
        require(gen.is_object(), "InvalidDocument", "\"genera\" must map vertices to integers");
        for (const auto& item : gen.items()) {
            int v = g.vertex_index(item.key());
            require(v >= 0, "InvalidDocument", "genera: unknown vertex \"" + item.key() + "\"");
            genera[static_cast<std::size_t>(v)] = as_int(item.value(), "genera." + item.key());
        }
    }

    CurveDocument out;
    out.curve = make_curve(std::move(g), std::move(genera));
    if (doc.contains("chi"))
        out.chi = as_int(doc.at("chi"), "chi");
    if (doc.contains("polarisation"))
        out.polarisation = parse_polarisation_map(doc.at("polarisation"), out.curve);
    return out;
}

Polarisation parse_polarisation_map(const nlohmann::json& doc, const ExtendedADECurve& c)
{
    require(doc.is_object(), "InvalidDocument", "polarisation must map vertices to degrees");
    std::vector<Rational> degrees(static_cast<std::size_t>(c.vertex_count()), Rational(0));
    std::vector<bool> seen(static_cast<std::size_t>(c.vertex_count()), false);
    for (const auto& item : doc.items()) {
        int v = vertex_index_of(c, item.key(), "polarisation");
        degrees[static_cast<std::size_t>(v)] =
            parse_rational_value(item.value(), "polarisation." + item.key());
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < c.vertex_count(); ++v)
        require(seen[static_cast<std::size_t>(v)], "InvalidDocument",
                "polarisation: missing degree for "
                    + c.graph.vertices[static_cast<std::size_t>(v)]);
    return make_polarisation(c, std::move(degrees));
}

MarkedSheaf parse_marking_document(const nlohmann::json& doc, const ExtendedADECurve& c)
{
    require(doc.is_object(), "InvalidDocument", "marking document must be a JSON object");
    reject_unknown_fields(doc, {"oChi", "iSpecial", "tSpecial"}, "marking document");
    require(doc.contains("oChi"), "InvalidDocument", "marking document needs \"oChi\"");

    std::vector<int> outer = c.graph.outer_vertices();
    MarkedSheaf f;
    f.o_chi.assign(outer.size(), 0);
    std::vector<bool> seen(outer.size(), false);
    const nlohmann::json& o_chi = doc.at("oChi");
    require(o_chi.is_object(), "InvalidDocument", "\"oChi\" must map vertices to integers");
    for (const auto& item : o_chi.items()) {
        int v = vertex_index_of(c, item.key(), "oChi");
        auto pos = std::find(outer.begin(), outer.end(), v);
        require(pos != outer.end(), "InvalidDocument",
                "oChi: \"" + item.key() + "\" is a multiple component");
        std::size_t k = static_cast<std::size_t>(pos - outer.begin());
        f.o_chi[k] = as_int(item.value(), "oChi." + item.key());
        seen[k] = true;
    }
    for (std::size_t k = 0; k < outer.size(); ++k)
        require(seen[k], "InvalidDocument",
                "oChi: missing value for "
                    + c.graph.vertices[static_cast<std::size_t>(outer[k])]);

    if (doc.contains("iSpecial")) {
        require(doc.at("iSpecial").is_array(), "InvalidDocument", "\"iSpecial\" must be an array");
        for (const auto& entry : doc.at("iSpecial")) {
            require(entry.is_string(), "InvalidDocument", "iSpecial entries must be vertex names");
            int v = vertex_index_of(c, entry.get<std::string>(), "iSpecial");
            require(c.graph.labels[v] > 1, "InvalidDocument",
                    "iSpecial: " + entry.get<std::string>() + " is a reduced component");
            f.i_special.push_back(v);
        }
        std::sort(f.i_special.begin(), f.i_special.end());
    }
    if (doc.contains("tSpecial")) {
        require(doc.at("tSpecial").is_array(), "InvalidDocument", "\"tSpecial\" must be an array");
        for (const auto& entry : doc.at("tSpecial")) {
            require(entry.is_string(), "InvalidDocument", "tSpecial entries must be point names");
            std::string name = entry.get<std::string>();
            auto pos = std::find(c.points.begin(), c.points.end(), name);
            require(pos != c.points.end(), "InvalidDocument",
                    "tSpecial: unknown point \"" + name + "\"");
            f.t_special.push_back(static_cast<int>(pos - c.points.begin()));
        }
        std::sort(f.t_special.begin(), f.t_special.end());
    }
    require_marking(c, f);
    return f;
}

TorsionSpec parse_torsion_document(const nlohmann::json& doc, const ExtendedADECurve& c)
{
    require(doc.is_object(), "InvalidDocument", "torsion document must be a JSON object");
    reject_unknown_fields(doc, {"orders"}, "torsion document");
    require(doc.contains("orders"), "InvalidDocument", "torsion document needs \"orders\"");
    const nlohmann::json& orders = doc.at("orders");
    require(orders.is_object(), "InvalidDocument", "\"orders\" must map vertices to orders");

    std::vector<TorsionOrder> values(static_cast<std::size_t>(c.vertex_count()));
    std::vector<bool> seen(static_cast<std::size_t>(c.vertex_count()), false);
    for (const auto& item : orders.items()) {
        int v = vertex_index_of(c, item.key(), "orders");
        if (item.value().is_string()) {
            require(item.value().get<std::string>() == "inf", "InvalidDocument",
                    "orders." + item.key() + ": expected an integer or \"inf\"");
            values[static_cast<std::size_t>(v)] = TorsionOrder::inf();
        } else {
            values[static_cast<std::size_t>(v)] =
                TorsionOrder::finite(as_int(item.value(), "orders." + item.key()));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 0; v < c.vertex_count(); ++v)
        require(seen[static_cast<std::size_t>(v)], "InvalidDocument",
                "orders: missing entry for " + c.graph.vertices[static_cast<std::size_t>(v)]);
    return make_torsion_spec(c, std::move(values));
}

} // namespace adejac

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "adejac/charcycle.hpp"
#include "adejac/sheaves.hpp"

namespace adejac {

// The one on-disk format: UTF-8 JSON.  Unknown fields are rejected, vertex
// and point names must be the canonical ones, numbers may be integers or
// "p/q" strings where a rational is allowed.
struct CurveDocument {
    ExtendedADECurve curve;
    std::optional<Int> chi;
    std::optional<Polarisation> polarisation;
};

nlohmann::json load_json_file(const std::string& path);

CurveDocument parse_curve_document(const nlohmann::json& doc);

// {vertex: int | "p/q"}; must cover every vertex.
Polarisation parse_polarisation_map(const nlohmann::json& doc, const ExtendedADECurve& c);

// {"oChi": {vertex: int}, "iSpecial": [vertex], "tSpecial": [point]}
MarkedSheaf parse_marking_document(const nlohmann::json& doc, const ExtendedADECurve& c);

// {"orders": {vertex: int | "inf"}}; must cover every vertex.
TorsionSpec parse_torsion_document(const nlohmann::json& doc, const ExtendedADECurve& c);

Rational parse_rational_value(const nlohmann::json& value, const std::string& where);

} // namespace adejac

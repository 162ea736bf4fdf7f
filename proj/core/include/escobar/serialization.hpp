#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "escobar/geometry.hpp"
#include "escobar/regions.hpp"
#include "escobar/search.hpp"

namespace escobar {

/// Domain JSON: {"edges": [{"type":"segment","from":[x,y],"to":[x,y]} |
/// {"type":"arc","center":[x,y],"radius":r,"start_angle":a,"end_angle":b,"ccw":true}]}.
/// Malformed input throws kParse, bad geometry kInvalidGeometry; both carry
/// the edge index when one is to blame.
PlanarDomain parse_domain(std::string_view text);
std::string domain_to_json(const PlanarDomain& domain);

/// Tuple JSON: {"regions": [...]} or a bare array of
/// {"kind":"cap","a":p,"b":p} / {"kind":"strip","inner":cap,"outer":cap}.
/// A position is a global arclength, or {"junction":j,"offset":t}.
TupleCandidate parse_tuple(std::string_view text);
std::string tuple_to_json(const TupleCandidate& tuple);

std::string report_to_json(const BoundReport& report);

/// Whole file as a string; throws kParse when it cannot be read.
std::string read_text_file(const std::filesystem::path& path);
PlanarDomain load_domain(const std::filesystem::path& path);
TupleCandidate load_tuple(const std::filesystem::path& path);

/// 12 significant digits, '.' decimal point, independent of locale.
std::string format_number(double value);

/// Joins fields with commas, quoting those that contain commas or quotes.
std::string csv_row(std::span<const std::string> fields);

/// region,kind,interior,exterior,eta per region.
std::string region_report_csv(const PlanarDomain& domain, const TupleCandidate& tuple);

}  // namespace escobar

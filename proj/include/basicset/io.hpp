#ifndef BASICSET_IO_HPP
#define BASICSET_IO_HPP

#include <string>

#include <json.hpp>

#include "basicset/core.hpp"
#include "basicset/decide.hpp"

namespace basicset {

/// Text format: one point per line, 2 or 3 whitespace-separated exact
/// scalars (integers or p/q), '#' starts a comment. All points must have the
/// same arity; an input without points is the empty 3D set.
CanonicalForm parse_points_text(const std::string& text);

/// JSON format: {"dim":3,"points":[[x,y,z],...]}; scalars are JSON integers
/// or "p/q" strings.
CanonicalForm parse_points_json(const std::string& text);

/// Picks the JSON parser when the first non-blank character is '{'.
CanonicalForm parse_points(const std::string& text);

std::string format_points_text(const PointSet3& set);
nlohmann::json points_json(const PointSet3& set);

/// Values keyed by raw coordinates: text lines "x y [z] value", or JSON
/// {"values":[[x,y,z,"p/q"],...]}. Raw coordinates are mapped through the
/// canonical form of the point file.
PointFunction parse_values(const std::string& text, const CanonicalForm& form);

nlohmann::json certificate_json(const Certificate& cert);
nlohmann::json verdict_json(const Verdict& v);

/// Tables keyed by the raw coordinate values of `form`.
nlohmann::json decomposition_json(const Decomposition& d, const CanonicalForm& form);

}  // namespace basicset

#endif

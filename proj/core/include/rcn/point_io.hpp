#pragma once

#include <iosfwd>
#include <string>

#include "rcn/geometry.hpp"

namespace rcn {

/// Point-file format: one point per line, two decimal integers separated by
/// whitespace; '#' starts a comment; blank lines are ignored. Coordinates
/// beyond the capacity bound are rejected at parse time (CapacityError);
/// any other malformed line throws ParseError with the line number.
PointSet parse_point_set(std::istream& in);
PointSet parse_point_set(const std::string& text);
PointSet load_point_file(const std::string& path);

/// Canonical serialization: "x y\n" per point, no comments.
void write_point_set(std::ostream& out, const PointSet& s);
void save_point_file(const std::string& path, const PointSet& s);

/// FNV-1a 64-bit over the raw file bytes, as 16 hex digits.
std::string file_digest_hex(const std::string& path);
std::string content_digest_hex(const std::string& bytes);

}  // namespace rcn

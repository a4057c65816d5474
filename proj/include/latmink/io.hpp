#pragma once

// Text formats.
//
// Body files hold one "key: value" field per line; blank lines and lines
// starting with '#' are ignored. Rationals are written "p/q" or "p".
//
//   type: hpolytope | vpolytope | ellipsoid
//   dim: n
//   constraint: a1 ... an ; b      (hpolytope, |a.x| <= b, repeated)
//   vertex: x1 ... xn              (vpolytope, repeated)
//   center: c1 ... cn              (ellipsoid)
//   row: q1 ... qn                 (ellipsoid, n rows of the form)
//
// Point-set files hold one point per line as comma-separated integers.

#include "latmink/body.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latmink {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_body(const Body& k);
/// Throws FormatError on malformed text, std::invalid_argument when the
/// body fails validation.
Body parse_body(std::string_view text);

std::string serialize_point_set(const PointSet& u);
PointSet parse_point_set(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);  // throws FormatError if unreadable
void write_text_file(const std::filesystem::path& path, std::string_view text);

Body read_body_file(const std::filesystem::path& path);
PointSet read_point_set_file(const std::filesystem::path& path);

}  // namespace latmink

#include "latmink/io.hpp"

#include <fstream>
#include <sstream>

namespace latmink {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Rational parse_rational_field(std::string_view s, std::size_t line) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw FormatError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
}

RationalVector parse_rational_list(std::string_view s, std::size_t dim, std::size_t line) {
  const auto tokens = split_ws(s);
  if (tokens.size() != dim)
    throw FormatError("line " + std::to_string(line) + ": expected " + std::to_string(dim) + " entries");
  RationalVector v;
  for (auto t : tokens) v.push_back(parse_rational_field(t, line));
  return v;
}

void write_list(std::ostringstream& os, const auto& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
}

}  // namespace

std::string serialize_body(const Body& k) {
  std::ostringstream os;
  switch (k.kind()) {
    case BodyKind::kHPolytope: {
      const auto& p = std::get<SymmetricHPolytope>(k.representation());
      os << "type: hpolytope\ndim: " << p.dim << '\n';
      for (const auto& c : p.constraints) {
        os << "constraint: ";
        write_list(os, c.normal);
        os << " ; " << c.bound << '\n';
      }
      break;
    }
    case BodyKind::kVPolytope: {
      const auto& p = std::get<VPolytope>(k.representation());
      os << "type: vpolytope\ndim: " << p.dim << '\n';
      for (const auto& v : p.vertices) {
        os << "vertex: ";
        write_list(os, v);
        os << '\n';
      }
      break;
    }
    case BodyKind::kEllipsoid: {
      const auto& e = std::get<RationalEllipsoid>(k.representation());
      os << "type: ellipsoid\ndim: " << e.center.size() << "\ncenter: ";
      write_list(os, e.center);
      os << '\n';
      for (std::size_t i = 0; i < e.form.rows(); ++i) {
        os << "row:";
        for (std::size_t j = 0; j < e.form.cols(); ++j) os << ' ' << e.form(i, j);
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

Body parse_body(std::string_view text) {
  std::string type;
  std::optional<std::size_t> dim;
  std::vector<std::pair<std::string, std::pair<std::string_view, std::size_t>>> fields;
  std::size_t line_no = 0;
  for (auto raw : lines_of(text)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw FormatError("line " + std::to_string(line_no) + ": missing ':'");
    const std::string key(trim(line.substr(0, colon)));
    const auto value = trim(line.substr(colon + 1));
    if (key == "type") {
      if (!type.empty()) throw FormatError("duplicate type field");
      type = value;
    } else if (key == "dim") {
      if (dim) throw FormatError("duplicate dim field");
      try {
        const Integer d = parse_integer(value);
        if (d < 1 || d > 64) throw FormatError("dim out of range");
        dim = static_cast<std::size_t>(d);
      } catch (const FormatError&) {
        throw;
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(line_no) + ": bad dim");
      }
    } else if (key == "constraint" || key == "vertex" || key == "center" || key == "row") {
      fields.push_back({key, {value, line_no}});
    } else {
      throw FormatError("line " + std::to_string(line_no) + ": unknown field '" + key + "'");
    }
  }
  if (type.empty()) throw FormatError("missing type field");
  if (!dim) throw FormatError("missing dim field");
  const std::size_t n = *dim;

  auto expect_only = [&](std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, where] : fields)
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw FormatError("line " + std::to_string(where.second) + ": field '" + key + "' not allowed for " + type);
  };

  if (type == "hpolytope") {
    expect_only({"constraint"});
    SymmetricHPolytope p;
    p.dim = n;
    for (const auto& [key, where] : fields) {
      const auto [value, line] = where;
      const auto semi = value.find(';');
      if (semi == std::string_view::npos) throw FormatError("line " + std::to_string(line) + ": missing ';'");
      const auto normal = parse_rational_list(trim(value.substr(0, semi)), n, line);
      SymmetricConstraint c;
      for (const auto& a : normal) {
        if (!a.is_integer()) throw FormatError("line " + std::to_string(line) + ": constraint normals are integral");
        c.normal.push_back(a.num());
      }
      c.bound = parse_rational_field(trim(value.substr(semi + 1)), line);
      p.constraints.push_back(std::move(c));
    }
    return Body::hpolytope(std::move(p));
  }
  if (type == "vpolytope") {
    expect_only({"vertex"});
    VPolytope p;
    p.dim = n;
    for (const auto& [key, where] : fields) p.vertices.push_back(parse_rational_list(where.first, n, where.second));
    return Body::vpolytope(std::move(p));
  }
  if (type == "ellipsoid") {
    expect_only({"center", "row"});
    RationalEllipsoid e;
    e.form = RationalMatrix(n, n);
    std::size_t rows = 0;
    bool have_center = false;
    for (const auto& [key, where] : fields) {
      if (key == "center") {
        if (have_center) throw FormatError("duplicate center field");
        e.center = parse_rational_list(where.first, n, where.second);
        have_center = true;
      } else {
        if (rows == n) throw FormatError("line " + std::to_string(where.second) + ": too many rows");
        const auto row = parse_rational_list(where.first, n, where.second);
        for (std::size_t j = 0; j < n; ++j) e.form(rows, j) = row[j];
        ++rows;
      }
    }
    if (!have_center) throw FormatError("missing center field");
    if (rows != n) throw FormatError("expected " + std::to_string(n) + " rows");
    return Body::ellipsoid(std::move(e));
  }
  throw FormatError("unknown body type '" + type + "'");
}

std::string serialize_point_set(const PointSet& u) {
  std::ostringstream os;
  for (const auto& p : u) {
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
    os << '\n';
  }
  return os.str();
}

PointSet parse_point_set(std::string_view text) {
  std::vector<LatticePoint> pts;
  std::size_t line_no = 0;
  for (auto raw : lines_of(text)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<Integer> coords;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      const auto field = trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      try {
        coords.push_back(parse_integer(field));
      } catch (const std::exception&) {
        throw FormatError("line " + std::to_string(line_no) + ": bad coordinate '" + std::string(field) + "'");
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!pts.empty() && pts.front().dim() != coords.size())
      throw FormatError("line " + std::to_string(line_no) + ": dimension differs from earlier points");
    pts.emplace_back(std::move(coords));
  }
  return PointSet(std::move(pts));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
  if (!out) throw FormatError("write failed for " + path.string());
}

Body read_body_file(const std::filesystem::path& path) { return parse_body(read_text_file(path)); }
PointSet read_point_set_file(const std::filesystem::path& path) { return parse_point_set(read_text_file(path)); }

}  // namespace latmink

#include "rcn/point_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace rcn {

namespace {

std::string_view strip(std::string_view sv) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v'; };
  while (!sv.empty() && is_space(sv.front())) sv.remove_prefix(1);
  while (!sv.empty() && is_space(sv.back())) sv.remove_suffix(1);
  return sv;
}

std::int64_t parse_int(std::string_view token, std::size_t lineno) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(lineno) + ": expected an integer, got \"" +
                     std::string(token) + "\"");
  }
  return value;
}

}  // namespace

PointSet parse_point_set(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    if (const auto hash = sv.find('#'); hash != std::string_view::npos) {
      sv = sv.substr(0, hash);
    }
    sv = strip(sv);
    if (sv.empty()) continue;

    const auto ws = sv.find_first_of(" \t");
    if (ws == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected two coordinates");
    }
    const std::string_view first = sv.substr(0, ws);
    const std::string_view second = strip(sv.substr(ws));
    if (second.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": trailing content after the two coordinates");
    }
    const std::int64_t x = parse_int(first, lineno);
    const std::int64_t y = parse_int(second, lineno);
    if (x > PointSet::kCoordBound || x < -PointSet::kCoordBound ||
        y > PointSet::kCoordBound || y < -PointSet::kCoordBound) {
      throw CapacityError("line " + std::to_string(lineno) +
                          ": coordinate exceeds the capacity bound 2^30");
    }
    pts.push_back(Point{x, y});
  }
  return PointSet(std::move(pts));
}

PointSet parse_point_set(const std::string& text) {
  std::istringstream in(text);
  return parse_point_set(in);
}

PointSet load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& s) {
  for (const Point& p : s) {
    out << p.x << ' ' << p.y << '\n';
  }
}

void save_point_file(const std::string& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_point_set(out, s);
}

std::string content_digest_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string file_digest_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return content_digest_hex(buf.str());
}

}  // namespace rcn

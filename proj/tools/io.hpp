#pragma once

#include <array>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cofmat/framework.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/projective.hpp"

namespace cofmat::io {

using nlohmann::json;

/// Raised for malformed input files or arguments; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Text form "n m" followed by m lines "u v", or JSON {"n", "edges"}.
/// The format is picked from the first non-blank character.
Graph parse_graph(std::string_view text);
/// {"n", "edges", "coords": [["x", "y"], ...]}.
Framework parse_framework(std::string_view text);
/// 3x3 array of rational strings.
Mat3 parse_mat3(std::string_view text);
/// {"motion": [["a", "b", "c"], ...]} or a bare array of triples.
Motion parse_motion(std::string_view text);
/// Array of four ["x", "y"] pairs.
std::array<Point, 4> parse_quad(std::string_view text);
/// "u-v,u-v,..." (empty string gives the empty set).
EdgeSet parse_edge_list(std::string_view text);
/// "a,b,c".
PinTriple parse_pins(std::string_view text);

json to_json(const Rational& r);
json to_json(const Point& p);
json to_json(const Vec3& v);
json to_json(const Mat3& m);
json to_json(const EdgeSet& edges);
json to_json(const Graph& g);
json to_json(const Framework& f);
json to_json(const Motion& q);
json points_json(std::span<const Point> pts);

}  // namespace cofmat::io

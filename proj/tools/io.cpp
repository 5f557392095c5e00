#include "io.hpp"

#include <fstream>
#include <sstream>

namespace cofmat::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected a rational string, got " + j.dump());
}

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected a coordinate pair, got " + j.dump());
  return {rational_from(j[0]), rational_from(j[1])};
}

std::size_t count_from(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw InputError(std::string("expected a non-negative integer for ") + what);
  }
  return j.get<std::size_t>();
}

Graph graph_from(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InputError("graph JSON needs \"n\" and \"edges\"");
  const std::size_t n = count_from(j["n"], "n");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair, got " + e.dump());
    edges.push_back({static_cast<Vertex>(count_from(e[0], "vertex")), static_cast<Vertex>(count_from(e[1], "vertex"))});
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

bool looks_like_json(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string_view::npos && (text[pos] == '{' || text[pos] == '[');
}

Vertex parse_vertex(std::string_view s) {
  std::size_t pos = 0;
  const std::string str(s);
  unsigned long v = 0;
  try {
    v = std::stoul(str, &pos);
  } catch (const std::exception&) {
    throw InputError("bad vertex '" + str + "'");
  }
  if (pos != str.size() || str.empty() || str[0] == '-') throw InputError("bad vertex '" + str + "'");
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  if (looks_like_json(text)) return graph_from(parse_json(text));
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("graph text must start with \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) throw InputError("expected " + std::to_string(m) + " edge lines");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string extra;
  if (in >> extra) throw InputError("trailing data after " + std::to_string(m) + " edges");
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Framework parse_framework(std::string_view text) {
  const json j = parse_json(text);
  Graph g = graph_from(j);
  if (!j.contains("coords") || !j["coords"].is_array()) throw InputError("framework JSON needs \"coords\"");
  std::vector<Point> pts;
  for (const auto& c : j["coords"]) pts.push_back(point_from(c));
  try {
    return Framework(std::move(g), std::move(pts));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Mat3 parse_mat3(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.size() != 3) throw InputError("matrix must be a 3x3 array");
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) throw InputError("matrix must be a 3x3 array");
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = rational_from(j[r][c]);
  }
  return m;
}

Motion parse_motion(std::string_view text) {
  json j = parse_json(text);
  if (j.is_object()) {
    if (!j.contains("motion")) throw InputError("motion JSON needs \"motion\"");
    j = j["motion"];
  }
  if (!j.is_array()) throw InputError("motion must be an array of triples");
  Motion q;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 3) throw InputError("motion entries must be triples");
    q.push_back({rational_from(v[0]), rational_from(v[1]), rational_from(v[2])});
  }
  return q;
}

std::array<Point, 4> parse_quad(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array() || j.size() != 4) throw InputError("expected an array of four points");
  return {point_from(j[0]), point_from(j[1]), point_from(j[2]), point_from(j[3])};
}

EdgeSet parse_edge_list(std::string_view text) {
  EdgeSet out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw InputError("edge '" + std::string(item) + "' is not of the form u-v");
    try {
      out.insert(make_edge(parse_vertex(item.substr(0, dash)), parse_vertex(item.substr(dash + 1))));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    start = end + 1;
  }
  return out;
}

PinTriple parse_pins(std::string_view text) {
  std::vector<Vertex> v;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(',', start);
    v.push_back(parse_vertex(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (v.size() != 3) throw InputError("--pins expects three vertices a,b,c");
  return {v[0], v[1], v[2]};
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

json to_json(const Vec3& v) { return json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

json to_json(const Mat3& m) { return json::array({to_json(m[0]), to_json(m[1]), to_json(m[2])}); }

json to_json(const EdgeSet& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

json to_json(const Graph& g) { return {{"n", g.n()}, {"edges", to_json(g.edges())}}; }

json to_json(const Framework& f) {
  json j = to_json(f.graph());
  j["coords"] = points_json(f.coords());
  return j;
}

json to_json(const Motion& q) {
  json out = json::array();
  for (const auto& v : q) out.push_back(to_json(v));
  return out;
}

json points_json(std::span<const Point> pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

}  // namespace cofmat::io

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cofmat/framework.hpp"
#include "cofmat/matroid.hpp"
#include "cofmat/projective.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace {

using namespace cofmat;
using nlohmann::json;
using io::to_json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json certificates = json::object();
  std::optional<bool> pass;

  json to_json() const {
    json j{{"command", command}, {"inputs", inputs}, {"results", results}, {"certificates", certificates}};
    j["pass"] = pass ? json(*pass) : json(nullptr);
    return j;
  }
};

void print(const Report& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : r.results.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (r.pass) std::cout << "pass: " << (*r.pass ? "true" : "false") << '\n';
}

json matroid_certificate(const GenericMatroid& m) {
  json pts = json::array();
  for (const auto& c : m.certificate()) pts.push_back(io::points_json(c));
  return {{"master_seed", m.master_seed()}, {"seeds", m.seeds()}, {"points", pts}};
}

Report cmd_rank(const std::string& file, std::uint64_t seed) {
  const Graph g = io::parse_graph(io::read_file(file));
  const GenericMatroid m(g.n(), seed);
  const std::size_t r = m.rank(g.edges());
  const std::size_t n = g.n();
  const long dof = n >= 3 ? static_cast<long>(3 * n - 6) - static_cast<long>(r) : 0;
  Report rep{"rank", {{"graph", to_json(g)}, {"seed", seed}}};
  rep.results = {{"rank", r}, {"edges", g.edge_count()}, {"independent", m.independent(g.edges())},
                 {"rigid", m.is_rigid(g)}, {"dof", dof}};
  rep.certificates = matroid_certificate(m);
  return rep;
}

Report cmd_closure(const std::string& file, const std::optional<std::string>& edges, std::uint64_t seed) {
  const Graph g = io::parse_graph(io::read_file(file));
  const EdgeSet f = edges ? io::parse_edge_list(*edges) : g.edges();
  for (const auto& e : f) {
    if (e.v >= g.n()) throw io::InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " outside the vertex set");
  }
  const GenericMatroid m(g.n(), seed);
  Report rep{"closure", {{"n", g.n()}, {"edges", to_json(f)}, {"seed", seed}}};
  rep.results = {{"rank", m.rank(f)}, {"closure", to_json(m.closure(f))}};
  rep.certificates = matroid_certificate(m);
  return rep;
}

Report cmd_motions(const std::string& file, const std::string& pins_text) {
  const Framework f = io::parse_framework(io::read_file(file));
  const PinTriple pins = io::parse_pins(pins_text);
  std::vector<Motion> basis;
  int d = 0;
  try {
    validate_pins(f, pins);
    d = dof(f);
    basis = nontrivial_motion_basis(f, pins);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  } catch (const DegenerateFramework& e) {
    throw io::InputError(e.what());
  }
  Report rep{"motions", {{"framework", to_json(f)}, {"pins", {pins.a, pins.b, pins.c}}}};
  json motions = json::array();
  bool ok = basis.size() == static_cast<std::size_t>(d);
  for (const auto& q : basis) {
    motions.push_back(to_json(q));
    ok = ok && is_motion(f, q);
  }
  rep.results = {{"dof", d}, {"basis", motions}};
  rep.pass = ok;
  return rep;
}

Report cmd_verify(const std::string& suite, std::size_t trials, std::uint64_t seed) {
  Report rep{"verify", {{"suite", suite}, {"seed", seed}}};
  const auto names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  bool pass = true;
  json counterexamples = json::object();
  for (const auto& name : names) {
    std::size_t n = 0;
    try {
      n = trials ? trials : verify::default_trials(name);
    } catch (const std::invalid_argument& e) {
      throw io::InputError(e.what());
    }
    const auto out = verify::run_suite(name, n, seed);
    pass = pass && out.pass;
    rep.results[name] = {{"pass", out.pass}, {"results", out.results}};
    if (!out.counterexamples.empty()) rep.results[name]["counterexamples"] = out.counterexamples;
    rep.certificates[name] = out.certificates;
  }
  rep.inputs["trials"] = trials;
  rep.pass = pass;
  return rep;
}

Report cmd_map4(const std::string& file) {
  const auto quad = io::parse_quad(io::read_file(file));
  Mat3 m;
  try {
    m = four_point_projective_map(quad);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
  static const std::array<Point, 4> targets{Point{1, 0}, Point{0, 0}, Point{0, 1}, Point{1, 1}};
  Report rep{"projective map4", {{"points", io::points_json(quad)}}};
  json images = json::array();
  bool ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const Vec3 w = m * Vec3{quad[i].x, quad[i].y, 1};
    const Point img{w[0] / w[2], w[1] / w[2]};
    images.push_back(to_json(img));
    ok = ok && img == targets[i];
  }
  rep.results = {{"matrix", to_json(m)}, {"images", images}};
  rep.pass = ok;
  return rep;
}

Mat3 load_nonsingular(const std::string& file) {
  const Mat3 m = io::parse_mat3(io::read_file(file));
  if (is_zero(det(m))) throw io::InputError("matrix is singular");
  return m;
}

Framework checked_apply(const Mat3& m, const Framework& f) {
  try {
    return apply_projective(m, f);
  } catch (const PointAtInfinity& e) {
    throw io::InputError(e.what());
  }
}

Report cmd_apply(const std::string& mat_file, const std::string& fw_file) {
  const Mat3 m = load_nonsingular(mat_file);
  const Framework f = io::parse_framework(io::read_file(fw_file));
  const Framework g = checked_apply(m, f);
  Report rep{"projective apply", {{"matrix", to_json(m)}, {"framework", to_json(f)}}};
  const bool round_trip = apply_projective(inverse(m), g) == f;
  rep.results = {{"framework", to_json(g)}, {"round_trip", round_trip}};
  if (f.spans_plane() && g.spans_plane()) {
    rep.results["dof_before"] = dof(f);
    rep.results["dof_after"] = dof(g);
  }
  rep.pass = round_trip && rep.results.value("dof_before", 0) == rep.results.value("dof_after", 0);
  return rep;
}

Report cmd_convert(const std::string& fw_file, const std::string& mat_file, const std::string& motion_file) {
  const Framework f = io::parse_framework(io::read_file(fw_file));
  const Mat3 m = load_nonsingular(mat_file);
  const Motion q = io::parse_motion(io::read_file(motion_file));
  if (q.size() != f.n()) throw io::InputError("motion size does not match the framework");
  if (!is_motion(f, q)) throw io::InputError("input is not a motion of the framework");
  const Framework g = checked_apply(m, f);
  const Motion out = convert_motion_pipeline(f.graph(), f, g, m, q);
  bool pattern = true;
  for (const auto& e : complete_edges(f.n())) {
    const bool before = is_zero(dot3(d_vector(f.at(e.u), f.at(e.v)), q[e.u] - q[e.v]));
    const bool after = is_zero(dot3(d_vector(g.at(e.u), g.at(e.v)), out[e.u] - out[e.v]));
    pattern = pattern && before == after;
  }
  const bool motion_ok = is_motion(g, out);
  Report rep{"projective convert", {{"framework", to_json(f)}, {"matrix", to_json(m)}, {"motion", to_json(q)}}};
  rep.results = {{"framework", to_json(g)}, {"motion", to_json(out)}, {"is_motion", motion_ok}, {"pattern_preserved", pattern}};
  rep.pass = motion_ok && pattern;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the generic C1_2-cofactor matroid"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::string file, file2, file3, pins, suite;
  std::optional<std::string> edges;

  const auto common = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Print the full JSON report"); };

  auto* rank = app.add_subcommand("rank", "Generic rank, independence and rigidity of a graph");
  rank->add_option("graph", file, "Graph file (text or JSON)")->required();
  rank->add_option("--seed", seed, "Master seed for the random realizations");
  common(rank);

  auto* closure = app.add_subcommand("closure", "Closure of an edge set in the cofactor matroid");
  closure->add_option("graph", file, "Graph file; its edges are used unless --edges is given")->required();
  closure->add_option("--edges", edges, "Edge list u-v,u-v,...");
  closure->add_option("--seed", seed, "Master seed for the random realizations");
  common(closure);

  auto* motions = app.add_subcommand("motions", "Nontrivial motion basis of a framework under pinning");
  motions->add_option("framework", file, "Framework JSON file")->required();
  motions->add_option("--pins", pins, "Pinned vertices a,b,c")->required();
  common(motions);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--trials", trials, "Trials per suite (0 selects each suite's default)");
  verify->add_option("--seed", seed, "Seed");
  common(verify);

  auto* proj = app.add_subcommand("projective", "Projective maps and motion transfer");
  proj->require_subcommand(1);
  auto* map4 = proj->add_subcommand("map4", "Homography taking four points to (1,0),(0,0),(0,1),(1,1)");
  map4->add_option("points", file, "JSON array of four points")->required();
  common(map4);
  auto* apply = proj->add_subcommand("apply", "Apply a 3x3 projective map to a framework");
  apply->add_option("matrix", file, "Mat3 JSON")->required();
  apply->add_option("framework", file2, "Framework JSON")->required();
  common(apply);
  auto* convert = proj->add_subcommand("convert", "Carry a motion through a projective map");
  convert->add_option("framework", file, "Framework JSON")->required();
  convert->add_option("matrix", file2, "Mat3 JSON")->required();
  convert->add_option("motion", file3, "Motion JSON")->required();
  common(convert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Report rep;
    if (*rank) rep = cmd_rank(file, seed);
    else if (*closure) rep = cmd_closure(file, edges, seed);
    else if (*motions) rep = cmd_motions(file, pins);
    else if (*verify) rep = cmd_verify(suite, trials, seed);
    else if (*map4) rep = cmd_map4(file);
    else if (*apply) rep = cmd_apply(file, file2);
    else rep = cmd_convert(file, file2, file3);
    print(rep, as_json);
    return rep.pass.value_or(true) ? kOk : kVerificationFailed;
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

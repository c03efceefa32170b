#include "reachavoid/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "reachavoid/errors.hpp"

namespace reachavoid {

using nlohmann::json;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

// Line and column of a byte offset.
std::string locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Reader {
  std::vector<Violation>& out;

  bool point(const json& j, const std::string& what, Point& p) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
      out.push_back({ViolationKind::Schema, what + " must be an [x, y] pair of numbers"});
      return false;
    }
    p = {j[0].get<double>(), j[1].get<double>()};
    return true;
  }

  bool points(const json& doc, const char* key, const std::string& what, std::vector<Point>& ps) {
    if (!doc.contains(key) || !doc[key].is_array()) {
      out.push_back({ViolationKind::Schema, std::string("\"") + key + "\" must be an array"});
      return false;
    }
    bool ok = true;
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
      Point p;
      if (point(doc[key][i], what + " " + std::to_string(i + 1), p)) {
        ps.push_back(p);
      } else {
        ok = false;
      }
    }
    return ok;
  }
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioError({{ViolationKind::Syntax,
                          "malformed JSON at " + locate(text, e.byte > 0 ? e.byte - 1 : 0)}});
  }
  std::vector<Violation> v;
  if (!doc.is_object()) {
    throw ScenarioError({{ViolationKind::Schema, "scenario must be a JSON object"}});
  }
  Reader rd{v};

  std::vector<Point> polygon;
  if (!doc.contains("domain") || !doc["domain"].is_object()) {
    v.push_back({ViolationKind::Schema, "\"domain\" object with \"vertices\" is required"});
  } else {
    rd.points(doc["domain"], "vertices", "domain vertex", polygon);
  }
  std::vector<Point> pursuers;
  std::vector<Point> evaders;
  rd.points(doc, "pursuers", "pursuer", pursuers);
  rd.points(doc, "evaders", "evader", evaders);

  double alpha = NAN;
  if (!doc.contains("alpha") || !doc["alpha"].is_number()) {
    v.push_back({ViolationKind::Schema, "\"alpha\" must be a number"});
  } else {
    alpha = doc["alpha"].get<double>();
  }

  bool raw_pose = false;
  Point start, end, hint;
  double l = NAN;
  if (doc.contains("target")) {
    const json& t = doc["target"];
    if (!t.is_object() || !t.contains("start") || !t.contains("end") ||
        !t.contains("target_side_hint")) {
      v.push_back({ViolationKind::Schema,
                   "\"target\" needs \"start\", \"end\" and \"target_side_hint\""});
    } else {
      raw_pose = rd.point(t["start"], "target start", start) &&
                 rd.point(t["end"], "target end", end) &&
                 rd.point(t["target_side_hint"], "target side hint", hint);
    }
    if (doc.contains("target_length")) {
      v.push_back({ViolationKind::Schema, "give either \"target\" or \"target_length\", not both"});
    }
  } else if (!doc.contains("target_length") || !doc["target_length"].is_number()) {
    v.push_back({ViolationKind::Schema, "\"target_length\" (or a \"target\" pose) is required"});
  } else {
    l = doc["target_length"].get<double>();
  }
  if (!v.empty()) throw ScenarioError(std::move(v));

  FrameTransform frame;
  if (raw_pose) {
    std::vector<Point> players = pursuers;
    players.insert(players.end(), evaders.begin(), evaders.end());
    NormalizedFrame nf;
    try {
      nf = normalize_frame(start, end, polygon, players, hint);
    } catch (const DomainError& e) {
      throw ScenarioError({{ViolationKind::Chord, e.what()}});
    }
    frame = nf.transform;
    l = nf.target_length;
    polygon = nf.polygon;
    std::copy(nf.players.begin(), nf.players.begin() + pursuers.size(), pursuers.begin());
    std::copy(nf.players.begin() + pursuers.size(), nf.players.end(), evaders.begin());
  }

  v = validate_domain(polygon, l);
  if (!v.empty()) throw ScenarioError(std::move(v));
  GameDomain domain(polygon, l);
  return make_scenario(std::move(domain), alpha, std::move(pursuers), std::move(evaders), frame);
}

namespace {

json to_json(Point p) { return json::array({round12(p.x), round12(p.y)}); }

}  // namespace

json echo_scenario(const Scenario& s) {
  const FrameTransform& f = s.frame;
  json doc;
  json verts = json::array();
  for (const Point& p : s.domain.polygon()) verts.push_back(to_json(f.inverse(p)));
  doc["domain"] = {{"vertices", verts}};
  doc["alpha"] = round12(s.alpha);
  json ps = json::array();
  for (const Point& p : s.pursuers) ps.push_back(to_json(f.inverse(p)));
  json es = json::array();
  for (const Point& p : s.evaders) es.push_back(to_json(f.inverse(p)));
  doc["pursuers"] = ps;
  doc["evaders"] = es;
  if (f.is_identity()) {
    doc["target_length"] = round12(s.target_length());
  } else {
    const double l = s.target_length();
    doc["target"] = {{"start", to_json(f.inverse({0.0, 0.0}))},
                     {"end", to_json(f.inverse({l, 0.0}))},
                     {"target_side_hint", to_json(f.inverse({0.5 * l, 1.0}))}};
  }
  return doc;
}

}  // namespace reachavoid

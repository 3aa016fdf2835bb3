#include "curvem/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "curvem/errors.hpp"

namespace curvem {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt(const Eigen::Vector2d& p) { return "[" + fmt(p.x()) + ", " + fmt(p.y()) + "]"; }

void write_curve(std::ostream& os, const Curve& c, int id) {
  os << "{\"id\": " << id << ", \"kind\": \"" << to_string(c.kind) << "\"";
  switch (c.kind) {
    case CurveKind::CircleArc:
      os << ", \"center\": " << fmt(c.center) << ", \"radius\": " << fmt(c.radius);
      break;
    case CurveKind::SineGraph:
      os << ", \"amplitude\": " << fmt(c.amplitude) << ", \"omega\": " << fmt(c.omega)
         << ", \"offset\": " << fmt(c.offset) << ", \"orientation\": " << fmt(c.orientation);
      break;
    case CurveKind::Segment:
      os << ", \"p0\": " << fmt(c.p0) << ", \"p1\": " << fmt(c.p1);
      break;
    case CurveKind::ChordOf:
      os << ", \"of\": " << c.of;
      break;
  }
  os << ", \"t\": [" << fmt(c.t_lo) << ", " << fmt(c.t_hi) << "]}";
}

// --- reader helpers -------------------------------------------------------

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where, what);
}

const json& need(const json& obj, const std::string& where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

double need_num(const json& obj, const std::string& where, const std::string& key) {
  const json& v = need(obj, where, key);
  if (!v.is_number()) fail(where + "/" + key, "expected a number");
  return v.get<double>();
}

int need_int(const json& obj, const std::string& where, const std::string& key) {
  const json& v = need(obj, where, key);
  if (!v.is_number_integer()) fail(where + "/" + key, "expected an integer");
  return v.get<int>();
}

Eigen::Vector2d need_point(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(where, "expected [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::pair<double, double> need_interval(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    fail(where, "expected [t0, t1]");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

std::string mesh_to_json(const Mesh& mesh) {
  std::ostringstream os;
  os << "{\n\"vertices\": [";
  for (size_t i = 0; i < mesh.vertices.size(); ++i)
    os << (i ? ",\n" : "\n") << fmt(mesh.vertices[i]);
  os << "\n],\n\"curves\": [";
  for (size_t i = 0; i < mesh.curves.size(); ++i) {
    os << (i ? ",\n" : "\n");
    write_curve(os, mesh.curves[i], static_cast<int>(i));
  }
  os << "\n],\n\"edges\": [";
  for (size_t i = 0; i < mesh.edges.size(); ++i) {
    const Edge& e = mesh.edges[i];
    os << (i ? ",\n" : "\n") << "{\"v\": [" << e.v0 << ", " << e.v1 << "], \"curve\": ";
    if (e.curved())
      os << e.curve << ", \"t\": [" << fmt(e.t0) << ", " << fmt(e.t1) << "]}";
    else
      os << "null, \"t\": null}";
  }
  os << "\n],\n\"elements\": [";
  for (size_t k = 0; k < mesh.elements.size(); ++k) {
    const Element& el = mesh.elements[k];
    os << (k ? ",\n" : "\n") << "{\"edges\": [";
    for (size_t s = 0; s < el.edges.size(); ++s) {
      const int signed_id = (el.edges[s].edge + 1) * (el.edges[s].reversed ? -1 : 1);
      os << (s ? ", " : "") << signed_id;
    }
    os << "], \"kappa\": " << fmt(el.kappa) << "}";
  }
  os << "\n]\n}\n";
  return os.str();
}

void mesh_write(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, "cannot open for writing");
  out << mesh_to_json(mesh);
  if (!out) throw ParseError(path, "write failed");
}

Mesh mesh_from_json(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!root.is_object()) fail("", "root must be an object");

  Mesh mesh;

  const json& vertices = need(root, "", "vertices");
  if (!vertices.is_array()) fail("/vertices", "expected an array");
  for (size_t i = 0; i < vertices.size(); ++i)
    mesh.vertices.push_back(need_point(vertices[i], "/vertices/" + std::to_string(i)));

  // Curve ids may be arbitrary; edges reference them by id.
  std::map<int, int> curve_index;
  const json& curves = need(root, "", "curves");
  if (!curves.is_array()) fail("/curves", "expected an array");
  std::vector<int> chord_targets;  // 'of' ids, resolved after the full table is read
  for (size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "/curves/" + std::to_string(i);
    const json& jc = curves[i];
    if (!jc.is_object()) fail(where, "expected an object");
    const int id = need_int(jc, where, "id");
    if (!curve_index.emplace(id, static_cast<int>(i)).second)
      fail(where + "/id", "duplicate curve id " + std::to_string(id));
    const json& jkind = need(jc, where, "kind");
    if (!jkind.is_string()) fail(where + "/kind", "expected a string");
    Curve c;
    try {
      c.kind = curve_kind_from_string(jkind.get<std::string>());
    } catch (const DomainError& e) {
      fail(where + "/kind", e.what());
    }
    int chord_target = -1;
    switch (c.kind) {
      case CurveKind::CircleArc:
        c.center = need_point(need(jc, where, "center"), where + "/center");
        c.radius = need_num(jc, where, "radius");
        break;
      case CurveKind::SineGraph:
        c.amplitude = need_num(jc, where, "amplitude");
        c.omega = need_num(jc, where, "omega");
        c.offset = need_num(jc, where, "offset");
        c.orientation = need_num(jc, where, "orientation");
        break;
      case CurveKind::Segment:
        c.p0 = need_point(need(jc, where, "p0"), where + "/p0");
        c.p1 = need_point(need(jc, where, "p1"), where + "/p1");
        break;
      case CurveKind::ChordOf:
        chord_target = need_int(jc, where, "of");
        break;
    }
    std::tie(c.t_lo, c.t_hi) = need_interval(need(jc, where, "t"), where + "/t");
    chord_targets.push_back(chord_target);
    mesh.curves.push_back(c);
  }
  for (size_t i = 0; i < mesh.curves.size(); ++i) {
    if (mesh.curves[i].kind != CurveKind::ChordOf) continue;
    auto it = curve_index.find(chord_targets[i]);
    if (it == curve_index.end())
      fail("/curves/" + std::to_string(i) + "/of",
           "references unknown curve id " + std::to_string(chord_targets[i]));
    mesh.curves[i].of = it->second;
  }

  const json& edges = need(root, "", "edges");
  if (!edges.is_array()) fail("/edges", "expected an array");
  for (size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const json& je = edges[i];
    if (!je.is_object()) fail(where, "expected an object");
    const json& jv = need(je, where, "v");
    if (!jv.is_array() || jv.size() != 2 || !jv[0].is_number_integer() ||
        !jv[1].is_number_integer())
      fail(where + "/v", "expected [v0, v1]");
    Edge e;
    e.v0 = jv[0].get<int>();
    e.v1 = jv[1].get<int>();
    const json& jcurve = need(je, where, "curve");
    const json& jt = need(je, where, "t");
    if (jcurve.is_null()) {
      if (!jt.is_null()) fail(where + "/t", "straight edge must have null parameter interval");
    } else {
      if (!jcurve.is_number_integer()) fail(where + "/curve", "expected a curve id or null");
      auto it = curve_index.find(jcurve.get<int>());
      if (it == curve_index.end())
        fail(where + "/curve", "references unknown curve id " + std::to_string(jcurve.get<int>()));
      e.curve = it->second;
      std::tie(e.t0, e.t1) = need_interval(jt, where + "/t");
    }
    mesh.edges.push_back(e);
  }

  const json& elements = need(root, "", "elements");
  if (!elements.is_array()) fail("/elements", "expected an array");
  for (size_t k = 0; k < elements.size(); ++k) {
    const std::string where = "/elements/" + std::to_string(k);
    const json& jel = elements[k];
    if (!jel.is_object()) fail(where, "expected an object");
    const json& jedges = need(jel, where, "edges");
    if (!jedges.is_array() || jedges.empty()) fail(where + "/edges", "expected a nonempty array");
    Element el;
    for (size_t s = 0; s < jedges.size(); ++s) {
      const std::string swhere = where + "/edges/" + std::to_string(s);
      if (!jedges[s].is_number_integer()) fail(swhere, "expected a signed edge id");
      const int signed_id = jedges[s].get<int>();
      if (signed_id == 0) fail(swhere, "signed edge ids are 1-based; 0 is invalid");
      el.edges.push_back({std::abs(signed_id) - 1, signed_id < 0});
    }
    el.kappa = need_num(jel, where, "kappa");
    mesh.elements.push_back(el);
  }

  mesh.finalize();
  return mesh;
}

Mesh mesh_read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return mesh_from_json(buf.str(), path);
}

}  // namespace curvem

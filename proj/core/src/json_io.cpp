#include "toralf/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace toralf {

namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

void append_kv(std::string& out, const char* key, const std::string& value, bool first = false) {
  if (!first) out += ',';
  out += '"';
  out += key;
  out += "\":";
  out += value;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_json(const PseudoProfile& p) {
  std::string out = "{";
  append_kv(out, "A", format_double(p.constant()), true);
  std::string turns = "[";
  for (std::size_t i = 0; i < p.turns().size(); ++i) {
    if (i) turns += ',';
    turns += "{\"z\":" + format_double(p.turns()[i].z) +
             ",\"a\":" + format_double(p.turns()[i].a) + "}";
  }
  turns += "]";
  append_kv(out, "turns", turns);
  out += "}";
  return out;
}

std::string to_json(const ChenTeoParams& p) {
  std::string out = "{";
  append_kv(out, "p", format_double(p.p()), true);
  append_kv(out, "q", format_double(p.q()));
  append_kv(out, "a", format_double(p.a()));
  append_kv(out, "b", format_double(p.b()));
  append_kv(out, "d1", format_double(p.gap1()));
  append_kv(out, "d3", format_double(p.gap3()));
  out += "}";
  return out;
}

namespace {

std::string d_array(const std::vector<double>& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += format_double(d[i]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string to_json(const PotentialSample& s) {
  std::string out = "{";
  append_kv(out, "U", format_double(s.U), true);
  append_kv(out, "U_rho", format_double(s.U_rho));
  append_kv(out, "U_z", format_double(s.U_z));
  append_kv(out, "U_rhorho", format_double(s.U_rhorho));
  append_kv(out, "U_rhoz", format_double(s.U_rhoz));
  append_kv(out, "U_zz", format_double(s.U_zz));
  append_kv(out, "H", format_double(s.H));
  append_kv(out, "d", d_array(s.d));
  out += "}";
  return out;
}

std::string to_json(const AxisPotentialSample& s) {
  std::string out = "{";
  append_kv(out, "rho_U_rho", format_double(s.rho_U_rho), true);
  append_kv(out, "rho_U_z", format_double(s.rho_U_z));
  append_kv(out, "H", format_double(s.H));
  append_kv(out, "U_zz", format_double(s.U_zz));
  append_kv(out, "d", d_array(s.d));
  out += "}";
  return out;
}

std::string to_json(const FieldSample& s) {
  std::string out = "{";
  append_kv(out, "rho", format_double(s.rho), true);
  append_kv(out, "z", format_double(s.z));
  append_kv(out, "V", format_double(s.V));
  append_kv(out, "F", format_double(s.F));
  append_kv(out, "e2nu", format_double(s.e2nu));
  out += "}";
  return out;
}

std::string to_json(const AxisFieldSample& s) {
  std::string out = "{";
  append_kv(out, "z", format_double(s.z), true);
  append_kv(out, "V", format_double(s.V));
  append_kv(out, "F", format_double(s.F));
  append_kv(out, "e2nu", format_double(s.e2nu));
  append_kv(out, "zero_slope", bool_str(s.zero_slope));
  out += "}";
  return out;
}

std::string to_json(const AxisData& d) {
  std::string out = "{";
  append_kv(out, "F_consts", d_array(d.F_consts), true);
  append_kv(out, "af_defect", format_double(d.af_defect));
  append_kv(out, "af_defect_closed", format_double(d.af_defect_closed));
  append_kv(out, "A_recovered", format_double(d.A_recovered));
  out += "}";
  return out;
}

std::string to_json(const MomentPair& m) {
  std::string out = "{";
  append_kv(out, "x1", format_double(m.x1), true);
  append_kv(out, "mu", format_double(m.mu));
  out += "}";
  return out;
}

std::string to_json(const Polytope& p) {
  std::string out = "{";
  std::string verts = "[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) verts += ',';
    verts += "{\"label\":" + quoted(p.vertices[i].label) +
             ",\"x\":" + format_double(p.vertices[i].x) +
             ",\"y\":" + format_double(p.vertices[i].y) + "}";
  }
  verts += "]";
  append_kv(out, "vertices", verts, true);
  std::string edges = "[";
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) edges += ',';
    edges += "{\"label\":" + quoted(p.edges[i].label) +
             ",\"from\":" + std::to_string(p.edges[i].from) +
             ",\"to\":" + std::to_string(p.edges[i].to) +
             ",\"dashed\":" + bool_str(p.edges[i].dashed);
    if (p.edges[i].normal)
      edges += ",\"normal\":{\"c_t\":" + format_double((*p.edges[i].normal)[0]) +
               ",\"c_x3\":" + format_double((*p.edges[i].normal)[1]) + "}";
    edges += "}";
  }
  edges += "]";
  append_kv(out, "edges", edges);
  append_kv(out, "fig2_basis", bool_str(p.fig2_basis));
  out += "}";
  return out;
}

std::string to_json(const KillingVector& v) {
  std::string out = "{";
  append_kv(out, "c_t", format_double(v.c_t), true);
  append_kv(out, "c_x3", format_double(v.c_x3));
  out += "}";
  return out;
}

std::string to_json(const RegularityReport& r) {
  std::string out = "{";
  append_kv(out, "nut_charge", format_double(r.nut_charge), true);
  append_kv(out, "nut_is_integer", bool_str(r.nut_is_integer));
  append_kv(out, "regular", bool_str(r.regular));
  append_kv(out, "n", r.n ? std::to_string(*r.n) : "null");
  append_kv(out, "l1", r.l1 ? std::to_string(*r.l1) : "null");
  append_kv(out, "l2", r.l2 ? std::to_string(*r.l2) : "null");
  append_kv(out, "epsilon1", std::to_string(r.epsilon1));
  append_kv(out, "epsilon2", std::to_string(r.epsilon2));
  std::string alphas = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) alphas += ',';
    alphas += format_double(r.alphas[static_cast<std::size_t>(i)]);
  }
  alphas += "]";
  append_kv(out, "alphas", alphas);
  if (r.topology) {
    const char* kind = r.topology->kind == BoundaryKind::lens_space ? "lens_space"
                       : r.topology->kind == BoundaryKind::sphere3  ? "sphere3"
                                                                    : "s1_x_s2";
    std::string topo = "{\"kind\":" + quoted(kind) + ",\"n\":" + std::to_string(r.topology->n) +
                       ",\"l\":" + std::to_string(r.topology->l);
    if (r.topology->kind == BoundaryKind::lens_space)
      topo += ",\"slope\":" + format_double(static_cast<double>(r.topology->l) /
                                            static_cast<double>(r.topology->n));
    topo += "}";
    append_kv(out, "topology", topo);
  } else {
    append_kv(out, "topology", "null");
  }
  std::string wit = "[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i) wit += ',';
    wit += to_json(r.witnesses[i]);
  }
  wit += "]";
  append_kv(out, "witnesses", wit);
  append_kv(out, "angles_unique", bool_str(r.angles_unique));
  append_kv(out, "relation_residual", format_double(r.relation_residual));
  out += "}";
  return out;
}

PseudoProfile profile_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::usage_error, std::string("profile JSON: ") + e.what());
  }
  try {
    const double A = j.at("A").get<double>();
    std::vector<Turn> turns;
    for (const auto& t : j.at("turns"))
      turns.push_back({t.at("z").get<double>(), t.at("a").get<double>()});
    return make_pseudo_profile(A, std::move(turns));
  } catch (const json::exception& e) {
    fail(errc::usage_error, std::string("profile JSON: ") + e.what());
  }
}

ChenTeoParams params_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::usage_error, std::string("params JSON: ") + e.what());
  }
  try {
    const double p = j.at("p").get<double>();
    const double q = j.at("q").get<double>();
    if (j.contains("d1") || j.contains("d3"))
      return ChenTeoParams::from_gaps(p, q, j.at("d1").get<double>(), j.at("d3").get<double>());
    return ChenTeoParams::from_ab(p, q, j.at("a").get<double>(), j.at("b").get<double>());
  } catch (const json::exception& e) {
    fail(errc::usage_error, std::string("params JSON: ") + e.what());
  }
}

}  // namespace toralf

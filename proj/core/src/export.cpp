#include "tautilt/export.hpp"

#include <sstream>

namespace tautilt {

std::string key_label(const std::vector<GVec>& key) {
  std::string out;
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += "|";
    out += gvec_str(key[i]);
  }
  return out;
}

Json graph_json(const ExchangeGraph& g, long long seed, int budget) {
  Json j;
  j["schema"] = 1;
  j["seed"] = seed;
  j["budget"] = budget;
  j["complete"] = g.complete;
  j["connected"] = is_connected(g);
  j["node_count"] = g.node_count();
  j["edge_count"] = int(g.edges.size());
  Json nodes = Json::array();
  for (int i = 0; i < g.node_count(); ++i) {
    const auto& nd = g.nodes[i];
    Json n;
    n["id"] = i;
    n["key"] = nd.pair.key_str();
    Json gv = Json::array();
    for (const auto& s : nd.pair.s) {
      Json v = Json::array();
      for (long long c : s.g) v.push_back(c);
      gv.push_back(v);
    }
    n["g_vectors"] = gv;
    Json dims = Json::array();
    for (const auto& s : nd.pair.s) {
      if (s.shifted) continue;
      Json v = Json::array();
      for (int d : s.mod.dims) v.push_back(d);
      dims.push_back(v);
    }
    n["dim_vectors"] = dims;
    Json supp = Json::array();
    for (int v : nd.pair.proj_vertices())
      supp.push_back(g.alg->pres.quiver.vertices[v]);
    n["support_drops"] = supp;
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["a"] = g.nodes[e.u].pair.key_str();
    je["b"] = g.nodes[e.v].pair.key_str();
    je["slot_a"] = e.slot_u;
    je["slot_b"] = e.slot_v;
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

std::string graph_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph tau_tilting {\n";
  os << "  node [shape=box,fontname=\"monospace\"];\n";
  for (int i = 0; i < g.node_count(); ++i) {
    os << "  n" << i << " [label=\"";
    const auto& s = g.nodes[i].pair.s;
    for (size_t k = 0; k < s.size(); ++k) {
      if (k) os << "\\n";
      os << gvec_str(s[k].g);
    }
    os << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.slot_u << "/"
       << e.slot_v << "\"];\n";
  os << "}\n";
  return os.str();
}

Json fan_report_json(const FanReport& rep) {
  Json j;
  j["schema"] = 1;
  j["ok"] = rep.ok();
  j["pairs_checked"] = rep.pairs_checked;
  j["edges_checked"] = rep.edges_checked;
  j["violations"] = rep.violations;
  return j;
}

namespace {

Json rat_array(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

}  // namespace

Json coverage_json(const CoverageReport& rep,
                   const std::vector<RayExclusion>& exclusions) {
  Json j;
  j["schema"] = 1;
  j["seed"] = rep.seed;
  j["samples"] = rep.samples;
  j["excluded"] = rep.excluded;
  j["inside"] = rep.inside;
  j["fraction"] = rat_str(rep.fraction);
  Json ex = Json::array();
  for (const auto& e : exclusions) {
    Json je;
    je["ray"] = rat_array(e.direction);
    je["radius"] = rat_str(e.radius);
    ex.push_back(je);
  }
  j["exclusions"] = ex;
  Json missed = Json::array();
  for (const auto& m : rep.missed) missed.push_back(rat_array(m));
  j["missed"] = missed;
  return j;
}

Json containment_json(const ContainmentReport& rep) {
  Json j;
  j["schema"] = 1;
  j["all_witnessed"] = rep.all_witnessed();
  j["unwitnessed"] = rep.unwitnessed;
  Json cones = Json::array();
  for (const auto& c : rep.cones) {
    Json jc;
    jc["cone"] = key_label(c.b_key);
    jc["witnessed"] = c.witnessed;
    jc["samples_tried"] = c.samples_tried;
    if (c.witnessed) {
      jc["witness"] = rat_array(c.point);
      jc["inside"] = key_label(c.a_key);
    }
    cones.push_back(jc);
  }
  j["cones"] = cones;
  return j;
}

}  // namespace tautilt

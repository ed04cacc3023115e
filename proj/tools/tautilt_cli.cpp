#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tautilt/export.hpp"
#include "tautilt/stability.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

namespace {

// exit codes: 0 ok, 1 input/parse, 2 exchange failure, 3 incomplete with
// --require-complete, 4 domain error, 5 internal/verification failure
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitExchange = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitDomain = 4;
constexpr int kExitInternal = 5;

struct CommonOpts {
  std::string preset;
  std::string file;
  std::string out = "-";
  std::string format = "json";
  int budget = 10000;
  int samples = 1000;
  int samples_per_cone = 24;
  long long seed = 1;
  int threads = 1;
  bool require_complete = false;
  std::vector<std::string> exclude;
};

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "preset algebra, e.g. linear_A:3");
  cmd->add_option("--file", o.file, "algebra file");
  cmd->add_option("--out", o.out, "output path, '-' for stdout");
  cmd->add_option("--seed", o.seed, "sampling seed, recorded in outputs");
  cmd->add_option("--threads", o.threads, "worker threads for exploration");
}

AlgebraPresentation load_presentation(const CommonOpts& o) {
  if (!o.preset.empty() && !o.file.empty())
    throw ParseError("give either --preset or --file, not both");
  if (!o.preset.empty()) return preset(o.preset);
  if (o.file.empty()) throw ParseError("an input algebra is required");
  std::ifstream in(o.file);
  if (!in) throw ParseError("cannot open '" + o.file + "'");
  return parse_presentation(in);
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << content;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) out.push_back(rat_parse(cur));
  return out;
}

std::vector<RayExclusion> parse_exclusions(const std::vector<std::string>& raw,
                                           int dim) {
  std::vector<RayExclusion> out;
  for (const auto& spec : raw) {
    auto colon = spec.rfind(':');
    if (colon == std::string::npos)
      throw ParseError("exclusion must look like x,y,...:radius");
    RayExclusion ex;
    ex.direction = parse_rat_list(spec.substr(0, colon));
    ex.radius = rat_parse(spec.substr(colon + 1));
    if (int(ex.direction.size()) != dim)
      throw ParseError("exclusion ray has the wrong dimension");
    out.push_back(ex);
  }
  return out;
}

struct Explored {
  AlgQ alg;
  std::unique_ptr<MutationContext> ctx;
  ExchangeGraph graph;
};

Explored explore_presentation(const AlgebraPresentation& pres,
                              const CommonOpts& o) {
  if (!pres.field.is_rationals())
    throw UnsupportedField("exploration runs over field Q");
  Explored e;
  e.alg = build_algebra<Rat>(pres);
  e.ctx = std::make_unique<MutationContext>(e.alg);
  e.graph = explore(*e.ctx, e.ctx->projective_pair(), o.budget, o.threads);
  return e;
}

Json graph_json_with_invariants(const ExchangeGraph& g, const CommonOpts& o) {
  Json j = graph_json(g, o.seed, o.budget);
  bool regular = g.complete;
  bool unimodular = true;
  for (int i = 0; i < g.node_count(); ++i) {
    if (g.complete && g.degree(i) != g.alg->n) regular = false;
    Rat d = cone_det(node_cone(g, i));
    unimodular = unimodular && (d == Rat(1) || d == Rat(-1));
  }
  j["regular"] = g.complete ? Json(regular) : Json(nullptr);
  j["unimodular"] = unimodular;
  return j;
}

int finish_graph_command(const ExchangeGraph& g, const CommonOpts& o,
                         const Json& payload) {
  if (o.format == "dot")
    write_output(o.out, graph_dot(g));
  else
    write_output(o.out, payload.dump(1) + "\n");
  if (o.require_complete && !g.complete) return kExitIncomplete;
  return kExitOk;
}

int cmd_explore(const CommonOpts& o) {
  auto e = explore_presentation(load_presentation(o), o);
  return finish_graph_command(e.graph, o, graph_json_with_invariants(e.graph, o));
}

int cmd_fan(const CommonOpts& o) {
  auto e = explore_presentation(load_presentation(o), o);
  auto excl = parse_exclusions(o.exclude, e.alg->n);
  auto fan = check_fan(e.graph);
  auto cov = coverage(e.graph, o.samples, excl, o.seed);
  Json j;
  j["schema"] = 1;
  j["seed"] = o.seed;
  j["budget"] = o.budget;
  j["complete"] = e.graph.complete;
  j["node_count"] = e.graph.node_count();
  j["fan"] = fan_report_json(fan);
  j["coverage"] = coverage_json(cov, excl);
  write_output(o.out, j.dump(1) + "\n");
  if (o.require_complete && !e.graph.complete) return kExitIncomplete;
  return kExitOk;
}

struct QuotientOpts {
  std::vector<std::string> kill_arrows;
  std::vector<std::string> drop_vertices;
  std::vector<std::string> relations;
  std::string quotient_file;
};

int cmd_quotient(const CommonOpts& o, const QuotientOpts& qo) {
  AlgebraPresentation base = load_presentation(o);
  AlgebraPresentation quot;
  if (!qo.quotient_file.empty()) {
    std::ifstream in(qo.quotient_file);
    if (!in) throw ParseError("cannot open '" + qo.quotient_file + "'");
    quot = parse_presentation(in);
  } else {
    AlgebraPresentation cur = base;
    if (!qo.kill_arrows.empty() || !qo.relations.empty()) {
      std::vector<Relation> extra;
      for (const auto& id : qo.kill_arrows) {
        Relation r;
        PathWord w;
        w.arrows = {cur.quiver.arrow_index(id)};
        w.source = cur.quiver.arrows[w.arrows[0]].src;
        r.terms.emplace_back(Rat(1), w);
        extra.push_back(r);
      }
      for (const auto& text : qo.relations)
        extra.push_back(parse_relation_text(cur.quiver, text));
      cur = quotient_by_relations(cur, extra).quotient;
    }
    if (!qo.drop_vertices.empty()) {
      std::set<int> dropped;
      for (const auto& label : qo.drop_vertices)
        dropped.insert(cur.quiver.vertex_index(label));
      cur = quotient_by_idempotent(cur, dropped).quotient;
    }
    if (cur == base)
      throw ParseError("quotient command needs a quotient specification");
    quot = cur;
  }

  auto ea = explore_presentation(base, o);
  auto eb = explore_presentation(quot, o);
  Json j;
  j["schema"] = 1;
  j["seed"] = o.seed;
  j["budget"] = o.budget;
  j["base_nodes"] = ea.graph.node_count();
  j["base_complete"] = ea.graph.complete;
  j["quotient_nodes"] = eb.graph.node_count();
  j["quotient_complete"] = eb.graph.complete;
  j["quotient_connected"] = is_connected(eb.graph);
  if (ea.alg->n == eb.alg->n) {
    auto rep = chamber_containment(ea.graph, eb.graph, o.samples_per_cone);
    j["containment"] = containment_json(rep);
  } else {
    j["containment"] = nullptr;
  }
  write_output(o.out, j.dump(1) + "\n");
  if (o.require_complete && !(ea.graph.complete && eb.graph.complete))
    return kExitIncomplete;
  return kExitOk;
}

PinnedPair parse_pin(MutationContext& ctx, const std::string& text) {
  PinnedPair pin;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    char kind = tok[0];
    std::string label = tok.substr(1);
    int v = ctx.alg()->pres.quiver.vertex_index(label);
    if (kind == 'P') {
      pin.module_gs.push_back(
          ctx.module_summand(indec_projective(ctx.alg(), v)).g);
    } else if (kind == 'V') {
      pin.projs.push_back(v);
    } else {
      throw ParseError("pin tokens are P<vertex> or V<vertex>");
    }
  }
  if (pin.module_gs.empty() && pin.projs.empty())
    throw ParseError("empty pin");
  return pin;
}

int cmd_reduce(const CommonOpts& o, const std::string& pin_text) {
  auto e = explore_presentation(load_presentation(o), o);
  if (!e.graph.complete)
    throw IncompleteGraph("reduction needs a complete graph; raise --budget");
  PinnedPair pin = parse_pin(*e.ctx, pin_text);
  auto red = tau_reduction(*e.ctx, e.graph, pin);

  // independent exploration of B and graph-isomorphism verification
  MutationContext bctx(red.b);
  auto bgraph = explore(bctx, bctx.projective_pair(), o.budget, o.threads);

  bool bijective = bgraph.complete &&
                   int(red.node_map.size()) == bgraph.node_count();
  for (const auto& [ak, bk] : red.node_map)
    bijective = bijective && bgraph.find(bk) >= 0;
  int edges_in_sub = 0;
  bool edges_ok = true;
  std::set<std::pair<int, int>> bedges;
  for (const auto& be : bgraph.edges)
    bedges.insert({std::min(be.u, be.v), std::max(be.u, be.v)});
  for (const auto& ge : e.graph.edges) {
    auto ku = e.graph.nodes[ge.u].key;
    auto kv = e.graph.nodes[ge.v].key;
    if (!red.node_map.count(ku) || !red.node_map.count(kv)) continue;
    ++edges_in_sub;
    int bu = bgraph.find(red.node_map.at(ku));
    int bv = bgraph.find(red.node_map.at(kv));
    if (bu < 0 || bv < 0 ||
        !bedges.count({std::min(bu, bv), std::max(bu, bv)}))
      edges_ok = false;
  }
  bool verified = bijective && edges_ok &&
                  edges_in_sub == int(bgraph.edges.size());

  Json j;
  j["schema"] = 1;
  j["seed"] = o.seed;
  j["pin"] = pin_text;
  j["t_node"] = e.graph.nodes[red.t_node].pair.key_str();
  j["b_vertices"] = red.b->n;
  j["b_dim"] = red.b->dim;
  j["subgraph_nodes"] = int(red.node_map.size());
  j["b_nodes"] = bgraph.node_count();
  j["subgraph_edges"] = edges_in_sub;
  j["b_edges"] = int(bgraph.edges.size());
  j["graphs_isomorphic"] = verified;
  Json map = Json::array();
  for (const auto& [ak, bk] : red.node_map) {
    Json m;
    m["a"] = key_label(ak);
    m["b"] = key_label(bk);
    map.push_back(m);
  }
  j["node_map"] = map;
  write_output(o.out, j.dump(1) + "\n");
  return verified ? kExitOk : kExitInternal;
}

int cmd_oracle_check(const CommonOpts& o) {
  if (o.preset.empty())
    throw ParseError("oracle-check needs --preset");
  AlgebraPresentation pres = preset(o.preset);
  auto alg = build_algebra<Rat>(pres);
  MutationContext ctx(alg);

  std::vector<ModQ> indecs;
  bool complete_family = true;
  auto head = o.preset.substr(0, o.preset.find(':'));
  if (head == "linear_A") {
    if (alg->n > 4) throw UnsupportedFamily("pair oracle supports linear_A up to 4");
    indecs = oracle_linear_a_indecs(alg);
  } else if (head == "cyclic_nakayama") {
    int ell = std::stoi(o.preset.substr(o.preset.rfind(':') + 1));
    if (alg->n * ell > 12)
      throw UnsupportedFamily("pair oracle supports small Nakayama presets");
    indecs = oracle_nakayama_indecs(alg, ell);
  } else if (head == "kronecker") {
    complete_family = false;
    int depth = std::max(2, (o.budget + 1) / 2 + 1);
    indecs = oracle_kronecker_indecs(alg, depth);
  } else {
    throw UnsupportedFamily("no pair oracle for preset '" + o.preset + "'");
  }

  auto oracle_pairs = oracle_support_tau_tilting(ctx, indecs);
  auto graph = explore(ctx, ctx.projective_pair(), o.budget, o.threads);

  std::set<std::vector<GVec>> oracle_keys, explored_keys;
  for (const auto& p : oracle_pairs) oracle_keys.insert(p.key());
  for (const auto& nd : graph.nodes) explored_keys.insert(nd.key);
  bool agree;
  if (complete_family) {
    agree = graph.complete && oracle_keys == explored_keys;
  } else {
    agree = true;
    for (const auto& k : explored_keys) agree = agree && oracle_keys.count(k) > 0;
  }

  Json j;
  j["schema"] = 1;
  j["seed"] = o.seed;
  j["preset"] = o.preset;
  j["oracle_pairs"] = int(oracle_keys.size());
  j["explored_nodes"] = int(explored_keys.size());
  j["complete"] = graph.complete;
  j["agree"] = agree;
  write_output(o.out, j.dump(1) + "\n");
  return agree ? kExitOk : kExitInternal;
}

template <unsigned P>
Module<Fp<P>> parse_module_stream(const AlgebraPtr<Fp<P>>& alg,
                                  std::istream& in) {
  Module<Fp<P>> m = zero_module(alg);
  const Quiver& q = alg->pres.quiver;
  std::string line;
  bool have_dims = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      for (int v = 0; v < alg->n; ++v)
        if (!(ls >> m.dims[v])) throw ParseError("dim expects one entry per vertex");
      for (size_t a = 0; a < q.arrows.size(); ++a)
        m.mats[a] = Mat<Fp<P>>(m.dims[q.arrows[a].src], m.dims[q.arrows[a].tgt]);
      have_dims = true;
    } else if (head == "arrow") {
      if (!have_dims) throw ParseError("dim line must precede arrow blocks");
      std::string id;
      if (!(ls >> id)) throw ParseError("arrow expects an id");
      int a = q.arrow_index(id);
      int rows = m.dims[q.arrows[a].src], cols = m.dims[q.arrows[a].tgt];
      for (int r = 0; r < rows; ++r) {
        if (!std::getline(in, line))
          throw ParseError("unexpected end of module matrix");
        std::istringstream rs(line);
        std::string cell;
        for (int c = 0; c < cols; ++c) {
          if (!(rs >> cell)) throw ParseError("short matrix row");
          m.mats[a].at(r, c) = scalar_from_rat<Fp<P>>(rat_parse(cell));
        }
      }
    } else {
      throw ParseError("unknown module directive '" + head + "'");
    }
  }
  if (!have_dims) throw ParseError("module literal needs a dim line");
  m.check_shapes();
  validate_module(m);
  return m;
}

template <unsigned P>
int run_stability(const AlgebraPresentation& pres, const std::string& module_file,
                  const std::string& theta_text, const CommonOpts& o) {
  auto alg = build_algebra<Fp<P>>(pres);
  std::ifstream min(module_file);
  if (!min) throw ParseError("cannot open '" + module_file + "'");
  auto m = parse_module_stream<P>(alg, min);
  auto theta = parse_rat_list(theta_text);
  if (int(theta.size()) != alg->n)
    throw ParseError("theta needs one entry per vertex");
  auto dims = submodule_dim_vectors<P>(m);
  bool ss = is_theta_semistable<P>(m, theta);
  Json j;
  j["schema"] = 1;
  j["seed"] = o.seed;
  j["field"] = pres.field.str();
  Json md = Json::array();
  for (int d : m.dims) md.push_back(d);
  j["module_dims"] = md;
  Json sd = Json::array();
  for (const auto& d : dims) {
    Json v = Json::array();
    for (int x : d) v.push_back(x);
    sd.push_back(v);
  }
  j["submodule_dim_vectors"] = sd;
  Json th = Json::array();
  for (const auto& t : theta) th.push_back(rat_str(t));
  j["theta"] = th;
  j["semistable"] = ss;
  write_output(o.out, j.dump(1) + "\n");
  return kExitOk;
}

int cmd_stability(const CommonOpts& o, const std::string& module_file,
                  const std::string& theta_text) {
  AlgebraPresentation pres = load_presentation(o);
  if (pres.field.is_rationals())
    throw UnsupportedField("stability brute force needs a prime field (F2/F3)");
  if (pres.field.p == 2) return run_stability<2>(pres, module_file, theta_text, o);
  if (pres.field.p == 3) return run_stability<3>(pres, module_file, theta_text, o);
  throw UnsupportedField("stability brute force capped at F_2/F_3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting pairs, mutation graphs, g-vector fans and "
               "quotient pipelines for bound quiver algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  QuotientOpts qo;
  std::string pin_text, module_file, theta_text;

  auto* explore_cmd = app.add_subcommand("explore", "enumerate the mutation graph");
  add_input_flags(explore_cmd, o);
  explore_cmd->add_option("--budget", o.budget, "node budget");
  explore_cmd->add_option("--format", o.format, "json|dot");
  explore_cmd->add_flag("--require-complete", o.require_complete,
                        "exit 3 when the budget truncates the graph");

  auto* fan_cmd = app.add_subcommand("fan", "fan checks and coverage sampling");
  add_input_flags(fan_cmd, o);
  fan_cmd->add_option("--budget", o.budget, "node budget");
  fan_cmd->add_option("--samples", o.samples, "direction samples");
  fan_cmd->add_option("--exclude-ray", o.exclude,
                      "excluded ray as x,y,...:radius (repeatable)");
  fan_cmd->add_flag("--require-complete", o.require_complete);

  auto* quot_cmd = app.add_subcommand("quotient", "quotient pipeline");
  add_input_flags(quot_cmd, o);
  quot_cmd->add_option("--budget", o.budget, "node budget per graph");
  quot_cmd->add_option("--kill-arrow", qo.kill_arrows, "arrow id to kill");
  quot_cmd->add_option("--drop-vertex", qo.drop_vertices, "vertex label to drop");
  quot_cmd->add_option("--add-relation", qo.relations,
                       "extra relation, e.g. '1*a.b - 1*c.d'");
  quot_cmd->add_option("--quotient-file", qo.quotient_file,
                       "explicit quotient presentation");
  quot_cmd->add_option("--samples-per-cone", o.samples_per_cone,
                       "containment samples per cone");
  quot_cmd->add_flag("--require-complete", o.require_complete);

  auto* reduce_cmd = app.add_subcommand("reduce", "tau-reduction at a pinned pair");
  add_input_flags(reduce_cmd, o);
  reduce_cmd->add_option("--budget", o.budget, "node budget");
  reduce_cmd->add_option("--pin", pin_text, "pinned summands, e.g. P1 or P1,V2")
      ->required();

  auto* oracle_cmd = app.add_subcommand("oracle-check",
                                        "compare exploration with the preset oracle");
  add_input_flags(oracle_cmd, o);
  oracle_cmd->add_option("--budget", o.budget, "node budget");

  auto* stab_cmd = app.add_subcommand("stability", "brute-force semistability");
  add_input_flags(stab_cmd, o);
  stab_cmd->add_option("--module", module_file, "module literal file")->required();
  stab_cmd->add_option("--theta", theta_text, "stability vector p/q,p/q,...")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (app.got_subcommand(explore_cmd)) return cmd_explore(o);
    if (app.got_subcommand(fan_cmd)) return cmd_fan(o);
    if (app.got_subcommand(quot_cmd)) return cmd_quotient(o, qo);
    if (app.got_subcommand(reduce_cmd)) return cmd_reduce(o, pin_text);
    if (app.got_subcommand(oracle_cmd)) return cmd_oracle_check(o);
    if (app.got_subcommand(stab_cmd)) return cmd_stability(o, module_file, theta_text);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const ExchangeFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitExchange;
  } catch (const InternalError& e) {
    std::cerr << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitParse;
}

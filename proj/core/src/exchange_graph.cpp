#include "tautilt/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <thread>

namespace tautilt {

std::vector<int> ExchangeGraph::frontier() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    for (int nb : nodes[i].nbr)
      if (nb < 0) {
        out.push_back(int(i));
        break;
      }
  return out;
}

int ExchangeGraph::degree(int node) const {
  int d = 0;
  for (const auto& e : edges)
    if (e.u == node || e.v == node) ++d;
  return d;
}

namespace {

int slot_of_g(const TauPair& p, const GVec& g) {
  for (int i = 0; i < p.size(); ++i)
    if (p.s[i].g == g) return i;
  return -1;
}

// The summand of `child` that `parent` does not contain.
GVec fresh_g(const TauPair& parent, const TauPair& child) {
  for (const auto& x : child.s)
    if (!parent.contains_g(x.g)) return x.g;
  throw InternalError("mutation returned its own source");
}

}  // namespace

ExchangeGraph explore(MutationContext& ctx, const TauPair& start, int budget,
                      int threads) {
  if (budget < 1) throw BadParams("exploration budget must be >= 1");
  if (threads < 1) threads = 1;
  if (!ctx.is_tau_tilting(start))
    throw NotTauTilting("exploration must start at a tau-tilting pair");

  ExchangeGraph g;
  g.alg = ctx.alg();
  auto add_node = [&](const TauPair& p) {
    GraphNode node;
    node.pair = p;
    node.key = p.key();
    node.nbr.assign(p.size(), -1);
    g.nodes.push_back(std::move(node));
    g.index[g.nodes.back().key] = int(g.nodes.size()) - 1;
    return int(g.nodes.size()) - 1;
  };
  add_node(start);

  std::deque<int> wave{0};
  bool budget_hit = false;
  const int nslots = start.size();

  while (!wave.empty() && !budget_hit) {
    std::vector<int> batch(wave.begin(), wave.end());
    wave.clear();

    struct Task {
      int u, slot;
      TauPair result;
      std::exception_ptr err;
      bool skip = true;
    };
    std::vector<Task> tasks;
    for (int u : batch)
      for (int s = 0; s < nslots; ++s)
        if (g.nodes[u].nbr[s] < 0) tasks.push_back(Task{u, s, {}, nullptr, true});

    auto run_task = [&](Task& t) {
      try {
        t.result = ctx.mutate(g.nodes[t.u].pair, t.slot);
        t.skip = false;
      } catch (...) {
        t.err = std::current_exception();
      }
    };
    if (threads == 1 || tasks.size() <= 1) {
      for (auto& t : tasks) run_task(t);
    } else {
      std::vector<std::thread> pool;
      std::atomic<size_t> next{0};
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&] {
          for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            run_task(tasks[i]);
          }
        });
      for (auto& th : pool) th.join();
    }

    for (auto& t : tasks) {
      if (t.err) std::rethrow_exception(t.err);
      if (g.nodes[t.u].nbr[t.slot] >= 0) continue;  // resolved by a twin task
      auto key = t.result.key();
      int v = g.find(key);
      if (v < 0) {
        if (int(g.nodes.size()) >= budget) {
          budget_hit = true;
          continue;
        }
        v = add_node(t.result);
        wave.push_back(v);
      }
      int back = slot_of_g(g.nodes[v].pair,
                           fresh_g(g.nodes[t.u].pair, g.nodes[v].pair));
      if (back < 0) throw InternalError("mutated summand missing from neighbor");
      g.nodes[t.u].nbr[t.slot] = v;
      if (g.nodes[v].nbr[back] < 0) {
        g.nodes[v].nbr[back] = t.u;
        g.edges.push_back(GraphEdge{t.u, v, t.slot, back});
      } else if (g.nodes[v].nbr[back] != t.u) {
        throw InternalError("conflicting neighbors at one slot");
      }
    }
  }

  g.complete = true;
  for (const auto& node : g.nodes)
    for (int nb : node.nbr) g.complete = g.complete && nb >= 0;
  return g;
}

bool is_connected(const ExchangeGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<int> q{0};
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& e : g.edges) {
      int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
      if (other >= 0 && !seen[other]) {
        seen[other] = true;
        ++count;
        q.push_back(other);
      }
    }
  }
  return count == int(g.nodes.size());
}

std::optional<std::vector<int>> path_in_subgraph(const ExchangeGraph& g,
                                                 int from, int to,
                                                 const PinnedPair& shared) {
  if (!g.complete) throw IncompleteGraph("subgraph paths need a complete graph");
  if (from == to) return std::vector<int>{};
  auto allowed = [&](int i) { return pair_contains(g.nodes[i].pair, shared); };
  if (!allowed(from) || !allowed(to))
    throw NoContainingNode("endpoint does not contain the shared summand");
  std::vector<int> prev(g.nodes.size(), -2);
  std::deque<int> q{from};
  prev[from] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& e : g.edges) {
      int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
      if (other < 0 || prev[other] != -2 || !allowed(other)) continue;
      prev[other] = u;
      if (other == to) {
        std::vector<int> path{to};
        int at = to;
        while (prev[at] != -1) {
          at = prev[at];
          path.push_back(at);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      q.push_back(other);
    }
  }
  return std::nullopt;
}

ModQ module_part_sum(MutationContext& ctx, const TauPair& p) {
  std::vector<ModQ> mods;
  for (const auto& x : p.s)
    if (!x.shifted) mods.push_back(x.mod);
  if (mods.empty()) return zero_module(ctx.alg());
  return direct_sum(mods);
}

int fac_maximal_completion(MutationContext& ctx, const ExchangeGraph& g,
                           const PinnedPair& u) {
  if (!g.complete)
    throw IncompleteGraph("fac-maximal completion needs a complete graph");
  std::vector<int> containing;
  for (int i = 0; i < g.node_count(); ++i)
    if (pair_contains(g.nodes[i].pair, u)) containing.push_back(i);
  if (containing.empty())
    throw NoContainingNode("no explored node contains the pinned pair");
  std::vector<ModQ> sums;
  for (int i : containing) sums.push_back(module_part_sum(ctx, g.nodes[i].pair));
  for (size_t a = 0; a < containing.size(); ++a) {
    bool maximal = true;
    for (size_t b = 0; b < containing.size() && maximal; ++b) {
      if (a == b) continue;
      maximal = fac_contains(sums[a], sums[b]);
    }
    if (maximal) return containing[a];
  }
  throw InternalError("no Fac-maximal node among completions");
}

}  // namespace tautilt

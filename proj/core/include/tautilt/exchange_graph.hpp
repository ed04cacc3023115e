#ifndef TAUTILT_EXCHANGE_GRAPH_HPP
#define TAUTILT_EXCHANGE_GRAPH_HPP

#include <optional>

#include "tautilt/tau_pair.hpp"

namespace tautilt {

struct GraphNode {
  TauPair pair;
  std::vector<GVec> key;
  std::vector<int> nbr;  // per slot, node index or -1 while unexplored
};

struct GraphEdge {
  int u = 0, v = 0;
  int slot_u = 0, slot_v = 0;
};

struct ExchangeGraph {
  AlgQ alg;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::map<std::vector<GVec>, int> index;
  bool complete = false;

  int node_count() const { return int(nodes.size()); }
  int find(const std::vector<GVec>& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }
  std::vector<int> frontier() const;  // nodes with unexplored slots
  int degree(int node) const;
};

// Breadth-first closure of `start` under mutation. Nodes are keyed by their
// sorted g-vector lists; stops when closed or when `budget` nodes have been
// discovered. With threads > 1 the mutations of a wave run in parallel and
// are merged in canonical order, so the result does not depend on the
// thread count.
ExchangeGraph explore(MutationContext& ctx, const TauPair& start, int budget,
                      int threads = 1);

bool is_connected(const ExchangeGraph& g);

// A path from `from` to `to` through nodes containing `shared`, if any.
// Returns node indices including both endpoints; equal endpoints give an
// empty path. Requires a complete graph.
std::optional<std::vector<int>> path_in_subgraph(const ExchangeGraph& g,
                                                 int from, int to,
                                                 const PinnedPair& shared);

// Among nodes containing `u`, the one whose module part generates the
// largest torsion class.
int fac_maximal_completion(MutationContext& ctx, const ExchangeGraph& g,
                           const PinnedPair& u);

ModQ module_part_sum(MutationContext& ctx, const TauPair& p);

}  // namespace tautilt

#endif

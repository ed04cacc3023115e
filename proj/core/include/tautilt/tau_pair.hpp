#ifndef TAUTILT_TAU_PAIR_HPP
#define TAUTILT_TAU_PAIR_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/rep_ops.hpp"

namespace tautilt {

using GVec = std::vector<long long>;

std::string gvec_str(const GVec& g);

// One indecomposable summand of a tau-rigid pair: either a module or a
// shifted projective (0, P(vertex)). Module summands carry the minimal
// presentation multiplicities that produced their g-vector.
struct Summand {
  bool shifted = false;  // true: (0, P(vertex))
  int vertex = -1;
  ModQ mod;  // module summand when !shifted
  GVec g;
  std::vector<int> p0_mult, p1_mult;
};

struct TauPair {
  std::vector<Summand> s;  // sorted by g-vector, lexicographically

  int size() const { return int(s.size()); }
  std::vector<GVec> key() const;
  std::string key_str() const;
  std::vector<int> proj_vertices() const;
  std::vector<const ModQ*> module_parts() const;
  bool contains_g(const GVec& g) const;
};

// The sub-pair used for pinning: module summands identified by g-vector.
struct PinnedPair {
  std::vector<GVec> module_gs;
  std::vector<int> projs;
};

bool pair_contains(const TauPair& node, const PinnedPair& pin);

// Per-algebra session owning the opposite algebra and all mutation caches.
// Cache keys are g-vectors of verified tau-rigid indecomposables, which
// determine the module up to isomorphism, so cached values are
// isomorphism invariants. Entries are only created for summands of pairs
// that passed verification.
class MutationContext {
 public:
  explicit MutationContext(AlgQ a);

  const AlgQ& alg() const { return a_; }
  const AlgQ& aop();
  MutationContext& op_context();

  int n() const { return a_->n; }

  GVec g_of_module(const ModQ& indec_mod);
  Summand module_summand(const ModQ& indec_mod);
  Summand shifted_summand(int vertex);

  // Builds a pair from parts, sorts canonically, checks basicness.
  TauPair make_pair(const std::vector<ModQ>& mods, const std::vector<int>& projs);
  TauPair make_pair_summands(std::vector<Summand> parts);
  TauPair projective_pair();  // (A, 0)

  // Registers a known-good indecomposable so its translate and Hom data
  // enter the caches (used by the preset oracles).
  void register_module(const ModQ& indec_mod);

  // Throws InvariantViolation when the pair data violates the tau-rigid
  // pair axioms; returns |M| + |P| == n otherwise.
  bool is_tau_tilting(const TauPair& p);
  void validate_pair(const TauPair& p);

  // The unique other completion at the given slot.
  TauPair mutate(const TauPair& p, int slot);

  // Order-reversing transpose duality onto the opposite algebra; the slot
  // maps to the summand with negated g-vector.
  std::pair<TauPair, int> dual_pair(const TauPair& p, int slot);

  const std::vector<MorQ>& hom_cached(const GVec& gs, const ModQ& ms,
                                      const GVec& gt, const ModQ& mt);

 private:
  struct Interned {
    ModQ rep;
    ModQ tau;
    GVec g;
    bool is_proj = false;
    int proj_vertex = -1;
    std::vector<int> p0_mult, p1_mult;
  };

  const Interned* find_interned(const GVec& g);
  void intern_summand(const Summand& s);
  bool pair_rigid(const TauPair& p);

  std::optional<TauPair> try_left_exchange(const TauPair& p, int slot);
  bool post_verify(const TauPair& p, const TauPair& cand, int slot);

  AlgQ a_;
  AlgQ aop_;
  std::unique_ptr<MutationContext> opctx_;
  MutationContext* opctx_raw_ = nullptr;  // set when this is itself an op context

  std::mutex mu_;
  std::map<GVec, Interned> interned_;
  std::map<std::pair<GVec, GVec>, bool> rigid_pair_cache_;  // Hom(Ms, tau Mt) == 0
  std::map<std::pair<GVec, GVec>, std::vector<MorQ>> hom_cache_;
};

}  // namespace tautilt

#endif

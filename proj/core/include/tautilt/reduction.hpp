#ifndef TAUTILT_REDUCTION_HPP
#define TAUTILT_REDUCTION_HPP

#include "tautilt/exchange_graph.hpp"

namespace tautilt {

struct EndPresentation {
  AlgebraPresentation pres;        // one vertex per summand, in input order
  std::vector<MorQ> arrow_reps;    // arrow k: s -> t realized by a map T_t -> T_s
  std::vector<std::pair<int, int>> arrow_ends;  // (s, t) per arrow
};

// Presents End(T_1 (+) ... (+) T_m) as a bound quiver algebra: vertices are
// the summands, arrows a basis of rad/rad^2, relations a generating set of
// the kernel of the induced surjection, computed degreewise up to the
// nilpotency length of the radical. Verified against End by dimension and
// structure constants.
EndPresentation present_endomorphism_summands(const std::vector<ModQ>& parts);

// Public form: decomposes T, fails on repeated summands.
AlgebraPresentation present_endomorphism_algebra(const ModQ& t);

struct ReductionResult {
  int t_node = -1;                       // fac-maximal completion in the graph
  AlgebraPresentation b_pres;
  AlgQ b;
  std::map<std::vector<GVec>, std::vector<GVec>> node_map;  // A-key -> B-key
};

// Tau-reduction at the pinned tau-rigid pair: presents B = End(T)/<e_U> for
// T the fac-maximal completion, and maps every node containing the pin to a
// tau-tilting pair of B via Hom(T, -) reduced by maps through add(U).
ReductionResult tau_reduction(MutationContext& ctx, const ExchangeGraph& g,
                              const PinnedPair& u);

}  // namespace tautilt

#endif

#ifndef TAUTILT_ZOO_HPP
#define TAUTILT_ZOO_HPP

#include "tautilt/tau_pair.hpp"

namespace tautilt {

// Preset bound quiver algebras used by the verification suites and the CLI.
//   linear_A:n           1 -> 2 -> ... -> n, no relations (n <= 6)
//   kronecker            1 => 2, arrows a and b
//   cyclic_nakayama:n:l  cyclic quiver on n vertices, rad^l = 0
//   tilted_A3            1 -> 2 -> 3 with the length-2 path zero
//   cluster_tilted_A3    3-cycle with all length-2 paths zero
AlgebraPresentation preset(const std::string& name);

AlgebraPresentation preset_linear_a(int n);
AlgebraPresentation preset_kronecker();
AlgebraPresentation preset_cyclic_nakayama(int n, int ell);
AlgebraPresentation preset_tilted_a3();
AlgebraPresentation preset_cluster_tilted_a3();

// Closed-form indecomposables, independent of the mutation machinery.
std::vector<ModQ> oracle_linear_a_indecs(const AlgQ& a);
std::vector<ModQ> oracle_nakayama_indecs(const AlgQ& a, int ell);
std::vector<ModQ> oracle_kronecker_indecs(const AlgQ& a, int depth);
std::vector<ModQ> oracle_tilted_a3_indecs(const AlgQ& a);

// Brute force over subsets of the given indecomposables plus projective
// vertex sets; an oracle for explore, not derived from it.
std::vector<TauPair> oracle_support_tau_tilting(MutationContext& ctx,
                                                const std::vector<ModQ>& indecs);

struct QuotientPairPreset {
  AlgebraPresentation b;  // cluster_tilted_A3
  AlgebraPresentation c;  // tilted_A3, realized as b without the cycle arrow
  QuotientMap map;        // kills the arrow closing the 3-cycle
};
QuotientPairPreset preset_quotient_pair();

// Induction along the section of the preset projection: applies the path
// inclusion to a minimal presentation over C and takes the cokernel over B.
ModQ induce_along_section(const ModQ& m_over_c, const AlgQ& c_alg,
                          const AlgQ& b_alg);

}  // namespace tautilt

#endif

#ifndef TAUTILT_REP_OPS_HPP
#define TAUTILT_REP_OPS_HPP

#include "tautilt/module.hpp"

namespace tautilt {

using ModQ = Module<Rat>;
using MorQ = Morph<Rat>;
using AlgQ = AlgebraPtr<Rat>;

AlgQ opposite_algebra(const AlgQ& a);

// Image of an algebra element under the reversal anti-isomorphism A -> A^op.
SparseElem<Rat> op_map(const Algebra<Rat>& a, const Algebra<Rat>& aop,
                       const SparseElem<Rat>& x);

// Module morphism P(i) -> P(j) given by left multiplication with
// u in e_j A e_i (a combination of paths j -> i).
MorQ left_mult_morph(const AlgQ& alg, const SparseElem<Rat>& u, int i, int j);

// Expands multiplicity vectors into a summand vertex list, matching the
// order in which projective covers assemble their direct sums.
std::vector<int> vertex_list_from_mults(const std::vector<int>& mult);

// Entry matrix u[a][b] in e_{i_a} A e_{j_b} of a morphism between sums of
// indecomposable projectives h : (+) P(j_b) -> (+) P(i_a).
std::vector<std::vector<SparseElem<Rat>>> projective_entries(
    const AlgQ& alg, const std::vector<int>& src_verts,
    const std::vector<int>& tgt_verts, const MorQ& h);

// Morphism (+) P(j_b) -> (+) P(i_a) over `alg` assembled from entry data:
// block (a, b) acts by left multiplication with u[a][b] in e_{i_a} A e_{j_b}.
std::pair<std::pair<ModQ, ModQ>, MorQ> assemble_projective_morphism(
    const AlgQ& alg, const std::vector<int>& src_verts,
    const std::vector<int>& tgt_verts,
    const std::vector<std::vector<SparseElem<Rat>>>& u);

// Transpose along a minimal projective presentation; lands in mod A^op and
// vanishes exactly on projectives.
ModQ transpose_module(const ModQ& m, const AlgQ& aop);

// Vector-space dual with transposed arrow actions; target algebra must be
// the opposite presentation of m's algebra.
ModQ dual_module(const ModQ& m, const AlgQ& target);

// Auslander-Reiten translate D Tr.
ModQ tau(const ModQ& m, const AlgQ& aop);

bool is_projective_module(const ModQ& m);
// For an indecomposable projective: the vertex i with M = P(i).
int projective_vertex(const ModQ& m);

bool proj_dim_le_1(const ModQ& m);
bool inj_dim_le_1(const ModQ& m, const AlgQ& aop);

bool is_tau_rigid_module(const ModQ& m, const AlgQ& aop);

// True iff every map in Hom(M, tau N) vanishes; the module arguments may be
// zero (vacuously rigid).
bool hom_vanishes(const ModQ& m, const ModQ& n);

// Fac N contains M: the evaluation Hom(N, M) (x) N -> M is surjective.
bool fac_contains(const ModQ& n, const ModQ& m);

// End(M) with radical data; characteristic zero only.
struct EndAlgebra {
  std::vector<MorQ> basis;
  Mat<Rat> flat;        // rows = flattened basis morphisms
  Mat<Rat> rad_coords;  // rows = radical elements in basis coordinates
  Rref<Rat> rad_rref;
  int dim() const { return int(basis.size()); }
  int rad_dim() const { return rad_coords.rows(); }
};
EndAlgebra end_algebra(const ModQ& m);

// Fills flat/radical data for an externally assembled basis of End(M).
void complete_end_algebra(EndAlgebra& e);

// Embeds a morphism parts[s] -> parts[t] as an endomorphism of the direct
// sum supported on that block.
MorQ block_embed(const std::vector<ModQ>& parts, const ModQ& total, int s,
                 int t, const MorQ& h);

std::vector<Rat> morph_coords(const EndAlgebra& e, const MorQ& f);
MorQ morph_from_coords(const EndAlgebra& e, const ModQ& m,
                       const std::vector<Rat>& coords);

// Krull-Schmidt decomposition over Q via idempotent lifting in End(M).
// Throws NonSplitResidue when a summand's residue division ring exceeds
// dimension one.
std::vector<std::pair<ModQ, int>> decompose(const ModQ& m);

// Isomorphism test for indecomposable modules: equal dimension vectors plus
// an invertible element of the Hom basis. For indecomposables this check is
// complete: the non-isomorphisms form a proper subspace, so a basis cannot
// consist of them alone when an isomorphism exists.
bool is_isomorphic_indec(const ModQ& a, const ModQ& b);

// General isomorphism via decomposition and summand matching.
bool is_isomorphic(const ModQ& a, const ModQ& b);

// M (x)_A B = M / M ker(pi) for a quotient presentation produced by the
// quotient operations of quiver.hpp.
ModQ induce_along_quotient(const ModQ& m, const QuotientMap& qm,
                           const AlgQ& a_built, const AlgQ& b_built);

// dim Ext^1(N, M), computed from the syzygy of N.
int ext1_dim(const ModQ& n, const ModQ& m);

// dim of the subspace of Hom(M, N) of maps factoring through injectives.
int hom_through_injectives_dim(const ModQ& m, const ModQ& n, const AlgQ& aop);

}  // namespace tautilt

#endif

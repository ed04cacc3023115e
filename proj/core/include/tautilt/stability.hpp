#ifndef TAUTILT_STABILITY_HPP
#define TAUTILT_STABILITY_HPP

#include <set>

#include "tautilt/module.hpp"

namespace tautilt {

// Brute-force stability kernel over a small prime field. Submodule
// enumeration is exponential, so the contract is desk scale: p <= 3 and
// total dimension <= 10, with a hard internal valve on the lattice size.

namespace detail {

template <unsigned P>
void stability_caps(const Module<Fp<P>>& m) {
  static_assert(P >= 2);
  if (P > 3) throw UnsupportedField("stability brute force capped at F_2/F_3");
  if (m.total_dim() > 10)
    throw CapExceeded("stability brute force capped at total dimension 10");
}

// canonical encoding of a per-vertex subspace tuple (rref rows, flattened)
template <unsigned P>
std::vector<unsigned> tuple_signature(const std::vector<Mat<Fp<P>>>& rows) {
  std::vector<unsigned> sig;
  for (const auto& m : rows) {
    sig.push_back(0xffffffffu);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) sig.push_back(m.at(r, c).v);
  }
  return sig;
}

template <unsigned P>
std::vector<Mat<Fp<P>>> close_under_arrows(const Module<Fp<P>>& m,
                                           std::vector<Mat<Fp<P>>> rows) {
  const Quiver& q = m.alg->pres.quiver;
  for (int v = 0; v < m.alg->n; ++v) rows[v] = rref(rows[v]).R;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      int s = q.arrows[a].src, t = q.arrows[a].tgt;
      if (rows[s].rows() == 0) continue;
      Mat<Fp<P>> img = rows[s] * m.mats[a];
      Mat<Fp<P>> joined = rref(vstack(rows[t], img)).R;
      if (joined.rows() != rows[t].rows()) {
        rows[t] = joined;
        changed = true;
      }
    }
  }
  return rows;
}

}  // namespace detail

// Exact set of dimension vectors of all submodules: cyclic closures of
// every nonzero vector, then pairwise sums to a fixpoint.
template <unsigned P>
std::set<std::vector<int>> submodule_dim_vectors(const Module<Fp<P>>& m) {
  detail::stability_caps(m);
  const int nv = m.alg->n;
  const int total = m.total_dim();

  std::vector<int> vertex_of(total), index_at(total);
  {
    int k = 0;
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < m.dims[v]; ++i) {
        vertex_of[k] = v;
        index_at[k] = i;
        ++k;
      }
  }

  std::map<std::vector<unsigned>, std::vector<Mat<Fp<P>>>> tuples;
  auto note = [&](std::vector<Mat<Fp<P>>> rows) -> bool {
    auto sig = detail::tuple_signature<P>(rows);
    if (tuples.count(sig)) return false;
    if (tuples.size() >= 200000)
      throw CapExceeded("submodule lattice exceeded the internal valve");
    tuples.emplace(std::move(sig), std::move(rows));
    return true;
  };

  // zero submodule
  {
    std::vector<Mat<Fp<P>>> z(nv);
    for (int v = 0; v < nv; ++v) z[v] = Mat<Fp<P>>(0, m.dims[v]);
    note(std::move(z));
  }

  // cyclic submodules of all nonzero vectors
  long long count = 1;
  for (int i = 0; i < total; ++i) count *= P;
  for (long long code = 1; code < count; ++code) {
    long long c = code;
    std::vector<Mat<Fp<P>>> rows(nv);
    for (int v = 0; v < nv; ++v) rows[v] = Mat<Fp<P>>(1, m.dims[v]);
    for (int k = 0; k < total; ++k) {
      unsigned digit = unsigned(c % P);
      c /= P;
      if (digit) rows[vertex_of[k]].at(0, index_at[k]) = Fp<P>(digit);
    }
    note(detail::close_under_arrows(m, std::move(rows)));
  }

  // close under pairwise sums
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Mat<Fp<P>>>> snapshot;
    for (const auto& [sig, rows] : tuples) snapshot.push_back(rows);
    for (size_t a = 0; a < snapshot.size(); ++a)
      for (size_t b = a + 1; b < snapshot.size(); ++b) {
        std::vector<Mat<Fp<P>>> sum(nv);
        for (int v = 0; v < nv; ++v)
          sum[v] = rref(vstack(snapshot[a][v], snapshot[b][v])).R;
        if (note(std::move(sum))) grew = true;
      }
  }

  std::set<std::vector<int>> dims;
  for (const auto& [sig, rows] : tuples) {
    std::vector<int> d(nv);
    for (int v = 0; v < nv; ++v) d[v] = rows[v].rows();
    dims.insert(d);
  }
  return dims;
}

// <theta, dim M> = 0 and <theta, dim L> <= 0 for every submodule L.
template <unsigned P>
bool is_theta_semistable(const Module<Fp<P>>& m,
                         const std::vector<Rat>& theta) {
  detail::stability_caps(m);
  Rat total(0);
  for (int v = 0; v < m.alg->n; ++v) total += theta[v] * Rat(m.dims[v]);
  if (!is_zero(total)) return false;
  for (const auto& d : submodule_dim_vectors(m)) {
    Rat pair(0);
    for (int v = 0; v < m.alg->n; ++v) pair += theta[v] * Rat(d[v]);
    if (sgn(pair) > 0) return false;
  }
  return true;
}

// Reduction of an exact-rational module to the prime field, entrywise.
template <unsigned P>
Module<Fp<P>> reduce_mod(const Module<Rat>& m, const AlgebraPtr<Fp<P>>& target) {
  if (!(target->pres.quiver == m.alg->pres.quiver))
    throw AlgebraMismatch("mod-p reduction over a different quiver");
  Module<Fp<P>> out;
  out.alg = target;
  out.dims = m.dims;
  for (const auto& mat : m.mats) {
    Mat<Fp<P>> r(mat.rows(), mat.cols());
    for (int i = 0; i < mat.rows(); ++i)
      for (int j = 0; j < mat.cols(); ++j)
        r.at(i, j) = scalar_from_rat<Fp<P>>(mat.at(i, j));
    out.mats.push_back(r);
  }
  out.check_shapes();
  validate_module(out);
  return out;
}

// A module over a same-vertex quotient presentation, viewed over the bigger
// algebra: matching arrows act unchanged, killed arrows act by zero.
template <class K>
Module<K> inflate_module(const Module<K>& m, const AlgebraPtr<K>& bigger) {
  const Quiver& qb = bigger->pres.quiver;
  const Quiver& qm = m.alg->pres.quiver;
  if (qb.vertices != qm.vertices)
    throw NotAQuotient("inflation needs identical vertex sets");
  Module<K> out;
  out.alg = bigger;
  out.dims = m.dims;
  for (const auto& arr : qb.arrows) {
    bool found = false;
    for (size_t a = 0; a < qm.arrows.size(); ++a) {
      if (qm.arrows[a].id != arr.id) continue;
      if (qm.arrows[a].src != arr.src || qm.arrows[a].tgt != arr.tgt)
        throw NotAQuotient("arrow endpoints changed between presentations");
      out.mats.push_back(m.mats[a]);
      found = true;
      break;
    }
    if (!found)
      out.mats.push_back(Mat<K>(m.dims[arr.src], m.dims[arr.tgt]));
  }
  out.check_shapes();
  validate_module(out);
  return out;
}

}  // namespace tautilt

#endif

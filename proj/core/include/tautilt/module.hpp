#ifndef TAUTILT_MODULE_HPP
#define TAUTILT_MODULE_HPP

#include <numeric>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/exact_solve.hpp"

namespace tautilt {

// A finite-dimensional right module presented as a quiver representation:
// one component per vertex, one matrix per arrow acting on row vectors.
template <class K>
struct Module {
  AlgebraPtr<K> alg;
  std::vector<int> dims;
  std::vector<Mat<K>> mats;  // indexed by arrow, shape dims[src] x dims[tgt]

  int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
  bool is_zero() const { return total_dim() == 0; }

  void check_shapes() const {
    const Quiver& q = alg->pres.quiver;
    if (int(dims.size()) != q.n() || mats.size() != q.arrows.size())
      throw InternalError("module shape arity mismatch");
    for (size_t a = 0; a < mats.size(); ++a)
      if (mats[a].rows() != dims[q.arrows[a].src] ||
          mats[a].cols() != dims[q.arrows[a].tgt])
        throw InternalError("module matrix shape mismatch");
  }
};

template <class K>
struct Morph {
  std::vector<Mat<K>> m;  // per vertex: dims_M[v] x dims_N[v]

  bool is_zero() const {
    for (const auto& x : m)
      if (!x.is_zero()) return false;
    return true;
  }
};

template <class K>
Module<K> zero_module(const AlgebraPtr<K>& alg) {
  Module<K> z;
  z.alg = alg;
  z.dims.assign(alg->n, 0);
  z.mats.assign(alg->pres.quiver.arrows.size(), Mat<K>(0, 0));
  z.check_shapes();
  return z;
}

template <class K>
Mat<K> path_action(const Module<K>& m, const PathWord& p) {
  Mat<K> acc = Mat<K>::identity(m.dims[p.source]);
  for (int a : p.arrows) acc = acc * m.mats[a];
  return acc;
}

template <class K>
Mat<K> relation_matrix(const Module<K>& m, const Relation& r) {
  const Quiver& q = m.alg->pres.quiver;
  Mat<K> acc(m.dims[r.source()], m.dims[r.target(q)]);
  for (const auto& [c, p] : r.terms)
    acc = acc + path_action(m, p).scaled(scalar_from_rat<K>(c));
  return acc;
}

template <class K>
void validate_module(const Module<K>& m) {
  m.check_shapes();
  for (const auto& r : m.alg->pres.relations)
    if (!relation_matrix(m, r).is_zero())
      throw InvariantViolation("relation does not vanish on module");
}

template <class K>
Module<K> simple_module(const AlgebraPtr<K>& alg, int vertex) {
  Module<K> s = zero_module(alg);
  s.dims[vertex] = 1;
  const Quiver& q = alg->pres.quiver;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    s.mats[a] = Mat<K>(s.dims[q.arrows[a].src], s.dims[q.arrows[a].tgt]);
  s.check_shapes();
  return s;
}

// Basis paths of P(i) = e_i A per vertex, in global basis order.
template <class K>
std::vector<std::vector<PathWord>> projective_paths(const Algebra<K>& alg,
                                                    int i) {
  std::vector<std::vector<PathWord>> out(alg.n);
  for (int j = 0; j < alg.n; ++j)
    for (int g : alg.basis_at(i, j)) out[j].push_back(alg.basis[g].path);
  return out;
}

// Indecomposable projective P(i): component at j has basis the path classes
// i -> j, arrows act by right concatenation reduced modulo the ideal.
template <class K>
Module<K> indec_projective(const AlgebraPtr<K>& alg, int i) {
  const Quiver& q = alg->pres.quiver;
  auto paths = projective_paths(*alg, i);
  Module<K> p;
  p.alg = alg;
  p.dims.resize(alg->n);
  for (int j = 0; j < alg->n; ++j) p.dims[j] = int(paths[j].size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    Mat<K> m(p.dims[s], p.dims[t]);
    for (int r = 0; r < p.dims[s]; ++r) {
      PathWord w = paths[s][r];
      w.arrows.push_back(int(a));
      auto nf = alg->reduce_path(w);
      for (const auto& [g, c] : nf) {
        // locate basis path g within component t
        const auto& lst = alg->basis_at(i, t);
        auto it = std::find(lst.begin(), lst.end(), g);
        if (it == lst.end()) throw InternalError("projective basis bookkeeping");
        m.at(r, int(it - lst.begin())) = c;
      }
    }
    p.mats.push_back(m);
  }
  p.check_shapes();
  return p;
}

template <class K>
Module<K> direct_sum(const std::vector<Module<K>>& parts) {
  if (parts.empty()) throw InternalError("direct_sum of empty list");
  const AlgebraPtr<K>& alg = parts.front().alg;
  for (const auto& p : parts)
    if (p.alg != alg) throw AlgebraMismatch("direct sum across algebras");
  Module<K> s = zero_module(alg);
  const Quiver& q = alg->pres.quiver;
  for (int v = 0; v < alg->n; ++v)
    for (const auto& p : parts) s.dims[v] += p.dims[v];
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int sv = q.arrows[a].src, tv = q.arrows[a].tgt;
    Mat<K> m(s.dims[sv], s.dims[tv]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dims[sv]; ++r)
        for (int c = 0; c < p.dims[tv]; ++c)
          m.at(ro + r, co + c) = p.mats[a].at(r, c);
      ro += p.dims[sv];
      co += p.dims[tv];
    }
    s.mats[a] = m;
  }
  s.check_shapes();
  return s;
}

template <class K>
Morph<K> identity_morph(const Module<K>& m) {
  Morph<K> f;
  for (int v = 0; v < m.alg->n; ++v) f.m.push_back(Mat<K>::identity(m.dims[v]));
  return f;
}

template <class K>
Morph<K> zero_morph(const Module<K>& m, const Module<K>& n) {
  Morph<K> f;
  for (int v = 0; v < m.alg->n; ++v) f.m.push_back(Mat<K>(m.dims[v], n.dims[v]));
  return f;
}

// f: M -> N then g: N -> L.
template <class K>
Morph<K> compose(const Morph<K>& f, const Morph<K>& g) {
  Morph<K> h;
  for (size_t v = 0; v < f.m.size(); ++v) h.m.push_back(f.m[v] * g.m[v]);
  return h;
}

template <class K>
Morph<K> morph_add(const Morph<K>& f, const Morph<K>& g) {
  Morph<K> h;
  for (size_t v = 0; v < f.m.size(); ++v) h.m.push_back(f.m[v] + g.m[v]);
  return h;
}

template <class K>
Morph<K> morph_scale(const Morph<K>& f, const K& c) {
  Morph<K> h;
  for (const auto& x : f.m) h.m.push_back(x.scaled(c));
  return h;
}

template <class K>
bool is_intertwiner(const Module<K>& m, const Module<K>& n, const Morph<K>& f) {
  const Quiver& q = m.alg->pres.quiver;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    if (!(m.mats[a] * f.m[j] == f.m[i] * n.mats[a])) return false;
  }
  return true;
}

// Basis of Hom(M, N) in deterministic echelon order: the solution space of
// all intertwining equations  M_a f_j = f_i N_a.
template <class K>
std::vector<Morph<K>> hom_basis(const Module<K>& m, const Module<K>& n) {
  if (m.alg != n.alg) throw AlgebraMismatch("hom between different algebras");
  const Quiver& q = m.alg->pres.quiver;
  const int nv = m.alg->n;
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
  const int unknowns = off[nv];
  if (unknowns == 0) return {};

  auto var = [&](int v, int r, int c) { return off[v] + r * n.dims[v] + c; };

  std::vector<Morph<K>> out;

  if constexpr (std::is_same_v<K, Rat>) {
    std::vector<SparseRow> eqs;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      int i = q.arrows[a].src, j = q.arrows[a].tgt;
      for (int r = 0; r < m.dims[i]; ++r)
        for (int c = 0; c < n.dims[j]; ++c) {
          SparseRow row;
          for (int k = 0; k < m.dims[j]; ++k)
            row.add(var(j, k, c), m.mats[a].at(r, k));
          for (int l = 0; l < n.dims[i]; ++l)
            row.add(var(i, r, l), -n.mats[a].at(l, c));
          if (!row.e.empty()) eqs.push_back(std::move(row));
        }
    }
    Mat<Rat> kernel = nullspace_rows_sparse(std::move(eqs), unknowns);
    for (int b = 0; b < kernel.rows(); ++b) {
      Morph<K> f;
      for (int v = 0; v < nv; ++v) {
        Mat<K> mat(m.dims[v], n.dims[v]);
        for (int r = 0; r < m.dims[v]; ++r)
          for (int c = 0; c < n.dims[v]; ++c)
            mat.at(r, c) = kernel.at(b, var(v, r, c));
        f.m.push_back(mat);
      }
      out.push_back(std::move(f));
    }
  } else {
    int neq = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
      neq += m.dims[q.arrows[a].src] * n.dims[q.arrows[a].tgt];
    Mat<K> sys(neq, unknowns);
    int e = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      int i = q.arrows[a].src, j = q.arrows[a].tgt;
      for (int r = 0; r < m.dims[i]; ++r)
        for (int c = 0; c < n.dims[j]; ++c) {
          for (int k = 0; k < m.dims[j]; ++k)
            sys.at(e, var(j, k, c)) += m.mats[a].at(r, k);
          for (int l = 0; l < n.dims[i]; ++l)
            sys.at(e, var(i, r, l)) -= n.mats[a].at(l, c);
          ++e;
        }
    }
    Mat<K> ker = nullspace_rows(sys);
    for (int b = 0; b < ker.rows(); ++b) {
      Morph<K> f;
      for (int v = 0; v < nv; ++v) {
        Mat<K> mat(m.dims[v], n.dims[v]);
        for (int r = 0; r < m.dims[v]; ++r)
          for (int c = 0; c < n.dims[v]; ++c)
            mat.at(r, c) = ker.at(b, var(v, r, c));
        f.m.push_back(mat);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

template <class K>
int hom_dim(const Module<K>& m, const Module<K>& n) {
  return int(hom_basis(m, n).size());
}

// Submodule spanned (per vertex) by the given row spaces, which must be
// closed under all arrow actions. Returns the module plus its inclusion.
template <class K>
std::pair<Module<K>, Morph<K>> submodule_from_rows(
    const Module<K>& m, const std::vector<Mat<K>>& rows) {
  const Quiver& q = m.alg->pres.quiver;
  std::vector<Mat<K>> basis(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) basis[v] = rref(rows[v]).R;
  Module<K> s;
  s.alg = m.alg;
  s.dims.resize(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) s.dims[v] = basis[v].rows();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    Mat<K> img = basis[i] * m.mats[a];
    auto sol = solve_left(basis[j], img);
    if (!sol) throw InternalError("row spaces not arrow-stable");
    s.mats.push_back(*sol);
  }
  Morph<K> incl;
  incl.m = basis;
  s.check_shapes();
  return {s, incl};
}

// Quotient of M by the submodule spanned by the given rows (must be
// arrow-stable). Returns the quotient plus the projection M -> Q.
template <class K>
std::pair<Module<K>, Morph<K>> quotient_by_rows(const Module<K>& m,
                                                const std::vector<Mat<K>>& rows) {
  const Quiver& q = m.alg->pres.quiver;
  std::vector<Rref<K>> rr(m.alg->n);
  std::vector<std::vector<int>> keep(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) {
    rr[v] = rref(rows[v]);
    for (int c = 0; c < m.dims[v]; ++c)
      if (!rr[v].is_pivot_col(c)) keep[v].push_back(c);
  }
  Module<K> quo;
  quo.alg = m.alg;
  quo.dims.resize(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) quo.dims[v] = int(keep[v].size());

  Morph<K> proj;
  for (int v = 0; v < m.alg->n; ++v) {
    Mat<K> p(m.dims[v], quo.dims[v]);
    for (int r = 0; r < m.dims[v]; ++r) {
      std::vector<K> unit(m.dims[v], K(0));
      unit[r] = K(1);
      auto res = reduce_row(rr[v], unit);
      for (size_t c = 0; c < keep[v].size(); ++c) p.at(r, c) = res[keep[v][c]];
    }
    proj.m.push_back(p);
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    Mat<K> act(quo.dims[i], quo.dims[j]);
    for (int r = 0; r < quo.dims[i]; ++r) {
      std::vector<K> rep(m.dims[i], K(0));
      rep[keep[i][r]] = K(1);
      // act then project
      std::vector<K> img(m.dims[j], K(0));
      for (int k = 0; k < m.dims[i]; ++k)
        for (int c = 0; c < m.dims[j]; ++c) img[c] += rep[k] * m.mats[a].at(k, c);
      auto res = reduce_row(rr[j], img);
      for (size_t c = 0; c < keep[j].size(); ++c) act.at(r, c) = res[keep[j][c]];
    }
    quo.mats.push_back(act);
  }
  quo.check_shapes();
  return {quo, proj};
}

template <class K>
std::vector<Mat<K>> image_rows(const Module<K>& m, const Module<K>& n,
                               const Morph<K>& f) {
  std::vector<Mat<K>> out;
  for (int v = 0; v < m.alg->n; ++v) out.push_back(rref(f.m[v]).R);
  (void)n;
  return out;
}

template <class K>
std::vector<Mat<K>> kernel_rows(const Module<K>& m, const Morph<K>& f) {
  std::vector<Mat<K>> out;
  for (int v = 0; v < m.alg->n; ++v) out.push_back(left_kernel(f.m[v]));
  return out;
}

// Row spaces of M * rad A per vertex (sum of arrow images).
template <class K>
std::vector<Mat<K>> radical_rows(const Module<K>& m) {
  const Quiver& q = m.alg->pres.quiver;
  std::vector<Mat<K>> out(m.alg->n);
  for (int v = 0; v < m.alg->n; ++v) out[v] = Mat<K>(0, m.dims[v]);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    out[q.arrows[a].tgt] = vstack(out[q.arrows[a].tgt], m.mats[a]);
  for (int v = 0; v < m.alg->n; ++v) out[v] = rref(out[v]).R;
  return out;
}

template <class K>
struct Cover {
  Module<K> p0;
  std::vector<int> mult;  // multiplicity of P(j) per vertex j
  Morph<K> map;           // P0 -> M, surjective
};

// Projective cover via top(M) = M / M rad A.
template <class K>
Cover<K> projective_cover(const Module<K>& m) {
  const AlgebraPtr<K>& alg = m.alg;
  auto rad = radical_rows(m);
  Cover<K> cov;
  cov.mult.assign(alg->n, 0);
  std::vector<std::vector<std::vector<K>>> lifts(alg->n);
  for (int v = 0; v < alg->n; ++v) {
    auto rr = rref(rad[v]);
    for (int c = 0; c < m.dims[v]; ++c) {
      if (rr.is_pivot_col(c)) continue;
      std::vector<K> unit(m.dims[v], K(0));
      unit[c] = K(1);
      lifts[v].push_back(unit);
      ++cov.mult[v];
    }
  }
  std::vector<Module<K>> parts;
  std::vector<std::pair<int, std::vector<K>>> gens;  // (vertex, lift row)
  for (int v = 0; v < alg->n; ++v)
    for (const auto& lift : lifts[v]) {
      parts.push_back(indec_projective(alg, v));
      gens.emplace_back(v, lift);
    }
  if (parts.empty()) {
    cov.p0 = zero_module(alg);
    cov.map = zero_morph(cov.p0, m);
    return cov;
  }
  cov.p0 = direct_sum(parts);

  // assemble the cover map: the copy of P(j) generated at lift x sends the
  // basis path p (j -> v) to x * path_action(p)
  Morph<K> f;
  for (int v = 0; v < alg->n; ++v) f.m.push_back(Mat<K>(cov.p0.dims[v], m.dims[v]));
  std::vector<int> offset(alg->n, 0);
  for (size_t g = 0; g < gens.size(); ++g) {
    int j = gens[g].first;
    const auto& x = gens[g].second;
    auto paths = projective_paths(*alg, j);
    for (int v = 0; v < alg->n; ++v) {
      for (size_t pi = 0; pi < paths[v].size(); ++pi) {
        Mat<K> act = path_action(m, paths[v][pi]);
        // row index of this basis path within P0_v
        int row = offset[v] + int(pi);
        for (int c = 0; c < m.dims[v]; ++c) {
          K val(0);
          for (int k = 0; k < m.dims[j]; ++k) val += x[k] * act.at(k, c);
          f.m[v].at(row, c) = val;
        }
      }
    }
    for (int v = 0; v < alg->n; ++v) offset[v] += int(paths[v].size());
  }
  cov.map = f;
  // surjectivity (Nakayama)
  for (int v = 0; v < alg->n; ++v)
    if (rank(f.m[v]) != m.dims[v])
      throw InternalError("projective cover map not surjective");
  return cov;
}

template <class K>
struct MinPresentation {
  std::vector<int> p0_mult;  // a_i
  std::vector<int> p1_mult;  // b_i
  Module<K> p0, p1;
  Morph<K> connecting;  // P1 -> P0, radical-valued
  Morph<K> cover;       // P0 -> M
};

// Minimal projective presentation P1 -> P0 -> M -> 0.
template <class K>
MinPresentation<K> min_projective_presentation(const Module<K>& m) {
  if (m.is_zero()) throw ZeroModule("minimal presentation of zero module");
  auto cov = projective_cover(m);
  MinPresentation<K> pres;
  pres.p0 = cov.p0;
  pres.p0_mult = cov.mult;
  pres.cover = cov.map;
  auto ker = kernel_rows(cov.p0, cov.map);
  auto [sub, incl] = submodule_from_rows(cov.p0, ker);
  if (sub.is_zero()) {
    pres.p1 = zero_module(m.alg);
    pres.p1_mult.assign(m.alg->n, 0);
    pres.connecting = zero_morph(pres.p1, pres.p0);
    return pres;
  }
  auto cov1 = projective_cover(sub);
  pres.p1 = cov1.p0;
  pres.p1_mult = cov1.mult;
  pres.connecting = compose(cov1.map, incl);
  // minimality certificate: the connecting map is radical-valued
  auto rad = radical_rows(pres.p0);
  for (int v = 0; v < m.alg->n; ++v) {
    auto rr = rref(rad[v]);
    for (int r = 0; r < pres.connecting.m[v].rows(); ++r)
      if (!in_row_space(rr, pres.connecting.m[v].row(r)))
        throw InternalError("presentation not minimal");
  }
  return pres;
}

template <class K>
bool morphs_equal(const Morph<K>& a, const Morph<K>& b) {
  if (a.m.size() != b.m.size()) return false;
  for (size_t i = 0; i < a.m.size(); ++i)
    if (!(a.m[i] == b.m[i])) return false;
  return true;
}

template <class K>
bool modules_structurally_equal(const Module<K>& a, const Module<K>& b) {
  if (a.alg != b.alg || a.dims != b.dims) return false;
  for (size_t i = 0; i < a.mats.size(); ++i)
    if (!(a.mats[i] == b.mats[i])) return false;
  return true;
}

}  // namespace tautilt

#endif

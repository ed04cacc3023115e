#ifndef TAUTILT_ALGEBRA_HPP
#define TAUTILT_ALGEBRA_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <type_traits>
#include <vector>

#include "tautilt/matrix.hpp"
#include "tautilt/quiver.hpp"

namespace tautilt {

// Element of the algebra as a sparse combination of basis path classes.
template <class K>
using SparseElem = std::vector<std::pair<int, K>>;

template <class K>
void sparse_add(SparseElem<K>& dst, int idx, const K& c) {
  for (auto& [i, v] : dst) {
    if (i == idx) {
      v += c;
      return;
    }
  }
  dst.emplace_back(idx, c);
}

template <class K>
SparseElem<K> sparse_normalize(SparseElem<K> v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseElem<K> out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  SparseElem<K> res;
  for (auto& [i, c] : out)
    if (!is_zero(c)) res.emplace_back(i, c);
  return res;
}

// Scalar conversion from the rational coefficients stored in presentations.
template <class K>
K scalar_from_rat(const Rat& r) {
  if constexpr (std::is_same_v<K, Rat>) {
    return r;
  } else {
    // prime field: num/den mod p
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
      throw UnsupportedField("coefficient too large for prime field");
    long long num = r.get_num().get_si();
    long long den = r.get_den().get_si();
    K kn(num), kd(den);
    if (is_zero(kd))
      throw UnsupportedField("coefficient denominator vanishes mod p");
    return kn / kd;
  }
}

// Finite-dimensional bound quiver algebra with a chosen path-class basis and
// exact structure constants. Immutable after build_algebra.
template <class K>
class Algebra {
 public:
  AlgebraPresentation pres;
  int n = 0;           // vertices
  int witness = 0;     // every path of this length lies in the ideal
  int dim = 0;

  struct BasisPath {
    PathWord path;
    int src = 0, tgt = 0, len = 0;
  };
  std::vector<BasisPath> basis;          // sorted by (len, src, arrows)
  std::vector<int> trivial_idx;          // basis index of e_i per vertex

  int e(int vertex) const { return trivial_idx[vertex]; }

  const std::vector<int>& basis_at(int i, int j) const {
    return class_basis_[size_t(i) * n + j];
  }

  const SparseElem<K>& mult(int a, int b) const {
    return mult_[size_t(a) * dim + b];
  }

  SparseElem<K> mult_elem(const SparseElem<K>& x, const SparseElem<K>& y) const {
    SparseElem<K> out;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y)
        for (const auto& [k, ck] : mult(i, j))
          sparse_add(out, k, K(ci * cj * ck));
    return sparse_normalize(out);
  }

  // Normal form of an arbitrary composable path.
  SparseElem<K> reduce_path(const PathWord& p) const {
    if (p.length() >= witness) return {};
    int i = p.source, j = p.target(pres.quiver);
    const ClassData& cd = classes_[size_t(i) * n + j];
    auto it = std::lower_bound(cd.paths.begin(), cd.paths.end(), p);
    if (it == cd.paths.end() || !(*it == p))
      throw InternalError("path missing from parallel class listing");
    int col = int(it - cd.paths.begin());
    return cd.normal_forms[col];
  }

  // --- data below is filled by build_algebra ---
  struct ClassData {
    std::vector<PathWord> paths;              // len < witness, ascending
    std::vector<SparseElem<K>> normal_forms;  // per path, over global basis
  };
  std::vector<ClassData> classes_;             // n*n
  std::vector<std::vector<int>> class_basis_;  // n*n -> global indices
  std::vector<SparseElem<K>> mult_;            // dim*dim
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

namespace detail {

inline std::vector<std::vector<PathWord>> enumerate_paths(const Quiver& q,
                                                          int max_len,
                                                          size_t budget) {
  std::vector<std::vector<PathWord>> by_len(max_len + 1);
  size_t total = 0;
  for (int v = 0; v < q.n(); ++v) {
    by_len[0].push_back(PathWord{v, {}});
    ++total;
  }
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& p : by_len[len - 1]) {
      int at = p.target(q);
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != at) continue;
        PathWord np = p;
        np.arrows.push_back(int(a));
        by_len[len].push_back(np);
        if (++total > budget)
          throw CapExceeded("path enumeration exceeded internal budget");
      }
    }
    std::sort(by_len[len].begin(), by_len[len].end());
  }
  return by_len;
}

}  // namespace detail

// Builds the algebra kQ / <rels>. The basis is computed per parallel class
// as the echelon complement of the ideal slice, pivoting on the largest path
// in (length, arrow-sequence) order so that short lexicographically-small
// paths survive as representatives. The build refuses to return unless it
// can certify that every path of some length L <= length_cap lies in the
// ideal (the admissibility witness).
template <class K>
AlgebraPtr<K> build_algebra(const AlgebraPresentation& pres) {
  pres.validate();
  const Quiver& q = pres.quiver;
  const int cap = pres.length_cap;
  auto by_len = detail::enumerate_paths(q, cap, 200000);

  auto alg = std::make_shared<Algebra<K>>();
  Algebra<K>& A = *alg;
  A.pres = pres;
  A.n = q.n();

  const int n = q.n();
  auto class_of = [&](int i, int j) { return size_t(i) * n + j; };

  // --- certification slice: generators u*rel*v with every term <= cap ---
  struct CertClass {
    std::vector<PathWord> paths;  // all paths i->j, len <= cap
    std::vector<std::vector<K>> rows;
  };
  std::vector<CertClass> cert(size_t(n) * n);
  for (int len = 0; len <= cap; ++len)
    for (const auto& p : by_len[len])
      cert[class_of(p.source, p.target(q))].paths.push_back(p);
  for (auto& c : cert) std::sort(c.paths.begin(), c.paths.end());

  auto cert_col = [&](const PathWord& p) {
    auto& c = cert[class_of(p.source, p.target(q))];
    auto it = std::lower_bound(c.paths.begin(), c.paths.end(), p);
    return int(it - c.paths.begin());
  };

  std::vector<PathWord> all_paths;
  for (int len = 0; len <= cap; ++len)
    for (const auto& p : by_len[len]) all_paths.push_back(p);

  for (const auto& rel : pres.relations) {
    int rs = rel.source();
    int rt = rel.target(q);
    int rmax = rel.max_length();
    for (const auto& u : all_paths) {
      if (u.target(q) != rs) continue;
      for (const auto& v : all_paths) {
        if (v.source != rt) continue;
        if (u.length() + rmax + v.length() > cap) continue;
        std::vector<K>* row = nullptr;
        CertClass& cc = cert[class_of(u.source, v.target(q))];
        cc.rows.emplace_back(cc.paths.size(), K(0));
        row = &cc.rows.back();
        for (const auto& [coef, p] : rel.terms) {
          PathWord w = concat(q, concat(q, u, p), v);
          (*row)[cert_col(w)] += scalar_from_rat<K>(coef);
        }
      }
    }
  }

  std::vector<Rref<K>> cert_rref(size_t(n) * n);
  for (size_t c = 0; c < cert.size(); ++c) {
    Mat<K> m(int(cert[c].rows.size()), int(cert[c].paths.size()));
    for (size_t r = 0; r < cert[c].rows.size(); ++r)
      m.set_row(int(r), cert[c].rows[r]);
    cert_rref[c] = rref(m);
  }

  int witness = -1;
  for (int len = 2; len <= cap; ++len) {
    bool all_in = true;
    for (const auto& p : by_len[len]) {
      size_t c = class_of(p.source, p.target(q));
      std::vector<K> unit(cert[c].paths.size(), K(0));
      unit[cert_col(p)] = K(1);
      if (!in_row_space(cert_rref[c], unit)) {
        all_in = false;
        break;
      }
    }
    if (all_in) {
      witness = len;
      break;
    }
  }
  if (witness < 0)
    throw NotAdmissibleWithinCap(
        "ideal not certified admissible within lengthcap " +
        std::to_string(cap));
  A.witness = witness;

  // --- basis slice: truncations below the witness length ---
  A.classes_.assign(size_t(n) * n, {});
  for (int len = 0; len < witness; ++len)
    for (const auto& p : by_len[len])
      A.classes_[class_of(p.source, p.target(q))].paths.push_back(p);
  for (auto& c : A.classes_) std::sort(c.paths.begin(), c.paths.end());

  struct Slice {
    std::vector<std::vector<K>> rows;
  };
  std::vector<Slice> slice(size_t(n) * n);
  auto slice_col = [&](const PathWord& p) {
    auto& c = A.classes_[class_of(p.source, p.target(q))];
    auto it = std::lower_bound(c.paths.begin(), c.paths.end(), p);
    return int(it - c.paths.begin());
  };
  for (const auto& rel : pres.relations) {
    int rs = rel.source();
    int rt = rel.target(q);
    int rmin = rel.min_length();
    for (const auto& u : all_paths) {
      if (u.length() >= witness || u.target(q) != rs) continue;
      for (const auto& v : all_paths) {
        if (v.length() >= witness || v.source != rt) continue;
        if (u.length() + rmin + v.length() >= witness) continue;
        auto& cls = A.classes_[class_of(u.source, v.target(q))];
        std::vector<K> row(cls.paths.size(), K(0));
        bool nonzero = false;
        for (const auto& [coef, p] : rel.terms) {
          PathWord w = concat(q, concat(q, u, p), v);
          if (w.length() >= witness) continue;  // truncated away
          row[slice_col(w)] += scalar_from_rat<K>(coef);
          nonzero = true;
        }
        if (nonzero) slice[class_of(u.source, v.target(q))].rows.push_back(row);
      }
    }
  }

  // eliminate with reversed column order: pivots are the largest paths
  A.class_basis_.assign(size_t(n) * n, {});
  std::vector<std::vector<int>> class_local_basis(size_t(n) * n);
  std::vector<Rref<K>> red(size_t(n) * n);
  for (size_t c = 0; c < slice.size(); ++c) {
    int w = int(A.classes_[c].paths.size());
    Mat<K> m(int(slice[c].rows.size()), w);
    for (size_t r = 0; r < slice[c].rows.size(); ++r)
      for (int j = 0; j < w; ++j) m.at(int(r), j) = slice[c].rows[r][w - 1 - j];
    red[c] = rref(m);
    for (int j = 0; j < w; ++j) {
      int rev = w - 1 - j;  // column of path j in reversed order
      if (!red[c].is_pivot_col(rev)) class_local_basis[c].push_back(j);
    }
  }

  // global basis ordering: by (length, source, arrows)
  std::vector<std::pair<PathWord, size_t>> flat;
  for (size_t c = 0; c < A.classes_.size(); ++c)
    for (int j : class_local_basis[c]) flat.emplace_back(A.classes_[c].paths[j], c);
  std::sort(flat.begin(), flat.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  A.dim = int(flat.size());
  A.basis.resize(A.dim);
  A.trivial_idx.assign(n, -1);
  std::map<std::pair<size_t, int>, int> global_of;  // (class, local col) -> idx
  for (int g = 0; g < A.dim; ++g) {
    const PathWord& p = flat[g].first;
    size_t c = flat[g].second;
    A.basis[g] = {p, p.source, p.target(q), p.length()};
    if (p.length() == 0) A.trivial_idx[p.source] = g;
    auto& cls = A.classes_[c];
    auto it = std::lower_bound(cls.paths.begin(), cls.paths.end(), p);
    global_of[{c, int(it - cls.paths.begin())}] = g;
    A.class_basis_[c].push_back(g);
  }
  for (int v = 0; v < n; ++v)
    if (A.trivial_idx[v] < 0)
      throw InternalError("trivial path eliminated from basis");

  // normal forms per class path
  for (size_t c = 0; c < A.classes_.size(); ++c) {
    auto& cls = A.classes_[c];
    int w = int(cls.paths.size());
    cls.normal_forms.resize(w);
    for (int j = 0; j < w; ++j) {
      std::vector<K> unit_rev(w, K(0));
      unit_rev[w - 1 - j] = K(1);
      auto residue = reduce_row(red[c], unit_rev);
      SparseElem<K> nf;
      for (int rc = 0; rc < w; ++rc) {
        int orig = w - 1 - rc;
        if (!is_zero(residue[rc]))
          nf.emplace_back(global_of.at({c, orig}), residue[rc]);
      }
      cls.normal_forms[j] = sparse_normalize(nf);
    }
  }

  // structure constants
  A.mult_.assign(size_t(A.dim) * A.dim, {});
  for (int a = 0; a < A.dim; ++a) {
    for (int b = 0; b < A.dim; ++b) {
      if (A.basis[a].tgt != A.basis[b].src) continue;
      PathWord w = concat(q, A.basis[a].path, A.basis[b].path);
      if (w.length() >= witness) continue;
      A.mult_[size_t(a) * A.dim + b] = A.reduce_path(w);
    }
  }

  // idempotent sanity and associativity spot-check
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& prod = A.mult(A.e(i), A.e(j));
      bool want = (i == j);
      if (want && !(prod.size() == 1 && prod[0].first == A.e(i) &&
                    prod[0].second == K(1)))
        throw InternalError("idempotent product e_i e_i != e_i");
      if (!want && !prod.empty())
        throw InternalError("idempotents not orthogonal");
    }
  if (A.dim <= 48) {
    for (int a = 0; a < A.dim; ++a)
      for (int b = 0; b < A.dim; ++b)
        for (int c = 0; c < A.dim; ++c) {
          auto left = A.mult_elem(A.mult(a, b), SparseElem<K>{{c, K(1)}});
          auto right = A.mult_elem(SparseElem<K>{{a, K(1)}}, A.mult(b, c));
          if (sparse_normalize(left) != sparse_normalize(right))
            throw InternalError("structure constants not associative");
        }
  }
  return alg;
}

template <class K>
int radical_dim(const Algebra<K>& a) {
  int c = 0;
  for (const auto& b : a.basis)
    if (b.len >= 1) ++c;
  return c;
}

}  // namespace tautilt

#endif

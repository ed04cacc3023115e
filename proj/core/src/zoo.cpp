#include "tautilt/zoo.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tautilt {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

AlgebraPresentation preset_linear_a(int n) {
  if (n < 1 || n > 6) throw BadParams("linear_A supports 1 <= n <= 6");
  AlgebraPresentation p;
  p.field = FieldDesc::rationals();
  p.length_cap = n + 1;
  for (int i = 1; i <= n; ++i) p.quiver.vertices.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    p.quiver.arrows.push_back(Arrow{"a" + std::to_string(i + 1), i, i + 1});
  p.validate();
  return p;
}

AlgebraPresentation preset_kronecker() {
  AlgebraPresentation p;
  p.field = FieldDesc::rationals();
  p.length_cap = 2;
  p.quiver.vertices = {"1", "2"};
  p.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 0, 1}};
  p.validate();
  return p;
}

AlgebraPresentation preset_cyclic_nakayama(int n, int ell) {
  if (n < 1 || n > 6 || ell < 2 || ell > 6)
    throw BadParams("cyclic_nakayama supports 1 <= n <= 6, 2 <= ell <= 6");
  AlgebraPresentation p;
  p.field = FieldDesc::rationals();
  p.length_cap = ell + 1;
  for (int i = 1; i <= n; ++i) p.quiver.vertices.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    p.quiver.arrows.push_back(Arrow{"a" + std::to_string(i + 1), i, (i + 1) % n});
  for (int i = 0; i < n; ++i) {
    PathWord w;
    w.source = i;
    for (int k = 0; k < ell; ++k) w.arrows.push_back((i + k) % n);
    Relation r;
    r.terms.emplace_back(Rat(1), w);
    p.relations.push_back(r);
  }
  p.validate();
  return p;
}

AlgebraPresentation preset_tilted_a3() {
  AlgebraPresentation p = preset_linear_a(3);
  PathWord w;
  w.source = 0;
  w.arrows = {0, 1};  // a1 then a2
  Relation r;
  r.terms.emplace_back(Rat(1), w);
  p.relations.push_back(r);
  p.validate();
  return p;
}

AlgebraPresentation preset_cluster_tilted_a3() {
  AlgebraPresentation p;
  p.field = FieldDesc::rationals();
  p.length_cap = 3;
  p.quiver.vertices = {"1", "2", "3"};
  p.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 2}, Arrow{"c", 2, 0}};
  for (int start = 0; start < 3; ++start) {
    PathWord w;
    w.source = start;
    w.arrows = {start, (start + 1) % 3};
    Relation r;
    r.terms.emplace_back(Rat(1), w);
    p.relations.push_back(r);
  }
  p.validate();
  return p;
}

AlgebraPresentation preset(const std::string& name) {
  auto parts = split(name, ':');
  const std::string& fam = parts[0];
  try {
    if (fam == "linear_A" && parts.size() == 2)
      return preset_linear_a(std::stoi(parts[1]));
    if (fam == "kronecker" && parts.size() == 1) return preset_kronecker();
    if (fam == "cyclic_nakayama" && parts.size() == 3)
      return preset_cyclic_nakayama(std::stoi(parts[1]), std::stoi(parts[2]));
    if (fam == "tilted_A3" && parts.size() == 1) return preset_tilted_a3();
    if (fam == "cluster_tilted_A3" && parts.size() == 1)
      return preset_cluster_tilted_a3();
  } catch (const std::invalid_argument&) {
    throw BadParams("bad preset parameters in '" + name + "'");
  }
  throw BadParams("unknown preset '" + name + "'");
}

std::vector<ModQ> oracle_linear_a_indecs(const AlgQ& a) {
  // interval modules M[i, j]: identity arrows inside the support interval
  const int n = a->n;
  std::vector<ModQ> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ModQ m = zero_module(a);
      for (int v = i; v <= j; ++v) m.dims[v] = 1;
      const Quiver& q = a->pres.quiver;
      for (size_t k = 0; k < q.arrows.size(); ++k) {
        Mat<Rat> mat(m.dims[q.arrows[k].src], m.dims[q.arrows[k].tgt]);
        if (q.arrows[k].src >= i && q.arrows[k].tgt <= j) mat.at(0, 0) = 1;
        m.mats[k] = mat;
      }
      validate_module(m);
      out.push_back(m);
    }
  return out;
}

std::vector<ModQ> oracle_nakayama_indecs(const AlgQ& a, int ell) {
  // quotients of projectives: basis points i, i+1, ..., i+len-1 around the
  // cycle, the arrows shifting each point to the next
  const int n = a->n;
  std::vector<ModQ> out;
  for (int i = 0; i < n; ++i)
    for (int len = 1; len <= ell; ++len) {
      ModQ m = zero_module(a);
      std::vector<int> pos_vertex(len);
      std::vector<int> pos_ordinal(len);
      for (int t = 0; t < len; ++t) {
        pos_vertex[t] = (i + t) % n;
        pos_ordinal[t] = m.dims[pos_vertex[t]]++;
      }
      const Quiver& q = a->pres.quiver;
      for (size_t k = 0; k < q.arrows.size(); ++k)
        m.mats[k] = Mat<Rat>(m.dims[q.arrows[k].src], m.dims[q.arrows[k].tgt]);
      for (int t = 0; t + 1 < len; ++t) {
        int arrow = pos_vertex[t];  // arrow a_{v+1} has index v
        m.mats[arrow].at(pos_ordinal[t], pos_ordinal[t + 1]) = 1;
      }
      validate_module(m);
      out.push_back(m);
    }
  return out;
}

std::vector<ModQ> oracle_kronecker_indecs(const AlgQ& a, int depth) {
  if (depth < 1) throw BadParams("kronecker oracle depth must be >= 1");
  std::vector<ModQ> out;
  // preprojectives P^(k), dims (k-1, k): a = [I|0], b = [0|I]
  for (int k = 1; k <= depth; ++k) {
    ModQ m = zero_module(a);
    m.dims = {k - 1, k};
    Mat<Rat> ma(k - 1, k), mb(k - 1, k);
    for (int i = 0; i + 1 < k; ++i) {
      ma.at(i, i) = 1;
      mb.at(i, i + 1) = 1;
    }
    m.mats = {ma, mb};
    validate_module(m);
    out.push_back(m);
  }
  // preinjectives I^(k), dims (k, k-1): a = [I / 0], b = [0 / I]
  for (int k = 1; k <= depth; ++k) {
    ModQ m = zero_module(a);
    m.dims = {k, k - 1};
    Mat<Rat> ma(k, k - 1), mb(k, k - 1);
    for (int i = 0; i + 1 < k; ++i) {
      ma.at(i, i) = 1;
      mb.at(i + 1, i) = 1;
    }
    m.mats = {ma, mb};
    validate_module(m);
    out.push_back(m);
  }
  return out;
}

std::vector<ModQ> oracle_tilted_a3_indecs(const AlgQ& a) {
  std::vector<ModQ> out;
  for (int i = 0; i < 3; ++i) out.push_back(simple_module(a, i));
  out.push_back(indec_projective(a, 0));
  out.push_back(indec_projective(a, 1));
  return out;
}

std::vector<TauPair> oracle_support_tau_tilting(MutationContext& ctx,
                                                const std::vector<ModQ>& indecs) {
  const int n = ctx.n();
  const int k = int(indecs.size());
  for (const auto& m : indecs) ctx.register_module(m);

  // pairwise rigidity table through the rep-core primitives
  std::vector<ModQ> taus;
  for (const auto& m : indecs) taus.push_back(tau(m, ctx.aop()));
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) ok[i][j] = hom_vanishes(indecs[i], taus[j]);

  std::vector<TauPair> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    int mc = __builtin_popcount(mask);
    if (mc > n) continue;
    bool rigid = true;
    for (int i = 0; i < k && rigid; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = 0; j < k && rigid; ++j) {
        if (!(mask & (1u << j))) continue;
        rigid = ok[i][j];
      }
    }
    if (!rigid) continue;
    // admissible projective vertices: unsupported by every chosen module
    std::vector<int> free_verts;
    for (int v = 0; v < n; ++v) {
      bool unsupported = true;
      for (int i = 0; i < k; ++i)
        if ((mask & (1u << i)) && indecs[i].dims[v] != 0) unsupported = false;
      if (unsupported) free_verts.push_back(v);
    }
    int need = n - mc;
    if (need > int(free_verts.size())) continue;
    // all vertex subsets of the right size
    std::vector<int> idx(free_verts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::vector<int> chosen;
    std::function<void(int, int)> rec = [&](int start, int left) {
      if (left == 0) {
        std::vector<ModQ> mods;
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) mods.push_back(indecs[i]);
        std::vector<int> projs;
        for (int c : chosen) projs.push_back(free_verts[c]);
        try {
          TauPair p = ctx.make_pair(mods, projs);
          if (ctx.is_tau_tilting(p)) out.push_back(p);
        } catch (const Error&) {
          // combination violates basicness or rigidity; skip
        }
        return;
      }
      for (int i = start; i + left <= int(free_verts.size()); ++i) {
        chosen.push_back(i);
        rec(i + 1, left - 1);
        chosen.pop_back();
      }
    };
    rec(0, need);
  }
  // canonical order and duplicate check by key
  std::sort(out.begin(), out.end(),
            [](const TauPair& a, const TauPair& b) { return a.key() < b.key(); });
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i - 1].key() == out[i].key())
      throw InternalError("duplicate pair in the brute-force oracle");
  return out;
}

QuotientPairPreset preset_quotient_pair() {
  QuotientPairPreset qp;
  qp.b = preset_cluster_tilted_a3();
  qp.map = quotient_by_arrow_kill(qp.b, {"c"});
  qp.c = qp.map.quotient;
  return qp;
}

ModQ induce_along_section(const ModQ& m_over_c, const AlgQ& c_alg,
                          const AlgQ& b_alg) {
  if (m_over_c.alg != c_alg) throw AlgebraMismatch("module not over C");
  auto pres = min_projective_presentation(m_over_c);
  std::vector<int> iv = vertex_list_from_mults(pres.p0_mult);
  std::vector<int> jv = vertex_list_from_mults(pres.p1_mult);
  // vertex labels must agree between the two presentations
  std::vector<int> vmap(c_alg->n);
  for (int v = 0; v < c_alg->n; ++v)
    vmap[v] = b_alg->pres.quiver.vertex_index(c_alg->pres.quiver.vertices[v]);

  auto u = projective_entries(m_over_c.alg, jv, iv, pres.connecting);
  // push entries through the path inclusion C -> B
  auto section = [&](const SparseElem<Rat>& x) {
    SparseElem<Rat> out;
    for (const auto& [g, coef] : x) {
      const PathWord& p = c_alg->basis[g].path;
      PathWord bp;
      bp.source = vmap[p.source];
      for (int arr : p.arrows)
        bp.arrows.push_back(
            b_alg->pres.quiver.arrow_index(c_alg->pres.quiver.arrows[arr].id));
      for (const auto& [h, d] : b_alg->reduce_path(bp))
        sparse_add(out, h, Rat(coef * d));
    }
    return sparse_normalize(out);
  };
  std::vector<int> biv, bjv;
  for (int v : iv) biv.push_back(vmap[v]);
  for (int v : jv) bjv.push_back(vmap[v]);
  std::vector<std::vector<SparseElem<Rat>>> ub(
      biv.size(), std::vector<SparseElem<Rat>>(bjv.size()));
  for (size_t a = 0; a < iv.size(); ++a)
    for (size_t b = 0; b < jv.size(); ++b) ub[a][b] = section(u[a][b]);
  if (bjv.empty()) {
    // projective over C: the induction is the matching projective over B
    std::vector<ModQ> parts;
    for (int v : biv) parts.push_back(indec_projective(b_alg, v));
    return parts.empty() ? zero_module(b_alg) : direct_sum(parts);
  }
  auto [xy, g] = assemble_projective_morphism(b_alg, bjv, biv, ub);
  auto img = image_rows(xy.first, xy.second, g);
  auto [coker, proj] = quotient_by_rows(xy.second, img);
  return coker;
}

}  // namespace tautilt

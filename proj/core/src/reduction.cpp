#include "tautilt/reduction.hpp"

#include <algorithm>
#include <set>

namespace tautilt {

namespace {

std::vector<Rat> flatten_morph(const MorQ& f) {
  std::vector<Rat> out;
  for (const auto& m : f.m)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

std::vector<MorQ> sum_inclusions(const std::vector<ModQ>& parts,
                                 const ModQ& total) {
  std::vector<MorQ> out;
  int nv = total.alg->n;
  std::vector<int> off(nv, 0);
  for (const auto& p : parts) {
    MorQ f;
    for (int v = 0; v < nv; ++v) {
      Mat<Rat> m(p.dims[v], total.dims[v]);
      for (int r = 0; r < p.dims[v]; ++r) m.at(r, off[v] + r) = 1;
      f.m.push_back(m);
    }
    out.push_back(std::move(f));
    for (int v = 0; v < nv; ++v) off[v] += p.dims[v];
  }
  return out;
}

std::vector<MorQ> sum_projections(const std::vector<ModQ>& parts,
                                  const ModQ& total) {
  std::vector<MorQ> out;
  int nv = total.alg->n;
  std::vector<int> off(nv, 0);
  for (const auto& p : parts) {
    MorQ f;
    for (int v = 0; v < nv; ++v) {
      Mat<Rat> m(total.dims[v], p.dims[v]);
      for (int r = 0; r < p.dims[v]; ++r) m.at(off[v] + r, r) = 1;
      f.m.push_back(m);
    }
    out.push_back(std::move(f));
    for (int v = 0; v < nv; ++v) off[v] += p.dims[v];
  }
  return out;
}

// span data over a fixed flattened coordinate space
struct Span {
  Mat<Rat> rows{0, 0};
  void init(int width) { rows = Mat<Rat>(0, width); }
  void add(const std::vector<Rat>& v) {
    Mat<Rat> one(1, int(v.size()));
    one.set_row(0, v);
    rows = rref(vstack(rows, one)).R;
  }
  int dim() const { return rows.rows(); }
  bool contains(const std::vector<Rat>& v) const {
    auto rr = rref(rows);
    return in_row_space(rr, v);
  }
};

}  // namespace

EndPresentation present_endomorphism_summands(const std::vector<ModQ>& parts) {
  if (parts.empty()) throw NotBasic("endomorphism presentation of zero module");
  const AlgQ& alg = parts.front().alg;
  if (alg->pres.field.kind != FieldDesc::Kind::Rationals)
    throw UnsupportedField("endomorphism presentation needs characteristic zero");
  const int m = int(parts.size());
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t)
      if (parts[s].dims == parts[t].dims && is_isomorphic_indec(parts[s], parts[t]))
        throw NotBasic("repeated summand in endomorphism presentation");

  ModQ total = direct_sum(parts);
  EndAlgebra end = end_algebra(total);
  auto incl = sum_inclusions(parts, total);
  auto proj = sum_projections(parts, total);

  // block (s,t): maps T_t -> T_s extracted from an endomorphism of T
  auto block = [&](const MorQ& f, int s, int t) {
    return compose(incl[t], compose(f, proj[s]));
  };

  const int flat_width = int(flatten_morph(identity_morph(total)).size());

  // radical filtration as spans of flattened endomorphisms
  std::vector<MorQ> rad_elems;
  for (int r = 0; r < end.rad_coords.rows(); ++r)
    rad_elems.push_back(
        morph_from_coords(end, total, end.rad_coords.row(r)));

  std::vector<std::vector<MorQ>> rad_pow{rad_elems};  // rad^1 generators
  std::vector<Span> rad_pow_span;
  {
    Span s1;
    s1.init(flat_width);
    for (const auto& f : rad_elems) s1.add(flatten_morph(f));
    rad_pow_span.push_back(s1);
  }
  int nilp = 1;
  while (!rad_pow.back().empty()) {
    std::vector<MorQ> next;
    Span sp;
    sp.init(flat_width);
    for (const auto& f : rad_pow.back())
      for (const auto& g : rad_elems) {
        MorQ fg = compose(f, g);
        auto fl = flatten_morph(fg);
        if (!sp.contains(fl)) {
          sp.add(fl);
          next.push_back(fg);
        }
      }
    ++nilp;
    rad_pow.push_back(next);
    rad_pow_span.push_back(sp);
    if (next.empty()) break;
    if (nilp > end.dim() + 1)
      throw PresentationFailure("radical filtration did not terminate");
  }
  // nilp is now the smallest k with rad^k = 0

  // arrows: per (s,t), a basis of rad block (t -> s maps) modulo rad^2
  struct HomData {
    std::vector<MorQ> basis;  // Hom(T_t, T_s)
    Mat<Rat> flat{0, 0};
  };
  std::vector<std::vector<HomData>> hom(m, std::vector<HomData>(m));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      hom[s][t].basis = hom_basis(parts[t], parts[s]);
      auto& hd = hom[s][t];
      if (!hd.basis.empty()) {
        auto w = flatten_morph(hd.basis[0]);
        hd.flat = Mat<Rat>(int(hd.basis.size()), int(w.size()));
        for (size_t i = 0; i < hd.basis.size(); ++i)
          hd.flat.set_row(int(i), flatten_morph(hd.basis[i]));
      }
    }

  EndPresentation out;
  out.pres.field = FieldDesc::rationals();
  for (int s = 0; s < m; ++s)
    out.pres.quiver.vertices.push_back(std::to_string(s + 1));

  int arrow_id = 0;
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      // rad block and rad^2 block as flattened spans of maps T_t -> T_s
      const int w = hom[s][t].basis.empty()
                        ? 0
                        : int(flatten_morph(hom[s][t].basis[0]).size());
      if (w == 0) continue;
      Span rad2;
      rad2.init(w);
      if (rad_pow.size() > 1)
        for (const auto& f : rad_pow[1]) rad2.add(flatten_morph(block(f, s, t)));
      Span acc = rad2;
      for (const auto& f : rad_pow[0]) {
        auto fl = flatten_morph(block(f, s, t));
        if (acc.contains(fl)) continue;
        acc.add(fl);
        out.pres.quiver.arrows.push_back(
            Arrow{"a" + std::to_string(++arrow_id), s, t});
        out.arrow_reps.push_back(block(f, s, t));
        out.arrow_ends.emplace_back(s, t);
      }
    }

  // kernel of the path evaluation, degreewise up to the nilpotency length
  struct PathInfo {
    PathWord word;
    MorQ value;  // element of Hom(T_target, T_source)
  };
  std::vector<Relation> rels;
  {
    // enumerate paths of length 1..nilp-? ; all paths of length >= nilp map
    // to zero, so relations live in lengths 2..nilp
    int maxlen = std::max(2, nilp);
    std::vector<std::vector<PathInfo>> by_len(maxlen + 1);
    for (size_t a = 0; a < out.pres.quiver.arrows.size(); ++a) {
      PathInfo pi;
      pi.word.source = out.pres.quiver.arrows[a].src;
      pi.word.arrows = {int(a)};
      pi.value = out.arrow_reps[a];
      by_len[1].push_back(pi);
    }
    size_t guard = 0;
    for (int len = 2; len <= maxlen; ++len) {
      for (const auto& pi : by_len[len - 1]) {
        int at = pi.word.target(out.pres.quiver);
        for (size_t a = 0; a < out.pres.quiver.arrows.size(); ++a) {
          if (out.pres.quiver.arrows[a].src != at) continue;
          PathInfo np;
          np.word = pi.word;
          np.word.arrows.push_back(int(a));
          // extending the path right by arrow a means precomposing with its
          // representative: value = arrow_rep then previous value
          np.value = compose(out.arrow_reps[a], pi.value);
          by_len[len].push_back(np);
          if (++guard > 200000)
            throw PresentationFailure("path explosion in End presentation");
        }
      }
    }
    // per parallel class, kernel of evaluation on paths of length in [2, maxlen]
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        std::vector<const PathInfo*> cls;
        for (int len = 2; len <= maxlen; ++len)
          for (const auto& pi : by_len[len])
            if (pi.word.source == s && pi.word.target(out.pres.quiver) == t)
              cls.push_back(&pi);
        if (cls.empty()) continue;
        const int w = int(flatten_morph(cls[0]->value).size());
        Mat<Rat> eval(int(cls.size()), w);
        for (size_t i = 0; i < cls.size(); ++i)
          eval.set_row(int(i), flatten_morph(cls[i]->value));
        Mat<Rat> ker = left_kernel(eval);
        for (int r = 0; r < ker.rows(); ++r) {
          Relation rel;
          for (size_t i = 0; i < cls.size(); ++i) {
            const Rat& c = ker.at(r, int(i));
            if (!is_zero(c)) rel.terms.emplace_back(c, cls[i]->word);
          }
          if (!rel.terms.empty()) rels.push_back(rel);
        }
      }
  }
  out.pres.relations = rels;
  out.pres.length_cap = std::max(2, nilp);

  // verification: dimension and structure constants against End(T)
  auto built = build_algebra<Rat>(out.pres);
  if (built->dim != end.dim())
    throw PresentationFailure("presented algebra has dimension " +
                              std::to_string(built->dim) + " but End has " +
                              std::to_string(end.dim()));
  {
    // evaluate basis path classes (as endomorphisms of T) and check the
    // products multiplicatively
    std::vector<MorQ> vals;
    for (const auto& b : built->basis) {
      MorQ v;
      if (b.len == 0) {
        v = compose(proj[b.src], incl[b.src]);  // idempotent of the summand
      } else {
        MorQ part = out.arrow_reps[b.path.arrows.back()];
        for (int i = int(b.path.arrows.size()) - 2; i >= 0; --i)
          part = compose(part, out.arrow_reps[b.path.arrows[i]]);
        // part maps T_tgt -> T_src; embed as the corresponding block of T
        v = block_embed(parts, total, b.tgt, b.src, part);
      }
      vals.push_back(v);
    }
    Mat<Rat> stack(int(vals.size()), flat_width);
    for (size_t i = 0; i < vals.size(); ++i)
      stack.set_row(int(i), flatten_morph(vals[i]));
    if (rank(stack) != built->dim)
      throw PresentationFailure("presentation basis does not map to a basis");
    auto coords_of = [&](const MorQ& f) {
      Mat<Rat> one(1, flat_width);
      one.set_row(0, flatten_morph(f));
      auto sol = solve_left(stack, one);
      if (!sol) throw PresentationFailure("product escapes the image of the presentation");
      return sol->row(0);
    };

    for (int a = 0; a < built->dim; ++a)
      for (int b = 0; b < built->dim; ++b) {
        // product in the built algebra
        SparseElem<Rat> prod = built->mult(a, b);
        // product of values: basis path a then path b means value_b after
        // value_a in path order: composed map = vals[a] o vals[b]
        MorQ vp = compose(vals[b], vals[a]);
        auto co = coords_of(vp);
        std::vector<Rat> expect(built->dim, Rat(0));
        for (const auto& [k, c] : prod) expect[k] = c;
        if (co != expect)
          throw PresentationFailure("structure constants disagree with End");
      }
  }
  return out;
}

AlgebraPresentation present_endomorphism_algebra(const ModQ& t) {
  if (t.is_zero()) throw NotBasic("endomorphism presentation of zero module");
  auto dec = decompose(t);
  std::vector<ModQ> parts;
  for (auto& [summand, mult] : dec) {
    if (mult > 1) throw NotBasic("module has a repeated summand");
    parts.push_back(summand);
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const ModQ& a, const ModQ& b) { return a.dims < b.dims; });
  return present_endomorphism_summands(parts).pres;
}

ReductionResult tau_reduction(MutationContext& ctx, const ExchangeGraph& g,
                              const PinnedPair& u) {
  if (!g.complete) throw IncompleteGraph("tau-reduction needs a complete graph");
  const int n = ctx.n();
  if (int(u.module_gs.size() + u.projs.size()) >= n)
    throw PresentationFailure(
        "pinned pair is already tau-tilting; the reduced algebra is zero");

  ReductionResult res;
  res.t_node = fac_maximal_completion(ctx, g, u);
  const TauPair& t_pair = g.nodes[res.t_node].pair;

  {
    auto projs = t_pair.proj_vertices();
    std::vector<int> pin_projs = u.projs;
    std::sort(pin_projs.begin(), pin_projs.end());
    if (projs != pin_projs)
      throw InternalError("fac-maximal completion has unexpected support");
  }

  // T summands in node order; record which are the pinned ones
  std::vector<ModQ> parts;
  std::vector<bool> pinned;
  for (const auto& x : t_pair.s) {
    if (x.shifted) continue;
    parts.push_back(x.mod);
    bool pin = false;
    for (const auto& pg : u.module_gs) pin = pin || (pg == x.g);
    pinned.push_back(pin);
  }

  EndPresentation endp = present_endomorphism_summands(parts);

  std::set<int> dropped;
  for (size_t i = 0; i < parts.size(); ++i)
    if (pinned[i]) dropped.insert(int(i));

  std::vector<int> survivors;
  for (size_t i = 0; i < parts.size(); ++i)
    if (!pinned[i]) survivors.push_back(int(i));

  if (dropped.empty()) {
    res.b_pres = endp.pres;
  } else {
    res.b_pres = quotient_by_idempotent(endp.pres, dropped).quotient;
  }
  res.b = build_algebra<Rat>(res.b_pres);
  MutationContext bctx(res.b);

  // surviving arrows of the B quiver, with their representative maps
  struct BArrow {
    int s, t;   // survivor indices (B vertices)
    MorQ rep;   // map T_{parts[survivors[t]]} -> T_{parts[survivors[s]]}
  };
  std::vector<BArrow> barrows;
  for (const auto& arr : res.b_pres.quiver.arrows) {
    int k = endp.pres.quiver.arrow_index(arr.id);
    int os = endp.arrow_ends[k].first, ot = endp.arrow_ends[k].second;
    int bs = -1, bt = -1;
    for (size_t i = 0; i < survivors.size(); ++i) {
      if (survivors[i] == os) bs = int(i);
      if (survivors[i] == ot) bt = int(i);
    }
    if (bs < 0 || bt < 0) throw InternalError("surviving arrow ends dropped");
    barrows.push_back(BArrow{bs, bt, endp.arrow_reps[k]});
  }

  // node map via Hom(T_s, X) modulo maps through the pinned summands
  auto map_node = [&](const TauPair& node) {
    std::vector<ModQ> w_parts;
    for (const auto& x : node.s) {
      if (x.shifted) continue;
      bool is_pin = false;
      for (const auto& pg : u.module_gs) is_pin = is_pin || (pg == x.g);
      if (is_pin) continue;
      const ModQ& target = x.mod;

      // per surviving summand: Hom(T_s, X), the subspace through add(U),
      // and the kept quotient coordinates
      struct Comp {
        std::vector<MorQ> basis;
        Rref<Rat> fact_rref;
        std::vector<int> keep;
        Mat<Rat> flat{0, 0};
      };
      std::vector<Comp> comp(survivors.size());
      for (size_t si = 0; si < survivors.size(); ++si) {
        int sp = survivors[si];
        Comp& c = comp[si];
        c.basis = hom_basis(parts[sp], target);
        int hd = int(c.basis.size());
        if (hd == 0) continue;
        const int w = int(flatten_morph(c.basis[0]).size());
        c.flat = Mat<Rat>(hd, w);
        for (int i = 0; i < hd; ++i) c.flat.set_row(i, flatten_morph(c.basis[i]));
        // factoring subspace in basis coordinates
        std::vector<std::vector<Rat>> rows;
        for (size_t pi = 0; pi < parts.size(); ++pi) {
          if (!pinned[pi]) continue;
          auto into = hom_basis(parts[sp], parts[pi]);
          auto outof = hom_basis(parts[pi], target);
          for (const auto& f : into)
            for (const auto& h : outof) {
              MorQ through = compose(f, h);
              Mat<Rat> one(1, c.flat.cols());
              one.set_row(0, flatten_morph(through));
              auto sol = solve_left(c.flat, one);
              if (!sol)
                throw PresentationFailure("factoring map escapes Hom basis");
              rows.push_back(sol->row(0));
            }
        }
        Mat<Rat> fact(int(rows.size()), hd);
        for (size_t i = 0; i < rows.size(); ++i) fact.set_row(int(i), rows[i]);
        c.fact_rref = rref(fact);
        for (int k = 0; k < hd; ++k)
          if (!c.fact_rref.is_pivot_col(k)) c.keep.push_back(k);
      }

      ModQ w;
      w.alg = res.b;
      w.dims.resize(res.b->n);
      for (size_t si = 0; si < survivors.size(); ++si)
        w.dims[si] = int(comp[si].keep.size());
      for (const auto& ba : barrows) {
        Mat<Rat> act(w.dims[ba.s], w.dims[ba.t]);
        const Comp& cs = comp[ba.s];
        const Comp& ct = comp[ba.t];
        for (size_t r = 0; r < cs.keep.size(); ++r) {
          const MorQ& f = cs.basis[cs.keep[r]];
          MorQ fa = compose(ba.rep, f);  // T_t -> T_s -> X
          Mat<Rat> one(1, ct.flat.cols());
          one.set_row(0, flatten_morph(fa));
          auto sol = solve_left(ct.flat, one);
          if (!sol) throw PresentationFailure("arrow action escapes Hom basis");
          auto res_row = reduce_row(ct.fact_rref, sol->row(0));
          for (size_t cc = 0; cc < ct.keep.size(); ++cc)
            act.at(int(r), int(cc)) = res_row[ct.keep[cc]];
        }
        w.mats.push_back(act);
      }
      w.check_shapes();
      validate_module(w);
      if (w.is_zero()) continue;
      for (auto& [summand, mult] : decompose(w)) {
        if (mult != 1)
          throw PresentationFailure("reduced image has a repeated summand");
        w_parts.push_back(summand);
      }
    }
    std::vector<int> projs;
    for (int s = 0; s < res.b->n; ++s) {
      bool supported = false;
      for (const auto& wp : w_parts) supported = supported || wp.dims[s] != 0;
      if (!supported) projs.push_back(s);
    }
    TauPair bp = bctx.make_pair(w_parts, projs);
    if (!bctx.is_tau_tilting(bp))
      throw PresentationFailure("reduced pair is not tau-tilting over B");
    return bp;
  };

  for (const auto& node : g.nodes) {
    if (!pair_contains(node.pair, u)) continue;
    TauPair image = map_node(node.pair);
    res.node_map[node.key] = image.key();
  }
  // the map must be injective
  {
    std::set<std::vector<GVec>> seen;
    for (const auto& [k, v] : res.node_map)
      if (!seen.insert(v).second)
        throw PresentationFailure("reduction map is not injective");
  }
  return res;
}

}  // namespace tautilt

#include "tautilt/rep_ops.hpp"

#include <algorithm>
#include <map>

namespace tautilt {

AlgQ opposite_algebra(const AlgQ& a) {
  return build_algebra<Rat>(opposite(a->pres));
}

SparseElem<Rat> op_map(const Algebra<Rat>& a, const Algebra<Rat>& aop,
                       const SparseElem<Rat>& x) {
  SparseElem<Rat> out;
  for (const auto& [g, c] : x) {
    PathWord rp = reversed(a.pres.quiver, a.basis[g].path);
    for (const auto& [h, d] : aop.reduce_path(rp)) sparse_add(out, h, Rat(c * d));
  }
  return sparse_normalize(out);
}

MorQ left_mult_morph(const AlgQ& alg, const SparseElem<Rat>& u, int i, int j) {
  for (const auto& [g, c] : u)
    if (alg->basis[g].src != j || alg->basis[g].tgt != i)
      throw InternalError("left multiplier not in e_j A e_i");
  MorQ f;
  for (int v = 0; v < alg->n; ++v) {
    const auto& dom = alg->basis_at(i, v);
    const auto& cod = alg->basis_at(j, v);
    Mat<Rat> m(int(dom.size()), int(cod.size()));
    for (size_t r = 0; r < dom.size(); ++r) {
      SparseElem<Rat> prod =
          alg->mult_elem(u, SparseElem<Rat>{{dom[r], Rat(1)}});
      for (const auto& [g, c] : prod) {
        auto it = std::find(cod.begin(), cod.end(), g);
        if (it == cod.end())
          throw InternalError("left multiplication left the component");
        m.at(int(r), int(it - cod.begin())) = c;
      }
    }
    f.m.push_back(m);
  }
  return f;
}

std::vector<int> vertex_list_from_mults(const std::vector<int>& mult) {
  std::vector<int> out;
  for (size_t v = 0; v < mult.size(); ++v)
    for (int k = 0; k < mult[v]; ++k) out.push_back(int(v));
  return out;
}

std::vector<std::vector<SparseElem<Rat>>> projective_entries(
    const AlgQ& alg, const std::vector<int>& src_verts,
    const std::vector<int>& tgt_verts, const MorQ& h) {
  // row offset of each source summand's generator inside the source module
  std::vector<std::vector<int>> comp_dim(src_verts.size());
  std::vector<int> gen_row(src_verts.size(), 0);
  {
    std::vector<int> off(alg->n, 0);
    for (size_t b = 0; b < src_verts.size(); ++b) {
      int jb = src_verts[b];
      gen_row[b] = off[jb];  // trivial path is first among paths j_b -> j_b
      for (int v = 0; v < alg->n; ++v)
        off[v] += int(alg->basis_at(jb, v).size());
    }
  }
  // column offsets of target summands per vertex
  std::vector<std::vector<int>> tgt_off(tgt_verts.size(),
                                        std::vector<int>(alg->n, 0));
  {
    std::vector<int> off(alg->n, 0);
    for (size_t a = 0; a < tgt_verts.size(); ++a) {
      for (int v = 0; v < alg->n; ++v) {
        tgt_off[a][v] = off[v];
        off[v] += int(alg->basis_at(tgt_verts[a], v).size());
      }
    }
  }
  std::vector<std::vector<SparseElem<Rat>>> u(
      tgt_verts.size(), std::vector<SparseElem<Rat>>(src_verts.size()));
  for (size_t b = 0; b < src_verts.size(); ++b) {
    int jb = src_verts[b];
    if (h.m[jb].rows() == 0) continue;
    auto row = h.m[jb].row(gen_row[b]);
    for (size_t a = 0; a < tgt_verts.size(); ++a) {
      const auto& paths = alg->basis_at(tgt_verts[a], jb);
      SparseElem<Rat> ent;
      for (size_t k = 0; k < paths.size(); ++k) {
        const Rat& c = row[tgt_off[a][jb] + int(k)];
        if (!is_zero(c)) ent.emplace_back(paths[k], c);
      }
      u[a][b] = sparse_normalize(ent);
    }
  }
  return u;
}

std::pair<std::pair<ModQ, ModQ>, MorQ> assemble_projective_morphism(
    const AlgQ& alg, const std::vector<int>& src_verts,
    const std::vector<int>& tgt_verts,
    const std::vector<std::vector<SparseElem<Rat>>>& u) {
  std::vector<ModQ> xs, ys;
  for (int s : src_verts) xs.push_back(indec_projective(alg, s));
  for (int t : tgt_verts) ys.push_back(indec_projective(alg, t));
  ModQ x = src_verts.empty() ? zero_module(alg) : direct_sum(xs);
  ModQ y = tgt_verts.empty() ? zero_module(alg) : direct_sum(ys);

  MorQ g = zero_morph(x, y);
  std::vector<int> xo(alg->n, 0);
  for (size_t s = 0; s < src_verts.size(); ++s) {
    std::vector<int> yoff(alg->n, 0);
    for (size_t t = 0; t < tgt_verts.size(); ++t) {
      if (!u[t][s].empty()) {
        MorQ blk = left_mult_morph(alg, u[t][s], src_verts[s], tgt_verts[t]);
        for (int v = 0; v < alg->n; ++v)
          for (int r = 0; r < blk.m[v].rows(); ++r)
            for (int c = 0; c < blk.m[v].cols(); ++c)
              g.m[v].at(xo[v] + r, yoff[v] + c) = blk.m[v].at(r, c);
      }
      for (int v = 0; v < alg->n; ++v)
        yoff[v] += int(alg->basis_at(tgt_verts[t], v).size());
    }
    for (int v = 0; v < alg->n; ++v)
      xo[v] += int(alg->basis_at(src_verts[s], v).size());
  }
  if (!is_intertwiner(x, y, g))
    throw InternalError("assembled projective map is not a morphism");
  return {{x, y}, g};
}

ModQ transpose_module(const ModQ& m, const AlgQ& aop) {
  if (m.is_zero()) return zero_module(aop);
  auto pres = min_projective_presentation(m);
  std::vector<int> iv = vertex_list_from_mults(pres.p0_mult);
  std::vector<int> jv = vertex_list_from_mults(pres.p1_mult);
  if (jv.empty()) return zero_module(aop);

  auto u = projective_entries(m.alg, jv, iv, pres.connecting);

  // Tr M = coker( (+) P^op(i_a) -> (+) P^op(j_b) ), block (a,b) given by
  // left multiplication with the reversed entry.
  std::vector<std::vector<SparseElem<Rat>>> uop(
      jv.size(), std::vector<SparseElem<Rat>>(iv.size()));
  for (size_t a = 0; a < iv.size(); ++a)
    for (size_t b = 0; b < jv.size(); ++b)
      uop[b][a] = op_map(*m.alg, *aop, u[a][b]);
  auto [xy, g] = assemble_projective_morphism(aop, iv, jv, uop);
  auto img = image_rows(xy.first, xy.second, g);
  auto [coker, proj] = quotient_by_rows(xy.second, img);
  return coker;
}

ModQ dual_module(const ModQ& m, const AlgQ& target) {
  if (!(target->pres == opposite(m.alg->pres)))
    throw AlgebraMismatch("dual target is not the opposite presentation");
  ModQ d;
  d.alg = target;
  d.dims = m.dims;
  const Quiver& q = target->pres.quiver;
  d.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) d.mats[a] = m.mats[a].transposed();
  d.check_shapes();
  validate_module(d);
  return d;
}

ModQ tau(const ModQ& m, const AlgQ& aop) {
  if (m.is_zero()) throw ZeroModule("tau of the zero module");
  ModQ tr = transpose_module(m, aop);
  if (tr.is_zero()) return zero_module(m.alg);
  return dual_module(tr, m.alg);
}

bool is_projective_module(const ModQ& m) {
  if (m.is_zero()) return true;
  auto cov = projective_cover(m);
  return cov.p0.dims == m.dims;
}

int projective_vertex(const ModQ& m) {
  auto cov = projective_cover(m);
  int vtx = -1, count = 0;
  for (int v = 0; v < m.alg->n; ++v) {
    count += cov.mult[v];
    if (cov.mult[v] > 0) vtx = v;
  }
  if (count != 1 || !(cov.p0.dims == m.dims))
    throw NotIndecomposable("not an indecomposable projective");
  return vtx;
}

bool proj_dim_le_1(const ModQ& m) {
  if (m.is_zero()) return true;
  auto pres = min_projective_presentation(m);
  for (int v = 0; v < m.alg->n; ++v)
    if (rank(pres.connecting.m[v]) != pres.p1.dims[v]) return false;
  return true;
}

bool inj_dim_le_1(const ModQ& m, const AlgQ& aop) {
  if (m.is_zero()) return true;
  return proj_dim_le_1(dual_module(m, aop));
}

bool hom_vanishes(const ModQ& m, const ModQ& n) {
  if (m.is_zero() || n.is_zero()) return true;
  return hom_basis(m, n).empty();
}

bool is_tau_rigid_module(const ModQ& m, const AlgQ& aop) {
  if (m.is_zero()) return true;
  ModQ t = tau(m, aop);
  return hom_vanishes(m, t);
}

bool fac_contains(const ModQ& n, const ModQ& m) {
  if (n.alg != m.alg) throw AlgebraMismatch("fac_contains across algebras");
  if (m.is_zero()) return true;
  if (n.is_zero()) return false;
  auto homs = hom_basis(n, m);
  for (int v = 0; v < m.alg->n; ++v) {
    if (m.dims[v] == 0) continue;
    Mat<Rat> stack(0, m.dims[v]);
    for (const auto& f : homs) stack = vstack(stack, f.m[v]);
    if (rank(stack) != m.dims[v]) return false;
  }
  return true;
}

namespace {

std::vector<Rat> flatten(const MorQ& f) {
  std::vector<Rat> out;
  for (const auto& m : f.m)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

}  // namespace

void complete_end_algebra(EndAlgebra& e) {
  int dim = int(e.basis.size());
  std::vector<std::vector<Rat>> flats;
  for (const auto& f : e.basis) flats.push_back(flatten(f));
  e.flat = Mat<Rat>(dim, flats.empty() ? 0 : int(flats[0].size()));
  for (int i = 0; i < dim; ++i) e.flat.set_row(i, flats[i]);

  // radical = kernel of the trace form of the tautological faithful module
  Mat<Rat> gram(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Rat tr(0);
      for (size_t v = 0; v < e.basis[i].m.size(); ++v) {
        const Mat<Rat>& a = e.basis[i].m[v];
        const Mat<Rat>& b = e.basis[j].m[v];
        for (int r = 0; r < a.rows(); ++r)
          for (int c = 0; c < a.cols(); ++c)
            if (!is_zero(a.at(r, c)) && !is_zero(b.at(c, r)))
              tr += a.at(r, c) * b.at(c, r);
      }
      gram.at(i, j) = tr;
      gram.at(j, i) = tr;
    }
  e.rad_coords = nullspace_rows(gram);
  e.rad_rref = rref(e.rad_coords);
}

EndAlgebra end_algebra(const ModQ& m) {
  if (m.alg->pres.field.kind != FieldDesc::Kind::Rationals)
    throw UnsupportedField("endomorphism analysis needs characteristic zero");
  EndAlgebra e;
  e.basis = hom_basis(m, m);
  complete_end_algebra(e);
  return e;
}

MorQ block_embed(const std::vector<ModQ>& parts, const ModQ& total, int s,
                 int t, const MorQ& h) {
  int nv = total.alg->n;
  std::vector<int> off_s(nv, 0), off_t(nv, 0);
  for (int k = 0; k < s; ++k)
    for (int v = 0; v < nv; ++v) off_s[v] += parts[k].dims[v];
  for (int k = 0; k < t; ++k)
    for (int v = 0; v < nv; ++v) off_t[v] += parts[k].dims[v];
  MorQ f;
  for (int v = 0; v < nv; ++v) {
    Mat<Rat> m(total.dims[v], total.dims[v]);
    for (int r = 0; r < parts[s].dims[v]; ++r)
      for (int c = 0; c < parts[t].dims[v]; ++c)
        m.at(off_s[v] + r, off_t[v] + c) = h.m[v].at(r, c);
    f.m.push_back(m);
  }
  return f;
}

std::vector<Rat> morph_coords(const EndAlgebra& e, const MorQ& f) {
  auto fl = flatten(f);
  Mat<Rat> b(1, int(fl.size()));
  b.set_row(0, fl);
  auto sol = solve_left(e.flat, b);
  if (!sol) throw InternalError("endomorphism outside its own span");
  return sol->row(0);
}

MorQ morph_from_coords(const EndAlgebra& e, const ModQ& m,
                       const std::vector<Rat>& coords) {
  MorQ acc = zero_morph(m, m);
  for (size_t i = 0; i < coords.size(); ++i)
    if (!is_zero(coords[i])) acc = morph_add(acc, morph_scale(e.basis[i], coords[i]));
  return acc;
}

namespace {

// ---- minimal polynomial machinery over End(M)/rad ----

struct SemisimpleCtx {
  const EndAlgebra* end;
  const ModQ* mod;

  // canonical representative of the class of f modulo the radical
  std::vector<Rat> reduce(std::vector<Rat> coords) const {
    return reduce_row(end->rad_rref, std::move(coords));
  }
  std::vector<Rat> mul(const std::vector<Rat>& x,
                       const std::vector<Rat>& y) const {
    MorQ fx = morph_from_coords(*end, *mod, x);
    MorQ fy = morph_from_coords(*end, *mod, y);
    MorQ fz = compose(fx, fy);
    return reduce(morph_coords(*end, fz));
  }
  std::vector<Rat> one() const {
    return reduce(morph_coords(*end, identity_morph(*mod)));
  }
};

// smallest monic dependency among 1, x, x^2, ... in the semisimple quotient
std::vector<Rat> min_poly(const SemisimpleCtx& ctx, const std::vector<Rat>& x) {
  std::vector<std::vector<Rat>> powers;
  powers.push_back(ctx.one());
  int d = int(x.size());
  for (;;) {
    Mat<Rat> stack(int(powers.size()), d);
    for (size_t i = 0; i < powers.size(); ++i) stack.set_row(int(i), powers[i]);
    std::vector<Rat> next =
        powers.size() == 1 ? x : ctx.mul(powers.back(), x);
    Mat<Rat> b(1, d);
    b.set_row(0, next);
    auto sol = solve_left(stack, b);
    if (sol) {
      // x^k = sum c_i x^i  =>  min poly t^k - sum c_i t^i
      std::vector<Rat> poly(powers.size() + 1, Rat(0));
      for (size_t i = 0; i < powers.size(); ++i) poly[i] = -sol->at(0, int(i));
      poly[powers.size()] = 1;
      return poly;
    }
    powers.push_back(next);
    if (int(powers.size()) > d + 1)
      throw InternalError("minimal polynomial search overran dimension");
  }
}

Rat eval_poly(const std::vector<Rat>& poly, const Rat& t) {
  Rat acc(0);
  for (size_t i = poly.size(); i-- > 0;) acc = acc * t + poly[i];
  return acc;
}

std::vector<mpz_class> small_divisors(const mpz_class& n, size_t cap = 4096) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a == 0) return out;
  for (mpz_class d = 1; d * d <= a && out.size() < cap; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      out.push_back(a / d);
    }
    if (d > 1000000) break;  // desk-scale guard
  }
  return out;
}

// a rational root lambda of poly with poly != (t-lambda)^deg, if any
std::optional<Rat> splitting_root(const std::vector<Rat>& poly) {
  // clear denominators
  mpz_class lcm = 1;
  for (const auto& c : poly) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  std::vector<mpz_class> ip;
  for (const auto& c : poly) {
    Rat v = c * Rat(lcm);
    v.canonicalize();
    ip.push_back(v.get_num());
  }
  int deg = int(poly.size()) - 1;
  if (deg < 2) return std::nullopt;

  std::vector<Rat> candidates;
  candidates.emplace_back(0);
  auto nums = small_divisors(ip.front());
  auto dens = small_divisors(ip.back());
  for (const auto& p : nums)
    for (const auto& q : dens) {
      Rat r = Rat(p) / Rat(q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  for (const auto& cand : candidates) {
    if (!is_zero(eval_poly(poly, cand))) continue;
    // deflate to check poly != (t - cand)^deg; need a second distinct factor
    std::vector<Rat> g(poly.begin(), poly.end());
    // synthetic division by (t - cand)
    std::vector<Rat> quo(deg, Rat(0));
    Rat carry(0);
    for (int i = deg; i >= 1; --i) {
      quo[i - 1] = g[i] + carry;
      carry = quo[i - 1] * cand;
    }
    if (!is_zero(eval_poly(quo, cand)))
      return cand;  // (t-cand) coprime to the cofactor: splits
  }
  return std::nullopt;
}

bool semisimple_commutative(const SemisimpleCtx& ctx,
                            const std::vector<std::vector<Rat>>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (ctx.mul(gens[i], gens[j]) != ctx.mul(gens[j], gens[i])) return false;
  return true;
}

// Lifts the coordinate vector of an idempotent of End/rad to an honest
// idempotent endomorphism via x -> 3x^2 - 2x^3.
MorQ lift_idempotent(const EndAlgebra& e, const ModQ& m, std::vector<Rat> coords) {
  MorQ f = morph_from_coords(e, m, coords);
  for (int it = 0; it < 64; ++it) {
    MorQ sq = compose(f, f);
    if (morphs_equal(sq, f)) return f;
    MorQ cube = compose(sq, f);
    f = morph_add(morph_scale(sq, Rat(3)), morph_scale(cube, Rat(-2)));
  }
  throw InternalError("idempotent lifting did not stabilize");
}

void decompose_rec(const ModQ& m, std::vector<ModQ>& out) {
  if (m.is_zero()) return;
  EndAlgebra e = end_algebra(m);
  int sdim = e.dim() - e.rad_dim();
  if (sdim == 1) {
    out.push_back(m);
    return;
  }
  SemisimpleCtx ctx{&e, &m};

  // candidate elements of the semisimple quotient, deterministic order
  std::vector<std::vector<Rat>> gens;
  for (int i = 0; i < e.dim(); ++i) {
    std::vector<Rat> unit(e.dim(), Rat(0));
    unit[i] = 1;
    auto red = ctx.reduce(unit);
    bool zero = true;
    for (const auto& c : red) zero = zero && is_zero(c);
    if (!zero) gens.push_back(red);
  }
  std::vector<std::vector<Rat>> candidates = gens;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      std::vector<Rat> s(e.dim()), d(e.dim());
      for (int k = 0; k < e.dim(); ++k) {
        s[k] = gens[i][k] + gens[j][k];
        d[k] = gens[i][k] - gens[j][k];
      }
      candidates.push_back(ctx.reduce(s));
      candidates.push_back(ctx.reduce(d));
    }
  for (int mu = 2; mu <= 4; ++mu) {
    std::vector<Rat> w(e.dim(), Rat(0));
    Rat scale(1);
    for (auto& g : gens) {
      for (int k = 0; k < e.dim(); ++k) w[k] += scale * g[k];
      scale *= mu;
    }
    candidates.push_back(ctx.reduce(w));
  }

  for (const auto& x : candidates) {
    auto poly = min_poly(ctx, x);
    auto root = splitting_root(poly);
    if (!root) continue;
    // e0 = g(x)/g(lambda) with g the cofactor of (t - lambda)
    int deg = int(poly.size()) - 1;
    std::vector<Rat> g(deg, Rat(0));
    Rat carry(0);
    for (int i = deg; i >= 1; --i) {
      g[i - 1] = poly[i] + carry;
      carry = g[i - 1] * (*root);
    }
    Rat denom = eval_poly(g, *root);
    // Horner evaluation of g at x inside the quotient
    auto one = ctx.one();
    std::vector<Rat> acc(e.dim(), Rat(0));
    for (int k = 0; k < e.dim(); ++k) acc[k] = g.back() * one[k];
    for (int i = int(g.size()) - 2; i >= 0; --i) {
      acc = ctx.mul(acc, x);
      for (int k = 0; k < e.dim(); ++k) acc[k] += g[i] * one[k];
    }
    acc = ctx.reduce(acc);
    for (auto& c : acc) c /= denom;
    MorQ idem = lift_idempotent(e, m, acc);
    if (idem.is_zero() || morphs_equal(idem, identity_morph(m)))
      throw InternalError("degenerate idempotent after lifting");

    std::vector<Mat<Rat>> im(m.alg->n), ker(m.alg->n);
    for (int v = 0; v < m.alg->n; ++v) {
      im[v] = rref(idem.m[v]).R;
      ker[v] = left_kernel(idem.m[v]);
    }
    auto [m1, i1] = submodule_from_rows(m, im);
    auto [m2, i2] = submodule_from_rows(m, ker);
    if (m1.total_dim() + m2.total_dim() != m.total_dim() || m1.is_zero() ||
        m2.is_zero())
      throw InternalError("idempotent split lost dimensions");
    decompose_rec(m1, out);
    decompose_rec(m2, out);
    return;
  }

  if (semisimple_commutative(ctx, gens))
    throw NonSplitResidue("commutative residue ring of dimension " +
                          std::to_string(sdim));
  throw InternalError("no splitting idempotent found in semisimple quotient");
}

}  // namespace

std::vector<std::pair<ModQ, int>> decompose(const ModQ& m) {
  if (m.alg->pres.field.kind != FieldDesc::Kind::Rationals)
    throw UnsupportedField("decompose requires exact rationals");
  std::vector<ModQ> leaves;
  decompose_rec(m, leaves);
  std::stable_sort(leaves.begin(), leaves.end(),
                   [](const ModQ& a, const ModQ& b) { return a.dims < b.dims; });
  std::vector<std::pair<ModQ, int>> out;
  for (auto& leaf : leaves) {
    bool matched = false;
    for (auto& [rep, mult] : out)
      if (rep.dims == leaf.dims && is_isomorphic_indec(rep, leaf)) {
        ++mult;
        matched = true;
        break;
      }
    if (!matched) out.emplace_back(std::move(leaf), 1);
  }
  return out;
}

bool is_isomorphic_indec(const ModQ& a, const ModQ& b) {
  if (a.alg != b.alg) throw AlgebraMismatch("iso test across algebras");
  if (a.dims != b.dims) return false;
  if (a.is_zero()) return true;
  for (const auto& f : hom_basis(a, b)) {
    bool inv = true;
    for (const auto& m : f.m) inv = inv && is_invertible(m);
    if (inv) return true;
  }
  return false;
}

bool is_isomorphic(const ModQ& a, const ModQ& b) {
  if (a.alg != b.alg) throw AlgebraMismatch("iso test across algebras");
  if (a.dims != b.dims) return false;
  if (a.is_zero()) return true;
  if (modules_structurally_equal(a, b)) return true;
  auto da = decompose(a);
  auto db = decompose(b);
  if (da.size() != db.size()) return false;
  std::vector<bool> used(db.size(), false);
  for (auto& [ma, ka] : da) {
    bool found = false;
    for (size_t i = 0; i < db.size(); ++i) {
      if (used[i] || db[i].second != ka) continue;
      if (is_isomorphic_indec(ma, db[i].first)) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

ModQ induce_along_quotient(const ModQ& m, const QuotientMap& qm,
                           const AlgQ& a_built, const AlgQ& b_built) {
  if (m.alg != a_built) throw NotAQuotient("module not over the base algebra");
  if (!(qm.base == a_built->pres) || !(qm.quotient == b_built->pres))
    throw NotAQuotient("quotient map does not match the given algebras");
  const Quiver& qa = a_built->pres.quiver;

  // seed rows generating M * ker(pi)
  std::vector<Mat<Rat>> rows(a_built->n);
  for (int v = 0; v < a_built->n; ++v) rows[v] = Mat<Rat>(0, m.dims[v]);
  for (int v : qm.dropped_vertices) rows[v] = Mat<Rat>::identity(m.dims[v]);
  for (const auto& id : qm.killed_arrows) {
    int a = qa.arrow_index(id);
    rows[qa.arrows[a].tgt] = vstack(rows[qa.arrows[a].tgt], m.mats[a]);
  }
  for (const auto& rel : qm.extra_relations) {
    Mat<Rat> rm = relation_matrix(m, rel);
    rows[rel.target(qa)] = vstack(rows[rel.target(qa)], rm);
  }
  // close under arrow actions
  for (int v = 0; v < a_built->n; ++v) rows[v] = rref(rows[v]).R;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t a = 0; a < qa.arrows.size(); ++a) {
      int s = qa.arrows[a].src, t = qa.arrows[a].tgt;
      if (rows[s].rows() == 0) continue;
      Mat<Rat> img = rows[s] * m.mats[a];
      Mat<Rat> joined = rref(vstack(rows[t], img)).R;
      if (joined.rows() != rows[t].rows()) {
        rows[t] = joined;
        changed = true;
      }
    }
  }
  auto [quo, proj] = quotient_by_rows(m, rows);

  // reinterpret over B
  const Quiver& qb = b_built->pres.quiver;
  ModQ out;
  out.alg = b_built;
  out.dims.resize(b_built->n);
  std::vector<int> vmap(b_built->n);
  for (int v = 0; v < b_built->n; ++v) {
    vmap[v] = qa.vertex_index(qb.vertices[v]);
    out.dims[v] = quo.dims[vmap[v]];
  }
  for (int v = 0; v < a_built->n; ++v) {
    bool survives = false;
    for (int w : vmap) survives = survives || (w == v);
    if (!survives && quo.dims[v] != 0)
      throw InternalError("dropped vertex kept dimensions after induction");
  }
  for (const auto& arr : qb.arrows) {
    int a = qa.arrow_index(arr.id);
    out.mats.push_back(quo.mats[a]);
  }
  out.check_shapes();
  validate_module(out);
  return out;
}

int ext1_dim(const ModQ& n, const ModQ& m) {
  if (n.is_zero() || m.is_zero()) return 0;
  auto cov = projective_cover(n);
  auto ker = kernel_rows(cov.p0, cov.map);
  auto [syz, incl] = submodule_from_rows(cov.p0, ker);
  if (syz.is_zero()) return 0;
  // Ext^1(N, M) = coker( Hom(P0, M) -> Hom(Omega, M) )
  auto hom_p0 = hom_basis(cov.p0, m);
  auto hom_syz = hom_basis(syz, m);
  if (hom_syz.empty()) return 0;
  Mat<Rat> img(int(hom_p0.size()), 0);
  std::vector<std::vector<Rat>> flat_rows;
  auto flatten_local = [&](const MorQ& f) {
    std::vector<Rat> out;
    for (const auto& mat : f.m)
      for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) out.push_back(mat.at(r, c));
    return out;
  };
  for (const auto& f : hom_p0) flat_rows.push_back(flatten_local(compose(incl, f)));
  Mat<Rat> restr(int(flat_rows.size()),
                 flat_rows.empty() ? 0 : int(flat_rows[0].size()));
  for (size_t i = 0; i < flat_rows.size(); ++i) restr.set_row(int(i), flat_rows[i]);
  int image_rank = flat_rows.empty() ? 0 : rank(restr);
  return int(hom_syz.size()) - image_rank;
}

int hom_through_injectives_dim(const ModQ& m, const ModQ& n, const AlgQ& aop) {
  if (m.is_zero() || n.is_zero()) return 0;
  // injectives are duals of the opposite projectives
  std::vector<ModQ> injs;
  for (int i = 0; i < m.alg->n; ++i)
    injs.push_back(dual_module(indec_projective(aop, i), m.alg));
  std::vector<std::vector<Rat>> rows;
  auto flatten_local = [&](const MorQ& f) {
    std::vector<Rat> out;
    for (const auto& mat : f.m)
      for (int r = 0; r < mat.rows(); ++r)
        for (int c = 0; c < mat.cols(); ++c) out.push_back(mat.at(r, c));
    return out;
  };
  for (const auto& inj : injs) {
    auto in_maps = hom_basis(m, inj);
    auto out_maps = hom_basis(inj, n);
    for (const auto& f : in_maps)
      for (const auto& g : out_maps) rows.push_back(flatten_local(compose(f, g)));
  }
  if (rows.empty()) return 0;
  Mat<Rat> stack(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) stack.set_row(int(i), rows[i]);
  return rank(stack);
}

}  // namespace tautilt

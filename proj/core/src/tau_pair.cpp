#include "tautilt/tau_pair.hpp"

#include <algorithm>
#include <sstream>

namespace tautilt {

std::string gvec_str(const GVec& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ",";
    os << g[i];
  }
  os << ")";
  return os.str();
}

std::vector<GVec> TauPair::key() const {
  std::vector<GVec> k;
  for (const auto& x : s) k.push_back(x.g);
  return k;
}

std::string TauPair::key_str() const {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += "|";
    out += gvec_str(s[i].g);
  }
  return out;
}

std::vector<int> TauPair::proj_vertices() const {
  std::vector<int> out;
  for (const auto& x : s)
    if (x.shifted) out.push_back(x.vertex);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<const ModQ*> TauPair::module_parts() const {
  std::vector<const ModQ*> out;
  for (const auto& x : s)
    if (!x.shifted) out.push_back(&x.mod);
  return out;
}

bool TauPair::contains_g(const GVec& g) const {
  for (const auto& x : s)
    if (x.g == g) return true;
  return false;
}

bool pair_contains(const TauPair& node, const PinnedPair& pin) {
  auto projs = node.proj_vertices();
  for (int v : pin.projs)
    if (!std::binary_search(projs.begin(), projs.end(), v)) return false;
  for (const auto& g : pin.module_gs) {
    bool found = false;
    for (const auto& x : node.s) found = found || (!x.shifted && x.g == g);
    if (!found) return false;
  }
  return true;
}

MutationContext::MutationContext(AlgQ a) : a_(std::move(a)) {
  if (a_->pres.field.kind != FieldDesc::Kind::Rationals)
    throw UnsupportedField("tau-tilting machinery runs over exact rationals");
}

const AlgQ& MutationContext::aop() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!aop_) aop_ = build_algebra<Rat>(opposite(a_->pres));
  return aop_;
}

MutationContext& MutationContext::op_context() {
  if (opctx_raw_) return *opctx_raw_;
  std::lock_guard<std::mutex> lock(mu_);
  if (!opctx_) {
    if (!aop_) aop_ = build_algebra<Rat>(opposite(a_->pres));
    opctx_ = std::make_unique<MutationContext>(aop_);
    opctx_->aop_ = a_;
    opctx_->opctx_raw_ = this;
  }
  return *opctx_;
}

GVec MutationContext::g_of_module(const ModQ& m) {
  auto pres = min_projective_presentation(m);
  GVec g(n());
  for (int i = 0; i < n(); ++i)
    g[i] = (long long)(pres.p0_mult[i]) - (long long)(pres.p1_mult[i]);
  return g;
}

const MutationContext::Interned* MutationContext::find_interned(const GVec& g) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = interned_.find(g);
  return it == interned_.end() ? nullptr : &it->second;
}

void MutationContext::intern_summand(const Summand& s) {
  if (s.shifted) return;
  if (find_interned(s.g)) return;
  Interned info;
  info.rep = s.mod;
  info.g = s.g;
  if (!s.p0_mult.empty()) {
    info.p0_mult = s.p0_mult;
    info.p1_mult = s.p1_mult;
  } else {
    auto pres = min_projective_presentation(s.mod);
    info.p0_mult = pres.p0_mult;
    info.p1_mult = pres.p1_mult;
  }
  info.tau = tau(s.mod, aop());
  info.is_proj = info.tau.is_zero();
  if (info.is_proj) {
    int v = -1, cnt = 0;
    for (int i = 0; i < n(); ++i) {
      cnt += info.p0_mult[i];
      if (info.p0_mult[i]) v = i;
    }
    if (cnt == 1) info.proj_vertex = v;
  }
  std::lock_guard<std::mutex> lock(mu_);
  interned_.emplace(s.g, std::move(info));
}

Summand MutationContext::module_summand(const ModQ& m) {
  if (m.is_zero()) throw ZeroModule("zero module cannot be a pair summand");
  Summand x;
  x.shifted = false;
  x.mod = m;
  auto pres = min_projective_presentation(m);
  x.p0_mult = pres.p0_mult;
  x.p1_mult = pres.p1_mult;
  x.g.resize(n());
  for (int i = 0; i < n(); ++i)
    x.g[i] = (long long)(pres.p0_mult[i]) - (long long)(pres.p1_mult[i]);
  if (const Interned* info = find_interned(x.g)) x.mod = info->rep;
  return x;
}

Summand MutationContext::shifted_summand(int vertex) {
  if (vertex < 0 || vertex >= n()) throw InternalError("vertex out of range");
  Summand x;
  x.shifted = true;
  x.vertex = vertex;
  x.g.assign(n(), 0);
  x.g[vertex] = -1;
  return x;
}

TauPair MutationContext::make_pair_summands(std::vector<Summand> parts) {
  TauPair p;
  p.s = std::move(parts);
  std::sort(p.s.begin(), p.s.end(),
            [](const Summand& a, const Summand& b) { return a.g < b.g; });
  for (size_t i = 1; i < p.s.size(); ++i)
    if (p.s[i - 1].g == p.s[i].g)
      throw InvariantViolation("pair is not basic: repeated g-vector " +
                               gvec_str(p.s[i].g));
  return p;
}

TauPair MutationContext::make_pair(const std::vector<ModQ>& mods,
                                   const std::vector<int>& projs) {
  std::vector<Summand> parts;
  for (const auto& m : mods) parts.push_back(module_summand(m));
  for (int v : projs) parts.push_back(shifted_summand(v));
  return make_pair_summands(std::move(parts));
}

TauPair MutationContext::projective_pair() {
  std::vector<ModQ> mods;
  for (int i = 0; i < n(); ++i) mods.push_back(indec_projective(a_, i));
  TauPair p = make_pair(mods, {});
  for (const auto& x : p.s) intern_summand(x);
  return p;
}

void MutationContext::register_module(const ModQ& m) {
  intern_summand(module_summand(m));
}

bool MutationContext::pair_rigid(const TauPair& p) {
  std::vector<const Summand*> mods;
  for (const auto& x : p.s)
    if (!x.shifted) mods.push_back(&x);

  // translates, from the cache where the summand is known
  std::vector<const ModQ*> taus(mods.size(), nullptr);
  std::vector<ModQ> fresh;
  std::vector<bool> trusted(mods.size(), false);
  fresh.reserve(mods.size());
  for (size_t t = 0; t < mods.size(); ++t) {
    if (const Interned* info = find_interned(mods[t]->g)) {
      taus[t] = &info->tau;
      trusted[t] = true;
    } else {
      fresh.push_back(tau(mods[t]->mod, aop()));
      taus[t] = &fresh.back();
    }
  }
  for (size_t s = 0; s < mods.size(); ++s)
    for (size_t t = 0; t < mods.size(); ++t) {
      auto key = std::make_pair(mods[s]->g, mods[t]->g);
      bool both_trusted = trusted[s] && trusted[t];
      if (both_trusted) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = rigid_pair_cache_.find(key);
        if (it != rigid_pair_cache_.end()) {
          if (!it->second) return false;
          continue;
        }
      }
      bool ok = hom_vanishes(mods[s]->mod, *taus[t]);
      if (both_trusted) {
        std::lock_guard<std::mutex> lock(mu_);
        rigid_pair_cache_[key] = ok;
      }
      if (!ok) return false;
    }
  return true;
}

void MutationContext::validate_pair(const TauPair& p) {
  for (size_t i = 1; i < p.s.size(); ++i)
    if (p.s[i - 1].g == p.s[i].g)
      throw InvariantViolation("pair is not basic");
  for (const auto& x : p.s) {
    if (x.shifted) continue;
    if (x.mod.alg != a_) throw AlgebraMismatch("pair summand over wrong algebra");
  }
  // Hom(P(v), M) = M e_v must vanish for every shifted vertex
  for (const auto& x : p.s) {
    if (!x.shifted) continue;
    for (const auto& y : p.s)
      if (!y.shifted && y.mod.dims[x.vertex] != 0)
        throw InvariantViolation("Hom(P, M) != 0 for shifted vertex " +
                                 a_->pres.quiver.vertices[x.vertex]);
  }
  if (!pair_rigid(p))
    throw InvariantViolation("module part is not tau-rigid");
}

bool MutationContext::is_tau_tilting(const TauPair& p) {
  validate_pair(p);
  return p.size() == n();
}

const std::vector<MorQ>& MutationContext::hom_cached(const GVec& gs,
                                                     const ModQ& ms,
                                                     const GVec& gt,
                                                     const ModQ& mt) {
  auto key = std::make_pair(gs, gt);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = hom_cache_.find(key);
    if (it != hom_cache_.end()) return it->second;
  }
  auto basis = hom_basis(ms, mt);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = hom_cache_.emplace(key, std::move(basis));
  return it->second;
}

namespace {

std::vector<Rat> flatten_morph(const MorQ& f) {
  std::vector<Rat> out;
  for (const auto& m : f.m)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  return out;
}

}  // namespace

std::optional<TauPair> MutationContext::try_left_exchange(const TauPair& p,
                                                          int slot) {
  const Summand& xs = p.s[slot];
  if (xs.shifted) return std::nullopt;  // handled by the dual route
  const ModQ& x = xs.mod;

  std::vector<const Summand*> rest;
  for (int i = 0; i < p.size(); ++i)
    if (i != slot && !p.s[i].shifted) rest.push_back(&p.s[i]);

  // universal map into add(rest) from the Hom bases
  struct Copy {
    int t;     // index into rest
    MorQ map;  // X -> rest[t]
    bool active = true;
  };
  std::vector<Copy> copies;
  for (size_t t = 0; t < rest.size(); ++t) {
    const auto& basis = hom_cached(xs.g, x, rest[t]->g, rest[t]->mod);
    for (const auto& h : basis) copies.push_back(Copy{int(t), h, true});
  }

  // approximation test: precomposition with f surjects onto Hom(X, R_t)
  auto is_approximation = [&](const std::vector<Copy>& cps) {
    for (size_t t = 0; t < rest.size(); ++t) {
      const auto& target_basis = hom_cached(xs.g, x, rest[t]->g, rest[t]->mod);
      int want = int(target_basis.size());
      if (want == 0) continue;
      std::vector<std::vector<Rat>> rows;
      for (const auto& c : cps) {
        if (!c.active) continue;
        const auto& mid =
            hom_cached(rest[c.t]->g, rest[c.t]->mod, rest[t]->g, rest[t]->mod);
        for (const auto& k : mid) rows.push_back(flatten_morph(compose(c.map, k)));
      }
      if (int(rows.size()) < want) return false;
      Mat<Rat> stack(int(rows.size()), int(rows[0].size()));
      for (size_t i = 0; i < rows.size(); ++i) stack.set_row(int(i), rows[i]);
      if (rank(stack) != want) return false;
    }
    return true;
  };

  if (!is_approximation(copies))
    throw ExchangeFailure("universal map is not an approximation");

  // greedy copy removal, last to first
  for (int c = int(copies.size()) - 1; c >= 0; --c) {
    copies[c].active = false;
    if (!is_approximation(copies)) copies[c].active = true;
  }

  std::vector<Copy> active;
  for (const auto& c : copies)
    if (c.active) active.push_back(c);

  ModQ y;  // cokernel of the approximation
  if (active.empty()) {
    y = zero_module(a_);
  } else {
    std::vector<ModQ> parts;
    std::vector<int> part_rest_idx;
    for (const auto& c : active) {
      parts.push_back(rest[c.t]->mod);
      part_rest_idx.push_back(c.t);
    }
    ModQ u = direct_sum(parts);
    MorQ f = zero_morph(x, u);
    {
      std::vector<int> off(n(), 0);
      for (const auto& c : active) {
        const ModQ& tgt = rest[c.t]->mod;
        for (int v = 0; v < n(); ++v) {
          for (int r = 0; r < x.dims[v]; ++r)
            for (int cc = 0; cc < tgt.dims[v]; ++cc)
              f.m[v].at(r, off[v] + cc) = c.map.m[v].at(r, cc);
          off[v] += tgt.dims[v];
        }
      }
    }
    // left-minimality certificate: {h in End(U) : f then h = 0} inside
    // rad End(U). End(U) is assembled blockwise from the cached Hom bases.
    {
      EndAlgebra eu;
      for (size_t s = 0; s < parts.size(); ++s)
        for (size_t t = 0; t < parts.size(); ++t) {
          int rs = part_rest_idx[s], rt = part_rest_idx[t];
          const auto& blocks =
              hom_cached(rest[rs]->g, rest[rs]->mod, rest[rt]->g, rest[rt]->mod);
          for (const auto& h : blocks)
            eu.basis.push_back(block_embed(parts, u, int(s), int(t), h));
        }
      complete_end_algebra(eu);
      if (eu.dim() > 0) {
        std::vector<std::vector<Rat>> rows;
        for (const auto& b : eu.basis) rows.push_back(flatten_morph(compose(f, b)));
        Mat<Rat> sys(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
        for (size_t i = 0; i < rows.size(); ++i) sys.set_row(int(i), rows[i]);
        Mat<Rat> ann = left_kernel(sys);
        for (int r = 0; r < ann.rows(); ++r)
          if (!in_row_space(eu.rad_rref, ann.row(r)))
            throw ExchangeFailure("approximation not left-minimal");
      }
    }
    auto img = image_rows(x, u, f);
    auto [coker, proj] = quotient_by_rows(u, img);
    y = coker;
  }

  // new module summand = basic part of Y outside add(rest)
  std::vector<ModQ> new_classes;
  if (!y.is_zero()) {
    for (auto& [summand, mult] : decompose(y)) {
      bool in_rest = false;
      for (const auto* r : rest)
        in_rest = in_rest || (summand.dims == r->mod.dims &&
                              is_isomorphic_indec(summand, r->mod));
      if (in_rest) continue;
      bool dup = false;
      for (const auto& nc : new_classes)
        dup = dup || (nc.dims == summand.dims && is_isomorphic_indec(nc, summand));
      if (!dup) new_classes.push_back(summand);
    }
  }

  std::vector<Summand> parts;
  for (const auto* r : rest) parts.push_back(*r);
  for (const auto& x2 : p.s)
    if (x2.shifted) parts.push_back(x2);

  if (new_classes.empty()) {
    // support drops: the unique admissible projective vertex
    auto projs = p.proj_vertices();
    std::vector<int> candidates;
    for (int j = 0; j < n(); ++j) {
      if (std::find(projs.begin(), projs.end(), j) != projs.end()) continue;
      bool hom_zero = true;
      for (const auto* r : rest) hom_zero = hom_zero && (r->mod.dims[j] == 0);
      if (hom_zero) candidates.push_back(j);
    }
    if (candidates.size() != 1) return std::nullopt;
    parts.push_back(shifted_summand(candidates.front()));
    return make_pair_summands(std::move(parts));
  }
  if (new_classes.size() != 1) return std::nullopt;
  parts.push_back(module_summand(new_classes.front()));
  return make_pair_summands(std::move(parts));
}

std::pair<TauPair, int> MutationContext::dual_pair(const TauPair& p, int slot) {
  MutationContext& oc = op_context();
  std::vector<Summand> parts;
  for (const auto& x : p.s) {
    Summand d;
    d.g = x.g;
    for (auto& c : d.g) c = -c;
    if (x.shifted) {
      d.shifted = false;
      d.mod = indec_projective(aop(), x.vertex);
      d.p0_mult.assign(n(), 0);
      d.p0_mult[x.vertex] = 1;
      d.p1_mult.assign(n(), 0);
      parts.push_back(std::move(d));
      continue;
    }
    const Interned* info = find_interned(x.g);
    ModQ tau_x = info ? info->tau : tau(x.mod, aop());
    if (tau_x.is_zero()) {
      // projective module summand dualizes to a shifted projective
      const std::vector<int>* mults = nullptr;
      std::vector<int> local;
      if (!x.p0_mult.empty()) {
        mults = &x.p0_mult;
      } else if (info) {
        mults = &info->p0_mult;
      } else {
        auto mp = min_projective_presentation(x.mod);
        local = mp.p0_mult;
        mults = &local;
      }
      int v = -1, cnt = 0;
      for (int i = 0; i < n(); ++i) {
        cnt += (*mults)[i];
        if ((*mults)[i]) v = i;
      }
      if (cnt != 1) throw InternalError("projective summand is decomposable");
      d.shifted = true;
      d.vertex = v;
      parts.push_back(std::move(d));
    } else {
      // Tr X = D tau X; its minimal presentation swaps the multiplicities
      d.shifted = false;
      d.mod = dual_module(tau_x, aop());
      if (!x.p0_mult.empty()) {
        d.p0_mult = x.p1_mult;
        d.p1_mult = x.p0_mult;
      } else if (info) {
        d.p0_mult = info->p1_mult;
        d.p1_mult = info->p0_mult;
      }
      parts.push_back(std::move(d));
    }
  }
  TauPair q = oc.make_pair_summands(std::move(parts));
  GVec want = p.s[slot].g;
  for (auto& c : want) c = -c;
  for (int i = 0; i < q.size(); ++i)
    if (q.s[i].g == want) return {q, i};
  throw InternalError("dual pair lost the mutated slot");
}

bool MutationContext::post_verify(const TauPair& p, const TauPair& cand,
                                  int slot) {
  if (cand.size() != n()) return false;
  // shares exactly the other n-1 summands, and the slot summand is replaced
  int shared = 0;
  for (const auto& x : cand.s) {
    if (x.g == p.s[slot].g) return false;
    if (p.contains_g(x.g)) ++shared;
  }
  if (shared != n() - 1) return false;
  try {
    validate_pair(cand);
  } catch (const Error&) {
    return false;
  }
  return true;
}

TauPair MutationContext::mutate(const TauPair& p, int slot) {
  if (slot < 0 || slot >= p.size()) throw NotTauTilting("slot out of range");
  try {
    if (!is_tau_tilting(p)) throw NotTauTilting("pair has too few summands");
  } catch (const InvariantViolation& e) {
    throw NotTauTilting(e.what());
  }
  for (const auto& x : p.s) intern_summand(x);

  if (!p.s[slot].shifted) {
    auto cand = try_left_exchange(p, slot);
    if (cand && post_verify(p, *cand, slot)) {
      for (auto& x : cand->s) intern_summand(x);
      return *cand;
    }
  }

  // increasing direction: left exchange over the opposite algebra
  auto [pd, slot_d] = dual_pair(p, slot);
  MutationContext& oc = op_context();
  auto cand_d = oc.try_left_exchange(pd, slot_d);
  if (!cand_d)
    throw ExchangeFailure("no exchange in either direction at slot " +
                          std::to_string(slot));
  // map back; the mutated dual slot is the summand missing from pd
  int back_slot = -1;
  for (int i = 0; i < cand_d->size(); ++i)
    if (!pd.contains_g(cand_d->s[i].g)) back_slot = i;
  if (back_slot < 0) throw InternalError("dual candidate equals its source");
  auto [cand, ignored] = oc.dual_pair(*cand_d, back_slot);
  (void)ignored;
  if (!post_verify(p, cand, slot))
    throw ExchangeFailure("exchange result failed post-verification");
  for (auto& x : cand.s) intern_summand(x);
  return cand;
}

}  // namespace tautilt

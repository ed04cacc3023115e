#include "tautilt/fan.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tautilt {

namespace {

Mat<Rat> gens_matrix(const Cone& c) {
  int n = int(c.gens.size());
  Mat<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat((long)c.gens[i][j]);
  return m;
}

}  // namespace

Cone node_cone(const ExchangeGraph& g, int node) {
  Cone c;
  c.owner_key = g.nodes[node].key;
  for (const auto& s : g.nodes[node].pair.s) c.gens.push_back(s.g);
  return c;
}

Rat cone_det(const Cone& c) { return det(gens_matrix(c)); }

ConePosition cone_membership(const Cone& c, const std::vector<Rat>& theta) {
  int n = int(c.gens.size());
  Mat<Rat> g = gens_matrix(c);
  Mat<Rat> b(1, n);
  for (int i = 0; i < n; ++i) b.at(0, i) = theta[i];
  if (is_zero(det(g))) throw SingularCone("cone generator matrix is singular");
  auto sol = solve_left(g, b);
  if (!sol) throw SingularCone("membership system inconsistent");
  bool zero = false;
  for (int i = 0; i < n; ++i) {
    int s = sgn(sol->at(0, i));
    if (s < 0) return ConePosition::Outside;
    if (s == 0) zero = true;
  }
  return zero ? ConePosition::Boundary : ConePosition::Interior;
}

bool strict_system_feasible(std::vector<std::vector<Rat>> rows, int nvars) {
  // drop zero rows early: an identically zero constraint 0 > 0 is infeasible
  for (int var = nvars - 1; var >= 0; --var) {
    for (const auto& r : rows) {
      bool zero = true;
      for (const auto& c : r) zero = zero && is_zero(c);
      if (zero) return false;
    }
    std::vector<std::vector<Rat>> pos, neg, zero;
    for (auto& r : rows) {
      int s = sgn(r[var]);
      if (s > 0)
        pos.push_back(std::move(r));
      else if (s < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::vector<std::vector<Rat>> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // eliminate var: p[var] * q - q[var] * p has coefficient 0 at var
        std::vector<Rat> comb(nvars, Rat(0));
        for (int j = 0; j < nvars; ++j)
          comb[j] = p[var] * q[j] - q[var] * p[j];
        next.push_back(std::move(comb));
      }
    rows = std::move(next);
  }
  // surviving rows have all coefficients eliminated: each reads 0 > 0
  return rows.empty();
}

namespace {

// interiors of two unimodular simplicial cones intersect iff the strict
// homogeneous system {x > 0, x (Gc Gd^{-1}) > 0} is feasible
bool interiors_intersect(const Cone& c, const Cone& d) {
  int n = int(c.gens.size());
  Mat<Rat> gc = gens_matrix(c), gd = gens_matrix(d);
  auto gdi = inverse(gd);
  if (!gdi) throw SingularCone("cone generator matrix is singular");
  Mat<Rat> m = gc * (*gdi);
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> unit(n, Rat(0));
    unit[i] = 1;
    rows.push_back(unit);  // x_i > 0
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> col(n);
    for (int i = 0; i < n; ++i) col[i] = m.at(i, j);
    rows.push_back(col);  // (x M)_j > 0
  }
  return strict_system_feasible(std::move(rows), n);
}

// shared generators (as vectors) and the leftover generator of each cone
bool facet_data(const Cone& c, const Cone& d, std::vector<GVec>* shared,
                GVec* c_extra, GVec* d_extra) {
  std::set<GVec> cs(c.gens.begin(), c.gens.end());
  std::set<GVec> ds(d.gens.begin(), d.gens.end());
  shared->clear();
  for (const auto& g : c.gens)
    if (ds.count(g)) shared->push_back(g);
  int n = int(c.gens.size());
  if (int(shared->size()) != n - 1) return false;
  for (const auto& g : c.gens)
    if (!ds.count(g)) *c_extra = g;
  for (const auto& g : d.gens)
    if (!cs.count(g)) *d_extra = g;
  return true;
}

// true when the two leftover generators lie strictly on opposite sides of
// the hyperplane spanned by the shared facet
bool opposite_sides(const std::vector<GVec>& shared, const GVec& a,
                    const GVec& b) {
  int n = int(a.size());
  Mat<Rat> m(int(shared.size()), n);
  for (size_t i = 0; i < shared.size(); ++i)
    for (int j = 0; j < n; ++j) m.at(int(i), j) = Rat((long)shared[i][j]);
  Mat<Rat> normal = nullspace_rows(m);
  if (normal.rows() != 1) return false;  // degenerate facet
  Rat sa(0), sb(0);
  for (int j = 0; j < n; ++j) {
    sa += normal.at(0, j) * Rat((long)a[j]);
    sb += normal.at(0, j) * Rat((long)b[j]);
  }
  return sgn(sa) * sgn(sb) == -1;
}

}  // namespace

FanReport check_fan(const ExchangeGraph& g) {
  FanReport rep;
  int nn = g.node_count();
  std::vector<Cone> cones;
  for (int i = 0; i < nn; ++i) cones.push_back(node_cone(g, i));

  for (int i = 0; i < nn; ++i) {
    Rat d = cone_det(cones[i]);
    if (!(d == Rat(1) || d == Rat(-1)))
      rep.violations.push_back("cone of node " + g.nodes[i].pair.key_str() +
                               " has determinant " + rat_str(d));
  }

  std::set<std::pair<int, int>> edge_set;
  for (const auto& e : g.edges)
    edge_set.insert({std::min(e.u, e.v), std::max(e.u, e.v)});

  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      ++rep.pairs_checked;
      if (interiors_intersect(cones[i], cones[j]))
        rep.violations.push_back("interiors of nodes " +
                                 g.nodes[i].pair.key_str() + " and " +
                                 g.nodes[j].pair.key_str() + " overlap");
      std::vector<GVec> shared;
      GVec ca, cb;
      bool facet = facet_data(cones[i], cones[j], &shared, &ca, &cb) &&
                   opposite_sides(shared, ca, cb);
      bool edge = edge_set.count({i, j}) > 0;
      if (edge) {
        ++rep.edges_checked;
        if (!facet)
          rep.violations.push_back(
              "mutation edge without a shared facet between " +
              g.nodes[i].pair.key_str() + " and " + g.nodes[j].pair.key_str());
      } else if (g.complete && facet) {
        rep.violations.push_back("facet-adjacent cones without an edge: " +
                                 g.nodes[i].pair.key_str() + " and " +
                                 g.nodes[j].pair.key_str());
      }
    }
  return rep;
}

namespace {

double halton(long long index, int base) {
  double f = 1.0, r = 0.0;
  long long i = index;
  while (i > 0) {
    f /= base;
    r += f * (i % base);
    i /= base;
  }
  return r;
}

const int kHaltonBases[] = {2, 3, 5, 7, 11, 13, 17, 19};

Rat rationalize(double x) {
  const double scale = 4294967296.0;  // 2^32
  long long num = (long long)std::llround(x * scale);
  Rat r = Rat(mpz_class((long)num), mpz_class(1L << 16) * mpz_class(1L << 16));
  r.canonicalize();
  return r;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool excluded_by(const std::vector<Rat>& s, const RayExclusion& ex) {
  // angle(s, dir) <= radius  <=>  s.dir >= 0 and (s.dir)^2 >= cos^2(radius) |s|^2 |dir|^2
  double rad = ex.radius.get_d();
  if (rad <= 0) return false;
  if (rad >= 1.5707) throw BadParams("exclusion radius must be below pi/2");
  Rat c2 = rationalize(std::cos(rad) * std::cos(rad));
  Rat sv = dot(s, ex.direction);
  if (sgn(sv) < 0) return false;
  return sv * sv >= c2 * dot(s, s) * dot(ex.direction, ex.direction);
}

}  // namespace

std::vector<Rat> sample_direction(long long index, int dim) {
  if (dim > 8) throw BadParams("sampling supports up to 8 coordinates");
  std::vector<double> v(dim);
  double norm2 = 0;
  for (int d = 0; d < dim; ++d) {
    v[d] = 2.0 * halton(index, kHaltonBases[d]) - 1.0;
    norm2 += v[d] * v[d];
  }
  if (norm2 < 1e-12) {
    v[0] = 1.0;
    norm2 = 1.0;
  }
  double inv = 1.0 / std::sqrt(norm2);
  std::vector<Rat> out(dim);
  bool nonzero = false;
  for (int d = 0; d < dim; ++d) {
    out[d] = rationalize(v[d] * inv);
    nonzero = nonzero || !is_zero(out[d]);
  }
  if (!nonzero) out[0] = 1;
  return out;
}

CoverageReport coverage(const ExchangeGraph& g, int directions,
                        const std::vector<RayExclusion>& excluded,
                        long long seed) {
  if (directions < 1) throw BadParams("sample count must be >= 1");
  CoverageReport rep;
  rep.seed = seed;
  rep.samples = directions;
  int dim = g.alg ? g.alg->n : (g.nodes.empty() ? 1 : int(g.nodes[0].key[0].size()));
  std::vector<Cone> cones;
  for (int i = 0; i < g.node_count(); ++i) cones.push_back(node_cone(g, i));
  for (int k = 0; k < directions; ++k) {
    auto s = sample_direction(seed + k, dim);
    bool excl = false;
    for (const auto& ex : excluded) excl = excl || excluded_by(s, ex);
    if (excl) {
      ++rep.excluded;
      continue;
    }
    bool in = false;
    for (const auto& c : cones) {
      if (cone_membership(c, s) != ConePosition::Outside) {
        in = true;
        break;
      }
    }
    if (in)
      ++rep.inside;
    else
      rep.missed.push_back(s);
  }
  int denom = rep.samples - rep.excluded;
  rep.fraction = denom == 0 ? Rat(1) : Rat(rep.inside) / Rat(denom);
  rep.fraction.canonicalize();
  return rep;
}

ContainmentReport chamber_containment(const ExchangeGraph& ga,
                                      const ExchangeGraph& gb,
                                      int samples_per_cone) {
  if (samples_per_cone < 1) throw BadParams("sample count must be >= 1");
  if (!ga.alg || !gb.alg || ga.alg->n != gb.alg->n)
    throw RankMismatch("chamber containment needs equal vertex counts");
  ContainmentReport rep;
  std::vector<Cone> acones;
  for (int i = 0; i < ga.node_count(); ++i) acones.push_back(node_cone(ga, i));
  const int n = gb.alg->n;
  for (int bi = 0; bi < gb.node_count(); ++bi) {
    Cone bc = node_cone(gb, bi);
    ConeWitness w;
    w.b_key = bc.owner_key;
    for (int s = 0; s < samples_per_cone && !w.witnessed; ++s) {
      ++w.samples_tried;
      // interior point sum_i r^i g_i with r sweeping (1, 2) over samples
      Rat r = Rat(1) + Rat(s + 1) / Rat(s + 2);
      std::vector<Rat> theta(n, Rat(0));
      Rat wgt(1);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) theta[j] += wgt * Rat((long)bc.gens[i][j]);
        wgt *= r;
      }
      for (size_t ai = 0; ai < acones.size(); ++ai) {
        if (cone_membership(acones[ai], theta) == ConePosition::Interior) {
          w.witnessed = true;
          w.point = theta;
          w.a_key = acones[ai].owner_key;
          break;
        }
      }
    }
    if (!w.witnessed) ++rep.unwitnessed;
    rep.cones.push_back(std::move(w));
  }
  return rep;
}

}  // namespace tautilt

#include "tautilt/exact_solve.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <map>

namespace tautilt {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Certified primes; the Mersenne prime 2^61-1 first so that a single
// elimination usually suffices, then 30-bit primes for CRT growth.
const u64 kPrimes[] = {
    2305843009213693951ULL,  // 2^61 - 1
    1000000007ULL, 1000000009ULL, 998244353ULL, 2147483647ULL,
    1000000021ULL, 1000000033ULL, 1000000087ULL, 1000000093ULL,
    1000000097ULL, 1000000103ULL, 1000000123ULL, 1000000181ULL,
    1000000207ULL, 1000000223ULL, 1000000241ULL,
};
constexpr int kMaxPrimes = int(sizeof(kPrimes) / sizeof(kPrimes[0]));

u64 mulmod(u64 a, u64 b, u64 p) { return u64((u128(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

using SpModRow = std::vector<std::pair<int, u64>>;

// dst -= factor * src, both sorted by column
void axpy(SpModRow& dst, u64 factor, const SpModRow& src, u64 p) {
  SpModRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      u64 v = (p - mulmod(factor, src[j].second, p)) % p;
      if (v != 0) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      u64 v = (dst[i].second + p - mulmod(factor, src[j].second, p)) % p;
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst.swap(out);
}

struct ModElim {
  std::vector<int> pivot_cols;         // ascending
  std::map<int, SpModRow> pivot_rows;  // pivot col -> fully reduced row
};

struct PrimePoisoned {};

// Sparse Gauss-Jordan over F_p. Invariant: every registered pivot row has a
// unit at its own pivot column and support elsewhere only on free columns.
ModElim eliminate_mod(const std::vector<SparseRow>& eqs, u64 p) {
  ModElim st;
  mpz_class pz(p);
  for (const auto& eq : eqs) {
    SpModRow row;
    row.reserve(eq.e.size());
    for (const auto& [c, q] : eq.e) {
      u64 nm, dn;
      if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        long long n = q.get_num().get_si() % (long long)p;
        if (n < 0) n += (long long)p;
        nm = (u64)n;
        dn = (u64)(q.get_den().get_si() % (long long)p);
      } else {
        mpz_class den = q.get_den() % pz;
        mpz_class num = q.get_num() % pz;
        if (num < 0) num += pz;
        nm = num.get_ui();
        dn = den.get_ui();
      }
      if (dn == 0) throw PrimePoisoned{};
      u64 v = mulmod(nm, invmod(dn, p), p);
      if (v) row.emplace_back(c, v);
    }
    std::sort(row.begin(), row.end());
    // knock out leading entries sitting on known pivot columns
    while (!row.empty()) {
      auto it = st.pivot_rows.find(row.front().first);
      if (it == st.pivot_rows.end()) break;
      axpy(row, row.front().second, it->second, p);
    }
    if (row.empty()) continue;
    // reduce the tail as well so the new row is fully reduced
    for (;;) {
      const std::pair<int, u64>* hit = nullptr;
      for (size_t k = 1; k < row.size(); ++k) {
        if (st.pivot_rows.count(row[k].first)) { hit = &row[k]; break; }
      }
      if (!hit) break;
      axpy(row, hit->second, st.pivot_rows.at(hit->first), p);
    }
    u64 inv = invmod(row.front().second, p);
    for (auto& e : row) e.second = mulmod(e.second, inv, p);
    int lead = row.front().first;
    for (auto& [pc, prow] : st.pivot_rows) {
      auto pos = std::lower_bound(
          prow.begin(), prow.end(), std::make_pair(lead, u64(0)),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      if (pos != prow.end() && pos->first == lead) axpy(prow, pos->second, row, p);
    }
    st.pivot_rows.emplace(lead, std::move(row));
  }
  for (auto& [c, _] : st.pivot_rows) st.pivot_cols.push_back(c);
  return st;
}

// Wang reconstruction in 64-bit arithmetic for a single word-size prime.
bool rat_reconstruct_u64(u64 r, u64 p, Rat& out) {
  u64 half = p / 2;
  u64 bound = (u64)std::sqrt((double)half);
  while ((bound + 1) * (bound + 1) <= half) ++bound;
  while (bound > 0 && bound * bound > half) --bound;
  long long r0 = (long long)p, r1 = (long long)(r % p);
  long long t0 = 0, t1 = 1;
  while (r1 > (long long)bound) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (r1 <= 0 || t1 == 0) return false;
  long long num = r1, den = t1;
  if (den < 0) { den = -den; num = -num; }
  if (den == 0 || (u64)den > bound) return false;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  out = Rat(mpz_class((long)num), mpz_class((long)den));
  out.canonicalize();
  return true;
}

// Wang rational reconstruction of r mod m with |num|, den <= sqrt(m/2).
bool rat_reconstruct(const mpz_class& r, const mpz_class& m, Rat& out) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = r % m, t0 = 0, t1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  mpz_class num = r1, den = t1;
  if (den < 0) { den = -den; num = -num; }
  if (den == 0 || den > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) { num /= g; den /= g; }
  mpz_class cop;
  mpz_gcd(cop.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  if (cop != 1) return false;
  out = Rat(num) / Rat(den);
  out.canonicalize();
  return true;
}

bool verify_kernel_row(const std::vector<SparseRow>& eqs,
                       const std::vector<Rat>& x) {
  Rat acc(0);
  for (const auto& row : eqs) {
    acc = 0;
    for (const auto& [c, v] : row.e)
      if (!is_zero(x[c])) acc += v * x[c];
    if (!is_zero(acc)) return false;
  }
  return true;
}

Mat<Rat> dense_path(const std::vector<SparseRow>& eqs, int ncols) {
  Mat<Rat> m(int(eqs.size()), ncols);
  for (size_t i = 0; i < eqs.size(); ++i)
    for (const auto& [c, v] : eqs[i].e) m.at(int(i), c) = m.at(int(i), c) + v;
  return nullspace_rows(m);
}

}  // namespace

void SparseRow::normalize() {
  std::sort(e.begin(), e.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rat>> out;
  for (auto& [c, v] : e) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, v);
  }
  e.clear();
  for (auto& [c, v] : out)
    if (!is_zero(v)) e.emplace_back(c, v);
}

Mat<Rat> nullspace_rows_sparse(std::vector<SparseRow> eqs, int ncols) {
  for (auto& r : eqs) r.normalize();
  if (ncols <= 160) return dense_path(eqs, ncols);

  int best_rank = -1;
  std::vector<int> best_pivots;
  std::vector<u64> used_primes;
  std::vector<std::vector<std::vector<u64>>> kernels;  // [prime][free][col]

  for (int pi = 0; pi < kMaxPrimes; ++pi) {
    u64 p = kPrimes[pi];
    ModElim st;
    try {
      st = eliminate_mod(eqs, p);
    } catch (const PrimePoisoned&) {
      continue;
    }
    int rk = int(st.pivot_cols.size());
    if (rk > best_rank) {
      best_rank = rk;
      best_pivots = st.pivot_cols;
      used_primes.clear();
      kernels.clear();
    } else if (rk < best_rank || st.pivot_cols != best_pivots) {
      continue;  // unlucky prime: rank dropped or pivot pattern shifted
    }

    std::vector<int> free_cols;
    {
      size_t k = 0;
      for (int c = 0; c < ncols; ++c) {
        if (k < best_pivots.size() && best_pivots[k] == c) { ++k; continue; }
        free_cols.push_back(c);
      }
    }
    std::vector<std::vector<u64>> kp(free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
      std::vector<u64>& x = kp[f];
      x.assign(ncols, 0);
      x[free_cols[f]] = 1;
      for (const auto& [pc, prow] : st.pivot_rows) {
        auto pos = std::lower_bound(
            prow.begin(), prow.end(), std::make_pair(free_cols[f], u64(0)),
            [](const auto& a, const auto& b) { return a.first < b.first; });
        if (pos != prow.end() && pos->first == free_cols[f])
          x[pc] = (p - pos->second) % p;
      }
    }
    used_primes.push_back(p);
    kernels.push_back(std::move(kp));

    // attempt CRT + rational reconstruction with primes collected so far
    size_t nfree = free_cols.size();
    Mat<Rat> out(int(nfree), ncols);
    bool ok = true;
    for (size_t f = 0; f < nfree && ok; ++f) {
      for (int c = 0; c < ncols && ok; ++c) {
        if (used_primes.size() == 1) {
          u64 r = kernels[0][f][c];
          if (r == 0) continue;
          Rat val;
          if (!rat_reconstruct_u64(r, used_primes[0], val)) { ok = false; break; }
          out.at(int(f), c) = val;
          continue;
        }
        mpz_class r = 0, m = 1;
        for (size_t q = 0; q < used_primes.size(); ++q) {
          mpz_class pq(used_primes[q]);
          mpz_class rq(kernels[q][f][c]);
          mpz_class minv;
          if (mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), pq.get_mpz_t()) == 0) {
            ok = false;
            break;
          }
          mpz_class t = ((rq - r) % pq) * minv % pq;
          if (t < 0) t += pq;
          r += m * t;
          m *= pq;
        }
        if (!ok) break;
        if (r == 0) continue;
        Rat val;
        if (!rat_reconstruct(r, m, val)) { ok = false; break; }
        out.at(int(f), c) = val;
      }
    }
    if (!ok) continue;
    bool verified = true;
    for (int f = 0; f < out.rows() && verified; ++f)
      verified = verify_kernel_row(eqs, out.row(f));
    if (verified) return out;
  }
  // modular path exhausted (pathological input); fall back to dense exact
  return dense_path(eqs, ncols);
}

}  // namespace tautilt

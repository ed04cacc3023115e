#include <doctest.h>

#include "tautilt/exact_solve.hpp"
#include "tautilt/matrix.hpp"

using namespace tautilt;

TEST_CASE("rref and rank") {
  Mat<Rat> m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(2, 2) = 5;
  auto rr = rref(m);
  CHECK(rr.rank == 2);
  CHECK(rr.pivots == std::vector<int>{0, 2});
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace is canonical and annihilates") {
  Mat<Rat> m(2, 4);
  // x1 + x2 + x3 = 0, x2 - x4 = 0
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(0, 2) = 1;
  m.at(1, 1) = 1;
  m.at(1, 3) = -1;
  auto ns = nullspace_rows(m);
  CHECK(ns.rows() == 2);
  for (int r = 0; r < ns.rows(); ++r)
    for (int e = 0; e < 2; ++e) {
      Rat acc(0);
      for (int c = 0; c < 4; ++c) acc += m.at(e, c) * ns.at(r, c);
      CHECK(is_zero(acc));
    }
}

TEST_CASE("solve_left and inverse") {
  Mat<Rat> a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 1) = 3;
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == Mat<Rat>::identity(2));
  Mat<Rat> b(1, 2);
  b.at(0, 0) = 4;
  b.at(0, 1) = 5;
  auto x = solve_left(a, b);
  REQUIRE(x.has_value());
  CHECK((*x * a) == b);
  CHECK(det(a) == Rat(6));
}

TEST_CASE("inconsistent solve returns nothing") {
  Mat<Rat> a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  Mat<Rat> b(2, 2);
  b.at(0, 0) = 1;
  b.at(1, 1) = 1;
  // x * a spans only the diagonal line; the identity rows cannot both match
  auto x = solve_left(a, b);
  CHECK_FALSE(x.has_value());
}

TEST_CASE("sparse modular nullspace agrees with dense elimination") {
  // deterministic congruential generator, entries in [-3, 3]
  unsigned long long s = 12345;
  auto next = [&]() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return int((s >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + int((next() + 3) % 5);
    int cols = 165 + trial % 9;  // above the dense threshold
    std::vector<SparseRow> eqs;
    Mat<Rat> dense(rows, cols);
    for (int r = 0; r < rows; ++r) {
      SparseRow row;
      for (int c = 0; c < cols; ++c) {
        int v = next();
        if (trial % 2 == 0 && c % 3 != 0) continue;  // keep some rows sparse
        if (v == 0) continue;
        Rat q(v, 1 + ((c + trial) % 4));
        q.canonicalize();
        row.add(c, q);
        dense.at(r, c) = dense.at(r, c) + q;
      }
      eqs.push_back(row);
    }
    Mat<Rat> sparse_kernel = nullspace_rows_sparse(eqs, cols);
    Mat<Rat> dense_kernel = nullspace_rows(dense);
    REQUIRE(sparse_kernel.rows() == dense_kernel.rows());
    CHECK(sparse_kernel == dense_kernel);
  }
}

TEST_CASE("modular nullspace lifts kernels beyond one prime") {
  // two equations over 170 unknowns whose kernel coordinates are ratios of
  // 60-bit products, beyond single-prime reconstruction bounds
  const Rat big1 = Rat(mpz_class("1099511627791"));
  const Rat big2 = Rat(mpz_class("1099511627789"));
  std::vector<SparseRow> eqs(2);
  eqs[0].add(0, big1);
  eqs[0].add(1, big2);
  eqs[0].add(2, Rat(1));
  eqs[1].add(1, big1);
  eqs[1].add(2, big2);
  Mat<Rat> dense(2, 170);
  dense.at(0, 0) = big1;
  dense.at(0, 1) = big2;
  dense.at(0, 2) = 1;
  dense.at(1, 1) = big1;
  dense.at(1, 2) = big2;
  auto sparse_kernel = nullspace_rows_sparse(eqs, 170);
  auto dense_kernel = nullspace_rows(dense);
  REQUIRE(sparse_kernel.rows() == dense_kernel.rows());
  CHECK(sparse_kernel == dense_kernel);
}

TEST_CASE("fp arithmetic") {
  Fp<3> a(2), b(2);
  CHECK((a * b) == Fp<3>(1));
  CHECK((a / b) == Fp<3>(1));
  CHECK((a + b) == Fp<3>(1));
  CHECK(Fp<3>(-1) == Fp<3>(2));
  Mat<Fp<2>> m(2, 2);
  m.at(0, 0) = Fp<2>(1);
  m.at(0, 1) = Fp<2>(1);
  m.at(1, 0) = Fp<2>(1);
  m.at(1, 1) = Fp<2>(1);
  CHECK(rank(m) == 1);
}

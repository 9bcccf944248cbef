#include "doctest.h"

#include <vector>

#include "corpus.hpp"
#include "stackyfan/normal_form.hpp"

using namespace stacky;
using corpus::cols;
using corpus::vec;

namespace {

// Independent oracle: d_1 ... d_k equals the gcd of all k x k minors.
Int minor_gcd(const IntMat& m, Index k) {
  std::vector<Index> rows(static_cast<size_t>(k)), cs(static_cast<size_t>(k));
  Int g = 0;

  std::function<Int(std::vector<Index>&, std::vector<Index>&)> det =
      [&](std::vector<Index>& r, std::vector<Index>& c) -> Int {
    if (r.empty()) return Int(1);
    Int sum = 0;
    std::vector<Index> r2(r.begin() + 1, r.end());
    int sign = 1;
    for (size_t j = 0; j < c.size(); ++j) {
      std::vector<Index> c2;
      for (size_t t = 0; t < c.size(); ++t)
        if (t != j) c2.push_back(c[t]);
      sum += Int(sign) * m(r[0], c[j]) * det(r2, c2);
      sign = -sign;
    }
    return sum;
  };

  std::function<void(Index, Index)> choose_cols = [&](Index start, Index depth) {
    if (depth == k) {
      std::vector<Index> r(rows), c(cs);
      g = gcd_int(g, det(r, c));
      return;
    }
    for (Index j = start; j < m.cols(); ++j) {
      cs[static_cast<size_t>(depth)] = j;
      choose_cols(j + 1, depth + 1);
    }
  };
  std::function<void(Index, Index)> choose_rows = [&](Index start, Index depth) {
    if (depth == k) {
      choose_cols(0, 0);
      return;
    }
    for (Index i = start; i < m.rows(); ++i) {
      rows[static_cast<size_t>(depth)] = i;
      choose_rows(i + 1, depth + 1);
    }
  };
  choose_rows(0, 0);
  return g;
}

void check_against_minor_oracle(const IntMat& m) {
  SmithForm f = smith_form(m);
  REQUIRE(is_unimodular(f.U));
  REQUIRE(is_unimodular(f.V));
  IntMat d = f.U * m * f.V;
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) REQUIRE(d(i, j) == f.D(i, j));
  Int prod = 1;
  for (Index k = 0; k < f.rank(); ++k) {
    prod *= f.invariant_factors[static_cast<size_t>(k)];
    CHECK(prod == minor_gcd(m, k + 1));
  }
  if (f.rank() < std::min(m.rows(), m.cols())) CHECK(minor_gcd(m, f.rank() + 1) == 0);
  for (size_t k = 1; k < f.invariant_factors.size(); ++k)
    CHECK(f.invariant_factors[k] % f.invariant_factors[k - 1] == 0);
}

}  // namespace

TEST_CASE("smith form of the 2x2 identity") {
  SmithForm f = smith_form(int_identity(2));
  CHECK(f.invariant_factors == std::vector<Int>{1, 1});
}

TEST_CASE("smith form combines coprime diagonal entries") {
  IntMat m = cols({{2, 0}, {0, 3}});
  SmithForm f = smith_form(m);
  CHECK(f.invariant_factors == std::vector<Int>{1, 6});
}

TEST_CASE("smith form of the column (6,4)") {
  IntMat m = cols({{6, 4}});
  SmithForm f = smith_form(m);
  CHECK(f.invariant_factors == std::vector<Int>{2});
  CHECK(f.D(0, 0) == 2);
  CHECK(f.D(1, 0) == 0);
}

TEST_CASE("smith form is deterministic") {
  IntMat m = cols({{6, 4}, {2, -8}});
  SmithForm a = smith_form(m), b = smith_form(m);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      CHECK(a.U(i, j) == b.U(i, j));
      CHECK(a.V(i, j) == b.V(i, j));
    }
}

TEST_CASE("minor-gcd oracle on diagonal and dense grids") {
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) {
      IntMat m = IntMat::Zero(2, 2);
      m(0, 0) = Int(a);
      m(1, 1) = Int(b);
      check_against_minor_oracle(m);
    }
  for (int trial = 0; trial < 300; ++trial) {
    Index r = static_cast<Index>(corpus::rand_between(1, 4));
    Index c = static_cast<Index>(corpus::rand_between(1, 4));
    check_against_minor_oracle(corpus::random_matrix(r, c, -10, 10));
  }
}

TEST_CASE("empty and zero matrices are first class") {
  SmithForm f = smith_form(IntMat(3, 0));
  CHECK(f.invariant_factors.empty());
  CHECK(f.U.rows() == 3);
  SmithForm z = smith_form(IntMat::Zero(2, 3));
  CHECK(z.invariant_factors.empty());
}

TEST_CASE("hermite membership and solve") {
  IntMat gens = cols({{2, 0}, {1, 1}, {3, -1}});
  IntVec inside = vec({5, 1});
  auto sol = lattice_solve(gens, inside);
  REQUIRE(sol.has_value());
  IntVec check = gens * *sol;
  CHECK(check(0) == 5);
  CHECK(check(1) == 1);
  CHECK(lattice_contains(gens, inside));

  IntMat even = cols({{2, 0}, {0, 2}});
  CHECK_FALSE(lattice_contains(even, vec({1, 0})));
  CHECK(lattice_contains(even, vec({-4, 6})));
}

TEST_CASE("kernel of (6,4) is spanned by (2,-3)") {
  IntMat m(1, 2);
  m(0, 0) = 6;
  m(0, 1) = 4;
  IntMat k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(abs_int(k(0, 0)) == 2);
  CHECK(abs_int(k(1, 0)) == 3);
  CHECK(m(0, 0) * k(0, 0) + m(0, 1) * k(1, 0) == 0);
}

TEST_CASE("kernel of the identity is empty") {
  CHECK(kernel(int_identity(3)).cols() == 0);
}

TEST_CASE("kernel of a positive weight row has corank one") {
  IntMat m(1, 3);
  m(0, 0) = 5;
  m(0, 1) = 7;
  m(0, 2) = 2;
  CHECK(kernel(m).cols() == 2);
}

TEST_CASE("kernel bases are saturated and annihilated") {
  for (int trial = 0; trial < 60; ++trial) {
    IntMat m = corpus::random_matrix(static_cast<Index>(corpus::rand_between(1, 3)),
                                     static_cast<Index>(corpus::rand_between(1, 4)), -6, 6);
    IntMat k = kernel(m);
    IntMat prod = m * k;
    for (Index i = 0; i < prod.rows(); ++i)
      for (Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    for (const Int& d : smith_form(k).invariant_factors) CHECK(d == 1);
  }
}

TEST_CASE("hermite form is stable under column shuffles of the lattice") {
  for (int trial = 0; trial < 40; ++trial) {
    IntMat m = corpus::random_matrix(3, 3, -5, 5);
    IntMat u = corpus::random_unimodular(3);
    CHECK(lattice_equal(m, IntMat(m * u)));
  }
}

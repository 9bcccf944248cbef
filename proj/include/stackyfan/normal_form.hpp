#pragma once

#include <optional>
#include <vector>

#include "stackyfan/types.hpp"

namespace stacky {

/// Smith normal form U*M*V = D with U, V unimodular and D diagonal,
/// d1 | d2 | ... | dk > 0 followed by zeros.
struct SmithForm {
  IntMat U;  // rows x rows
  IntMat D;  // rows x cols
  IntMat V;  // cols x cols
  std::vector<Int> invariant_factors;

  Index rank() const { return static_cast<Index>(invariant_factors.size()); }
};

/// Column Hermite form: M*W = [H | 0] with W unimodular. H has one pivot per
/// pivot row, pivots positive, and entries left of a pivot reduced into
/// [0, pivot). Columns of W beyond `rank` form a basis of ker M.
struct HermiteForm {
  IntMat H;  // rows x cols (trailing columns zero)
  IntMat W;  // cols x cols
  std::vector<Index> pivot_rows;

  Index rank() const { return static_cast<Index>(pivot_rows.size()); }
};

SmithForm smith_form(const IntMat& m);
HermiteForm hermite_form(const IntMat& m);

/// Deterministic pivot rule: entry of minimal absolute value, ties broken by
/// lowest (row, col).
template <typename Derived>
SmithForm snf(const Eigen::MatrixBase<Derived>& m) {
  return smith_form(IntMat(m));
}

template <typename Derived>
HermiteForm hnf_cols(const Eigen::MatrixBase<Derived>& m) {
  return hermite_form(IntMat(m));
}

/// Basis of the kernel lattice {x : m x = 0}; columns, count = cols - rank.
IntMat kernel(const IntMat& m);

Index lattice_rank(const IntMat& gens);

/// Membership of x in the column lattice of `gens`.
bool lattice_contains(const HermiteForm& hf, const IntVec& x);
bool lattice_contains(const IntMat& gens, const IntVec& x);

/// Inclusion / equality of column lattices.
bool lattice_subset(const IntMat& a, const IntMat& b);
bool lattice_equal(const IntMat& a, const IntMat& b);

/// Solve gens * y = x over the integers (y in terms of the original columns).
std::optional<IntVec> lattice_solve(const IntMat& gens, const IntVec& x);

bool is_unimodular(const IntMat& m);

IntMat horizontal_concat(const IntMat& a, const IntMat& b);
IntMat vertical_concat(const IntMat& a, const IntMat& b);

}  // namespace stacky

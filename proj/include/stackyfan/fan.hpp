#pragma once

#include <vector>

#include "stackyfan/abelian.hpp"
#include "stackyfan/types.hpp"

namespace stacky {

/// A rational simplicial fan: primitive pairwise-distinct rays in Z^rank and
/// maximal cones as sorted ray-index sets. The zero cone is implicit; a rank-0
/// fan is the point fan whose single maximal cone is empty.
struct Fan {
  Index rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> max_cones;

  Index ray_count() const { return static_cast<Index>(rays.size()); }
  IntMat ray_matrix() const;  // rank x n, columns are rays
};

/// Validates everything: primitivizes rays, checks simpliciality and the
/// pairwise common-face condition (exact rational feasibility of a separating
/// functional, by Fourier-Motzkin elimination).
Fan make_fan(Index rank, const std::vector<IntVec>& rays,
             const std::vector<std::vector<int>>& max_cones);

/// Wall criterion: pure of dimension `rank`, every (rank-1)-face of a maximal
/// cone shared by exactly two maximal cones, at least one cone. Exact for
/// rank <= 2; coincides with support coverage on the standard fans treated
/// here. See README for the limitation in higher rank.
bool is_complete(const Fan& f);

/// Every maximal cone's rays extend to a Z-basis (all Smith factors 1).
bool is_smooth(const Fan& f);

struct ClassGroup {
  FGAbelianGroup group;                // coker(M -> Z^n), m -> (<m, v_i>)_i
  std::vector<IntVec> divisor_classes; // classes of e_i, canonical coordinates
};

/// Class group of the coarse toric variety; requires the rays to span.
ClassGroup class_group(const Fan& f);

/// Maximal cones as coordinate-vanishing patterns describing Z_Sigma: a point
/// of C^n lies in Z_Sigma iff its zero set is contained in some pattern.
std::vector<std::vector<int>> cox_patterns(const Fan& f);

struct SpanDefect {
  Index spanned_rank;
  Index complement_rank;
  IntMat projection;  // spanned_rank x rank, restricts to an iso on the saturation
};

SpanDefect span_defect(const Fan& f);

/// Exact feasibility of { a . u <= c } over the rationals.
struct LinearConstraint {
  std::vector<Rat> coeffs;
  Rat bound;
};
bool fm_feasible(std::vector<LinearConstraint> constraints, int num_vars);

}  // namespace stacky

#pragma once

#include <string>
#include <vector>

#include "stackyfan/fan.hpp"

namespace stacky {

/// The triple (N, Sigma, beta) with N = Z^d + sum_j Z/b_j given in split
/// form. beta is stored as its free block (d x n) and normalized torsion
/// residues (l x n, column entries in [0, b_j)). Rays are derived from the
/// free block and always span; the point fan (n = d = 0, any torsion) is the
/// one allowed degenerate case.
struct StackyFan {
  Index free_rank = 0;              // d
  std::vector<Int> torsion_orders;  // b_j >= 2
  Fan fan;
  IntMat beta_free;     // d x n
  IntMat beta_torsion;  // l x n

  Index ray_count() const { return beta_free.cols(); }
  Index torsion_count() const { return static_cast<Index>(torsion_orders.size()); }
  bool is_orbifold() const { return torsion_orders.empty(); }
  bool is_point() const { return free_rank == 0 && ray_count() == 0; }

  /// Full beta columns, free part stacked over torsion residues.
  IntMat beta_columns() const;
};

StackyFan make_stacky_fan(Index free_rank, const std::vector<Int>& torsion_orders,
                          const IntMat& beta_columns,
                          const std::vector<std::vector<int>>& max_cones);

/// Divisor multiplicities a_i = content of the i-th free column.
std::vector<Int> multiplicities(const StackyFan& sf);

/// Kill the torsion of N; beta_free is kept.
StackyFan rigidify(const StackyFan& sf);

/// Kill the torsion and make every beta column primitive.
StackyFan canonicalize(const StackyFan& sf);

bool is_canonical(const StackyFan& sf);

struct PicardData {
  FGAbelianGroup pic;                   // DG(beta), presented on Z^(n+l)
  std::vector<IntVec> divisor_classes;  // classes of e_1..e_n
};

/// DG(beta) = coker([B Q]^*) for the fixed resolution Q = [0; diag(b)] and
/// the normalized residue lift B. Presented on the duals of the n + l
/// generators; the divisor classes are the images of the first n.
PicardData dg_group(const StackyFan& sf);

struct QuotientPresentation {
  FGAbelianGroup character_group;           // characters of G = Hom(DG, C*)
  std::vector<IntVec> action_weights;       // = divisor classes
  std::vector<std::vector<int>> cox_patterns;
};

/// The global-quotient presentation [Z_Sigma / G] in character-lattice form.
QuotientPresentation quotient_presentation(const StackyFan& sf);

struct DMTorus {
  Index torus_rank;                // = d
  std::vector<Int> gerbe_factors;  // invariant factors of N_tor
};

DMTorus dm_torus(const StackyFan& sf);

struct SequenceCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct SequenceReport {
  std::vector<SequenceCheck> checks;
  Int orbifold_index = 1;  // [Pic(rig) : Pic(can)], expected prod a_i
  Int gerbe_index = 1;     // [Pic : Pic(rig)], expected prod b_j
  bool all_pass() const;
};

/// Checks the two Picard short exact sequences
///   0 -> Pic(can) -> Pic(rig) -> sum Z/a_i -> 0
///   0 -> Pic(rig) -> Pic      -> sum Z/b_j -> 0
/// (injectivity, middle exactness, surjectivity, index identities) and that
/// both defining squares are pushouts. Failures are report entries.
SequenceReport verify_pic_sequences(const StackyFan& sf);

/// dg_group with explicitly shifted residue lifts: row j of `lift_shifts`
/// adds b_j * shift to the corresponding residue row of B. The canonical
/// form of the result is independent of the shifts.
PicardData dg_group_with_lift(const StackyFan& sf, const IntMat& lift_shifts);

}  // namespace stacky

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackyfan/stacky.hpp"

namespace stacky {

/// One gerbe layer: the root order and the canonical residue vector of the
/// class [L_j] in Pic(rig)/b_j Pic(rig) as produced by quotient_mod.
struct GerbeEntry {
  Int order;
  IntVec cls;
};

/// Bottom-up presentation: canonical stacky fan, divisor multiplicities and
/// the gerbe layers over the rigidification.
struct Decomposition {
  StackyFan canonical;
  std::vector<Int> multiplicities;
  std::vector<GerbeEntry> gerbe;
};

struct Verdict {
  enum class Kind { Isomorphic, Distinct, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string invariant;         // Distinct: the invariant that differs
  std::string lhs, rhs;          // Distinct: its two values
  std::string reason;            // Inconclusive
  std::vector<int> ray_permutation;  // Isomorphic: witness alignment

  bool isomorphic() const { return kind == Kind::Isomorphic; }
  bool distinct() const { return kind == Kind::Distinct; }
};

/// Scale the i-th beta column by a_i; defined on orbifold presentations.
StackyFan root_divisors(const StackyFan& sf, const std::vector<Int>& orders);

/// Adjoin the b-th root of L = sum c_i O(D_i): appends torsion order b and
/// the residue row c mod b.
StackyFan root_line_bundle(const StackyFan& sf, const IntVec& coeffs, const Int& order);

Decomposition decompose(const StackyFan& sf);

/// Rebuild a stacky fan: roots of divisors, then one line-bundle root per
/// gerbe entry with coefficients solved from the stored class.
StackyFan recompose(const Decomposition& dec);

/// Sufficient isomorphism test over ray alignments that preserve the cone
/// structure. Lattice automorphisms of N and re-decompositions of the
/// generic stabilizer are not searched; that incompleteness surfaces as
/// Inconclusive, never as Distinct.
Verdict compare(const StackyFan& sf1, const StackyFan& sf2);

struct WpsRecognition {
  bool is_wps = false;
  std::vector<Int> weights;
  std::string reason;  // set when not a weighted projective stack
};

/// Complete + cyclic Picard group => weighted projective stack P(w).
WpsRecognition recognize_wps(const StackyFan& sf);

/// Stacky fan of P(w_0, ..., w_n) on the fan with all n-subsets of the n+1
/// projected basis rays; requires at least two weights.
StackyFan wps_stacky_fan(const std::vector<Int>& weights);

/// beta = (a1, -a2) over the P^1 fan.
StackyFan line_stacky_fan(const Int& a1, const Int& a2);

struct ToricLineReport {
  std::vector<Int> multiplicities;  // (a1, a2) in ray order
  Int gcd, lcm;
  FGAbelianGroup pic;          // Z x Z/gcd
  std::vector<Int> weights;    // (m/a1, m/a2)
  Int k1, k2;                  // k1/a1 + k2/a2 = 1/m, k2 minimal non-negative
};

/// Classifies a complete one-dimensional toric orbifold.
ToricLineReport classify_toric_line(const StackyFan& sf);

struct TorusSplit {
  StackyFan core;
  Index torus_rank;
  std::vector<Int> gerbe_factors;
};

/// Accepts raw stacky-fan data whose rays span only a sublattice, projects
/// to the saturation and reports the split torus rank; with no rays at all
/// the torsion moves entirely into the BG factor.
TorusSplit torus_split(Index free_rank, const std::vector<Int>& torsion_orders,
                       const IntMat& beta_columns,
                       const std::vector<std::vector<int>>& max_cones);

}  // namespace stacky

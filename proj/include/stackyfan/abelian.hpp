#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stackyfan/normal_form.hpp"
#include "stackyfan/types.hpp"

namespace stacky {

/// A finitely generated abelian group presented as Z^g modulo the column
/// lattice of a relation matrix. The canonical form keeps the free rank and
/// the invariant factors >= 2 sorted along the divisibility chain;
/// `to_canonical` maps presentation generators to canonical coordinates
/// (free coordinates first, then one residue coordinate per torsion factor).
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  static FGAbelianGroup cokernel(const IntMat& relations);
  static FGAbelianGroup free_group(Index rank);
  static FGAbelianGroup from_invariants(Index free_rank, const std::vector<Int>& torsion);

  Index generator_count() const { return presentation_.rows(); }
  const IntMat& presentation() const { return presentation_; }
  Index free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  const IntMat& to_canonical() const { return to_canonical_; }

  Index canonical_coordinates() const {
    return free_rank_ + static_cast<Index>(torsion_.size());
  }

  /// Canonical coordinates of the class of x, torsion residues in [0, d_i).
  IntVec class_of(const IntVec& x) const;

  /// A generator-level representative of the class with the given canonical
  /// coordinates (right inverse of class_of up to cosets).
  IntVec representative(const IntVec& canonical) const;

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  Int order() const;  // finite groups only

  bool same_canonical_form(const FGAbelianGroup& other) const {
    return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
  }

  /// Rendering like "Z^2 x Z/2 x Z/6"; "0" for the trivial group.
  std::string to_string() const;

 private:
  IntMat presentation_{IntMat(0, 0)};
  Index free_rank_ = 0;
  std::vector<Int> torsion_;
  IntMat to_canonical_{IntMat(0, 0)};
};

struct GroupHom {
  FGAbelianGroup source;
  FGAbelianGroup target;
  IntMat matrix;  // target generators x source generators
};

/// The complex [A^0 -> A^1] concentrated in degrees -1, 0.
struct TwoTermComplex {
  GroupHom phi;
};

FGAbelianGroup cokernel(const IntMat& relations);

bool hom_well_defined(const GroupHom& h);

/// A/bA together with its coset map (the group returned shares A's
/// generators, so its class_of normalizes representatives of cosets).
FGAbelianGroup quotient_mod(const FGAbelianGroup& a, const Int& b);

/// Q : Z^l -> Z^(d+l), Q = [0; diag(torsion)], with coker Q isomorphic to A.
IntMat two_term_resolution(const FGAbelianGroup& a);

struct ReducedComplex {
  Index kernel_rank;
  FGAbelianGroup cokernel;
};

/// [A^0 -> A^1] ~ [ker phi -> coker phi]; requires ker phi free.
ReducedComplex reduce_complex(const TwoTermComplex& c);

struct DMTorusForm {
  Index torus_rank;
  std::vector<Int> gerbe_factors;
};

/// Normal form of the associated Picard stack; requires ker phi free and
/// coker phi finite.
DMTorusForm dm_torus_form(const TwoTermComplex& c);

/// Cokernel of x -> (f(x), -g(x)); f and g must share their source.
FGAbelianGroup pushout(const GroupHom& f, const GroupHom& g);

// Hom diagnostics used by the exact-sequence checks.
FGAbelianGroup hom_cokernel(const GroupHom& h);
bool hom_injective(const GroupHom& h);
bool hom_surjective(const GroupHom& h);
bool hom_is_isomorphism(const GroupHom& h);

/// Lattice in Z^(target generators) representing the image subgroup.
IntMat hom_image_lattice(const GroupHom& h);
/// Lattice in Z^(source generators) representing the kernel subgroup.
IntMat hom_kernel_lattice(const GroupHom& h);

}  // namespace stacky

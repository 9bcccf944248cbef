#include "stackyfan/abelian.hpp"

#include <sstream>

namespace stacky {

FGAbelianGroup FGAbelianGroup::cokernel(const IntMat& relations) {
  FGAbelianGroup g;
  g.presentation_ = relations;
  const Index n = relations.rows();
  SmithForm f = smith_form(relations);
  const Index k = f.rank();
  g.free_rank_ = n - k;
  std::vector<Index> torsion_rows;
  for (Index i = 0; i < k; ++i) {
    if (f.invariant_factors[static_cast<size_t>(i)] >= 2) {
      g.torsion_.push_back(f.invariant_factors[static_cast<size_t>(i)]);
      torsion_rows.push_back(i);
    }
  }
  g.to_canonical_ = IntMat(g.canonical_coordinates(), n);
  Index row = 0;
  for (Index i = k; i < n; ++i) g.to_canonical_.row(row++) = f.U.row(i);
  for (Index i : torsion_rows) g.to_canonical_.row(row++) = f.U.row(i);
  return g;
}

FGAbelianGroup FGAbelianGroup::free_group(Index rank) {
  return cokernel(IntMat(rank, 0));
}

FGAbelianGroup FGAbelianGroup::from_invariants(Index free_rank,
                                               const std::vector<Int>& torsion) {
  const Index l = static_cast<Index>(torsion.size());
  IntMat rel = IntMat::Zero(free_rank + l, l);
  for (Index j = 0; j < l; ++j) rel(free_rank + j, j) = torsion[static_cast<size_t>(j)];
  return cokernel(rel);
}

IntVec FGAbelianGroup::class_of(const IntVec& x) const {
  IntVec y = to_canonical_ * x;
  for (size_t i = 0; i < torsion_.size(); ++i) {
    Index row = free_rank_ + static_cast<Index>(i);
    y(row) = mod_pos(y(row), torsion_[i]);
  }
  return y;
}

IntVec FGAbelianGroup::representative(const IntVec& canonical) const {
  // to_canonical_ consists of rows of a unimodular matrix, so the system
  // to_canonical_ * x = canonical always has an integer solution.
  auto sol = lattice_solve(to_canonical_, canonical);
  if (!sol) throw error(errc::dimension_mismatch, "no representative; inconsistent coordinates");
  return *sol;
}

Int FGAbelianGroup::order() const {
  if (!is_finite()) throw error(errc::dimension_mismatch, "order of an infinite group");
  Int o = 1;
  for (const Int& d : torsion_) o *= d;
  return o;
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (const Int& d : torsion_) {
    if (!first) os << " x ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FGAbelianGroup cokernel(const IntMat& relations) {
  return FGAbelianGroup::cokernel(relations);
}

bool hom_well_defined(const GroupHom& h) {
  if (h.matrix.rows() != h.target.generator_count() ||
      h.matrix.cols() != h.source.generator_count())
    return false;
  HermiteForm tgt = hermite_form(h.target.presentation());
  const IntMat& rel = h.source.presentation();
  for (Index j = 0; j < rel.cols(); ++j)
    if (!lattice_contains(tgt, IntVec(h.matrix * rel.col(j)))) return false;
  return true;
}

FGAbelianGroup quotient_mod(const FGAbelianGroup& a, const Int& b) {
  if (b < 1) throw error(errc::dimension_mismatch, "quotient_mod needs b >= 1");
  const Index n = a.generator_count();
  IntMat rel = horizontal_concat(a.presentation(), IntMat(b * int_identity(n)));
  return FGAbelianGroup::cokernel(rel);
}

IntMat two_term_resolution(const FGAbelianGroup& a) {
  const Index d = a.free_rank();
  const Index l = static_cast<Index>(a.torsion().size());
  IntMat q = IntMat::Zero(d + l, l);
  for (Index j = 0; j < l; ++j) q(d + j, j) = a.torsion()[static_cast<size_t>(j)];
  return q;
}

IntMat hom_image_lattice(const GroupHom& h) {
  return horizontal_concat(h.matrix, h.target.presentation());
}

IntMat hom_kernel_lattice(const GroupHom& h) {
  // x with h(x) in the relation lattice of the target: project the kernel of
  // [matrix | target relations] onto the source coordinates.
  const Index gs = h.source.generator_count();
  IntMat combined = horizontal_concat(h.matrix, h.target.presentation());
  IntMat ker = kernel(combined);
  IntMat top = ker.topRows(gs);
  HermiteForm f = hermite_form(top);
  IntMat basis = f.H.leftCols(f.rank());
  // the subgroup lattice always contains the source relations
  return horizontal_concat(basis, h.source.presentation());
}

FGAbelianGroup hom_cokernel(const GroupHom& h) {
  return FGAbelianGroup::cokernel(hom_image_lattice(h));
}

bool hom_injective(const GroupHom& h) {
  IntMat ker = hom_kernel_lattice(h);
  HermiteForm src = hermite_form(h.source.presentation());
  for (Index j = 0; j < ker.cols(); ++j)
    if (!lattice_contains(src, IntVec(ker.col(j)))) return false;
  return true;
}

bool hom_surjective(const GroupHom& h) {
  return hom_cokernel(h).is_trivial();
}

bool hom_is_isomorphism(const GroupHom& h) {
  return hom_well_defined(h) && hom_injective(h) && hom_surjective(h);
}

ReducedComplex reduce_complex(const TwoTermComplex& c) {
  const GroupHom& h = c.phi;
  if (!hom_well_defined(h))
    throw error(errc::dimension_mismatch, "complex map is not well defined");
  // kernel subgroup K/col(R0) with K the preimage lattice of the target relations
  const Index gs = h.source.generator_count();
  IntMat combined = horizontal_concat(h.matrix, h.target.presentation());
  IntMat ker = kernel(combined);
  IntMat top = ker.topRows(gs);
  HermiteForm kf = hermite_form(top);
  IntMat kbasis = kf.H.leftCols(kf.rank());

  const IntMat& rel = h.source.presentation();
  IntMat coords(kf.rank(), rel.cols());
  for (Index j = 0; j < rel.cols(); ++j) {
    auto sol = lattice_solve(kbasis, IntVec(rel.col(j)));
    if (!sol)
      throw error(errc::dimension_mismatch, "source relations escape the kernel lattice");
    coords.col(j) = *sol;
  }
  FGAbelianGroup ker_group = FGAbelianGroup::cokernel(coords);
  if (!ker_group.torsion().empty())
    throw error(errc::kernel_not_free, "torsion of the source meets ker phi");

  ReducedComplex out;
  out.kernel_rank = ker_group.free_rank();
  out.cokernel = hom_cokernel(h);
  return out;
}

DMTorusForm dm_torus_form(const TwoTermComplex& c) {
  ReducedComplex r;
  try {
    r = reduce_complex(c);
  } catch (const error& e) {
    if (e.code() == errc::kernel_not_free)
      throw error(errc::not_dm_torus, "kernel of phi is not free");
    throw;
  }
  if (!r.cokernel.is_finite())
    throw error(errc::not_dm_torus, "coker phi is infinite");
  return DMTorusForm{r.kernel_rank, r.cokernel.torsion()};
}

namespace {
bool mats_equal(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}
}  // namespace

FGAbelianGroup pushout(const GroupHom& f, const GroupHom& g) {
  if (f.source.generator_count() != g.source.generator_count() ||
      !mats_equal(f.source.presentation(), g.source.presentation()))
    throw error(errc::dimension_mismatch, "pushout legs must share their source");
  const Index nf = f.target.generator_count();
  const Index ng = g.target.generator_count();
  const Index s = f.source.generator_count();
  IntMat graph(nf + ng, s);
  graph.topRows(nf) = f.matrix;
  graph.bottomRows(ng) = -g.matrix;
  IntMat relf = IntMat::Zero(nf + ng, f.target.presentation().cols());
  relf.topRows(nf) = f.target.presentation();
  IntMat relg = IntMat::Zero(nf + ng, g.target.presentation().cols());
  relg.bottomRows(ng) = g.target.presentation();
  return FGAbelianGroup::cokernel(horizontal_concat(horizontal_concat(graph, relf), relg));
}

}  // namespace stacky

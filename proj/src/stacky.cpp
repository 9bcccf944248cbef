#include "stackyfan/stacky.hpp"

#include <string>

namespace stacky {

IntMat StackyFan::beta_columns() const {
  return vertical_concat(beta_free, beta_torsion);
}

StackyFan make_stacky_fan(Index d, const std::vector<Int>& torsion_orders,
                          const IntMat& beta, const std::vector<std::vector<int>>& max_cones) {
  const Index l = static_cast<Index>(torsion_orders.size());
  const Index n = beta.cols();
  for (const Int& b : torsion_orders)
    if (b < 2) throw error(errc::invalid_torsion_order, "torsion orders must be >= 2");
  if (beta.rows() != d + l && n > 0)
    throw error(errc::dimension_mismatch, "beta columns must have d + l entries");
  if (d == 0 && n > 0)
    throw error(errc::zero_free_part, "a beta column in a rank-0 lattice cannot lie on a ray");
  if (d > 0 && n == 0)
    throw error(errc::rays_do_not_span, "no rays cannot span a rank-" + std::to_string(d) +
                                            " lattice");

  StackyFan sf;
  sf.free_rank = d;
  sf.torsion_orders = torsion_orders;
  sf.beta_free = n > 0 ? IntMat(beta.topRows(d)) : IntMat(d, 0);
  sf.beta_torsion = IntMat(l, n);
  for (Index j = 0; j < l; ++j)
    for (Index i = 0; i < n; ++i)
      sf.beta_torsion(j, i) = mod_pos(beta(d + j, i), torsion_orders[static_cast<size_t>(j)]);

  std::vector<IntVec> rays;
  for (Index i = 0; i < n; ++i) {
    IntVec col = sf.beta_free.col(i);
    if (content(col) == 0)
      throw error(errc::zero_free_part,
                  "beta column " + std::to_string(i) + " has zero free part");
    rays.push_back(col);
  }
  sf.fan = make_fan(d, rays, max_cones);
  if (d > 0 && lattice_rank(sf.fan.ray_matrix()) != d)
    throw error(errc::rays_do_not_span, "rays span a proper sublattice; see torus_split");
  return sf;
}

std::vector<Int> multiplicities(const StackyFan& sf) {
  std::vector<Int> a;
  for (Index i = 0; i < sf.ray_count(); ++i) a.push_back(content(sf.beta_free.col(i)));
  return a;
}

StackyFan rigidify(const StackyFan& sf) {
  StackyFan out = sf;
  out.torsion_orders.clear();
  out.beta_torsion = IntMat(0, sf.ray_count());
  return out;
}

StackyFan canonicalize(const StackyFan& sf) {
  StackyFan out = rigidify(sf);
  out.beta_free = out.fan.ray_matrix();
  return out;
}

bool is_canonical(const StackyFan& sf) {
  if (!sf.is_orbifold()) return false;
  for (const Int& a : multiplicities(sf))
    if (a != 1) return false;
  return true;
}

namespace {

// [B Q] : Z^(n+l) -> Z^(d+l); B = lifted beta, Q = [0; diag(b)].
IntMat bq_matrix(const StackyFan& sf, const IntMat& lift_shifts) {
  const Index d = sf.free_rank;
  const Index l = sf.torsion_count();
  const Index n = sf.ray_count();
  IntMat bq = IntMat::Zero(d + l, n + l);
  if (n > 0) bq.block(0, 0, d, n) = sf.beta_free;
  for (Index j = 0; j < l; ++j) {
    const Int& b = sf.torsion_orders[static_cast<size_t>(j)];
    for (Index i = 0; i < n; ++i)
      bq(d + j, i) = sf.beta_torsion(j, i) + b * lift_shifts(j, i);
    bq(d + j, n + j) = b;
  }
  return bq;
}

PicardData dg_from_bq(const IntMat& bq, Index n) {
  PicardData out;
  out.pic = FGAbelianGroup::cokernel(IntMat(bq.transpose()));
  for (Index i = 0; i < n; ++i)
    out.divisor_classes.push_back(out.pic.class_of(unit_vector(bq.cols(), i)));
  return out;
}

}  // namespace

PicardData dg_group(const StackyFan& sf) {
  IntMat zero_shifts = IntMat::Zero(sf.torsion_count(), sf.ray_count());
  return dg_from_bq(bq_matrix(sf, zero_shifts), sf.ray_count());
}

PicardData dg_group_with_lift(const StackyFan& sf, const IntMat& lift_shifts) {
  return dg_from_bq(bq_matrix(sf, lift_shifts), sf.ray_count());
}

QuotientPresentation quotient_presentation(const StackyFan& sf) {
  PicardData pd = dg_group(sf);
  QuotientPresentation qp;
  qp.character_group = pd.pic;
  qp.action_weights = pd.divisor_classes;
  qp.cox_patterns = cox_patterns(sf.fan);
  return qp;
}

DMTorus dm_torus(const StackyFan& sf) {
  const Index l = sf.torsion_count();
  IntMat diag = IntMat::Zero(l, l);
  for (Index j = 0; j < l; ++j) diag(j, j) = sf.torsion_orders[static_cast<size_t>(j)];
  FGAbelianGroup tor = FGAbelianGroup::cokernel(diag);
  return DMTorus{sf.free_rank, tor.torsion()};
}

bool SequenceReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

void add_check(SequenceReport& r, const std::string& name, bool pass,
               const std::string& detail = "") {
  r.checks.push_back(SequenceCheck{name, pass, detail});
}

// ker of the composite Z^g -> middle -> quotient, as a lattice in Z^g.
IntMat kernel_lattice_of(const IntMat& matrix, const FGAbelianGroup& target) {
  GroupHom h{FGAbelianGroup::free_group(matrix.cols()), target, matrix};
  return hom_kernel_lattice(h);
}

}  // namespace

SequenceReport verify_pic_sequences(const StackyFan& sf) {
  SequenceReport report;
  const Index n = sf.ray_count();
  const Index l = sf.torsion_count();
  const std::vector<Int> a = multiplicities(sf);

  StackyFan rig = rigidify(sf);
  StackyFan can = canonicalize(sf);
  FGAbelianGroup pic = dg_group(sf).pic;
  FGAbelianGroup pic_rig = dg_group(rig).pic;
  FGAbelianGroup pic_can = dg_group(can).pic;

  // --- row 0 -> Pic(can) -> Pic(rig) -> sum Z/a_i -> 0 ------------------
  IntMat diag_a = IntMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) diag_a(i, i) = a[static_cast<size_t>(i)];
  FGAbelianGroup sum_za = FGAbelianGroup::cokernel(diag_a);

  GroupHom f_star{pic_can, pic_rig, diag_a};
  add_check(report, "orbifold_row_well_defined", hom_well_defined(f_star));
  add_check(report, "orbifold_row_injective", hom_injective(f_star));

  GroupHom q_a{pic_rig, sum_za, int_identity(n)};
  add_check(report, "orbifold_row_quotient_well_defined", hom_well_defined(q_a));
  add_check(report, "orbifold_row_surjective", hom_surjective(q_a));
  add_check(report, "orbifold_row_exact_middle",
            lattice_equal(hom_image_lattice(f_star), kernel_lattice_of(q_a.matrix, sum_za)));

  FGAbelianGroup coker_f = hom_cokernel(f_star);
  Int prod_a = 1;
  for (const Int& ai : a) prod_a *= ai;
  bool index_a_ok = coker_f.is_finite() && coker_f.order() == prod_a;
  report.orbifold_index = coker_f.is_finite() ? coker_f.order() : Int(0);
  add_check(report, "orbifold_row_index", index_a_ok,
            "index " + to_string(report.orbifold_index) + ", expected " + to_string(prod_a));

  {
    // right square of the cocartesian diagram: pushout(x a, divisor classes)
    FGAbelianGroup zn = FGAbelianGroup::free_group(n);
    GroupHom top{zn, FGAbelianGroup::free_group(n), diag_a};
    GroupHom left{zn, pic_can, int_identity(n)};
    FGAbelianGroup po = pushout(top, left);
    // universal map on generators: (u, w) -> u + diag(a) w, into Pic(rig)
    IntMat univ = horizontal_concat(int_identity(n), diag_a);
    GroupHom to_rig{po, pic_rig, univ};
    add_check(report, "orbifold_pushout_square",
              po.same_canonical_form(pic_rig) && hom_is_isomorphism(to_rig));
  }

  // --- row 0 -> Pic(rig) -> Pic -> sum Z/b_j -> 0 -----------------------
  IntMat diag_b = IntMat::Zero(l, l);
  for (Index j = 0; j < l; ++j) diag_b(j, j) = sf.torsion_orders[static_cast<size_t>(j)];
  FGAbelianGroup sum_zb = FGAbelianGroup::cokernel(diag_b);

  IntMat incl = IntMat::Zero(n + l, n);  // extend duals by zero
  incl.topRows(n) = int_identity(n);
  GroupHom r_star{pic_rig, pic, incl};
  add_check(report, "gerbe_row_well_defined", hom_well_defined(r_star));
  add_check(report, "gerbe_row_injective", hom_injective(r_star));

  IntMat qb = IntMat::Zero(l, n + l);  // class(x, z) -> -z mod b
  for (Index j = 0; j < l; ++j) qb(j, n + j) = -1;
  GroupHom q_b{pic, sum_zb, qb};
  add_check(report, "gerbe_row_quotient_well_defined", hom_well_defined(q_b));
  add_check(report, "gerbe_row_surjective", hom_surjective(q_b));
  add_check(report, "gerbe_row_exact_middle",
            lattice_equal(hom_image_lattice(r_star), kernel_lattice_of(qb, sum_zb)));

  FGAbelianGroup coker_r = hom_cokernel(r_star);
  Int prod_b = 1;
  for (const Int& b : sf.torsion_orders) prod_b *= b;
  bool index_b_ok = coker_r.is_finite() && coker_r.order() == prod_b;
  report.gerbe_index = coker_r.is_finite() ? coker_r.order() : Int(0);
  add_check(report, "gerbe_row_index", index_b_ok,
            "index " + to_string(report.gerbe_index) + ", expected " + to_string(prod_b));

  {
    // left square: pushout(x b, e_j -> L_j) against Pic, where L_j is the
    // residue-lift class sum_i t_ji O(D_i) in Pic(rig)
    FGAbelianGroup zl = FGAbelianGroup::free_group(l);
    GroupHom top{zl, FGAbelianGroup::free_group(l), diag_b};
    IntMat lmat(n, l);
    for (Index j = 0; j < l; ++j) lmat.col(j) = sf.beta_torsion.row(j).transpose();
    GroupHom left{zl, pic_rig, lmat};
    FGAbelianGroup po = pushout(top, left);
    // universal map: top-right Z^l lands on the root generators -e_(n+j)
    IntMat univ = IntMat::Zero(n + l, l + n);
    for (Index j = 0; j < l; ++j) univ(n + j, j) = -1;
    univ.block(0, l, n, n) = int_identity(n);
    GroupHom to_pic{po, pic, univ};
    add_check(report, "gerbe_pushout_square",
              po.same_canonical_form(pic) && hom_is_isomorphism(to_pic));
  }

  return report;
}

}  // namespace stacky

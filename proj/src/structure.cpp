#include "stackyfan/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace stacky {

namespace {

bool vec_equal(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string join_ints(const std::vector<Int>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

StackyFan rebuild(Index d, const std::vector<Int>& torsion, const IntMat& columns,
                  const std::vector<std::vector<int>>& cones) {
  return make_stacky_fan(d, torsion, columns, cones);
}

}  // namespace

StackyFan root_divisors(const StackyFan& sf, const std::vector<Int>& orders) {
  if (!sf.is_orbifold())
    throw error(errc::has_gerbe, "roots of divisors act on orbifold presentations");
  if (static_cast<Index>(orders.size()) != sf.ray_count())
    throw error(errc::dimension_mismatch, "one root order per ray required");
  for (const Int& a : orders)
    if (a < 1) throw error(errc::dimension_mismatch, "root orders must be positive");
  IntMat columns = sf.beta_free;
  for (Index i = 0; i < columns.cols(); ++i)
    columns.col(i) *= orders[static_cast<size_t>(i)];
  return rebuild(sf.free_rank, {}, columns, sf.fan.max_cones);
}

StackyFan root_line_bundle(const StackyFan& sf, const IntVec& coeffs, const Int& order) {
  if (order < 2) throw error(errc::invalid_torsion_order, "root order must be >= 2");
  if (coeffs.size() != sf.ray_count())
    throw error(errc::dimension_mismatch, "one coefficient per ray required");
  std::vector<Int> torsion = sf.torsion_orders;
  torsion.push_back(order);
  IntMat columns(sf.free_rank + sf.torsion_count() + 1, sf.ray_count());
  columns.topRows(sf.free_rank + sf.torsion_count()) = sf.beta_columns();
  for (Index i = 0; i < sf.ray_count(); ++i)
    columns(sf.free_rank + sf.torsion_count(), i) = mod_pos(coeffs(i), order);
  return rebuild(sf.free_rank, torsion, columns, sf.fan.max_cones);
}

Decomposition decompose(const StackyFan& sf) {
  Decomposition dec;
  dec.canonical = canonicalize(sf);
  dec.multiplicities = multiplicities(sf);
  StackyFan rig = rigidify(sf);
  PicardData pr = dg_group(rig);
  const Index n = sf.ray_count();
  for (Index j = 0; j < sf.torsion_count(); ++j) {
    const Int& b = sf.torsion_orders[static_cast<size_t>(j)];
    // L_j = sum_i t_ji O(D_i) on the generator level of Pic(rig)
    IntVec l_gen = IntVec::Zero(n);
    for (Index i = 0; i < n; ++i) l_gen(i) = sf.beta_torsion(j, i);
    FGAbelianGroup quot = quotient_mod(pr.pic, b);
    dec.gerbe.push_back(GerbeEntry{b, quot.class_of(l_gen)});
  }
  return dec;
}

StackyFan recompose(const Decomposition& dec) {
  if (!is_canonical(dec.canonical))
    throw error(errc::dimension_mismatch, "decomposition base must be canonical");
  StackyFan sf = root_divisors(dec.canonical, dec.multiplicities);
  PicardData pr = dg_group(sf);  // Pic of the rigidification stays fixed below
  for (const GerbeEntry& entry : dec.gerbe) {
    FGAbelianGroup quot = quotient_mod(pr.pic, entry.order);
    if (entry.cls.size() != static_cast<Index>(quot.torsion().size()))
      throw error(errc::dimension_mismatch, "gerbe class has wrong length");
    IntVec canonical = IntVec::Zero(quot.canonical_coordinates());
    for (Index i = 0; i < entry.cls.size(); ++i)
      canonical(quot.free_rank() + i) = entry.cls(i);
    // generator-level representative; generators of Pic(rig) are O(D_i)
    IntVec coeffs = quot.representative(canonical);
    sf = root_line_bundle(sf, coeffs, entry.order);
  }
  return sf;
}

namespace {

// Ray alignments: permutations pi with rays2[pi[i]] = rays1[i] mapping the
// cone set of sf1 onto the cone set of sf2.
std::vector<std::vector<int>> ray_alignments(const StackyFan& sf1, const StackyFan& sf2) {
  std::vector<std::vector<int>> out;
  const Index n = sf1.ray_count();
  if (n != sf2.ray_count()) return out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::vector<int>> candidates(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (vec_equal(sf1.fan.rays[static_cast<size_t>(i)], sf2.fan.rays[static_cast<size_t>(j)]))
        candidates[static_cast<size_t>(i)].push_back(static_cast<int>(j));

  std::set<std::vector<int>> cones2;
  for (auto c : sf2.fan.max_cones) {
    std::sort(c.begin(), c.end());
    cones2.insert(c);
  }

  std::vector<int> perm(static_cast<size_t>(n), -1);
  std::vector<bool> taken(static_cast<size_t>(n), false);
  auto cones_match = [&]() {
    std::set<std::vector<int>> mapped;
    for (const auto& c : sf1.fan.max_cones) {
      std::vector<int> m;
      for (int i : c) m.push_back(perm[static_cast<size_t>(i)]);
      std::sort(m.begin(), m.end());
      mapped.insert(m);
    }
    return mapped == cones2;
  };
  std::function<void(Index)> rec = [&](Index i) {
    if (i == n) {
      if (cones_match()) out.push_back(perm);
      return;
    }
    for (int j : candidates[static_cast<size_t>(i)]) {
      if (taken[static_cast<size_t>(j)]) continue;
      perm[static_cast<size_t>(i)] = j;
      taken[static_cast<size_t>(j)] = true;
      rec(i + 1);
      taken[static_cast<size_t>(j)] = false;
    }
  };
  rec(0);
  return out;
}

StackyFan permute_rays(const StackyFan& sf, const std::vector<int>& perm_inverse_of) {
  // column i of the result is column perm[i] of sf, so that the result's
  // rays match the reference ordering
  const Index n = sf.ray_count();
  IntMat source_columns = sf.beta_columns();
  IntMat columns(sf.free_rank + sf.torsion_count(), n);
  for (Index i = 0; i < n; ++i)
    columns.col(i) = source_columns.col(perm_inverse_of[static_cast<size_t>(i)]);
  std::vector<std::vector<int>> cones;
  std::vector<int> inv(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) inv[static_cast<size_t>(perm_inverse_of[static_cast<size_t>(i)])] =
      static_cast<int>(i);
  for (const auto& c : sf.fan.max_cones) {
    std::vector<int> m;
    for (int j : c) m.push_back(inv[static_cast<size_t>(j)]);
    std::sort(m.begin(), m.end());
    cones.push_back(m);
  }
  return make_stacky_fan(sf.free_rank, sf.torsion_orders, columns, cones);
}

std::multiset<std::string> class_multiset(const std::vector<GerbeEntry>& gerbe, const Int& order) {
  std::multiset<std::string> out;
  for (const auto& e : gerbe)
    if (e.order == order) out.insert(to_string(e.cls));
  return out;
}

std::string torsion_name(const std::vector<Int>& t) {
  return t.empty() ? std::string("()") : join_ints(t);
}

}  // namespace

Verdict compare(const StackyFan& sf1, const StackyFan& sf2) {
  if (sf1.free_rank != sf2.free_rank)
    throw error(errc::incomparable_fans, "different fan ranks");
  std::vector<std::vector<int>> alignments = ray_alignments(sf1, sf2);
  if (alignments.empty())
    throw error(errc::incomparable_fans, "no ray alignment matches the coarse fans");

  Verdict v;
  DMTorus t1 = dm_torus(sf1), t2 = dm_torus(sf2);
  if (t1.gerbe_factors != t2.gerbe_factors) {
    v.kind = Verdict::Kind::Distinct;
    v.invariant = "generic_stabilizer";
    v.lhs = torsion_name(t1.gerbe_factors);
    v.rhs = torsion_name(t2.gerbe_factors);
    return v;
  }
  FGAbelianGroup p1 = dg_group(sf1).pic, p2 = dg_group(sf2).pic;
  if (!p1.same_canonical_form(p2)) {
    v.kind = Verdict::Kind::Distinct;
    v.invariant = "picard_group";
    v.lhs = p1.to_string();
    v.rhs = p2.to_string();
    return v;
  }
  std::vector<Int> a1 = multiplicities(sf1), a2 = multiplicities(sf2);
  {
    std::multiset<Int> m1(a1.begin(), a1.end()), m2(a2.begin(), a2.end());
    if (m1 != m2) {
      v.kind = Verdict::Kind::Distinct;
      v.invariant = "multiplicities_multiset";
      v.lhs = join_ints(a1);
      v.rhs = join_ints(a2);
      return v;
    }
  }

  std::multiset<Int> orders1(sf1.torsion_orders.begin(), sf1.torsion_orders.end());
  std::multiset<Int> orders2(sf2.torsion_orders.begin(), sf2.torsion_orders.end());
  if (orders1 != orders2) {
    // same stabilizer group in different cyclic decompositions; the classes
    // are not comparable componentwise
    v.kind = Verdict::Kind::Inconclusive;
    v.reason = "torsion decompositions differ (" + torsion_name(sf1.torsion_orders) + " vs " +
               torsion_name(sf2.torsion_orders) + "); no normal form across decompositions";
    return v;
  }

  Decomposition dec1 = decompose(sf1);
  bool some_multiplicity_match = false;
  for (const auto& perm : alignments) {
    bool mult_ok = true;
    for (Index i = 0; i < sf1.ray_count(); ++i)
      if (a1[static_cast<size_t>(i)] != a2[static_cast<size_t>(perm[static_cast<size_t>(i)])])
        mult_ok = false;
    if (!mult_ok) continue;
    some_multiplicity_match = true;
    StackyFan aligned = permute_rays(sf2, perm);
    Decomposition dec2 = decompose(aligned);
    bool classes_ok = true;
    std::set<Int> seen;
    for (const auto& e : dec1.gerbe) {
      if (!seen.insert(e.order).second) continue;
      if (class_multiset(dec1.gerbe, e.order) != class_multiset(dec2.gerbe, e.order))
        classes_ok = false;
    }
    if (classes_ok) {
      v.kind = Verdict::Kind::Isomorphic;
      v.ray_permutation = perm;
      return v;
    }
  }
  v.kind = Verdict::Kind::Inconclusive;
  v.reason = some_multiplicity_match
                 ? "gerbe classes differ under every fan-preserving ray alignment; lattice "
                   "automorphisms of N are not searched"
                 : "multiplicities differ under every fan-preserving ray alignment; lattice "
                   "automorphisms of N are not searched";
  return v;
}

WpsRecognition recognize_wps(const StackyFan& sf) {
  WpsRecognition out;
  if (!is_complete(sf.fan)) {
    out.reason = "fan is not complete";
    return out;
  }
  PicardData pd = dg_group(sf);
  const FGAbelianGroup& pic = pd.pic;
  const bool cyclic = (pic.free_rank() == 1 && pic.torsion().empty()) ||
                      (pic.free_rank() == 0 && pic.torsion().size() <= 1);
  if (!cyclic) {
    out.reason = "Picard group " + pic.to_string() + " is not cyclic";
    return out;
  }
  if (pic.free_rank() == 0) {
    // complete with finite Picard group happens only for the point fan
    if (!sf.is_point()) {
      out.reason = "finite Picard group on a non-trivial complete fan";
      return out;
    }
    out.is_wps = true;
    out.weights = {pic.torsion().empty() ? Int(1) : pic.torsion().front()};
    return out;
  }
  std::vector<Int> w;
  int sign = 0;
  for (const IntVec& c : pd.divisor_classes) {
    const Int& x = c(0);
    if (x == 0) {
      out.reason = "mixed signs in the weight vector";
      return out;
    }
    int s = x > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) {
      out.reason = "mixed signs in the weight vector";
      return out;
    }
    w.push_back(abs_int(x));
  }
  out.is_wps = true;
  out.weights = w;
  return out;
}

StackyFan wps_stacky_fan(const std::vector<Int>& weights) {
  const Index n1 = static_cast<Index>(weights.size());
  if (n1 < 2) throw error(errc::dimension_mismatch, "need at least two weights");
  for (const Int& w : weights)
    if (w < 1) throw error(errc::dimension_mismatch, "weights must be positive");
  IntVec wcol(n1);
  for (Index i = 0; i < n1; ++i) wcol(i) = weights[static_cast<size_t>(i)];
  FGAbelianGroup n_group = FGAbelianGroup::cokernel(IntMat(wcol));
  // N = Z^n (+ Z/gcd(w)); beta(e_i) = class of e_i under the projection
  std::vector<Int> torsion = n_group.torsion();
  IntMat columns(n_group.canonical_coordinates(), n1);
  for (Index i = 0; i < n1; ++i) columns.col(i) = n_group.class_of(unit_vector(n1, i));
  std::vector<std::vector<int>> cones;
  for (int drop = 0; drop < n1; ++drop) {
    std::vector<int> cone;
    for (int i = 0; i < n1; ++i)
      if (i != drop) cone.push_back(i);
    cones.push_back(cone);
  }
  return make_stacky_fan(n_group.free_rank(), torsion, columns, cones);
}

StackyFan line_stacky_fan(const Int& a1, const Int& a2) {
  if (a1 < 1 || a2 < 1) throw error(errc::dimension_mismatch, "orders must be positive");
  IntMat columns(1, 2);
  columns(0, 0) = a1;
  columns(0, 1) = -a2;
  return make_stacky_fan(1, {}, columns, {{0}, {1}});
}

ToricLineReport classify_toric_line(const StackyFan& sf) {
  if (sf.free_rank != 1 || !sf.is_orbifold() || !is_complete(sf.fan) || sf.ray_count() != 2)
    throw error(errc::not_a_line, "expected a complete one-dimensional orbifold");
  ToricLineReport r;
  r.multiplicities = multiplicities(sf);
  const Int &a1 = r.multiplicities[0], &a2 = r.multiplicities[1];
  r.gcd = gcd_int(a1, a2);
  r.lcm = lcm_int(a1, a2);
  r.pic = dg_group(sf).pic;
  Int w1 = r.lcm / a1, w2 = r.lcm / a2;
  r.weights = {w1, w2};
  Int x, y;
  ext_gcd(w1, w2, x, y);  // x w1 + y w2 = 1
  // minimal non-negative k2: k1 w1 + k2 w2 = 1 <=> k1/a1 + k2/a2 = 1/m
  Int k2 = mod_pos(y, w1);
  Int k1 = (Int(1) - k2 * w2) / w1;
  r.k1 = k1;
  r.k2 = k2;
  return r;
}

TorusSplit torus_split(Index d, const std::vector<Int>& torsion_orders, const IntMat& beta,
                       const std::vector<std::vector<int>>& max_cones) {
  const Index l = static_cast<Index>(torsion_orders.size());
  const Index n = beta.cols();
  TorusSplit out;
  if (n == 0) {
    out.core = make_stacky_fan(0, {}, IntMat(0, 0), {});
    out.torus_rank = d;
    IntMat diag = IntMat::Zero(l, l);
    for (Index j = 0; j < l; ++j) diag(j, j) = torsion_orders[static_cast<size_t>(j)];
    out.gerbe_factors = FGAbelianGroup::cokernel(diag).torsion();
    return out;
  }
  IntMat free_block = beta.topRows(d);
  IntMat rays(d, n);
  for (Index i = 0; i < n; ++i) {
    IntVec col = free_block.col(i);
    Int g = content(col);
    if (g == 0)
      throw error(errc::zero_free_part, "beta column " + std::to_string(i) + " has zero free part");
    for (Index k = 0; k < d; ++k) rays(k, i) = col(k) / g;
  }
  SmithForm f = smith_form(rays);
  const Index r = f.rank();
  if (r == d) {
    out.core = make_stacky_fan(d, torsion_orders, beta, max_cones);
    out.torus_rank = 0;
    return out;
  }
  IntMat projection = f.U.topRows(r);
  IntMat columns(r + l, n);
  columns.topRows(r) = projection * free_block;
  columns.bottomRows(l) = beta.bottomRows(l);
  out.core = make_stacky_fan(r, torsion_orders, columns, max_cones);
  out.torus_rank = d - r;
  return out;
}

}  // namespace stacky

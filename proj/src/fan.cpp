#include "stackyfan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace stacky {

IntMat Fan::ray_matrix() const {
  IntMat m(rank, ray_count());
  for (Index j = 0; j < ray_count(); ++j) m.col(j) = rays[static_cast<size_t>(j)];
  return m;
}

bool fm_feasible(std::vector<LinearConstraint> cs, int num_vars) {
  for (int var = 0; var < num_vars; ++var) {
    std::vector<LinearConstraint> keep, pos, neg;
    for (auto& c : cs) {
      const Rat& a = c.coeffs[static_cast<size_t>(var)];
      if (a == 0)
        keep.push_back(std::move(c));
      else if (a > 0)
        pos.push_back(std::move(c));
      else
        neg.push_back(std::move(c));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        // alpha u_v + P <= c_p (alpha > 0), -beta u_v + N <= c_n (beta > 0)
        Rat alpha = p.coeffs[static_cast<size_t>(var)];
        Rat beta = -n.coeffs[static_cast<size_t>(var)];
        LinearConstraint combined;
        combined.coeffs.resize(static_cast<size_t>(num_vars), Rat(0));
        for (int k = 0; k < num_vars; ++k) {
          if (k == var) continue;
          combined.coeffs[static_cast<size_t>(k)] =
              beta * p.coeffs[static_cast<size_t>(k)] + alpha * n.coeffs[static_cast<size_t>(k)];
        }
        combined.bound = beta * p.bound + alpha * n.bound;
        keep.push_back(std::move(combined));
      }
    }
    cs = std::move(keep);
  }
  for (const auto& c : cs)
    if (c.bound < 0) return false;
  return true;
}

namespace {

IntVec primitivize(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw error(errc::invalid_ray, "zero ray vector");
  IntVec w = v;
  for (Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

bool vec_equal(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::string cone_name(const std::vector<int>& cone) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < cone.size(); ++i) {
    if (i) os << ",";
    os << cone[i];
  }
  os << "}";
  return os.str();
}

// Existence of u with <u,v>=0 on the common rays, >=1 on sigma's own rays and
// <=-1 on tau's own rays; such u exists iff the cones meet in the common face.
bool cones_meet_in_common_face(const Fan& f, const std::vector<int>& sigma,
                               const std::vector<int>& tau) {
  const int d = static_cast<int>(f.rank);
  std::vector<LinearConstraint> cs;
  auto push = [&](const IntVec& v, int sign, const Rat& bound) {
    LinearConstraint c;
    c.coeffs.resize(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      c.coeffs[static_cast<size_t>(k)] = int_to_rat(Int(sign) * v(k));
    c.bound = bound;
    cs.push_back(std::move(c));
  };
  std::set<int> in_tau(tau.begin(), tau.end());
  std::set<int> in_sigma(sigma.begin(), sigma.end());
  for (int i : sigma) {
    const IntVec& v = f.rays[static_cast<size_t>(i)];
    if (in_tau.count(i)) {
      push(v, 1, Rat(0));   //  <u,v> <= 0
      push(v, -1, Rat(0));  // -<u,v> <= 0
    } else {
      push(v, -1, Rat(-1));  // <u,v> >= 1
    }
  }
  for (int j : tau) {
    if (in_sigma.count(j)) continue;
    push(f.rays[static_cast<size_t>(j)], 1, Rat(-1));  // <u,v> <= -1
  }
  return fm_feasible(std::move(cs), d);
}

}  // namespace

Fan make_fan(Index rank, const std::vector<IntVec>& raw_rays,
             const std::vector<std::vector<int>>& raw_cones) {
  if (rank < 0) throw error(errc::invalid_ray, "negative rank");
  Fan f;
  f.rank = rank;
  for (const IntVec& r : raw_rays) {
    if (r.size() != rank) throw error(errc::invalid_ray, "ray dimension mismatch");
    f.rays.push_back(primitivize(r));
  }
  const Index n = f.ray_count();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (vec_equal(f.rays[static_cast<size_t>(i)], f.rays[static_cast<size_t>(j)]))
        throw error(errc::duplicate_ray,
                    "rays " + std::to_string(i) + " and " + std::to_string(j) +
                        " coincide after primitivization");

  if (rank == 0) {
    if (n != 0) throw error(errc::invalid_ray, "rank-0 fan cannot have rays");
    f.max_cones = {{}};
    return f;
  }

  std::vector<bool> used(static_cast<size_t>(n), false);
  for (const auto& raw : raw_cones) {
    std::vector<int> cone = raw;
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    for (int i : cone) {
      if (i < 0 || i >= n) throw error(errc::not_a_fan, "cone index out of range");
      used[static_cast<size_t>(i)] = true;
    }
    if (std::find(f.max_cones.begin(), f.max_cones.end(), cone) == f.max_cones.end())
      f.max_cones.push_back(std::move(cone));
  }
  for (Index i = 0; i < n; ++i)
    if (!used[static_cast<size_t>(i)])
      throw error(errc::unused_ray, "ray " + std::to_string(i) + " lies in no maximal cone");

  for (const auto& cone : f.max_cones) {
    IntMat m(rank, static_cast<Index>(cone.size()));
    for (size_t k = 0; k < cone.size(); ++k)
      m.col(static_cast<Index>(k)) = f.rays[static_cast<size_t>(cone[k])];
    if (lattice_rank(m) != static_cast<Index>(cone.size()))
      throw error(errc::not_simplicial, "cone " + cone_name(cone) + " has dependent rays");
  }

  for (size_t a = 0; a < f.max_cones.size(); ++a) {
    for (size_t b = a + 1; b < f.max_cones.size(); ++b) {
      if (!cones_meet_in_common_face(f, f.max_cones[a], f.max_cones[b]))
        throw error(errc::not_a_fan, "cones " + cone_name(f.max_cones[a]) + " and " +
                                         cone_name(f.max_cones[b]) +
                                         " do not intersect in a common face");
    }
  }
  return f;
}

bool is_complete(const Fan& f) {
  if (f.max_cones.empty()) return false;
  if (f.rank == 0) return true;
  std::map<std::vector<int>, int> wall_count;
  for (const auto& cone : f.max_cones) {
    if (static_cast<Index>(cone.size()) != f.rank) return false;  // not pure
    for (size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> wall;
      for (size_t k = 0; k < cone.size(); ++k)
        if (k != drop) wall.push_back(cone[k]);
      ++wall_count[wall];
    }
  }
  for (const auto& [wall, count] : wall_count)
    if (count != 2) return false;
  return true;
}

bool is_smooth(const Fan& f) {
  for (const auto& cone : f.max_cones) {
    IntMat m(f.rank, static_cast<Index>(cone.size()));
    for (size_t k = 0; k < cone.size(); ++k)
      m.col(static_cast<Index>(k)) = f.rays[static_cast<size_t>(cone[k])];
    for (const Int& d : smith_form(m).invariant_factors)
      if (d != 1) return false;
  }
  return true;
}

ClassGroup class_group(const Fan& f) {
  const Index n = f.ray_count();
  IntMat iota = f.ray_matrix().transpose();  // n x rank, row i = v_i
  if (lattice_rank(IntMat(f.ray_matrix())) != f.rank)
    throw error(errc::rays_do_not_span, "class group needs spanning rays; see span_defect");
  ClassGroup out;
  out.group = FGAbelianGroup::cokernel(iota);
  for (Index i = 0; i < n; ++i)
    out.divisor_classes.push_back(out.group.class_of(unit_vector(n, i)));
  return out;
}

std::vector<std::vector<int>> cox_patterns(const Fan& f) { return f.max_cones; }

SpanDefect span_defect(const Fan& f) {
  SmithForm sf = smith_form(f.ray_matrix());
  SpanDefect out;
  out.spanned_rank = sf.rank();
  out.complement_rank = f.rank - sf.rank();
  out.projection = sf.U.topRows(sf.rank());
  return out;
}

}  // namespace stacky

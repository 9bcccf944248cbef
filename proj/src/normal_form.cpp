#include "stackyfan/normal_form.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace stacky {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_simplicial: return "NotSimplicial";
    case errc::not_a_fan: return "NotAFan";
    case errc::duplicate_ray: return "DuplicateRay";
    case errc::invalid_ray: return "InvalidRay";
    case errc::unused_ray: return "UnusedRay";
    case errc::rays_do_not_span: return "RaysDoNotSpan";
    case errc::zero_free_part: return "ZeroFreePart";
    case errc::invalid_torsion_order: return "InvalidTorsionOrder";
    case errc::kernel_not_free: return "KernelNotFree";
    case errc::not_dm_torus: return "NotDMTorus";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::has_gerbe: return "HasGerbe";
    case errc::incomparable_fans: return "IncomparableFans";
    case errc::not_a_line: return "NotALine";
    case errc::bad_document: return "BadDocument";
  }
  return "UnknownError";
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

bool Int::fits_ll() const {
  static const backend_type lo = (std::numeric_limits<long long>::min)();
  static const backend_type hi = (std::numeric_limits<long long>::max)();
  return v_ >= lo && v_ <= hi;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.raw(); }

Rat int_to_rat(const Int& v) { return Rat(v.raw()); }

Int content(const IntVec& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd_int(g, v(i));
  return g;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i);
  }
  os << ")";
  return os.str();
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

namespace {

void swap_rows(IntMat& a, Index i, Index j) { a.row(i).swap(a.row(j)); }
void swap_cols(IntMat& a, Index i, Index j) { a.col(i).swap(a.col(j)); }

// Pivot of minimal |value| in d[t.., t..]; ties broken by lowest (row, col).
bool find_pivot(const IntMat& d, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best = 0;
  for (Index i = t; i < d.rows(); ++i) {
    for (Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int a = abs_int(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithForm smith_form(const IntMat& m) {
  const Index r = m.rows(), c = m.cols();
  SmithForm f;
  f.U = int_identity(r);
  f.V = int_identity(c);
  f.D = m;
  IntMat& D = f.D;

  Index t = 0;
  while (t < r && t < c) {
    Index pi = 0, pj = 0;
    if (!find_pivot(D, t, pi, pj)) break;
    if (pi != t) {
      swap_rows(D, t, pi);
      swap_rows(f.U, t, pi);
    }
    if (pj != t) {
      swap_cols(D, t, pj);
      swap_cols(f.V, t, pj);
    }
    for (;;) {
      // clear column t below the pivot
      for (Index i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        f.U.row(i) -= q * f.U.row(t);
        if (D(i, t) != 0) {  // remainder becomes the smaller pivot
          swap_rows(D, t, i);
          swap_rows(f.U, t, i);
        }
      }
      // clear row t right of the pivot
      bool row_dirty = false;
      for (Index j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        f.V.col(j) -= q * f.V.col(t);
        if (D(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(f.V, t, j);
          row_dirty = true;
        }
      }
      if (row_dirty) continue;
      bool col_clean = true;
      for (Index i = t + 1; i < r; ++i)
        if (D(i, t) != 0) col_clean = false;
      if (!col_clean) continue;
      // enforce the divisibility chain
      bool fixed = false;
      for (Index i = t + 1; i < r && !fixed; ++i) {
        for (Index j = t + 1; j < c && !fixed; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            D.row(t) += D.row(i);
            f.U.row(t) += f.U.row(i);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      f.U.row(t) = -f.U.row(t);
    }
    ++t;
  }
  for (Index i = 0; i < t; ++i) f.invariant_factors.push_back(D(i, i));
  return f;
}

HermiteForm hermite_form(const IntMat& m) {
  const Index r = m.rows(), c = m.cols();
  HermiteForm f;
  f.H = m;
  f.W = int_identity(c);
  IntMat& H = f.H;
  Index col = 0;
  for (Index row = 0; row < r && col < c; ++row) {
    // gcd-eliminate across columns [col..) on this row
    for (;;) {
      Index best = -1;
      for (Index j = col; j < c; ++j) {
        if (H(row, j) == 0) continue;
        if (best < 0 || abs_int(H(row, j)) < abs_int(H(row, best))) best = j;
      }
      if (best < 0) break;  // row is zero across the active block
      if (best != col) {
        swap_cols(H, col, best);
        swap_cols(f.W, col, best);
      }
      bool clean = true;
      for (Index j = col + 1; j < c; ++j) {
        if (H(row, j) == 0) continue;
        Int q = H(row, j) / H(row, col);
        H.col(j) -= q * H.col(col);
        f.W.col(j) -= q * f.W.col(col);
        if (H(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;  // no pivot in this row
    if (H(row, col) < 0) {
      H.col(col) = -H.col(col);
      f.W.col(col) = -f.W.col(col);
    }
    for (Index j = 0; j < col; ++j) {  // canonical residues left of the pivot
      Int q = floor_div(H(row, j), H(row, col));
      if (q != 0) {
        H.col(j) -= q * H.col(col);
        f.W.col(j) -= q * f.W.col(col);
      }
    }
    f.pivot_rows.push_back(row);
    ++col;
  }
  return f;
}

IntMat kernel(const IntMat& m) {
  HermiteForm f = hermite_form(m);
  const Index k = f.rank();
  return f.W.rightCols(m.cols() - k);
}

Index lattice_rank(const IntMat& gens) { return hermite_form(gens).rank(); }

namespace {
bool is_zero_vec(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}
}  // namespace

bool lattice_contains(const HermiteForm& hf, const IntVec& x) {
  IntVec y = x;
  for (Index i = 0; i < hf.rank(); ++i) {
    Index pr = hf.pivot_rows[static_cast<size_t>(i)];
    Int p = hf.H(pr, i);
    if (y(pr) % p != 0) return false;
    Int coef = y(pr) / p;
    if (coef != 0) y -= coef * hf.H.col(i);
  }
  return is_zero_vec(y);
}

bool lattice_contains(const IntMat& gens, const IntVec& x) {
  return lattice_contains(hermite_form(gens), x);
}

bool lattice_subset(const IntMat& a, const IntMat& b) {
  HermiteForm hb = hermite_form(b);
  for (Index j = 0; j < a.cols(); ++j)
    if (!lattice_contains(hb, a.col(j))) return false;
  return true;
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  return lattice_subset(a, b) && lattice_subset(b, a);
}

std::optional<IntVec> lattice_solve(const IntMat& gens, const IntVec& x) {
  HermiteForm f = hermite_form(gens);
  IntVec y = x;
  IntVec coefs = IntVec::Zero(f.rank());
  for (Index i = 0; i < f.rank(); ++i) {
    Index pr = f.pivot_rows[static_cast<size_t>(i)];
    Int p = f.H(pr, i);
    if (y(pr) % p != 0) return std::nullopt;
    coefs(i) = y(pr) / p;
    if (coefs(i) != 0) y -= coefs(i) * f.H.col(i);
  }
  if (!is_zero_vec(y)) return std::nullopt;
  return IntVec(f.W.leftCols(f.rank()) * coefs);
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  SmithForm f = smith_form(m);
  if (f.rank() != m.rows()) return false;
  for (const Int& d : f.invariant_factors)
    if (d != 1) return false;
  return true;
}

IntMat horizontal_concat(const IntMat& a, const IntMat& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  IntMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

IntMat vertical_concat(const IntMat& a, const IntMat& b) {
  if (a.cols() == 0 && a.rows() == 0) return b;
  if (b.cols() == 0 && b.rows() == 0) return a;
  IntMat r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

}  // namespace stacky

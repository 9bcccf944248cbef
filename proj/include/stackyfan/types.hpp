#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stacky {

/// Arbitrary-precision integer. A value wrapper around cpp_int with a closed
/// constructor set, so it behaves as a plain scalar inside Eigen expressions
/// (the raw multiprecision types advertise template constructors that break
/// Eigen's overload probing).
class Int {
 public:
  using backend_type = boost::multiprecision::cpp_int;

  Int() = default;
  Int(int x) : v_(x) {}
  Int(long x) : v_(x) {}
  Int(long long x) : v_(x) {}
  explicit Int(const std::string& s) : v_(s) {}
  explicit Int(backend_type v) : v_(std::move(v)) {}

  const backend_type& raw() const { return v_; }
  std::string str() const { return v_.str(); }
  long long to_ll() const { return v_.convert_to<long long>(); }
  bool fits_ll() const;

  Int operator-() const { return Int(backend_type(-v_)); }

  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
  Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }  // truncated
  Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

  friend Int operator+(const Int& a, const Int& b) { return Int(backend_type(a.v_ + b.v_)); }
  friend Int operator-(const Int& a, const Int& b) { return Int(backend_type(a.v_ - b.v_)); }
  friend Int operator*(const Int& a, const Int& b) { return Int(backend_type(a.v_ * b.v_)); }
  friend Int operator/(const Int& a, const Int& b) { return Int(backend_type(a.v_ / b.v_)); }
  friend Int operator%(const Int& a, const Int& b) { return Int(backend_type(a.v_ % b.v_)); }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  backend_type v_;
};

using Rat = boost::multiprecision::cpp_rational;

}  // namespace stacky

namespace Eigen {

template <>
struct NumTraits<stacky::Int> : GenericNumTraits<stacky::Int> {
  using Real = stacky::Int;
  using NonInteger = stacky::Int;
  using Nested = stacky::Int;
  using Literal = long long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30,
  };
};

}  // namespace Eigen

namespace stacky {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

Rat int_to_rat(const Int& v);

enum class errc {
  not_simplicial,
  not_a_fan,
  duplicate_ray,
  invalid_ray,
  unused_ray,
  rays_do_not_span,
  zero_free_part,
  invalid_torsion_order,
  kernel_not_free,
  not_dm_torus,
  dimension_mismatch,
  has_gerbe,
  incomparable_fans,
  not_a_line,
  bad_document,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

inline Int abs_int(const Int& a) { return a < 0 ? -a : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

// g = gcd(a,b) = x*a + y*b
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// gcd of all entries, 0 for an empty or zero vector
Int content(const IntVec& v);

// floor division; b > 0 required
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) q -= 1;
  return q;
}

// residue in [0, b)
inline Int mod_pos(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline IntMat int_identity(Index n) { return IntMat::Identity(n, n); }

inline IntVec unit_vector(Index n, Index i) {
  IntVec e = IntVec::Zero(n);
  e(i) = 1;
  return e;
}

std::string to_string(const Int& v);
std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);

}  // namespace stacky


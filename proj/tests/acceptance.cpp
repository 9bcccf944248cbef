// Acceptance suite: one line per criterion, exact checks only.
// Exit code 0 iff every criterion passes.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "stackyfan/structure.hpp"

using namespace stacky;
using corpus::cols;
using corpus::ints;
using corpus::vec;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

std::multiset<Int> abs_weight_multiset(const std::vector<IntVec>& classes, bool& sign_consistent) {
  std::multiset<Int> out;
  int sign = 0;
  sign_consistent = true;
  for (const auto& c : classes) {
    if (c.size() != 1 || c(0) == 0) {
      sign_consistent = false;
      continue;
    }
    int s = c(0) > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) sign_consistent = false;
    out.insert(abs_int(c(0)));
  }
  return out;
}

Int minor_gcd(const IntMat& m, Index k) {
  std::vector<Index> rows(static_cast<size_t>(k)), cs(static_cast<size_t>(k));
  Int g = 0;
  std::function<Int(std::vector<Index>&, std::vector<Index>&)> det =
      [&](std::vector<Index>& r, std::vector<Index>& c) -> Int {
    if (r.empty()) return Int(1);
    Int sum = 0;
    std::vector<Index> r2(r.begin() + 1, r.end());
    int sign = 1;
    for (size_t j = 0; j < c.size(); ++j) {
      std::vector<Index> c2;
      for (size_t t = 0; t < c.size(); ++t)
        if (t != j) c2.push_back(c[t]);
      sum += Int(sign) * m(r[0], c[j]) * det(r2, c2);
      sign = -sign;
    }
    return sum;
  };
  std::function<void(Index, Index)> choose_cols = [&](Index start, Index depth) {
    if (depth == k) {
      std::vector<Index> r(rows), c(cs);
      g = gcd_int(g, det(r, c));
      return;
    }
    for (Index j = start; j < m.cols(); ++j) {
      cs[static_cast<size_t>(depth)] = j;
      choose_cols(j + 1, depth + 1);
    }
  };
  std::function<void(Index, Index)> choose_rows = [&](Index start, Index depth) {
    if (depth == k) {
      choose_cols(0, 0);
      return;
    }
    for (Index i = start; i < m.rows(); ++i) {
      rows[static_cast<size_t>(depth)] = i;
      choose_rows(i + 1, depth + 1);
    }
  };
  choose_rows(0, 0);
  return g;
}

bool snf_matches_minor_oracle(const IntMat& m) {
  SmithForm f = smith_form(m);
  Int prod = 1;
  for (Index k = 0; k < f.rank(); ++k) {
    prod *= f.invariant_factors[static_cast<size_t>(k)];
    if (prod != minor_gcd(m, k + 1)) return false;
  }
  if (f.rank() < std::min(m.rows(), m.cols()) && minor_gcd(m, f.rank() + 1) != 0) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "P(6,4) from either beta presentation", [](std::string& detail) {
    StackyFan b1 = corpus::p64_beta1();
    StackyFan b2 = corpus::p64_beta2();
    for (const StackyFan* sf : {&b1, &b2}) {
      PicardData pd = dg_group(*sf);
      if (pd.pic.free_rank() != 1 || !pd.pic.torsion().empty()) {
        detail = "Pic is " + pd.pic.to_string();
        return false;
      }
      bool sign_ok = false;
      QuotientPresentation qp = quotient_presentation(*sf);
      std::multiset<Int> weights = abs_weight_multiset(qp.action_weights, sign_ok);
      if (!sign_ok || weights != std::multiset<Int>{4, 6}) {
        detail = "weights are not {6,4} up to one global sign";
        return false;
      }
    }
    Verdict v = compare(b1, b2);
    if (!v.isomorphic()) {
      detail = "compare(beta1, beta2) did not return Isomorphic";
      return false;
    }
    detail = "Pic = Z, weights {6,4}, presentations isomorphic";
    return true;
  });

  criterion(2, "rigidification chain of P(6,4)", [](std::string& detail) {
    StackyFan p64 = corpus::p64_beta1();
    if (multiplicities(p64) != ints({2, 3})) {
      detail = "multiplicities differ from (2,3)";
      return false;
    }
    PicardData rig = dg_group(rigidify(p64));
    bool sign_ok = false;
    if (rig.pic.free_rank() != 1 || !rig.pic.torsion().empty() ||
        abs_weight_multiset(rig.divisor_classes, sign_ok) != std::multiset<Int>{2, 3} ||
        !sign_ok) {
      detail = "Pic(P(3,2)) data mismatch";
      return false;
    }
    StackyFan can = canonicalize(p64);
    if (can.ray_count() != 2 || !is_complete(can.fan) || !is_canonical(can)) {
      detail = "canonicalization is not the P^1 fan";
      return false;
    }
    PicardData cpd = dg_group(can);
    if (cpd.pic.free_rank() != 1 || !cpd.pic.torsion().empty() ||
        abs_weight_multiset(cpd.divisor_classes, sign_ok) != std::multiset<Int>{1, 1}) {
      detail = "Pic(P^1) data mismatch";
      return false;
    }
    detail = "Pic chain Z{3,2} -> Z{1,1}, multiplicities (2,3)";
    return true;
  });

  criterion(3, "DM torus normal form over the weight grid", [](std::string& detail) {
    long long cases = 0;
    for (int len = 1; len <= 4; ++len) {
      std::vector<long long> w(static_cast<size_t>(len), 1);
      for (;;) {
        IntMat row(1, len);
        Int g = 0;
        for (int i = 0; i < len; ++i) {
          row(0, i) = Int(w[static_cast<size_t>(i)]);
          g = gcd_int(g, row(0, i));
        }
        TwoTermComplex c{GroupHom{FGAbelianGroup::free_group(len),
                                  FGAbelianGroup::free_group(1), row}};
        DMTorusForm t = dm_torus_form(c);
        std::vector<Int> expect;
        if (g >= 2) expect.push_back(g);
        if (t.torus_rank != len - 1 || t.gerbe_factors != expect) {
          std::ostringstream os;
          os << "mismatch at w = (";
          for (int i = 0; i < len; ++i) os << (i ? "," : "") << w[static_cast<size_t>(i)];
          os << ")";
          detail = os.str();
          return false;
        }
        ++cases;
        int pos = len - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == 10) {
          w[static_cast<size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
      }
    }
    detail = std::to_string(cases) + " weight vectors";
    return true;
  });

  criterion(4, "toric lines over the 6x6 grid", [](std::string& detail) {
    for (long long a1 = 1; a1 <= 6; ++a1) {
      for (long long a2 = 1; a2 <= 6; ++a2) {
        StackyFan sf = line_stacky_fan(a1, a2);
        FGAbelianGroup pic = dg_group(sf).pic;
        Int g = gcd_int(a1, a2);
        std::vector<Int> expect;
        if (g >= 2) expect.push_back(g);
        if (pic.free_rank() != 1 || pic.torsion() != expect) {
          detail = "Pic mismatch at (" + std::to_string(a1) + "," + std::to_string(a2) + ")";
          return false;
        }
        ToricLineReport r = classify_toric_line(sf);
        Int m = lcm_int(a1, a2);
        if (r.weights != std::vector<Int>{m / Int(a1), m / Int(a2)}) {
          detail = "weights mismatch at (" + std::to_string(a1) + "," + std::to_string(a2) + ")";
          return false;
        }
        Rat identity = Rat(r.k1.raw()) / Rat(Int(a1).raw()) +
                       Rat(r.k2.raw()) / Rat(Int(a2).raw());
        if (identity != Rat(1) / Rat(m.raw())) {
          detail = "k identity fails at (" + std::to_string(a1) + "," + std::to_string(a2) + ")";
          return false;
        }
      }
    }
    detail = "36 cases, Pic = Z x Z/gcd and k1/a1 + k2/a2 = 1/m exactly";
    return true;
  });

  criterion(5, "exact-sequence suite over the corpus", [](std::string& detail) {
    std::vector<StackyFan> corpus_fans = corpus::sequence_corpus(50);
    if (corpus_fans.size() < 50) {
      detail = "corpus too small";
      return false;
    }
    for (size_t idx = 0; idx < corpus_fans.size(); ++idx) {
      SequenceReport r = verify_pic_sequences(corpus_fans[idx]);
      Int prod_a = 1;
      for (const Int& a : multiplicities(corpus_fans[idx])) prod_a *= a;
      Int prod_b = 1;
      for (const Int& b : corpus_fans[idx].torsion_orders) prod_b *= b;
      if (!r.all_pass() || r.orbifold_index != prod_a || r.gerbe_index != prod_b) {
        for (const auto& c : r.checks)
          if (!c.pass) detail += c.name + " ";
        detail += "at corpus fan " + std::to_string(idx);
        return false;
      }
    }
    detail = std::to_string(corpus_fans.size()) + " stacky fans, all rows exact with pushouts";
    return true;
  });

  criterion(6, "round trip, idempotence, canonical multiplicities", [](std::string& detail) {
    for (const StackyFan& sf : corpus::sequence_corpus(50)) {
      Verdict v = compare(sf, recompose(decompose(sf)));
      if (!v.isomorphic()) {
        detail = "round trip not isomorphic";
        return false;
      }
      StackyFan can = canonicalize(sf);
      StackyFan rig = rigidify(sf);
      if (to_string(canonicalize(can).beta_columns()) != to_string(can.beta_columns()) ||
          to_string(rigidify(rig).beta_columns()) != to_string(rig.beta_columns())) {
        detail = "idempotence violated";
        return false;
      }
      for (const Int& a : multiplicities(can))
        if (a != 1) {
          detail = "canonical multiplicity differs from 1";
          return false;
        }
    }
    detail = "corpus round trips isomorphically";
    return true;
  });

  criterion(7, "weighted projective recognition grid", [](std::string& detail) {
    long long cases = 0;
    for (int len = 2; len <= 4; ++len) {
      std::vector<long long> w(static_cast<size_t>(len), 1);
      for (;;) {
        std::vector<Int> weights;
        for (long long x : w) weights.emplace_back(x);
        WpsRecognition rec = recognize_wps(wps_stacky_fan(weights));
        std::multiset<Int> expect(weights.begin(), weights.end());
        std::multiset<Int> got(rec.weights.begin(), rec.weights.end());
        if (!rec.is_wps || got != expect) {
          std::ostringstream os;
          os << "mismatch at w = (";
          for (int i = 0; i < len; ++i) os << (i ? "," : "") << w[static_cast<size_t>(i)];
          os << ")";
          detail = os.str();
          return false;
        }
        ++cases;
        int pos = len - 1;
        while (pos >= 0 && w[static_cast<size_t>(pos)] == 8) {
          w[static_cast<size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++w[static_cast<size_t>(pos)];
      }
    }
    if (recognize_wps(line_stacky_fan(2, 2)).is_wps) {
      detail = "line (2,2) wrongly recognized as weighted projective";
      return false;
    }
    detail = std::to_string(cases) + " weight vectors recovered up to permutation";
    return true;
  });

  criterion(8, "algebra kernel oracles", [](std::string& detail) {
    long long checked = 0;
    for (long long a = -4; a <= 4; ++a) {
      IntMat m1(1, 1);
      m1(0, 0) = Int(a);
      if (!snf_matches_minor_oracle(m1)) {
        detail = "diagonal 1x1 failure";
        return false;
      }
      ++checked;
    }
    for (long long a = -4; a <= 4; ++a)
      for (long long b = -4; b <= 4; ++b) {
        IntMat m2 = IntMat::Zero(2, 2);
        m2(0, 0) = Int(a);
        m2(1, 1) = Int(b);
        if (!snf_matches_minor_oracle(m2)) {
          detail = "diagonal 2x2 failure";
          return false;
        }
        ++checked;
      }
    for (long long a = -4; a <= 4; ++a)
      for (long long b = -4; b <= 4; ++b)
        for (long long c = -4; c <= 4; ++c) {
          IntMat m3 = IntMat::Zero(3, 3);
          m3(0, 0) = Int(a);
          m3(1, 1) = Int(b);
          m3(2, 2) = Int(c);
          if (!snf_matches_minor_oracle(m3)) {
            detail = "diagonal 3x3 failure";
            return false;
          }
          ++checked;
        }
    for (int trial = 0; trial < 10000; ++trial) {
      Index r = static_cast<Index>(corpus::rand_between(1, 3));
      Index c = static_cast<Index>(corpus::rand_between(1, 3));
      IntMat m = corpus::random_matrix(r, c, -4, 4);
      if (!snf_matches_minor_oracle(m)) {
        detail = "random minor-oracle failure at " + to_string(m);
        return false;
      }
      ++checked;
    }
    for (int trial = 0; trial < 1000; ++trial) {
      Index rows = static_cast<Index>(corpus::rand_between(1, 3));
      IntMat m = corpus::random_matrix(rows, static_cast<Index>(corpus::rand_between(0, 3)),
                                       -4, 4);
      FGAbelianGroup g = cokernel(m);
      IntMat p = corpus::random_unimodular(rows);
      IntMat q = corpus::random_unimodular(m.cols());
      if (!g.same_canonical_form(cokernel(IntMat(p * m * q)))) {
        detail = "cokernel canonical form not invariant at " + to_string(m);
        return false;
      }
      ++checked;
    }
    detail = std::to_string(checked) + " matrices";
    return true;
  });

  criterion(9, "DG(beta) choice independence", [](std::string& detail) {
    long long lifts = 0;
    for (const StackyFan& sf : corpus::sequence_corpus(50)) {
      PicardData ref = dg_group(sf);
      for (int trial = 0; trial < 100; ++trial) {
        IntMat shifts = corpus::random_matrix(sf.torsion_count(), sf.ray_count(), -4, 4);
        PicardData other = dg_group_with_lift(sf, shifts);
        if (!ref.pic.same_canonical_form(other.pic)) {
          detail = "canonical form changed under a residue re-lift";
          return false;
        }
        ++lifts;
      }
    }
    detail = std::to_string(lifts) + " re-lifts";
    return true;
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}

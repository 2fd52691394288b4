#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiretap/prob/pmf.hpp"

namespace wiretap {

/// All rates and entropies are in bits (log base 2).
inline double entropy_of_table(const std::vector<double>& t) {
  double h = 0.0;
  for (double v : t) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

/// Shannon entropy of the marginal on `over`, in bits. 0*log(0) = 0.
inline double entropy(const Pmf& p, const AxisNames& over) {
  if (over.empty()) return 0.0;
  return entropy_of_table(p.marginalize(over).table());
}

inline double entropy(const Pmf& p) {
  return entropy_of_table(p.table());
}

inline void require_disjoint(const AxisNames& a, const AxisNames& b, const char* what) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x == y) {
        throw std::invalid_argument(std::string(what) + ": groups overlap on axis '" + x + "'");
      }
    }
  }
}

inline AxisNames concat(const AxisNames& a, const AxisNames& b) {
  AxisNames r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// I(A;B) = H(A) + H(B) - H(A,B), in bits.
inline double mutual_information(const Pmf& p, const AxisNames& group_a,
                                 const AxisNames& group_b) {
  require_disjoint(group_a, group_b, "mutual_information");
  return entropy(p, group_a) + entropy(p, group_b) - entropy(p, concat(group_a, group_b));
}

/// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C), in bits.
inline double conditional_mutual_information(const Pmf& p, const AxisNames& group_a,
                                             const AxisNames& group_b,
                                             const AxisNames& group_c) {
  require_disjoint(group_a, group_b, "conditional_mutual_information");
  require_disjoint(group_a, group_c, "conditional_mutual_information");
  require_disjoint(group_b, group_c, "conditional_mutual_information");
  return entropy(p, concat(group_a, group_c)) + entropy(p, concat(group_b, group_c)) -
         entropy(p, concat(concat(group_a, group_b), group_c)) - entropy(p, group_c);
}

/// Binary entropy h(p) in bits.
inline double binary_entropy(double q) {
  if (q <= 0.0 || q >= 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

}  // namespace wiretap

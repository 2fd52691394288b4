#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wiretap {

/// One named finite axis of a probability table.
struct Alphabet {
  std::string name;
  std::size_t size = 0;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.name == b.name && a.size == b.size;
  }
};

using AxisList = std::vector<Alphabet>;
using AxisNames = std::vector<std::string>;

inline void validate_axes(const AxisList& axes) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].size == 0) {
      throw std::invalid_argument("axis '" + axes[i].name + "' has size 0");
    }
    if (axes[i].name.empty()) {
      throw std::invalid_argument("axis with empty name");
    }
    for (std::size_t j = i + 1; j < axes.size(); ++j) {
      if (axes[i].name == axes[j].name) {
        throw std::invalid_argument("duplicate axis name '" + axes[i].name + "'");
      }
    }
  }
}

inline std::size_t table_size(const AxisList& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size;
  return n;
}

inline std::size_t find_axis(const AxisList& axes, std::string_view name) {
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].name == name) return i;
  }
  throw std::invalid_argument("unknown axis '" + std::string(name) + "'");
}

inline bool has_axis(const AxisList& axes, std::string_view name) {
  for (const auto& a : axes) {
    if (a.name == name) return true;
  }
  return false;
}

/// Row-major strides, last axis fastest.
inline std::vector<std::size_t> strides_of(const AxisList& axes) {
  std::vector<std::size_t> s(axes.size(), 1);
  for (std::size_t i = axes.size(); i-- > 1;) {
    s[i - 1] = s[i] * axes[i].size;
  }
  return s;
}

/// Odometer increment of a multi-index; returns false after the last cell.
inline bool next_index(std::vector<std::size_t>& idx, const AxisList& axes) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < axes[i].size) return true;
    idx[i] = 0;
  }
  return false;
}

}  // namespace wiretap

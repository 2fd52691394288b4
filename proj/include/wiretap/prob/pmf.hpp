#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiretap/prob/alphabet.hpp"

namespace wiretap {

inline constexpr double kNormTol = 1e-9;

/// Dense probability table over named finite axes. Immutable after construction.
class Pmf {
 public:
  Pmf(AxisList axes, std::vector<double> table, double norm_tol = kNormTol)
      : axes_(std::move(axes)), table_(std::move(table)) {
    validate_axes(axes_);
    if (table_.size() != table_size(axes_)) {
      throw std::invalid_argument("table size " + std::to_string(table_.size()) +
                                  " does not match axis product " +
                                  std::to_string(table_size(axes_)));
    }
    double sum = 0.0;
    for (double v : table_) {
      if (v < 0.0 || !std::isfinite(v)) {
        throw std::invalid_argument("negative or non-finite probability entry");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > norm_tol) {
      throw std::invalid_argument("table sums to " + std::to_string(sum) +
                                  ", not 1 within tolerance");
    }
    strides_ = strides_of(axes_);
  }

  static Pmf uniform(AxisList axes) {
    const std::size_t n = table_size(axes);
    return Pmf(std::move(axes), std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  static Pmf point_mass(AxisList axes, const std::vector<std::size_t>& at) {
    const std::size_t n = table_size(axes);
    std::vector<double> t(n, 0.0);
    const auto s = strides_of(axes);
    if (at.size() != axes.size()) throw std::invalid_argument("point_mass index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < at.size(); ++i) {
      if (at[i] >= axes[i].size) throw std::invalid_argument("point_mass index out of range");
      flat += at[i] * s[i];
    }
    t[flat] = 1.0;
    return Pmf(std::move(axes), std::move(t));
  }

  const AxisList& axes() const { return axes_; }
  const std::vector<double>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  std::size_t rank() const { return axes_.size(); }

  double at_flat(std::size_t flat) const { return table_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    std::size_t flat = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) flat += idx[i] * strides_[i];
    return flat;
  }

  double at(std::span<const std::size_t> idx) const { return table_[flat_index(idx)]; }

  std::size_t axis_index(std::string_view name) const { return find_axis(axes_, name); }

  /// Positions of `names` in this Pmf's axis order, as given (not reordered).
  std::vector<std::size_t> axis_positions(const AxisNames& names) const {
    std::vector<std::size_t> pos;
    pos.reserve(names.size());
    for (const auto& n : names) pos.push_back(axis_index(n));
    return pos;
  }

  /// Sum out every axis not in `keep`; result keeps this Pmf's original axis order.
  Pmf marginalize(const AxisNames& keep) const {
    std::vector<bool> kept(axes_.size(), false);
    for (const auto& n : keep) kept[axis_index(n)] = true;

    AxisList out_axes;
    for (std::size_t i = 0; i < axes_.size(); ++i) {
      if (kept[i]) out_axes.push_back(axes_[i]);
    }
    if (out_axes.size() == axes_.size()) return *this;

    const auto out_strides = strides_of(out_axes);
    std::vector<std::size_t> dest_stride(axes_.size(), 0);
    for (std::size_t i = 0, k = 0; i < axes_.size(); ++i) {
      if (kept[i]) dest_stride[i] = out_strides[k++];
    }

    std::vector<double> out(table_size(out_axes), 0.0);
    std::vector<std::size_t> idx(axes_.size(), 0);
    std::size_t src = 0;
    std::size_t dst = 0;
    for (;;) {
      out[dst] += table_[src];
      // odometer with incremental destination index
      std::size_t i = axes_.size();
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < axes_[i].size) {
          dst += dest_stride[i];
          done = false;
          break;
        }
        idx[i] = 0;
        dst -= dest_stride[i] * (axes_[i].size - 1);
      }
      if (done) break;
      ++src;
    }
    return Pmf(std::move(out_axes), std::move(out), 1e-6);
  }

  /// Entrywise product renormalized; used by tests for perturbation checks.
  Pmf renormalized() const {
    double sum = std::accumulate(table_.begin(), table_.end(), 0.0);
    std::vector<double> t = table_;
    for (double& v : t) v /= sum;
    return Pmf(axes_, std::move(t));
  }

  friend bool operator==(const Pmf& a, const Pmf& b) {
    return a.axes_ == b.axes_ && a.table_ == b.table_;
  }

 private:
  AxisList axes_;
  std::vector<double> table_;
  std::vector<std::size_t> strides_;
};

}  // namespace wiretap

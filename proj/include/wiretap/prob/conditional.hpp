#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wiretap/prob/alphabet.hpp"
#include "wiretap/prob/pmf.hpp"

namespace wiretap {

/// Transition kernel: for each setting of the given axes, a Pmf over the output
/// axes. Stored given-major, output row-major within each slice.
class ConditionalPmf {
 public:
  ConditionalPmf(AxisList given_axes, AxisList output_axes, std::vector<double> table,
                 double norm_tol = kNormTol)
      : given_axes_(std::move(given_axes)),
        output_axes_(std::move(output_axes)),
        table_(std::move(table)) {
    AxisList all = given_axes_;
    all.insert(all.end(), output_axes_.begin(), output_axes_.end());
    validate_axes(all);
    given_size_ = table_size(given_axes_);
    output_size_ = table_size(output_axes_);
    if (table_.size() != given_size_ * output_size_) {
      throw std::invalid_argument("conditional table size mismatch");
    }
    for (std::size_t g = 0; g < given_size_; ++g) {
      double sum = 0.0;
      for (std::size_t o = 0; o < output_size_; ++o) {
        const double v = table_[g * output_size_ + o];
        if (v < 0.0 || !std::isfinite(v)) {
          throw std::invalid_argument("negative or non-finite entry in slice " +
                                      std::to_string(g));
        }
        sum += v;
      }
      if (std::abs(sum - 1.0) > norm_tol) {
        throw std::invalid_argument("conditional slice " + std::to_string(g) +
                                    " sums to " + std::to_string(sum));
      }
    }
    given_strides_ = strides_of(given_axes_);
    output_strides_ = strides_of(output_axes_);
  }

  static ConditionalPmf uniform(AxisList given_axes, AxisList output_axes) {
    const std::size_t g = table_size(given_axes);
    const std::size_t o = table_size(output_axes);
    return ConditionalPmf(std::move(given_axes), std::move(output_axes),
                          std::vector<double>(g * o, 1.0 / static_cast<double>(o)));
  }

  const AxisList& given_axes() const { return given_axes_; }
  const AxisList& output_axes() const { return output_axes_; }
  const std::vector<double>& table() const { return table_; }
  std::size_t given_size() const { return given_size_; }
  std::size_t output_size() const { return output_size_; }

  double value(std::size_t given_flat, std::size_t output_flat) const {
    return table_[given_flat * output_size_ + output_flat];
  }

  std::size_t given_flat(std::span<const std::size_t> idx) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) f += idx[i] * given_strides_[i];
    return f;
  }

  std::size_t output_flat(std::span<const std::size_t> idx) const {
    std::size_t f = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) f += idx[i] * output_strides_[i];
    return f;
  }

  /// The conditional slice as a standalone Pmf over the output axes.
  Pmf slice(std::size_t given_flat) const {
    std::vector<double> t(table_.begin() + given_flat * output_size_,
                          table_.begin() + (given_flat + 1) * output_size_);
    return Pmf(output_axes_, std::move(t), 1e-6);
  }

  friend bool operator==(const ConditionalPmf& a, const ConditionalPmf& b) {
    return a.given_axes_ == b.given_axes_ && a.output_axes_ == b.output_axes_ &&
           a.table_ == b.table_;
  }

 private:
  AxisList given_axes_;
  AxisList output_axes_;
  std::vector<double> table_;
  std::size_t given_size_ = 0;
  std::size_t output_size_ = 0;
  std::vector<std::size_t> given_strides_;
  std::vector<std::size_t> output_strides_;
};

/// p(out | given) from a joint. Zero-mass conditioning slices are filled with
/// the uniform conditional; they carry no weight in downstream expectations.
inline ConditionalPmf condition(const Pmf& p, const AxisNames& given) {
  std::vector<bool> is_given(p.rank(), false);
  for (const auto& n : given) is_given[p.axis_index(n)] = true;

  AxisList gaxes, oaxes;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    (is_given[i] ? gaxes : oaxes).push_back(p.axes()[i]);
  }
  if (oaxes.empty()) throw std::invalid_argument("condition: no output axes left");

  const auto gstr = strides_of(gaxes);
  const auto ostr = strides_of(oaxes);
  const std::size_t gsize = table_size(gaxes);
  const std::size_t osize = table_size(oaxes);

  std::vector<double> joint(gsize * osize, 0.0);
  std::vector<std::size_t> idx(p.rank(), 0);
  std::size_t src = 0;
  for (;;) {
    std::size_t g = 0, o = 0;
    for (std::size_t i = 0, gi = 0, oi = 0; i < p.rank(); ++i) {
      if (is_given[i]) {
        g += idx[i] * gstr[gi++];
      } else {
        o += idx[i] * ostr[oi++];
      }
    }
    joint[g * osize + o] = p.at_flat(src);
    if (!next_index(idx, p.axes())) break;
    ++src;
  }

  for (std::size_t g = 0; g < gsize; ++g) {
    double mass = 0.0;
    for (std::size_t o = 0; o < osize; ++o) mass += joint[g * osize + o];
    if (mass > 0.0) {
      for (std::size_t o = 0; o < osize; ++o) joint[g * osize + o] /= mass;
    } else {
      for (std::size_t o = 0; o < osize; ++o) joint[g * osize + o] = 1.0 / osize;
    }
  }
  return ConditionalPmf(std::move(gaxes), std::move(oaxes), std::move(joint), 1e-6);
}

/// One multiplicative factor of a joint assembly: a kernel plus the positions
/// of its given/output axes inside the assembled joint's axis order.
struct JointFactor {
  const ConditionalPmf* kernel = nullptr;  // either kernel or marginal is set
  const Pmf* marginal = nullptr;
  std::vector<std::size_t> given_pos;   // joint axis positions of kernel given axes
  std::vector<std::size_t> output_pos;  // joint axis positions of kernel/marginal axes
};

inline JointFactor make_factor(const Pmf& marginal, const AxisList& joint_axes) {
  JointFactor f;
  f.marginal = &marginal;
  for (const auto& a : marginal.axes()) f.output_pos.push_back(find_axis(joint_axes, a.name));
  return f;
}

inline JointFactor make_factor(const ConditionalPmf& kernel, const AxisList& joint_axes) {
  JointFactor f;
  f.kernel = &kernel;
  for (const auto& a : kernel.given_axes()) f.given_pos.push_back(find_axis(joint_axes, a.name));
  for (const auto& a : kernel.output_axes()) f.output_pos.push_back(find_axis(joint_axes, a.name));
  return f;
}

/// Assemble a joint law as an entrywise product of marginal and kernel factors.
/// Every joint axis must be produced by exactly one factor for the result to be
/// normalized; this is checked by the Pmf constructor.
inline Pmf assemble_joint(const AxisList& axes, const std::vector<JointFactor>& factors,
                          double norm_tol = kNormTol) {
  std::vector<double> out(table_size(axes));
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<std::size_t> scratch;
  std::size_t flat = 0;
  for (;;) {
    double v = 1.0;
    for (const auto& f : factors) {
      if (f.marginal != nullptr) {
        scratch.clear();
        for (auto p : f.output_pos) scratch.push_back(idx[p]);
        v *= f.marginal->at(scratch);
      } else {
        scratch.clear();
        for (auto p : f.given_pos) scratch.push_back(idx[p]);
        const std::size_t g = f.kernel->given_flat(scratch);
        scratch.clear();
        for (auto p : f.output_pos) scratch.push_back(idx[p]);
        v *= f.kernel->value(g, f.kernel->output_flat(scratch));
      }
      if (v == 0.0) break;
    }
    out[flat] = v;
    if (!next_index(idx, axes)) break;
    ++flat;
  }
  return Pmf(axes, std::move(out), norm_tol);
}

}  // namespace wiretap

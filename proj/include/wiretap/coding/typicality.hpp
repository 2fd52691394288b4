#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wiretap/prob/pmf.hpp"

namespace wiretap {

struct TypicalityParams {
  double epsilon = 0.1;
  std::size_t n = 1;

  void validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
  }
};

/// Robust letter typicality against a fixed model marginal. Per-cell rule:
/// cells of probability zero must not occur at all; otherwise the empirical
/// frequency must deviate from p(cell) by less than eps*p(cell) + eps/#cells.
/// Thresholds are precomputed in count domain so a check is one counting pass.
class TypicalityCheck {
 public:
  TypicalityCheck(Pmf model, TypicalityParams tp)
      : model_(std::move(model)), tp_(tp) {
    tp_.validate();
    const std::size_t cells = model_.size();
    lo_.resize(cells);
    hi_.resize(cells);
    const double n = static_cast<double>(tp_.n);
    for (std::size_t c = 0; c < cells; ++c) {
      const double p = model_.at_flat(c);
      if (p == 0.0) {
        lo_[c] = -1.0;
        hi_[c] = 0.5;  // only count == 0 passes
      } else {
        const double t = tp_.epsilon * p + tp_.epsilon / static_cast<double>(cells);
        lo_[c] = n * (p - t);
        hi_[c] = n * (p + t);
      }
    }
    strides_ = strides_of(model_.axes());
    counts_.resize(cells);
  }

  const Pmf& model() const { return model_; }
  const TypicalityParams& params() const { return tp_; }

  /// seqs[i] is the coordinate sequence of model axis i; all of length n.
  bool check(std::span<const std::vector<std::size_t>*> seqs) {
    if (seqs.size() != model_.rank()) {
      throw std::invalid_argument("sequence count does not match model rank");
    }
    for (const auto* s : seqs) {
      if (s->size() != tp_.n) {
        throw std::invalid_argument("sequence length does not match n");
      }
    }
    std::fill(counts_.begin(), counts_.end(), 0);
    for (std::size_t t = 0; t < tp_.n; ++t) {
      std::size_t flat = 0;
      for (std::size_t i = 0; i < seqs.size(); ++i) {
        flat += (*seqs[i])[t] * strides_[i];
      }
      ++counts_[flat];
    }
    return counts_pass();
  }

  /// Same rule on a precomputed count table (used by fast scan paths).
  bool check_counts(std::span<const std::uint32_t> counts) const {
    for (std::size_t c = 0; c < counts.size(); ++c) {
      const double cnt = static_cast<double>(counts[c]);
      if (!(cnt > lo_[c] && cnt < hi_[c])) return false;
    }
    return true;
  }

 private:
  bool counts_pass() const {
    for (std::size_t c = 0; c < counts_.size(); ++c) {
      const double cnt = static_cast<double>(counts_[c]);
      if (!(cnt > lo_[c] && cnt < hi_[c])) return false;
    }
    return true;
  }

  Pmf model_;
  TypicalityParams tp_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint32_t> counts_;
};

/// One-shot convenience wrapper around TypicalityCheck.
inline bool is_jointly_typical(std::span<const std::vector<std::size_t>*> seqs,
                               const Pmf& model, const TypicalityParams& tp) {
  TypicalityCheck chk(model, tp);
  return chk.check(seqs);
}

}  // namespace wiretap

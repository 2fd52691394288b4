#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wiretap/prob/conditional.hpp"
#include "wiretap/prob/info.hpp"
#include "wiretap/prob/pmf.hpp"

namespace wiretap {

// Fixed axis names of the broadcast wiretap channel. A removed component
// (no eavesdropper, single state, ...) is encoded as a size-1 axis.
namespace axis {
inline constexpr const char* u1 = "u1";
inline constexpr const char* u2 = "u2";
inline constexpr const char* x = "x";
inline constexpr const char* s1 = "s1";
inline constexpr const char* s2 = "s2";
inline constexpr const char* y1 = "y1";
inline constexpr const char* y2 = "y2";
inline constexpr const char* z = "z";
}  // namespace axis

/// Two-receiver wiretap channel with state: the state law p(s1,s2) and the
/// transition p(y1,y2,z | x,s1,s2). The eavesdropper output z depends on the
/// states only through the transition; no interface ever hands states to an
/// eavesdropper-side computation.
struct ChannelSpec {
  Pmf state_dist;            // axes (s1, s2)
  ConditionalPmf transition;  // (y1, y2, z | x, s1, s2)

  ChannelSpec(Pmf sd, ConditionalPmf tr)
      : state_dist(std::move(sd)), transition(std::move(tr)) {
    require_axis_order(state_dist.axes(), {axis::s1, axis::s2}, "state_dist");
    require_axis_order(transition.given_axes(), {axis::x, axis::s1, axis::s2},
                       "transition given");
    require_axis_order(transition.output_axes(), {axis::y1, axis::y2, axis::z},
                       "transition output");
    for (const char* s : {axis::s1, axis::s2}) {
      const auto a = state_dist.axes()[find_axis(state_dist.axes(), s)];
      const auto b = transition.given_axes()[find_axis(transition.given_axes(), s)];
      if (a.size != b.size) {
        throw std::invalid_argument("axis '" + std::string(s) +
                                    "' size differs between state_dist and transition");
      }
    }
  }

  std::size_t axis_size(const std::string& name) const {
    if (name == axis::s1 || name == axis::s2) {
      return state_dist.axes()[find_axis(state_dist.axes(), name)].size;
    }
    if (name == axis::x) {
      return transition.given_axes()[find_axis(transition.given_axes(), name)].size;
    }
    return transition.output_axes()[find_axis(transition.output_axes(), name)].size;
  }

 private:
  static void require_axis_order(const AxisList& axes,
                                 std::initializer_list<const char*> names,
                                 const char* what) {
    if (axes.size() != names.size()) {
      throw std::invalid_argument(std::string(what) + ": expected " +
                                  std::to_string(names.size()) + " axes");
    }
    std::size_t i = 0;
    for (const char* n : names) {
      if (axes[i].name != n) {
        throw std::invalid_argument(std::string(what) + ": axis " + std::to_string(i) +
                                    " must be '" + n + "', got '" + axes[i].name + "'");
      }
      ++i;
    }
  }
};

/// Encoder-side distribution p(u1,u2,x | s1,s2) over the auxiliary variables
/// and the channel input.
struct AuxPolicy {
  ConditionalPmf policy;  // (u1, u2, x | s1, s2)

  explicit AuxPolicy(ConditionalPmf p) : policy(std::move(p)) {
    const auto& g = policy.given_axes();
    const auto& o = policy.output_axes();
    if (g.size() != 2 || g[0].name != axis::s1 || g[1].name != axis::s2 ||
        o.size() != 3 || o[0].name != axis::u1 || o[1].name != axis::u2 ||
        o[2].name != axis::x) {
      throw std::invalid_argument("policy must be (u1,u2,x | s1,s2)");
    }
  }

  std::size_t aux1_size() const { return policy.output_axes()[0].size; }
  std::size_t aux2_size() const { return policy.output_axes()[1].size; }
  std::size_t input_size() const { return policy.output_axes()[2].size; }
};

/// The joint law of (u1,u2,x,s1,s2,y1,y2,z) obtained by chaining state law,
/// encoder policy, and channel transition. By construction (u1,u2) and
/// (y1,y2,z) are conditionally independent given (x,s1,s2).
struct FullJoint {
  Pmf joint;  // axes (u1,u2,x,s1,s2,y1,y2,z) in this order
};

inline AxisList full_joint_axes(const ChannelSpec& spec, const AuxPolicy& pol) {
  return AxisList{{axis::u1, pol.aux1_size()},
                  {axis::u2, pol.aux2_size()},
                  {axis::x, spec.axis_size(axis::x)},
                  {axis::s1, spec.axis_size(axis::s1)},
                  {axis::s2, spec.axis_size(axis::s2)},
                  {axis::y1, spec.axis_size(axis::y1)},
                  {axis::y2, spec.axis_size(axis::y2)},
                  {axis::z, spec.axis_size(axis::z)}};
}

inline FullJoint build_full_joint(const ChannelSpec& spec, const AuxPolicy& pol) {
  if (pol.input_size() != spec.axis_size(axis::x)) {
    throw std::invalid_argument("axis 'x': policy size " +
                                std::to_string(pol.input_size()) +
                                " does not match channel size " +
                                std::to_string(spec.axis_size(axis::x)));
  }
  const AxisList axes = full_joint_axes(spec, pol);
  const std::vector<JointFactor> factors = {
      make_factor(spec.state_dist, axes),
      make_factor(pol.policy, axes),
      make_factor(spec.transition, axes),
  };
  return FullJoint{assemble_joint(axes, factors)};
}

/// Conditional independence defect I(U1,U2 ; Y1,Y2,Z | X,S1,S2) in bits.
/// Zero (up to rounding) for any joint produced by build_full_joint.
inline double markov_defect(const FullJoint& fj) {
  return conditional_mutual_information(fj.joint, {axis::u1, axis::u2},
                                        {axis::y1, axis::y2, axis::z},
                                        {axis::x, axis::s1, axis::s2});
}

}  // namespace wiretap

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wiretap/channel/channel.hpp"
#include "wiretap/util/rng.hpp"

namespace wiretap {

using Sequence = std::vector<std::size_t>;

/// One i.i.d. draw of the state pair over a block of length n.
struct StateBlock {
  Sequence s1;
  Sequence s2;
};

inline StateBlock sample_states(const ChannelSpec& spec, std::size_t n, Rng& rng) {
  StateBlock b;
  b.s1.resize(n);
  b.s2.resize(n);
  const std::size_t n2 = spec.axis_size(axis::s2);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t flat = rng.categorical(spec.state_dist.table());
    b.s1[t] = flat / n2;
    b.s2[t] = flat % n2;
  }
  return b;
}

/// Outputs of one memoryless use of the channel per block coordinate.
struct OutputBlock {
  Sequence y1;
  Sequence y2;
  Sequence z;
};

/// Passes x through the channel coordinate by coordinate, conditioning on the
/// given states. Sizes of x, s1, s2 must agree.
inline OutputBlock sample_outputs(const ChannelSpec& spec, const Sequence& x,
                                  const StateBlock& states, Rng& rng) {
  const std::size_t n = x.size();
  OutputBlock out;
  out.y1.resize(n);
  out.y2.resize(n);
  out.z.resize(n);
  const std::size_t ny2 = spec.axis_size(axis::y2);
  const std::size_t nz = spec.axis_size(axis::z);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t g = spec.transition.given_flat(
        std::array<std::size_t, 3>{x[t], states.s1[t], states.s2[t]});
    const Pmf slice = spec.transition.slice(g);
    const std::size_t flat = rng.categorical(slice.table());
    out.y1[t] = flat / (ny2 * nz);
    out.y2[t] = (flat / nz) % ny2;
    out.z[t] = flat % nz;
  }
  return out;
}

}  // namespace wiretap

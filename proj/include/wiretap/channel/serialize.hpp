#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include "wiretap/channel/channel.hpp"
#include "wiretap/prob/serialize.hpp"

namespace wiretap {

inline json to_json(const ChannelSpec& spec) {
  return json{{"state_dist", to_json(spec.state_dist)},
              {"transition", to_json(spec.transition)}};
}

inline ChannelSpec channel_from_json(const json& j) {
  if (!j.contains("state_dist")) throw std::invalid_argument("missing 'state_dist'");
  if (!j.contains("transition")) throw std::invalid_argument("missing 'transition'");
  Pmf sd = [&] {
    try {
      return pmf_from_json(j.at("state_dist"));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("state_dist: ") + e.what());
    }
  }();
  ConditionalPmf tr = [&] {
    try {
      return conditional_from_json(j.at("transition"));
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("transition: ") + e.what());
    }
  }();
  return ChannelSpec(std::move(sd), std::move(tr));
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

inline ChannelSpec load_channel(const std::string& path) {
  try {
    return channel_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace wiretap

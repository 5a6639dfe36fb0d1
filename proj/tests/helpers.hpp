#pragma once

#include <string>

#include "termbind/instances.hpp"
#include "termbind/io.hpp"
#include "termbind/testkit.hpp"

namespace tb = termbind;

// Mixes a per-case salt into a generator config's seed so one config yields
// an arbitrary stream of independent terms.
inline tb::Term gen_at(const tb::GenConfig& cfg, std::uint64_t salt) {
  tb::GenConfig c = cfg;
  c.seed = cfg.seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
  return tb::gen_term(c);
}

inline std::string data_path(const std::string& rel) {
  return std::string(TERMBIND_DATA_DIR) + "/" + rel;
}

inline std::string read_trimmed(const std::string& path) {
  std::string s = tb::read_file(path);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

inline tb::VarName uname(const std::string& n) { return tb::VarName::user(n); }

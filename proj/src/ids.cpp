#include "termbind/ids.hpp"

#include <cctype>
#include <stdexcept>

namespace termbind {

bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

VarName VarName::user(std::string name) {
  if (!is_valid_identifier(name)) {
    throw std::invalid_argument("invalid variable name: '" + name + "'");
  }
  return VarName(std::variant<std::string, std::uint64_t>(std::move(name)));
}

VarName VarName::generated(std::uint64_t k) {
  return VarName(std::variant<std::string, std::uint64_t>(k));
}

std::optional<VarName> VarName::parse(std::string_view s) {
  if (s.size() > 2 && s[0] == 'g' && s[1] == '$') {
    std::uint64_t k = 0;
    for (char c : s.substr(2)) {
      if (c < '0' || c > '9') return std::nullopt;
      k = k * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return generated(k);
  }
  if (!is_valid_identifier(s)) return std::nullopt;
  return user(std::string(s));
}

std::string VarName::str() const {
  if (is_generated()) return "g$" + std::to_string(gen_index());
  return user_name();
}

}  // namespace termbind

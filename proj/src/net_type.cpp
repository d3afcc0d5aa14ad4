#include "boolnet/net_type.hpp"

namespace boolnet {

std::vector<Interaction> NetType::members() const {
  std::vector<Interaction> out;
  for (Interaction i : all_interactions()) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string NetType::to_string() const {
  std::string out;
  for (Interaction i : members()) {
    if (!out.empty()) out += ',';
    out += boolnet::to_string(i);
  }
  return out;
}

std::optional<NetType> NetType::parse(std::string_view s) {
  NetType t;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(pos, comma - pos);
    // trim spaces
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) return std::nullopt;
    auto i = interaction_from_string(tok);
    if (!i) return std::nullopt;
    if (t.contains(*i)) return std::nullopt;
    t = t.with(*i);
    if (comma == s.size()) break;
    pos = comma + 1;
  }
  if (t.empty()) return std::nullopt;
  return t;
}

}  // namespace boolnet

#include "sringkit/config.hpp"

#include <sstream>

#include "sringkit/errors.hpp"

namespace sringkit {

const Caps& Caps::defaults() {
  static const Caps caps{};
  return caps;
}

void Caps::set(const std::string& key, std::uint64_t value) {
  if (key == "group_order") group_order = value;
  else if (key == "subgroup_lattice") subgroup_lattice = value;
  else if (key == "aut_elements") aut_elements = value;
  else if (key == "closure") closure = value;
  else if (key == "aut_search_order") aut_search_order = value;
  else if (key == "search_nodes") search_nodes = value;
  else if (key == "aut_lattice") aut_lattice = value;
  else if (key == "ci_group") ci_group = value;
  else throw Error("unknown cap '" + key + "'");
}

void Caps::load(std::istream& in) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    std::uint64_t v = 0;
    std::istringstream vs(val);
    if (!(vs >> v) || !vs.eof())
      throw Error("config line " + std::to_string(lineno) + ": bad value '" + val + "'");
    set(key, v);
  }
}

}  // namespace sringkit

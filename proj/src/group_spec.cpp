#include "odg/group_spec.hpp"

#include <cstdlib>
#include <optional>
#include <vector>

#include "odg/errors.hpp"

namespace odg {

namespace {

std::int64_t parse_number(const std::string& text, const std::string& context) {
  if (text.empty()) throw spec_parse_error("missing number in '" + context + "'");
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw spec_parse_error("bad number '" + text + "' in '" + context + "'");
  }
  if (pos != text.size())
    throw spec_parse_error("bad number '" + text + "' in '" + context + "'");
  return value;
}

FiniteGroup parse_atom(const std::string& atom, std::int64_t max_order) {
  const auto colon = atom.find(':');
  if (colon == std::string::npos)
    throw spec_parse_error("expected '<kind>:<n>' in '" + atom + "'");
  const std::string kind = atom.substr(0, colon);
  const std::string arg = atom.substr(colon + 1);
  try {
    if (kind == "Z") return cyclic_group(parse_number(arg, atom), max_order);
    if (kind == "D") return dihedral_group(parse_number(arg, atom), max_order);
    if (kind == "U") return units_group(parse_number(arg, atom), max_order);
    if (kind == "S")
      return symmetric_group(static_cast<int>(parse_number(arg, atom)), max_order);
    if (kind == "A")
      return alternating_group(static_cast<int>(parse_number(arg, atom)), max_order);
    if (kind == "EA") {
      const auto caret = arg.find('^');
      if (caret == std::string::npos)
        throw spec_parse_error("expected 'EA:p^k' in '" + atom + "'");
      const std::int64_t p = parse_number(arg.substr(0, caret), atom);
      const std::int64_t k = parse_number(arg.substr(caret + 1), atom);
      return elementary_abelian(p, static_cast<int>(k), max_order);
    }
  } catch (const std::invalid_argument& e) {
    throw spec_parse_error("invalid '" + atom + "': " + e.what());
  }
  throw spec_parse_error("unknown group kind '" + kind + "'");
}

}  // namespace

FiniteGroup parse_group_spec(const std::string& spec, std::int64_t max_order) {
  std::vector<std::string> atoms;
  std::string current;
  for (char c : spec) {
    if (c == 'x') {
      atoms.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  atoms.push_back(current);

  std::optional<FiniteGroup> result;
  for (const auto& atom : atoms) {
    FiniteGroup next = parse_atom(atom, max_order);
    if (!result) {
      result = std::move(next);
    } else {
      result = direct_product(*result, next, max_order);
    }
  }
  return *std::move(result);
}

}  // namespace odg

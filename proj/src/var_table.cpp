#include "qsymm/var_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsymm {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && a->names() == b->names());
}

}  // namespace qsymm

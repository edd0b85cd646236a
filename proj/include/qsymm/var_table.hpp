#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsymm {

// Exponent vectors are fixed-width arrays; every table used by the library
// fits (largest: a,b,c,d,q,z plus a few spare slots).
inline constexpr std::size_t kMaxVars = 10;

class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws if absent

 private:
  std::vector<std::string> names_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names);
bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace qsymm

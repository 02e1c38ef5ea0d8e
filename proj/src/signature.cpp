#include "supra/signature.hpp"

namespace supra {

Signature::Signature() {
  SortId b = add_sort("bool");
  (void)b;
  add_symbol({"true", {}, kBoolSort, true, SymbolKind::Builtin});
  add_symbol({"false", {}, kBoolSort, true, SymbolKind::Builtin});
}

SortId Signature::add_sort(const std::string& name) {
  auto it = sort_index_.find(name);
  if (it != sort_index_.end()) return it->second;
  SortId id = static_cast<SortId>(sorts_.size());
  sorts_.push_back(Sort{name});
  sort_index_.emplace(name, id);
  return id;
}

SymbolId Signature::add_symbol(SymbolDecl decl) {
  if (symbol_index_.count(decl.name))
    throw ConfigError("duplicate symbol declaration: " + decl.name);
  if (decl.result_sort >= sorts_.size())
    throw ConfigError("unknown result sort for symbol " + decl.name);
  for (SortId s : decl.arg_sorts)
    if (s >= sorts_.size())
      throw ConfigError("unknown argument sort for symbol " + decl.name);
  SymbolId id = static_cast<SymbolId>(symbols_.size());
  symbol_index_.emplace(decl.name, id);
  symbols_.push_back(std::move(decl));
  return id;
}

std::optional<SortId> Signature::find_sort(const std::string& name) const {
  auto it = sort_index_.find(name);
  if (it == sort_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<SymbolId> Signature::find_symbol(const std::string& name) const {
  auto it = symbol_index_.find(name);
  if (it == symbol_index_.end()) return std::nullopt;
  return it->second;
}

bool Signature::has_uncomputable_symbol() const {
  for (const auto& s : symbols_)
    if (!s.computable) return true;
  return false;
}

std::vector<SymbolId> Signature::constants_of_sort(SortId sort) const {
  std::vector<SymbolId> out;
  for (SymbolId i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].is_constant() && symbols_[i].result_sort == sort)
      out.push_back(i);
  return out;
}

}  // namespace supra

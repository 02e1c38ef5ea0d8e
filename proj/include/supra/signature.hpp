#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supra {

using SortId = std::uint32_t;
using SymbolId = std::uint32_t;

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SortError : std::runtime_error {
  explicit SortError(const std::string& what) : std::runtime_error(what) {}
};

struct Sort {
  std::string name;
};

enum class SymbolKind { User, Builtin, InputSkolem, ExistSkolem };

struct SymbolDecl {
  std::string name;
  std::vector<SortId> arg_sorts;
  SortId result_sort = 0;
  bool computable = true;
  SymbolKind kind = SymbolKind::User;

  bool is_constant() const { return arg_sorts.empty(); }
};

/// Multi-sorted signature with a computable/uncomputable split.
///
/// The `bool` sort and its two computable constants `true` and `false` are
/// built in; they carry fixed ids so the rest of the engine can rely on them.
class Signature {
 public:
  static constexpr SortId kBoolSort = 0;
  static constexpr SymbolId kTrue = 0;
  static constexpr SymbolId kFalse = 1;

  Signature();

  /// Adds a sort; returns the existing id when the name is already present.
  SortId add_sort(const std::string& name);

  /// Adds a symbol. Throws ConfigError on duplicate names or unknown sorts.
  SymbolId add_symbol(SymbolDecl decl);

  std::optional<SortId> find_sort(const std::string& name) const;
  std::optional<SymbolId> find_symbol(const std::string& name) const;

  const Sort& sort(SortId id) const { return sorts_.at(id); }
  const SymbolDecl& symbol(SymbolId id) const { return symbols_.at(id); }
  std::size_t num_sorts() const { return sorts_.size(); }
  std::size_t num_symbols() const { return symbols_.size(); }

  bool is_computable(SymbolId id) const { return symbols_.at(id).computable; }
  bool has_uncomputable_symbol() const;

  /// Constants of the given result sort, in declaration order.
  std::vector<SymbolId> constants_of_sort(SortId sort) const;

 private:
  std::vector<Sort> sorts_;
  std::vector<SymbolDecl> symbols_;
  std::map<std::string, SortId> sort_index_;
  std::map<std::string, SymbolId> symbol_index_;
};

}  // namespace supra

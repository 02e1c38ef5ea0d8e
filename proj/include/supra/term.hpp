#pragma once

#include <memory>
#include <string>
#include <vector>

#include "supra/signature.hpp"

namespace supra {

using VarId = std::uint32_t;

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Immutable first-order term: a variable or a symbol application.
/// Every node knows its sort; shared freely across threads.
class Term {
 public:
  static TermPtr var(VarId id, SortId sort, std::string name);
  static TermPtr app(SymbolId symbol, SortId result_sort, std::vector<TermPtr> args);

  bool is_var() const { return is_var_; }
  bool is_app() const { return !is_var_; }

  VarId var_id() const { return var_id_; }
  const std::string& var_name() const { return var_name_; }
  SymbolId symbol() const { return symbol_; }
  SortId sort() const { return sort_; }
  const std::vector<TermPtr>& args() const { return args_; }

 private:
  Term() = default;

  bool is_var_ = false;
  VarId var_id_ = 0;
  std::string var_name_;
  SymbolId symbol_ = 0;
  SortId sort_ = 0;
  std::vector<TermPtr> args_;
};

/// Builds an application, checking argument sorts against the declaration.
TermPtr make_app(const Signature& sig, SymbolId symbol, std::vector<TermPtr> args);
TermPtr make_const(const Signature& sig, SymbolId symbol);

bool term_equal(const TermPtr& a, const TermPtr& b);
bool is_ground(const TermPtr& t);
bool contains_var(const TermPtr& t, VarId v);
bool contains_subterm(const TermPtr& t, const TermPtr& sub);
bool is_computable(const TermPtr& t, const Signature& sig);
std::size_t term_size(const TermPtr& t);
std::uint32_t term_depth(const TermPtr& t);

/// All occurrences of `from` in `t` replaced by `to`.
TermPtr replace_all(const TermPtr& t, const TermPtr& from, const TermPtr& to);

/// Subterm at an argument-index path; nullptr when the path is invalid.
TermPtr subterm_at(const TermPtr& t, const std::vector<std::uint32_t>& path);

/// Variables in first-occurrence order (no duplicates).
void collect_vars(const TermPtr& t, std::vector<TermPtr>& out);

std::string to_string(const TermPtr& t, const Signature& sig);

/// Run-scoped fresh variable factory. Names are "V<id>".
class VarGen {
 public:
  explicit VarGen(VarId next = 0) : next_(next) {}
  TermPtr fresh(SortId sort) {
    VarId id = next_++;
    return Term::var(id, sort, "V" + std::to_string(id));
  }
  VarId peek() const { return next_; }
  void reserve(VarId at_least) {
    if (next_ < at_least) next_ = at_least;
  }

 private:
  VarId next_;
};

}  // namespace supra

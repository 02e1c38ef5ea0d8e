#pragma once

#include <optional>

#include "supra/program_term.hpp"

namespace supra {

struct SubstError : std::runtime_error {
  explicit SubstError(const std::string& what) : std::runtime_error(what) {}
};

/// Sort-preserving variable-to-term mapping. Bindings added through extend()
/// keep the mapping idempotent: no range term mentions a domain variable.
class Substitution {
 public:
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  const TermPtr* lookup(VarId v) const;

  /// Binds `var` to `value` directly. Throws SubstError on sort mismatch.
  void bind(const TermPtr& var, TermPtr value);

  /// Binds after applying the current substitution to `value` and rewriting
  /// existing ranges, so the result stays idempotent.
  void extend(const TermPtr& var, TermPtr value);

  TermPtr apply(const TermPtr& t) const;
  ProgramPtr apply(const ProgramPtr& p) const;

  /// Bindings in insertion order (variable term, value).
  const std::vector<std::pair<TermPtr, TermPtr>>& bindings() const { return bindings_; }

  std::string to_string(const Signature& sig) const;

 private:
  std::vector<std::pair<TermPtr, TermPtr>> bindings_;
};

enum class UnifyFailure { None, Clash, OccursCheck };

struct UnifyResult {
  std::optional<Substitution> subst;
  UnifyFailure failure = UnifyFailure::None;

  bool ok() const { return subst.has_value(); }
};

/// Most general unifier of the given pairs; idempotent on success.
UnifyResult mgu(const std::vector<std::pair<TermPtr, TermPtr>>& pairs);
UnifyResult mgu(const TermPtr& a, const TermPtr& b);

}  // namespace supra

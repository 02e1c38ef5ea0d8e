#pragma once

#include <functional>

#include "supra/literal.hpp"

namespace supra {

enum class Cmp { Greater, Less, Equal, Incomparable };

inline Cmp flip(Cmp c) {
  if (c == Cmp::Greater) return Cmp::Less;
  if (c == Cmp::Less) return Cmp::Greater;
  return c;
}

/// Strict total order on symbols; rank 0 is the greatest.
class Precedence {
 public:
  Precedence() = default;
  explicit Precedence(std::vector<SymbolId> descending);

  bool greater(SymbolId a, SymbolId b) const { return rank_.at(a) < rank_.at(b); }
  Cmp compare(SymbolId a, SymbolId b) const;
  const std::vector<SymbolId>& descending() const { return descending_; }

 private:
  std::vector<std::uint32_t> rank_;
  std::vector<SymbolId> descending_;
};

/// Builds a precedence where every uncomputable symbol exceeds every
/// computable one. `hints` lists symbols from greatest to least and may only
/// reorder within a class; crossing the partition is a configuration error.
/// Unhinted symbols follow: true/false top of the computable class, user
/// symbols by descending name, machine-introduced Skolems at the bottom of
/// their class.
Precedence make_partitioned_precedence(const Signature& sig,
                                       const std::vector<SymbolId>& hints = {});

/// Diagnostic mode: the listed symbols (greatest first) take the top ranks in
/// the given order, unlisted user symbols follow by descending name, then
/// Skolems, then true/false at the very bottom.
Precedence make_listed_precedence(const Signature& sig,
                                  const std::vector<SymbolId>& listed);

/// Ordinal of the form finite + omega_coeff * w; compared lexicographically
/// on (omega_coeff, finite); added and scaled componentwise.
struct OrdinalWeight {
  std::uint64_t omega_coeff = 0;
  std::uint64_t finite = 0;

  OrdinalWeight operator+(const OrdinalWeight& o) const {
    return {omega_coeff + o.omega_coeff, finite + o.finite};
  }
  OrdinalWeight scaled(std::uint64_t n) const { return {omega_coeff * n, finite * n}; }
  bool operator==(const OrdinalWeight& o) const = default;
};

Cmp compare(const OrdinalWeight& a, const OrdinalWeight& b);

/// Transfinite weight function. Computable symbols get finite weights,
/// uncomputable ones weights of at least omega. Validation also enforces a
/// positive minimal constant weight and the zero-weight-unary restriction.
class WeightFunction {
 public:
  WeightFunction() = default;
  WeightFunction(const Signature& sig, std::vector<OrdinalWeight> weights);

  /// Default weights: 1 for computable symbols, omega + 1 for uncomputable.
  static WeightFunction uniform(const Signature& sig);

  const OrdinalWeight& operator()(SymbolId s) const { return weights_.at(s); }
  void validate(const Signature& sig, const Precedence& prec) const;

 private:
  std::vector<OrdinalWeight> weights_;
};

/// Weight of a term as a linear expression over its variables.
struct LinearWeightExpr {
  OrdinalWeight constant;
  std::map<VarId, std::uint64_t> var_coeffs;
};

LinearWeightExpr term_weight(const TermPtr& t, const WeightFunction& w);

/// Simplification order interface.
class TermOrder {
 public:
  virtual ~TermOrder() = default;
  virtual Cmp compare(const TermPtr& s, const TermPtr& t) const = 0;

  bool greater(const TermPtr& s, const TermPtr& t) const {
    return compare(s, t) == Cmp::Greater;
  }
  bool greater_equal(const TermPtr& s, const TermPtr& t) const {
    Cmp c = compare(s, t);
    return c == Cmp::Greater || c == Cmp::Equal;
  }
};

class Lpo final : public TermOrder {
 public:
  explicit Lpo(Precedence prec) : prec_(std::move(prec)) {}
  Cmp compare(const TermPtr& s, const TermPtr& t) const override;

 private:
  bool gt(const TermPtr& s, const TermPtr& t) const;
  Precedence prec_;
};

class Tkbo final : public TermOrder {
 public:
  Tkbo(Precedence prec, WeightFunction w)
      : prec_(std::move(prec)), weights_(std::move(w)) {}
  Cmp compare(const TermPtr& s, const TermPtr& t) const override;

 private:
  bool gt(const TermPtr& s, const TermPtr& t) const;
  Precedence prec_;
  WeightFunction weights_;
};

/// Multiset extension of a strict partial order given by elem_compare.
template <typename T, typename F>
Cmp bag_compare(std::vector<T> xs, std::vector<T> ys, F elem_compare) {
  // Cancel elements that compare Equal pairwise.
  for (std::size_t i = 0; i < xs.size();) {
    bool cancelled = false;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (elem_compare(xs[i], ys[j]) == Cmp::Equal) {
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(j));
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++i;
  }
  if (xs.empty() && ys.empty()) return Cmp::Equal;
  auto dominates = [&](const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty()) return false;
    for (const T& y : b) {
      bool covered = false;
      for (const T& x : a)
        if (elem_compare(x, y) == Cmp::Greater) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  };
  if (dominates(xs, ys)) return Cmp::Greater;
  if (dominates(ys, xs)) return Cmp::Less;
  return Cmp::Incomparable;
}

/// Equality maps to {s, t}, disequality to {s, s, t, t}; bags compared with
/// the multiset extension of the term order.
Cmp literal_compare(const Literal& a, const Literal& b, const TermOrder& ord);
Cmp clause_compare(const Clause& a, const Clause& b, const TermOrder& ord);

/// Indices of the maximal literals: those with no strictly greater literal.
std::vector<std::size_t> selected_literals(const Clause& c, const TermOrder& ord);

enum class SelectionMode {
  MaximalOnly,      // all maximal literals
  PreferNegative,   // all negative literals when present, else all maximal
};

std::vector<std::size_t> select_literals(const Clause& c, const TermOrder& ord,
                                         SelectionMode mode);

}  // namespace supra

#include "supra/orders.hpp"

#include <algorithm>

namespace supra {

Precedence::Precedence(std::vector<SymbolId> descending)
    : descending_(std::move(descending)) {
  SymbolId max_id = 0;
  for (SymbolId s : descending_) max_id = std::max(max_id, s);
  rank_.assign(max_id + 1, 0);
  std::vector<bool> seen(max_id + 1, false);
  for (std::uint32_t r = 0; r < descending_.size(); ++r) {
    SymbolId s = descending_[r];
    if (seen[s]) throw ConfigError("symbol listed twice in precedence");
    seen[s] = true;
    rank_[s] = r;
  }
}

Cmp Precedence::compare(SymbolId a, SymbolId b) const {
  if (a == b) return Cmp::Equal;
  return greater(a, b) ? Cmp::Greater : Cmp::Less;
}

namespace {

// Descending-name order; ties cannot happen (names are unique).
void sort_by_name_desc(std::vector<SymbolId>& syms, const Signature& sig) {
  std::sort(syms.begin(), syms.end(), [&](SymbolId a, SymbolId b) {
    return sig.symbol(a).name > sig.symbol(b).name;
  });
}

struct ClassSplit {
  std::vector<SymbolId> hinted;
  std::vector<SymbolId> builtins;  // true, false
  std::vector<SymbolId> user;
  std::vector<SymbolId> skolems;
};

ClassSplit split_class(const Signature& sig, bool computable,
                       const std::vector<SymbolId>& hints) {
  ClassSplit out;
  for (SymbolId h : hints)
    if (sig.symbol(h).computable == computable) out.hinted.push_back(h);
  auto hinted = [&](SymbolId s) {
    return std::find(hints.begin(), hints.end(), s) != hints.end();
  };
  for (SymbolId s = 0; s < sig.num_symbols(); ++s) {
    const SymbolDecl& d = sig.symbol(s);
    if (d.computable != computable || hinted(s)) continue;
    switch (d.kind) {
      case SymbolKind::Builtin: out.builtins.push_back(s); break;
      case SymbolKind::User: out.user.push_back(s); break;
      default: out.skolems.push_back(s); break;
    }
  }
  sort_by_name_desc(out.user, sig);
  sort_by_name_desc(out.skolems, sig);
  // true above false
  std::sort(out.builtins.begin(), out.builtins.end(), [&](SymbolId a, SymbolId b) {
    return sig.symbol(a).name > sig.symbol(b).name;
  });
  return out;
}

}  // namespace

Precedence make_partitioned_precedence(const Signature& sig,
                                       const std::vector<SymbolId>& hints) {
  // A computable symbol listed above an uncomputable one would cross the
  // partition.
  bool seen_computable = false;
  SymbolId last_comp = 0;
  for (SymbolId h : hints) {
    if (sig.is_computable(h)) {
      seen_computable = true;
      last_comp = h;
    } else if (seen_computable) {
      throw ConfigError("precedence hint places computable symbol " +
                        sig.symbol(last_comp).name + " above uncomputable " +
                        sig.symbol(h).name);
    }
  }
  std::vector<SymbolId> order;
  for (bool computable : {false, true}) {
    ClassSplit cls = split_class(sig, computable, hints);
    order.insert(order.end(), cls.hinted.begin(), cls.hinted.end());
    order.insert(order.end(), cls.builtins.begin(), cls.builtins.end());
    order.insert(order.end(), cls.user.begin(), cls.user.end());
    order.insert(order.end(), cls.skolems.begin(), cls.skolems.end());
  }
  return Precedence(std::move(order));
}

Precedence make_listed_precedence(const Signature& sig,
                                  const std::vector<SymbolId>& listed) {
  std::vector<SymbolId> order(listed);
  auto in_list = [&](SymbolId s) {
    return std::find(listed.begin(), listed.end(), s) != listed.end();
  };
  std::vector<SymbolId> user, skolems, builtins;
  for (SymbolId s = 0; s < sig.num_symbols(); ++s) {
    if (in_list(s)) continue;
    switch (sig.symbol(s).kind) {
      case SymbolKind::Builtin: builtins.push_back(s); break;
      case SymbolKind::User: user.push_back(s); break;
      default: skolems.push_back(s); break;
    }
  }
  sort_by_name_desc(user, sig);
  sort_by_name_desc(skolems, sig);
  sort_by_name_desc(builtins, sig);
  order.insert(order.end(), user.begin(), user.end());
  order.insert(order.end(), skolems.begin(), skolems.end());
  order.insert(order.end(), builtins.begin(), builtins.end());
  return Precedence(std::move(order));
}

Cmp compare(const OrdinalWeight& a, const OrdinalWeight& b) {
  if (a.omega_coeff != b.omega_coeff)
    return a.omega_coeff > b.omega_coeff ? Cmp::Greater : Cmp::Less;
  if (a.finite != b.finite) return a.finite > b.finite ? Cmp::Greater : Cmp::Less;
  return Cmp::Equal;
}

WeightFunction::WeightFunction(const Signature& sig, std::vector<OrdinalWeight> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() != sig.num_symbols())
    throw ConfigError("weight function must cover every symbol");
}

WeightFunction WeightFunction::uniform(const Signature& sig) {
  std::vector<OrdinalWeight> w(sig.num_symbols());
  for (SymbolId s = 0; s < sig.num_symbols(); ++s)
    w[s] = sig.is_computable(s) ? OrdinalWeight{0, 1} : OrdinalWeight{1, 1};
  return WeightFunction(sig, std::move(w));
}

void WeightFunction::validate(const Signature& sig, const Precedence& prec) const {
  for (SymbolId s = 0; s < sig.num_symbols(); ++s) {
    const SymbolDecl& d = sig.symbol(s);
    const OrdinalWeight& w = weights_[s];
    if (d.computable && w.omega_coeff != 0)
      throw ConfigError("computable symbol " + d.name + " must have finite weight");
    if (!d.computable && w.omega_coeff == 0)
      throw ConfigError("uncomputable symbol " + d.name + " needs weight at least omega");
    if (d.is_constant() && w.omega_coeff == 0 && w.finite == 0)
      throw ConfigError("constant " + d.name + " must have positive weight");
    if (d.arg_sorts.size() == 1 && w.omega_coeff == 0 && w.finite == 0) {
      // A zero-weight unary symbol must be the precedence maximum.
      for (SymbolId o = 0; o < sig.num_symbols(); ++o)
        if (o != s && !prec.greater(s, o))
          throw ConfigError("zero-weight unary symbol " + d.name +
                            " must be greatest in the precedence");
    }
  }
}

LinearWeightExpr term_weight(const TermPtr& t, const WeightFunction& w) {
  LinearWeightExpr e;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (u->is_var()) {
      e.var_coeffs[u->var_id()] += 1;
      return;
    }
    e.constant = e.constant + w(u->symbol());
    for (const auto& a : u->args()) walk(a);
  };
  walk(t);
  return e;
}

namespace {

bool coeffs_geq(const LinearWeightExpr& a, const LinearWeightExpr& b) {
  for (const auto& [v, c] : b.var_coeffs) {
    auto it = a.var_coeffs.find(v);
    if (it == a.var_coeffs.end() || it->second < c) return false;
  }
  return true;
}

// |s| > |t| under every grounding: strictly larger constant part and
// coefficient-wise at least as many occurrences of every variable.
bool weight_gt(const LinearWeightExpr& a, const LinearWeightExpr& b) {
  return compare(a.constant, b.constant) == Cmp::Greater && coeffs_geq(a, b);
}

bool weight_geq(const LinearWeightExpr& a, const LinearWeightExpr& b) {
  Cmp c = compare(a.constant, b.constant);
  return (c == Cmp::Greater || c == Cmp::Equal) && coeffs_geq(a, b);
}

}  // namespace

Cmp Lpo::compare(const TermPtr& s, const TermPtr& t) const {
  if (term_equal(s, t)) return Cmp::Equal;
  if (gt(s, t)) return Cmp::Greater;
  if (gt(t, s)) return Cmp::Less;
  return Cmp::Incomparable;
}

bool Lpo::gt(const TermPtr& s, const TermPtr& t) const {
  if (s->is_var()) return false;
  if (t->is_var()) return contains_var(s, t->var_id());  // proper subterm
  // some argument of s is >= t
  for (const auto& si : s->args())
    if (term_equal(si, t) || gt(si, t)) return true;
  if (s->symbol() == t->symbol()) {
    const auto& xs = s->args();
    const auto& ys = t->args();
    std::size_t k = 0;
    while (k < xs.size() && term_equal(xs[k], ys[k])) ++k;
    if (k == xs.size() || !gt(xs[k], ys[k])) return false;
    for (const auto& tj : ys)
      if (!gt(s, tj)) return false;
    return true;
  }
  if (prec_.greater(s->symbol(), t->symbol())) {
    for (const auto& tj : t->args())
      if (!gt(s, tj)) return false;
    return true;
  }
  return false;
}

Cmp Tkbo::compare(const TermPtr& s, const TermPtr& t) const {
  if (term_equal(s, t)) return Cmp::Equal;
  if (gt(s, t)) return Cmp::Greater;
  if (gt(t, s)) return Cmp::Less;
  return Cmp::Incomparable;
}

bool Tkbo::gt(const TermPtr& s, const TermPtr& t) const {
  LinearWeightExpr ws = term_weight(s, weights_);
  LinearWeightExpr wt = term_weight(t, weights_);
  if (weight_gt(ws, wt)) return true;
  if (!weight_geq(ws, wt)) return false;
  if (s->is_var() || t->is_var()) return false;
  if (prec_.greater(s->symbol(), t->symbol())) return true;
  if (s->symbol() != t->symbol()) return false;
  const auto& xs = s->args();
  const auto& ys = t->args();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (term_equal(xs[i], ys[i])) continue;
    return gt(xs[i], ys[i]);
  }
  return false;
}

namespace {

std::vector<TermPtr> literal_bag(const Literal& l) {
  if (l.positive) return {l.lhs, l.rhs};
  return {l.lhs, l.lhs, l.rhs, l.rhs};
}

}  // namespace

Cmp literal_compare(const Literal& a, const Literal& b, const TermOrder& ord) {
  return bag_compare(literal_bag(a), literal_bag(b),
                     [&](const TermPtr& x, const TermPtr& y) { return ord.compare(x, y); });
}

Cmp clause_compare(const Clause& a, const Clause& b, const TermOrder& ord) {
  std::vector<const Literal*> xs, ys;
  for (const auto& l : a.literals) xs.push_back(&l);
  for (const auto& l : b.literals) ys.push_back(&l);
  return bag_compare(xs, ys, [&](const Literal* x, const Literal* y) {
    return literal_compare(*x, *y, ord);
  });
}

std::vector<std::size_t> selected_literals(const Clause& c, const TermOrder& ord) {
  if (c.empty()) throw std::invalid_argument("selection on empty clause");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.literals.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < c.literals.size(); ++j) {
      if (j == i) continue;
      if (literal_compare(c.literals[j], c.literals[i], ord) == Cmp::Greater) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> select_literals(const Clause& c, const TermOrder& ord,
                                         SelectionMode mode) {
  if (mode == SelectionMode::PreferNegative) {
    std::vector<std::size_t> negs;
    for (std::size_t i = 0; i < c.literals.size(); ++i)
      if (!c.literals[i].positive) negs.push_back(i);
    if (!negs.empty()) return negs;
  }
  return selected_literals(c, ord);
}

}  // namespace supra

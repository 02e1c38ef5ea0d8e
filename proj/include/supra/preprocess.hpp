#pragma once

#include "supra/formula.hpp"
#include "supra/literal.hpp"

namespace supra {

/// Rewrites every predicate atom P(t...) into the equality P(t...) = true.
FormulaPtr encode_predicates(const FormulaPtr& f, const Signature& sig);
Specification encode_predicates(Specification spec);

struct PreprocessResult {
  /// Specification signature extended with the Skolem symbols introduced here.
  Signature signature;
  /// One answer clause per CNF clause; every answer is the bare output
  /// variable.
  std::vector<AnswerClause> initial;
  /// Skolem constants standing for the inputs, aligned with spec.inputs.
  std::vector<SymbolId> input_skolems;
  TermPtr output_var;
};

/// Negates the wrapped specification formula, replaces inputs by fresh
/// computable Skolem constants, skolemizes remaining existentials with
/// uncomputable symbols, clausifies by distribution, and attaches the output
/// variable as the answer of every clause.
PreprocessResult preprocess(const Specification& spec, bool inject_bool_axiom = false);

}  // namespace supra

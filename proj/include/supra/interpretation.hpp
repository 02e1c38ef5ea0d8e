#pragma once

#include "supra/formula.hpp"
#include "supra/literal.hpp"
#include "supra/program_term.hpp"

namespace supra {

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

struct EnumerationGuardError : std::runtime_error {
  long double bound;
  explicit EnumerationGuardError(long double b)
      : std::runtime_error("interpretation count " + std::to_string((double)b) +
                           " exceeds the enumeration guard"),
        bound(b) {}
};

/// Finite interpretation: a carrier size per sort and a total function table
/// per symbol. The bool carrier is fixed to two elements with true = 1 and
/// false = 0.
struct Interpretation {
  std::vector<std::uint32_t> carrier;                 // per SortId
  std::vector<std::vector<std::uint32_t>> tables;     // per SymbolId, row-major

  std::uint32_t eval_symbol(const Signature& sig, SymbolId s,
                            const std::vector<std::uint32_t>& args) const;
};

/// Deterministic stream over every interpretation of the signature with
/// non-bool carrier sizes ranging from 1 to max_size (or exactly max_size in
/// fixed mode). Construction refuses when the total count exceeds 1e7.
class InterpretationEnumerator {
 public:
  InterpretationEnumerator(const Signature& sig, std::uint32_t max_size,
                           bool fixed_size = false);

  std::optional<Interpretation> next();

  static long double count(const Signature& sig, std::uint32_t max_size,
                           bool fixed_size = false);

 private:
  bool advance_tables();
  bool advance_sizes();
  void reset_tables();

  const Signature& sig_;
  std::uint32_t max_size_;
  bool fixed_;
  std::vector<SortId> free_sorts_;
  std::vector<std::uint32_t> sizes_;     // per free sort
  Interpretation current_;
  std::vector<std::vector<std::uint32_t>> table_counters_;
  bool done_ = false;
  bool first_ = true;
};

using Env = std::map<VarId, std::uint32_t>;

std::uint32_t eval_term(const TermPtr& t, const Signature& sig, const Interpretation& I,
                        const Env& env);
std::uint32_t eval_program(const ProgramPtr& p, const Signature& sig,
                           const Interpretation& I, const Env& env);
bool eval_literal(const Literal& l, const Signature& sig, const Interpretation& I,
                  const Env& env);
bool eval_clause(const Clause& c, const Signature& sig, const Interpretation& I,
                 const Env& env);
bool eval_formula(const FormulaPtr& f, const Signature& sig, const Interpretation& I,
                  Env& env);

/// Universal closure of the clause in I.
bool holds_clause(const Clause& c, const Signature& sig, const Interpretation& I);

/// Answer-clause semantics: for every valuation of the clause and answer
/// variables, the clause holds or F[inputs := Skolem values, output := answer
/// value] holds. `sig` is the extended signature interpreting the Skolems.
bool holds_answer_clause(const AnswerClause& ac, const Specification& spec,
                         const Signature& sig, const std::vector<SymbolId>& input_skolems,
                         const Interpretation& I);

struct SolutionVerdict {
  bool verified = false;
  std::uint32_t checked_size = 0;
  std::optional<Interpretation> counterexample;
  Env counter_inputs;
  std::string message;
};

/// Bounded solution check: evaluates the specification formula with the
/// program plugged in for the output, over every interpretation up to
/// max_size and every input valuation. Reports the first counterexample.
SolutionVerdict check_solution(const Specification& spec, const ProgramPtr& program,
                               std::uint32_t max_size);

}  // namespace supra

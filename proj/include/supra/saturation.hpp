#pragma once

#include <memory>

#include "supra/calculus.hpp"
#include "supra/preprocess.hpp"

namespace supra {

struct Limits {
  std::uint64_t max_iterations = 10000;
  std::uint64_t max_clauses = 100000;
  double timeout_seconds = 60.0;
};

enum class OrderingChoice { Lpo, Tkbo };

struct SaturationConfig {
  OrderingChoice ordering = OrderingChoice::Lpo;
  bool partitioned = true;
  std::vector<SymbolId> precedence;  // within-class hints, or the full list
                                     // when partitioned is off
  SelectionMode selection = SelectionMode::MaximalOnly;
  bool abs_enabled = true;
  bool all_solutions = false;
  std::uint32_t size_weight = 1;
  std::uint32_t age_weight = 1;
  Limits limits;
};

struct OrderSetup {
  Precedence precedence;
  std::shared_ptr<const TermOrder> order;
};

OrderSetup build_order(const Signature& sig, const SaturationConfig& cfg);

/// Smaller sorts first; the empty clause outranks everything.
struct Priority {
  bool empty_clause = false;
  std::uint64_t key = 0;
  std::uint64_t birth = 0;

  bool operator<(const Priority& o) const {
    if (empty_clause != o.empty_clause) return empty_clause;
    if (key != o.key) return key < o.key;
    return birth < o.birth;
  }
};

Priority clause_priority(const AnswerClause& ac, std::uint64_t age,
                         std::uint32_t size_weight = 1, std::uint32_t age_weight = 1);

enum class Outcome { Success, Saturated, LimitReached };

struct SolutionRecord {
  std::uint64_t clause_id = 0;
  AnswerClause success_clause;
};

struct SaturationStats {
  std::uint64_t generated = 0;   // rule conclusions produced
  std::uint64_t retained = 0;    // clauses stored (initial + kept conclusions)
  std::uint64_t activated = 0;
  std::uint64_t discarded_tautology = 0;
  std::uint64_t discarded_duplicate = 0;
  double elapsed_seconds = 0.0;
};

struct SynthesisResult {
  Outcome outcome = Outcome::Saturated;
  std::string limit_reason;
  std::vector<SolutionRecord> solutions;
  std::vector<Inference> inference_log;
  std::vector<AnswerClause> initial;  // canonical, by id
  SaturationStats stats;
};

/// Saturation event sink; the CLI wires a JSONL writer through this.
class TraceSink {
 public:
  virtual ~TraceSink() = default;
  virtual void on_initial(std::uint64_t id, const AnswerClause& ac) = 0;
  virtual void on_inference(const Inference& inf) = 0;
};

/// Given-clause saturation over the initial answer-clause set.
SynthesisResult saturate(const PreprocessResult& pre, const SaturationConfig& cfg,
                         TraceSink* sink = nullptr);

struct ExtractionResult {
  ProgramPtr program;        // inputs restored, residual variables grounded
  ProgramPtr raw;            // answer as derived (Skolem constants intact)
  bool grounded = true;
  std::string error;
};

/// Replaces input Skolem constants by the input variables and grounds any
/// remaining free variable with the precedence-least computable constant of
/// its sort.
ExtractionResult extract_program(const AnswerClause& success, const Specification& spec,
                                 const PreprocessResult& pre, const Precedence& prec);

/// Collapses ite(c, q, q) and ite(t = t, q, r); semantics preserving.
ProgramPtr simplify_program(const ProgramPtr& p);

}  // namespace supra

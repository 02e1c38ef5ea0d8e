#include "supra/saturation.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <set>

namespace supra {

OrderSetup build_order(const Signature& sig, const SaturationConfig& cfg) {
  Precedence prec = cfg.partitioned ? make_partitioned_precedence(sig, cfg.precedence)
                                    : make_listed_precedence(sig, cfg.precedence);
  std::shared_ptr<const TermOrder> ord;
  if (cfg.ordering == OrderingChoice::Lpo) {
    ord = std::make_shared<Lpo>(prec);
  } else {
    WeightFunction w = WeightFunction::uniform(sig);
    w.validate(sig, prec);
    ord = std::make_shared<Tkbo>(prec, w);
  }
  return {std::move(prec), std::move(ord)};
}

Priority clause_priority(const AnswerClause& ac, std::uint64_t age,
                         std::uint32_t size_weight, std::uint32_t age_weight) {
  Priority p;
  p.empty_clause = ac.clause.empty();
  p.key = size_weight * clause_weight(ac.clause) + age_weight * age;
  p.birth = age;
  return p;
}

namespace {

struct Stored {
  AnswerClause ac;
  std::uint64_t id = 0;
  bool active = false;
  bool dead = false;  // replaced by abstraction or discarded
};

class Saturator {
 public:
  Saturator(const PreprocessResult& pre, const SaturationConfig& cfg, TraceSink* sink)
      : pre_(pre), cfg_(cfg), sink_(sink), setup_(build_order(pre.signature, cfg)) {
    rule_cfg_.sig = &pre_.signature;
    rule_cfg_.ord = setup_.order.get();
    rule_cfg_.selection = cfg.selection;
  }

  SynthesisResult run() {
    start_ = std::chrono::steady_clock::now();
    for (const auto& ac : pre_.initial) {
      std::optional<std::uint64_t> id = insert(ac);
      if (id && sink_) sink_->on_initial(*id, clauses_[*id].ac);
      if (id) result_.initial.push_back(clauses_[*id].ac);
      if (stop_) return finish();
    }

    while (true) {
      if (auto reason = limit_hit()) {
        result_.outcome = Outcome::LimitReached;
        result_.limit_reason = *reason;
        return finish();
      }
      std::optional<std::uint64_t> given_id = pop_passive();
      if (!given_id) {
        result_.outcome = Outcome::Saturated;
        return finish();
      }
      ++result_.stats.activated;

      std::uint64_t id = *given_id;
      if (cfg_.abs_enabled) {
        id = abstract_on_activation(id);
        if (id == kDeadId || stop_) {
          if (stop_) return finish();
          continue;
        }
      }
      if (is_tautology(clauses_[id].ac.clause)) {
        clauses_[id].dead = true;
        ++result_.stats.discarded_tautology;
        continue;
      }
      clauses_[id].active = true;
      active_.push_back(id);
      // record() grows clauses_, so work on a copy of the given clause.
      const AnswerClause given = clauses_[id].ac;

      // Unary rules on the given clause, then binary rules against every
      // active clause in both premise orders.
      for (auto& g : eq_res_inferences(rule_cfg_, given)) record(std::move(g), {id});
      if (stop_) return finish();
      for (auto& g : eq_fac_inferences(rule_cfg_, given)) record(std::move(g), {id});
      if (stop_) return finish();
      for (std::uint64_t other : active_) {
        if (clauses_[other].dead) continue;
        const AnswerClause partner = clauses_[other].ac;
        for (auto& g : sup_inferences(rule_cfg_, partner, given))
          record(std::move(g), {other, id});
        if (stop_) return finish();
        if (other != id) {
          for (auto& g : sup_inferences(rule_cfg_, given, partner))
            record(std::move(g), {id, other});
          if (stop_) return finish();
        }
      }
    }
  }

 private:
  static constexpr std::uint64_t kDeadId = ~0ull;

  std::optional<std::string> limit_hit() {
    if (result_.stats.activated >= cfg_.limits.max_iterations) return "iterations";
    if (clauses_.size() >= cfg_.limits.max_clauses) return "clauses";
    if (elapsed() > cfg_.limits.timeout_seconds) return "timeout";
    return std::nullopt;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  // Canonicalizes, deduplicates, stores, and queues a clause. Returns its id
  // or nullopt when it is a variant of a live or previously seen clause.
  std::optional<std::uint64_t> insert(const AnswerClause& raw) {
    AnswerClause cleaned{remove_duplicate_literals(raw.clause), raw.answer};
    AnswerClause canon = canonicalize(cleaned);
    std::string key = to_string(canon, pre_.signature);
    if (!variant_keys_.insert(key).second) {
      ++result_.stats.discarded_duplicate;
      return std::nullopt;
    }
    std::uint64_t id = clauses_.size();
    clauses_.push_back(Stored{std::move(canon), id, false, false});
    ++result_.stats.retained;
    passive_.push({clause_priority(clauses_[id].ac, id, cfg_.size_weight, cfg_.age_weight),
                   id});
    if (clauses_[id].ac.clause.empty()) {
      result_.solutions.push_back({id, clauses_[id].ac});
      if (!cfg_.all_solutions) stop_ = true;
    }
    return id;
  }

  void record(Generated g, std::vector<std::uint64_t> premises) {
    ++result_.stats.generated;
    std::optional<std::uint64_t> id = insert(g.conclusion);
    if (!id) return;
    Inference inf;
    inf.rule = g.rule;
    inf.premises = std::move(premises);
    inf.detail = g.detail;
    inf.unifier = std::move(g.unifier);
    inf.conclusion = clauses_[*id].ac;
    inf.conclusion_id = *id;
    if (sink_) sink_->on_inference(inf);
    result_.inference_log.push_back(std::move(inf));
  }

  // Applies Abs to a fixpoint, replacing the clause. Each step is logged as
  // an inference. Returns the id of the abstracted clause (or kDeadId when a
  // step produced a duplicate of something already seen).
  std::uint64_t abstract_on_activation(std::uint64_t id) {
    while (true) {
      auto step = abstract_step(rule_cfg_, clauses_[id].ac);
      if (!step) return id;
      clauses_[id].dead = true;  // premise is replaced
      ++result_.stats.generated;
      std::optional<std::uint64_t> next = insert(step->second);
      if (!next) return kDeadId;
      Inference inf;
      inf.rule = Rule::Abs;
      inf.premises = {id};
      inf.detail = step->first;
      inf.conclusion = clauses_[*next].ac;
      inf.conclusion_id = *next;
      if (sink_) sink_->on_inference(inf);
      result_.inference_log.push_back(std::move(inf));
      if (stop_) return *next;
      id = *next;
    }
  }

  std::optional<std::uint64_t> pop_passive() {
    while (!passive_.empty()) {
      auto [prio, id] = passive_.top();
      passive_.pop();
      if (!clauses_[id].dead && !clauses_[id].active) return id;
    }
    return std::nullopt;
  }

  SynthesisResult finish() {
    if (!result_.solutions.empty()) result_.outcome = Outcome::Success;
    result_.stats.elapsed_seconds = elapsed();
    return std::move(result_);
  }

  struct QueueItem {
    Priority prio;
    std::uint64_t id;
    bool operator>(const QueueItem& o) const {
      if (!(prio < o.prio) && !(o.prio < prio)) return id > o.id;
      return o.prio < prio;
    }
  };

  const PreprocessResult& pre_;
  const SaturationConfig& cfg_;
  TraceSink* sink_;
  OrderSetup setup_;
  RuleConfig rule_cfg_;
  std::vector<Stored> clauses_;
  std::vector<std::uint64_t> active_;
  std::set<std::string> variant_keys_;
  std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<QueueItem>> passive_;
  SynthesisResult result_;
  bool stop_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SynthesisResult saturate(const PreprocessResult& pre, const SaturationConfig& cfg,
                         TraceSink* sink) {
  return Saturator(pre, cfg, sink).run();
}

namespace {

TermPtr restore_inputs_term(const TermPtr& t, const Specification& spec,
                            const PreprocessResult& pre) {
  if (t->is_var()) return t;
  for (std::size_t i = 0; i < pre.input_skolems.size(); ++i)
    if (t->symbol() == pre.input_skolems[i] && t->args().empty())
      return spec.inputs[i].var;
  std::vector<TermPtr> args;
  args.reserve(t->args().size());
  for (const auto& a : t->args()) args.push_back(restore_inputs_term(a, spec, pre));
  return Term::app(t->symbol(), t->sort(), std::move(args));
}

ProgramPtr restore_inputs(const ProgramPtr& p, const Specification& spec,
                          const PreprocessResult& pre) {
  if (p->is_leaf()) return ProgramTerm::leaf(restore_inputs_term(p->term(), spec, pre));
  return ProgramTerm::ite(restore_inputs_term(p->cond_lhs(), spec, pre),
                          restore_inputs_term(p->cond_rhs(), spec, pre),
                          restore_inputs(p->then_branch(), spec, pre),
                          restore_inputs(p->else_branch(), spec, pre));
}

}  // namespace

ExtractionResult extract_program(const AnswerClause& success, const Specification& spec,
                                 const PreprocessResult& pre, const Precedence& prec) {
  ExtractionResult out;
  out.raw = success.answer;
  // Move the clause's variables past the specification's so that restoring
  // the input variables cannot collide with them.
  VarId offset = spec.output.var->var_id() + 1;
  for (const auto& in : spec.inputs) offset = std::max(offset, in.var->var_id() + 1);
  AnswerClause shifted = rename_vars(success, offset);
  ProgramPtr restored = restore_inputs(shifted.answer, spec, pre);

  // Residual free variables represent a class of solutions; pick the
  // precedence-least computable constant of each sort.
  std::vector<TermPtr> vars;
  collect_vars(restored, vars);
  Substitution ground;
  for (const auto& v : vars) {
    bool is_input = false;
    for (const auto& in : spec.inputs)
      if (in.var->var_id() == v->var_id()) is_input = true;
    if (is_input) continue;
    std::optional<SymbolId> best;
    for (SymbolId c : spec.signature.constants_of_sort(v->sort())) {
      if (!spec.signature.is_computable(c)) continue;
      if (!best || prec.greater(*best, c)) best = c;
    }
    if (!best) {
      out.program = restored;
      out.grounded = false;
      out.error = "no computable constant of sort " +
                  spec.signature.sort(v->sort()).name + " to ground variable " +
                  v->var_name();
      return out;
    }
    ground.bind(v, make_const(spec.signature, *best));
  }
  out.program = ground.apply(restored);
  return out;
}

ProgramPtr simplify_program(const ProgramPtr& p) {
  if (p->is_leaf()) return p;
  ProgramPtr t = simplify_program(p->then_branch());
  ProgramPtr e = simplify_program(p->else_branch());
  if (term_equal(p->cond_lhs(), p->cond_rhs())) return t;
  if (program_equal(t, e)) return t;
  return ProgramTerm::ite(p->cond_lhs(), p->cond_rhs(), std::move(t), std::move(e));
}

}  // namespace supra

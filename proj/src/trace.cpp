#include "supra/trace.hpp"

#include <istream>
#include <ostream>
#include <set>

#include "json.hpp"
#include "supra/preprocess.hpp"
#include "supra/spec_parser.hpp"

namespace supra {

using nlohmann::json;

namespace {

json detail_to_json(const InferenceDetail& d) {
  json j;
  if (const auto* s = std::get_if<SupDetail>(&d)) {
    j["eq_lit"] = s->eq_lit;
    j["eq_swap"] = s->eq_swap;
    j["into_lit"] = s->into_lit;
    j["into_lhs"] = s->into_lhs;
    j["path"] = s->path;
  } else if (const auto* r = std::get_if<EqResDetail>(&d)) {
    j["lit"] = r->lit;
  } else if (const auto* f = std::get_if<EqFacDetail>(&d)) {
    j["lit1"] = f->lit1;
    j["swap1"] = f->swap1;
    j["lit2"] = f->lit2;
    j["swap2"] = f->swap2;
  } else if (const auto* a = std::get_if<AbsDetail>(&d)) {
    j["lit"] = a->lit;
    j["lhs"] = a->lhs_side;
    j["path"] = a->path;
  }
  return j;
}

json unifier_to_json(const Substitution& s, const Signature& sig) {
  json j = json::array();
  for (const auto& [var, value] : s.bindings())
    j.push_back({var->var_name(), to_string(value, sig)});
  return j;
}

std::string ordering_name(OrderingChoice c) {
  return c == OrderingChoice::Lpo ? "lpo" : "tkbo";
}

std::string selection_name(SelectionMode m) {
  return m == SelectionMode::MaximalOnly ? "maximal" : "prefer-neg";
}

}  // namespace

JsonlTraceWriter::JsonlTraceWriter(std::ostream& out, const std::string& spec_text,
                                   const SaturationConfig& cfg, const Signature& sig,
                                   bool inject_bool_axiom)
    : out_(out), sig_(sig) {
  json names = json::array();
  for (SymbolId s : cfg.precedence) names.push_back(sig.symbol(s).name);
  json j{{"type", "header"},
         {"version", 1},
         {"spec", spec_text},
         {"config",
          {{"ordering", ordering_name(cfg.ordering)},
           {"partitioned", cfg.partitioned},
           {"precedence", names},
           {"selection", selection_name(cfg.selection)},
           {"abs", cfg.abs_enabled},
           {"all_solutions", cfg.all_solutions},
           {"inject_bool_axiom", inject_bool_axiom}}}};
  out_ << j.dump() << "\n";
}

void JsonlTraceWriter::on_initial(std::uint64_t id, const AnswerClause& ac) {
  json j{{"type", "initial"},
         {"id", id},
         {"clause", to_string(ac.clause, sig_)},
         {"answer", to_string(ac.answer, sig_)}};
  out_ << j.dump() << "\n";
}

void JsonlTraceWriter::on_inference(const Inference& inf) {
  json j{{"type", "inference"},
         {"id", inf.conclusion_id},
         {"rule", rule_name(inf.rule)},
         {"premises", inf.premises},
         {"detail", detail_to_json(inf.detail)},
         {"unifier", unifier_to_json(inf.unifier, sig_)},
         {"conclusion_clause", to_string(inf.conclusion.clause, sig_)},
         {"conclusion_answer", to_string(inf.conclusion.answer, sig_)}};
  out_ << j.dump() << "\n";
}

void JsonlTraceWriter::on_result(const SynthesisResult& result,
                                 const std::vector<std::string>& programs) {
  json j{{"type", "result"},
         {"outcome", result.outcome == Outcome::Success     ? "success"
                     : result.outcome == Outcome::Saturated ? "saturated"
                                                            : "limit"},
         {"programs", programs},
         {"stats",
          {{"generated", result.stats.generated},
           {"retained", result.stats.retained},
           {"activated", result.stats.activated},
           {"elapsed_seconds", result.stats.elapsed_seconds}}}};
  if (!result.limit_reason.empty()) j["limit_reason"] = result.limit_reason;
  json ids = json::array();
  for (const auto& s : result.solutions) ids.push_back(s.clause_id);
  j["success_ids"] = ids;
  out_ << j.dump() << "\n";
}

namespace {

InferenceDetail detail_from_json(const std::string& rule, const json& j) {
  if (rule == "SupC" || rule == "SupU") {
    SupDetail d;
    d.eq_lit = j.at("eq_lit").get<std::size_t>();
    d.eq_swap = j.at("eq_swap").get<bool>();
    d.into_lit = j.at("into_lit").get<std::size_t>();
    d.into_lhs = j.at("into_lhs").get<bool>();
    d.path = j.at("path").get<std::vector<std::uint32_t>>();
    return d;
  }
  if (rule == "EqRes") return EqResDetail{j.at("lit").get<std::size_t>()};
  if (rule == "EqFac") {
    EqFacDetail d;
    d.lit1 = j.at("lit1").get<std::size_t>();
    d.swap1 = j.at("swap1").get<bool>();
    d.lit2 = j.at("lit2").get<std::size_t>();
    d.swap2 = j.at("swap2").get<bool>();
    return d;
  }
  if (rule == "Abs") {
    AbsDetail d;
    d.lit = j.at("lit").get<std::size_t>();
    d.lhs_side = j.at("lhs").get<bool>();
    d.path = j.at("path").get<std::vector<std::uint32_t>>();
    return d;
  }
  throw std::runtime_error("unknown rule in trace: " + rule);
}

struct ReplayState {
  Specification spec;
  PreprocessResult pre;
  SaturationConfig cfg;
  OrderSetup setup;
  RuleConfig rule_cfg;
  std::map<std::uint64_t, AnswerClause> clauses;
  std::set<std::string> keys;
  std::vector<AnswerClause> pending_initial;  // canonical, in preprocess order
  std::size_t next_initial = 0;
};

std::string mismatch(std::uint64_t id, const std::string& what, const std::string& got,
                     const std::string& expected) {
  return "clause " + std::to_string(id) + ": " + what + " mismatch; recomputed '" + got +
         "' but trace says '" + expected + "'";
}

}  // namespace

ReplayReport replay_trace(std::istream& in) {
  ReplayReport report;
  ReplayState st;
  std::string line;
  bool have_header = false;

  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.error = msg;
    return report;
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const std::exception& e) {
      return fail(std::string("bad trace line: ") + e.what());
    }
    const std::string type = j.at("type").get<std::string>();

    if (type == "header") {
      try {
        st.spec = parse_spec(j.at("spec").get<std::string>());
      } catch (const std::exception& e) {
        return fail(std::string("embedded spec does not parse: ") + e.what());
      }
      const json& c = j.at("config");
      st.cfg.ordering = c.at("ordering").get<std::string>() == "tkbo"
                            ? OrderingChoice::Tkbo
                            : OrderingChoice::Lpo;
      st.cfg.partitioned = c.at("partitioned").get<bool>();
      st.cfg.selection = c.at("selection").get<std::string>() == "prefer-neg"
                             ? SelectionMode::PreferNegative
                             : SelectionMode::MaximalOnly;
      st.cfg.abs_enabled = c.at("abs").get<bool>();
      bool inject = c.at("inject_bool_axiom").get<bool>();
      st.pre = preprocess(st.spec, inject);
      for (const auto& name : c.at("precedence")) {
        auto sym = st.pre.signature.find_symbol(name.get<std::string>());
        if (!sym) return fail("unknown precedence symbol: " + name.get<std::string>());
        st.cfg.precedence.push_back(*sym);
      }
      st.setup = build_order(st.pre.signature, st.cfg);
      st.rule_cfg.sig = &st.pre.signature;
      st.rule_cfg.ord = st.setup.order.get();
      st.rule_cfg.selection = st.cfg.selection;
      // Mirror the saturation insertion discipline for the initial set.
      for (const auto& ac : st.pre.initial) {
        AnswerClause canon =
            canonicalize(AnswerClause{remove_duplicate_literals(ac.clause), ac.answer});
        std::string key = to_string(canon, st.pre.signature);
        if (!st.keys.insert(key).second) continue;
        st.pending_initial.push_back(std::move(canon));
      }
      have_header = true;
      continue;
    }
    if (!have_header) return fail("trace has no header record");

    if (type == "initial") {
      std::uint64_t id = j.at("id").get<std::uint64_t>();
      if (st.next_initial >= st.pending_initial.size())
        return fail("more initial records than preprocessing produces");
      const AnswerClause& ac = st.pending_initial[st.next_initial++];
      std::string clause = to_string(ac.clause, st.pre.signature);
      std::string answer = to_string(ac.answer, st.pre.signature);
      if (clause != j.at("clause").get<std::string>())
        return fail(mismatch(id, "initial clause", clause, j.at("clause")));
      if (answer != j.at("answer").get<std::string>())
        return fail(mismatch(id, "initial answer", answer, j.at("answer")));
      st.clauses.emplace(id, ac);
      continue;
    }

    if (type == "inference") {
      std::uint64_t id = j.at("id").get<std::uint64_t>();
      std::string rule = j.at("rule").get<std::string>();
      std::vector<std::uint64_t> premises =
          j.at("premises").get<std::vector<std::uint64_t>>();
      for (std::uint64_t p : premises)
        if (!st.clauses.count(p))
          return fail("inference " + std::to_string(id) + " references unknown premise " +
                      std::to_string(p));
      InferenceDetail detail = detail_from_json(rule, j.at("detail"));

      std::optional<AnswerClause> conclusion;
      Substitution sigma;
      if (rule == "SupC" || rule == "SupU") {
        if (premises.size() != 2) return fail("superposition needs two premises");
        conclusion = apply_sup(st.rule_cfg, rule == "SupU", st.clauses.at(premises[0]),
                               st.clauses.at(premises[1]), std::get<SupDetail>(detail),
                               &sigma);
      } else if (rule == "EqRes") {
        if (premises.size() != 1) return fail("EqRes needs one premise");
        conclusion = apply_eq_res(st.rule_cfg, st.clauses.at(premises[0]),
                                  std::get<EqResDetail>(detail), &sigma);
      } else if (rule == "EqFac") {
        if (premises.size() != 1) return fail("EqFac needs one premise");
        conclusion = apply_eq_fac(st.rule_cfg, st.clauses.at(premises[0]),
                                  std::get<EqFacDetail>(detail), &sigma);
      } else if (rule == "Abs") {
        if (premises.size() != 1) return fail("Abs needs one premise");
        conclusion =
            apply_abs(st.rule_cfg, st.clauses.at(premises[0]), std::get<AbsDetail>(detail));
      }
      if (!conclusion)
        return fail("inference " + std::to_string(id) + " (" + rule +
                    ") does not satisfy its side conditions on replay");

      AnswerClause canon = canonicalize(
          AnswerClause{remove_duplicate_literals(conclusion->clause), conclusion->answer});
      std::string clause = to_string(canon.clause, st.pre.signature);
      std::string answer = to_string(canon.answer, st.pre.signature);
      if (clause != j.at("conclusion_clause").get<std::string>())
        return fail(mismatch(id, "conclusion clause", clause, j.at("conclusion_clause")));
      if (answer != j.at("conclusion_answer").get<std::string>())
        return fail(mismatch(id, "conclusion answer", answer, j.at("conclusion_answer")));
      json uj = unifier_to_json(sigma, st.pre.signature);
      if (uj != j.at("unifier"))
        return fail(mismatch(id, "unifier", uj.dump(), j.at("unifier").dump()));
      st.clauses.emplace(id, std::move(canon));
      ++report.inferences_checked;
      continue;
    }

    if (type == "result") {
      if (j.at("outcome").get<std::string>() != "success") continue;
      std::vector<std::uint64_t> ids =
          j.at("success_ids").get<std::vector<std::uint64_t>>();
      std::vector<std::string> programs =
          j.at("programs").get<std::vector<std::string>>();
      if (ids.size() != programs.size())
        return fail("result record has mismatched programs and success ids");
      for (std::size_t i = 0; i < ids.size(); ++i) {
        auto it = st.clauses.find(ids[i]);
        if (it == st.clauses.end()) return fail("success clause never derived in trace");
        if (!it->second.clause.empty()) return fail("success clause is not empty");
        ExtractionResult ex =
            extract_program(it->second, st.spec, st.pre, st.setup.precedence);
        std::string rendered =
            to_string(simplify_program(ex.program), st.spec.signature);
        if (rendered != programs[i])
          return fail(mismatch(ids[i], "final program", rendered, programs[i]));
      }
      continue;
    }
    return fail("unknown trace record type: " + type);
  }
  if (!have_header) return fail("empty trace");
  return report;
}

}  // namespace supra

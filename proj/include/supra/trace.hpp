#pragma once

#include <iosfwd>

#include "supra/saturation.hpp"

namespace supra {

/// Line-delimited JSON trace. The header embeds the specification text and
/// the run configuration, making the file self-contained for replay.
class JsonlTraceWriter final : public TraceSink {
 public:
  JsonlTraceWriter(std::ostream& out, const std::string& spec_text,
                   const SaturationConfig& cfg, const Signature& sig,
                   bool inject_bool_axiom);

  void on_initial(std::uint64_t id, const AnswerClause& ac) override;
  void on_inference(const Inference& inf) override;

  /// Final record: outcome, extracted programs, stats.
  void on_result(const SynthesisResult& result, const std::vector<std::string>& programs);

 private:
  std::ostream& out_;
  const Signature& sig_;
};

struct ReplayReport {
  bool ok = true;
  std::size_t inferences_checked = 0;
  std::string error;
};

/// Re-validates a trace: re-parses the embedded specification, re-runs
/// preprocessing, re-executes every inference with its recorded rule,
/// premises and position, and compares conclusions (and the final program)
/// in canonical printed form.
ReplayReport replay_trace(std::istream& in);

}  // namespace supra

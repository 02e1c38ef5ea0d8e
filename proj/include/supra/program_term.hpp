#pragma once

#include "supra/term.hpp"

namespace supra {

class ProgramTerm;
using ProgramPtr = std::shared_ptr<const ProgramTerm>;

/// Program term: a plain term (leaf) or an if-then-else node whose condition
/// is an equation between two terms of the same sort. A program with no ite
/// node is a simple term.
class ProgramTerm {
 public:
  static ProgramPtr leaf(TermPtr t);
  static ProgramPtr ite(TermPtr cond_lhs, TermPtr cond_rhs, ProgramPtr then_branch,
                        ProgramPtr else_branch);

  bool is_leaf() const { return is_leaf_; }
  const TermPtr& term() const { return term_; }
  const TermPtr& cond_lhs() const { return cond_lhs_; }
  const TermPtr& cond_rhs() const { return cond_rhs_; }
  const ProgramPtr& then_branch() const { return then_; }
  const ProgramPtr& else_branch() const { return else_; }

  /// Output sort (leaf sort, or the shared sort of the branches).
  SortId sort() const;

 private:
  ProgramTerm() = default;

  bool is_leaf_ = true;
  TermPtr term_;
  TermPtr cond_lhs_, cond_rhs_;
  ProgramPtr then_, else_;
};

bool program_equal(const ProgramPtr& a, const ProgramPtr& b);
bool is_simple(const ProgramPtr& p);
bool is_ground(const ProgramPtr& p);
bool is_computable(const ProgramPtr& p, const Signature& sig);
std::size_t program_size(const ProgramPtr& p);
void collect_vars(const ProgramPtr& p, std::vector<TermPtr>& out);
std::string to_string(const ProgramPtr& p, const Signature& sig);

}  // namespace supra

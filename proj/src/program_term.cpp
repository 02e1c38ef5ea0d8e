#include "supra/program_term.hpp"

namespace supra {

ProgramPtr ProgramTerm::leaf(TermPtr t) {
  auto p = std::shared_ptr<ProgramTerm>(new ProgramTerm());
  p->is_leaf_ = true;
  p->term_ = std::move(t);
  return p;
}

ProgramPtr ProgramTerm::ite(TermPtr cond_lhs, TermPtr cond_rhs, ProgramPtr then_branch,
                            ProgramPtr else_branch) {
  if (cond_lhs->sort() != cond_rhs->sort())
    throw SortError("ite condition sides have different sorts");
  if (then_branch->sort() != else_branch->sort())
    throw SortError("ite branches have different sorts");
  auto p = std::shared_ptr<ProgramTerm>(new ProgramTerm());
  p->is_leaf_ = false;
  p->cond_lhs_ = std::move(cond_lhs);
  p->cond_rhs_ = std::move(cond_rhs);
  p->then_ = std::move(then_branch);
  p->else_ = std::move(else_branch);
  return p;
}

SortId ProgramTerm::sort() const {
  return is_leaf_ ? term_->sort() : then_->sort();
}

bool program_equal(const ProgramPtr& a, const ProgramPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return term_equal(a->term(), b->term());
  return term_equal(a->cond_lhs(), b->cond_lhs()) &&
         term_equal(a->cond_rhs(), b->cond_rhs()) &&
         program_equal(a->then_branch(), b->then_branch()) &&
         program_equal(a->else_branch(), b->else_branch());
}

bool is_simple(const ProgramPtr& p) { return p->is_leaf(); }

bool is_ground(const ProgramPtr& p) {
  if (p->is_leaf()) return is_ground(p->term());
  return is_ground(p->cond_lhs()) && is_ground(p->cond_rhs()) &&
         is_ground(p->then_branch()) && is_ground(p->else_branch());
}

bool is_computable(const ProgramPtr& p, const Signature& sig) {
  if (p->is_leaf()) return is_computable(p->term(), sig);
  return is_computable(p->cond_lhs(), sig) && is_computable(p->cond_rhs(), sig) &&
         is_computable(p->then_branch(), sig) && is_computable(p->else_branch(), sig);
}

std::size_t program_size(const ProgramPtr& p) {
  if (p->is_leaf()) return term_size(p->term());
  return 1 + term_size(p->cond_lhs()) + term_size(p->cond_rhs()) +
         program_size(p->then_branch()) + program_size(p->else_branch());
}

void collect_vars(const ProgramPtr& p, std::vector<TermPtr>& out) {
  if (p->is_leaf()) {
    collect_vars(p->term(), out);
    return;
  }
  collect_vars(p->cond_lhs(), out);
  collect_vars(p->cond_rhs(), out);
  collect_vars(p->then_branch(), out);
  collect_vars(p->else_branch(), out);
}

std::string to_string(const ProgramPtr& p, const Signature& sig) {
  if (p->is_leaf()) return to_string(p->term(), sig);
  return "ite(" + to_string(p->cond_lhs(), sig) + " = " + to_string(p->cond_rhs(), sig) +
         ", " + to_string(p->then_branch(), sig) + ", " +
         to_string(p->else_branch(), sig) + ")";
}

}  // namespace supra

#pragma once

#include "supra/formula.hpp"
#include "supra/program_term.hpp"

namespace supra {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

/// S-expression node: an atom or a list, with source location.
struct Sexpr {
  bool is_atom = false;
  std::string atom;
  std::vector<Sexpr> items;
  int line = 0;
  int col = 0;
};

Sexpr read_sexpr(const std::string& text);

/// Parses a specification document:
///   (spec (sorts s...) (computable decl...) (uncomputable decl...)
///         (inputs (x s)...) (output (y s)) (formula F))
/// where decl is (name sort) for constants or (name (sorts...) sort) for
/// functions. Predicate atoms are encoded as bool-valued equalities.
Specification parse_spec(const std::string& text);

/// Canonical s-expression rendering; parse(print(spec)) is structurally
/// identical to spec.
std::string print_spec(const Specification& spec);

/// Parses the program surface syntax, e.g. "ite(x = fri, vamp, paar)".
/// `vars` maps names to variable terms (usually the specification inputs).
ProgramPtr parse_program_surface(const std::string& text, const Signature& sig,
                                 const std::vector<TermPtr>& vars);

}  // namespace supra

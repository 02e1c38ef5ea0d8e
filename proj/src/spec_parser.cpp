#include "supra/spec_parser.hpp"

#include <cctype>
#include <map>

#include "supra/preprocess.hpp"

namespace supra {

namespace {

struct Reader {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  explicit Reader(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {  // comment to end of line
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  Sexpr read() {
    skip_ws();
    if (eof()) throw ParseError(line, col, "unexpected end of input");
    Sexpr node;
    node.line = line;
    node.col = col;
    if (peek() == '(') {
      get();
      node.is_atom = false;
      while (true) {
        skip_ws();
        if (eof()) throw ParseError(line, col, "missing ')'");
        if (peek() == ')') {
          get();
          break;
        }
        node.items.push_back(read());
      }
      return node;
    }
    if (peek() == ')') throw ParseError(line, col, "unexpected ')'");
    node.is_atom = true;
    while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' &&
           peek() != ')' && peek() != ';')
      node.atom += get();
    return node;
  }
};

[[noreturn]] void fail(const Sexpr& at, const std::string& msg) {
  throw ParseError(at.line, at.col, msg);
}

const Sexpr& expect_list(const Sexpr& s, const std::string& what) {
  if (s.is_atom) fail(s, "expected a list for " + what);
  return s;
}

const std::string& expect_atom(const Sexpr& s, const std::string& what) {
  if (!s.is_atom) fail(s, "expected a name for " + what);
  return s.atom;
}

struct SpecBuilder {
  Signature sig;
  std::vector<InputBinder> inputs;
  std::optional<InputBinder> output;
  std::map<std::string, TermPtr> scope;  // bound variables by name
  VarId next_var = 0;

  TermPtr make_var(const std::string& name, SortId sort) {
    return Term::var(next_var++, sort, name);
  }

  SortId parse_sort(const Sexpr& s) {
    const std::string& name = expect_atom(s, "sort");
    auto id = sig.find_sort(name);
    if (!id) fail(s, "undeclared sort: " + name);
    return *id;
  }

  void parse_decl(const Sexpr& d, bool computable) {
    expect_list(d, "symbol declaration");
    if (d.items.size() == 2 && d.items[1].is_atom) {
      // (name sort) constant
      SymbolDecl decl;
      decl.name = expect_atom(d.items[0], "symbol name");
      decl.result_sort = parse_sort(d.items[1]);
      decl.computable = computable;
      add_symbol(d, std::move(decl));
      return;
    }
    if (d.items.size() == 3 && !d.items[1].is_atom) {
      SymbolDecl decl;
      decl.name = expect_atom(d.items[0], "symbol name");
      for (const auto& a : d.items[1].items) decl.arg_sorts.push_back(parse_sort(a));
      decl.result_sort = parse_sort(d.items[2]);
      decl.computable = computable;
      add_symbol(d, std::move(decl));
      return;
    }
    fail(d, "malformed declaration; expected (name sort) or (name (sorts...) sort)");
  }

  void add_symbol(const Sexpr& at, SymbolDecl decl) {
    if (decl.name.empty() || decl.name[0] == '$')
      fail(at, "symbol names may not start with '$'");
    if (sig.find_symbol(decl.name)) fail(at, "duplicate declaration: " + decl.name);
    try {
      sig.add_symbol(std::move(decl));
    } catch (const ConfigError& e) {
      fail(at, e.what());
    }
  }

  TermPtr parse_term(const Sexpr& s) {
    if (s.is_atom) {
      auto it = scope.find(s.atom);
      if (it != scope.end()) return it->second;
      auto sym = sig.find_symbol(s.atom);
      if (!sym) fail(s, "undeclared symbol or variable: " + s.atom);
      if (!sig.symbol(*sym).is_constant()) fail(s, s.atom + " expects arguments");
      return make_const(sig, *sym);
    }
    if (s.items.empty()) fail(s, "empty term");
    const std::string& head = expect_atom(s.items[0], "function symbol");
    auto sym = sig.find_symbol(head);
    if (!sym) fail(s, "undeclared symbol: " + head);
    const SymbolDecl& decl = sig.symbol(*sym);
    if (decl.arg_sorts.size() != s.items.size() - 1)
      fail(s, head + " expects " + std::to_string(decl.arg_sorts.size()) + " arguments");
    std::vector<TermPtr> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(parse_term(s.items[i]));
    try {
      return make_app(sig, *sym, std::move(args));
    } catch (const SortError& e) {
      fail(s, e.what());
    }
  }

  FormulaPtr parse_formula(const Sexpr& s) {
    if (s.is_atom) return atom_formula(s);
    if (s.items.empty()) fail(s, "empty formula");
    const std::string& head = expect_atom(s.items[0], "connective");
    auto children = [&](std::size_t from) {
      std::vector<FormulaPtr> cs;
      for (std::size_t i = from; i < s.items.size(); ++i)
        cs.push_back(parse_formula(s.items[i]));
      return cs;
    };
    if (head == "and" || head == "or") {
      if (s.items.size() < 2) fail(s, head + " needs at least one operand");
      auto cs = children(1);
      return head == "and" ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    if (head == "not") {
      if (s.items.size() != 2) fail(s, "not takes one operand");
      return Formula::neg(parse_formula(s.items[1]));
    }
    if (head == "implies" || head == "iff") {
      if (s.items.size() != 3) fail(s, head + " takes two operands");
      FormulaPtr a = parse_formula(s.items[1]);
      FormulaPtr b = parse_formula(s.items[2]);
      return head == "implies" ? Formula::implies(a, b) : Formula::iff(a, b);
    }
    if (head == "=" || head == "!=") {
      if (s.items.size() != 3) fail(s, head + " takes two operands");
      TermPtr a = parse_term(s.items[1]);
      TermPtr b = parse_term(s.items[2]);
      if (a->sort() != b->sort()) fail(s, "equality sides have different sorts");
      FormulaPtr eq = Formula::eq(a, b);
      return head == "=" ? eq : Formula::neg(eq);
    }
    if (head == "forall" || head == "exists") {
      if (s.items.size() != 3) fail(s, head + " takes a binder list and a body");
      const Sexpr& binders = expect_list(s.items[1], "binder list");
      if (binders.items.empty()) fail(s, "empty binder list");
      std::vector<std::pair<std::string, TermPtr>> bound;
      for (const auto& b : binders.items) {
        expect_list(b, "binder");
        if (b.items.size() != 2) fail(b, "binder must be (name sort)");
        const std::string& name = expect_atom(b.items[0], "variable");
        if (scope.count(name)) fail(b, "shadowed variable: " + name);
        if (sig.find_symbol(name)) fail(b, "variable shadows symbol: " + name);
        TermPtr v = make_var(name, parse_sort(b.items[1]));
        scope.emplace(name, v);
        bound.emplace_back(name, v);
      }
      FormulaPtr body = parse_formula(s.items[2]);
      for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
        scope.erase(it->first);
        body = head == "forall" ? Formula::forall(it->second, body)
                                : Formula::exists(it->second, body);
      }
      return body;
    }
    // Anything else is a predicate atom.
    return atom_formula(s);
  }

  FormulaPtr atom_formula(const Sexpr& s) {
    TermPtr t = parse_term(s);
    if (t->sort() != Signature::kBoolSort) fail(s, "atom is not bool-sorted");
    return Formula::atom(t);
  }
};

}  // namespace

Sexpr read_sexpr(const std::string& text) {
  Reader r(text);
  Sexpr s = r.read();
  r.skip_ws();
  if (!r.eof()) throw ParseError(r.line, r.col, "trailing input after document");
  return s;
}

Specification parse_spec(const std::string& text) {
  Sexpr doc = read_sexpr(text);
  expect_list(doc, "specification");
  if (doc.items.empty() || !doc.items[0].is_atom || doc.items[0].atom != "spec")
    fail(doc, "document must start with (spec ...)");

  SpecBuilder b;
  const Sexpr* formula_node = nullptr;
  const Sexpr* inputs_node = nullptr;
  const Sexpr* output_node = nullptr;

  // Sorts and symbols first, whatever their order in the file.
  for (std::size_t i = 1; i < doc.items.size(); ++i) {
    const Sexpr& sec = expect_list(doc.items[i], "section");
    if (sec.items.empty()) fail(sec, "empty section");
    const std::string& name = expect_atom(sec.items[0], "section name");
    if (name == "sorts") {
      for (std::size_t j = 1; j < sec.items.size(); ++j) {
        const std::string& sn = expect_atom(sec.items[j], "sort name");
        if (b.sig.find_sort(sn) && sn != "bool")
          fail(sec.items[j], "duplicate sort: " + sn);
        b.sig.add_sort(sn);
      }
    }
  }
  for (std::size_t i = 1; i < doc.items.size(); ++i) {
    const Sexpr& sec = doc.items[i];
    const std::string& name = sec.items[0].atom;
    if (name == "computable" || name == "uncomputable") {
      for (std::size_t j = 1; j < sec.items.size(); ++j)
        b.parse_decl(sec.items[j], name == "computable");
    } else if (name == "inputs") {
      inputs_node = &sec;
    } else if (name == "output") {
      output_node = &sec;
    } else if (name == "formula") {
      if (sec.items.size() != 2) fail(sec, "formula section takes one formula");
      formula_node = &sec.items[1];
    } else if (name != "sorts") {
      fail(sec, "unknown section: " + name);
    }
  }
  if (!output_node) fail(doc, "missing (output (y sort))");
  if (!formula_node) fail(doc, "missing (formula ...)");

  if (inputs_node) {
    for (std::size_t j = 1; j < inputs_node->items.size(); ++j) {
      const Sexpr& bnd = expect_list(inputs_node->items[j], "input binder");
      if (bnd.items.size() != 2) fail(bnd, "input must be (name sort)");
      const std::string& vn = expect_atom(bnd.items[0], "input variable");
      if (b.scope.count(vn)) fail(bnd, "duplicate input: " + vn);
      if (b.sig.find_symbol(vn)) fail(bnd, "input shadows symbol: " + vn);
      TermPtr v = b.make_var(vn, b.parse_sort(bnd.items[1]));
      b.scope.emplace(vn, v);
      b.inputs.push_back(InputBinder{v});
    }
  }
  {
    if (output_node->items.size() != 2) fail(*output_node, "output takes one binder");
    const Sexpr& bnd = expect_list(output_node->items[1], "output binder");
    if (bnd.items.size() != 2) fail(bnd, "output must be (name sort)");
    const std::string& vn = expect_atom(bnd.items[0], "output variable");
    if (b.scope.count(vn)) fail(bnd, "output clashes with an input: " + vn);
    if (b.sig.find_symbol(vn)) fail(bnd, "output shadows symbol: " + vn);
    TermPtr v = b.make_var(vn, b.parse_sort(bnd.items[1]));
    b.scope.emplace(vn, v);
    b.output = InputBinder{v};
  }

  FormulaPtr formula = b.parse_formula(*formula_node);

  Specification spec;
  spec.signature = std::move(b.sig);
  spec.inputs = std::move(b.inputs);
  spec.output = *b.output;
  spec.formula = encode_predicates(formula, spec.signature);

  // Free variables must be exactly covered by inputs and output.
  std::vector<TermPtr> free;
  collect_free_vars(spec.formula, free);
  for (const auto& v : free) {
    bool known = v->var_id() == spec.output.var->var_id();
    for (const auto& in : spec.inputs) known = known || in.var->var_id() == v->var_id();
    if (!known)
      throw ParseError(formula_node->line, formula_node->col,
                       "free variable " + v->var_name() + " is not an input or output");
  }
  return spec;
}

std::string print_spec(const Specification& spec) {
  const Signature& sig = spec.signature;
  std::string s = "(spec\n  (sorts";
  for (SortId i = 0; i < sig.num_sorts(); ++i) {
    if (i == Signature::kBoolSort) continue;
    s += " " + sig.sort(i).name;
  }
  s += ")\n";
  for (bool computable : {true, false}) {
    std::string body;
    for (SymbolId i = 0; i < sig.num_symbols(); ++i) {
      const SymbolDecl& d = sig.symbol(i);
      if (d.kind != SymbolKind::User || d.computable != computable) continue;
      body += "\n    (" + d.name;
      if (!d.arg_sorts.empty()) {
        body += " (";
        for (std::size_t j = 0; j < d.arg_sorts.size(); ++j) {
          if (j) body += " ";
          body += sig.sort(d.arg_sorts[j]).name;
        }
        body += ")";
      }
      body += " " + sig.sort(d.result_sort).name + ")";
    }
    if (!body.empty())
      s += std::string("  (") + (computable ? "computable" : "uncomputable") + body + ")\n";
  }
  if (!spec.inputs.empty()) {
    s += "  (inputs";
    for (const auto& in : spec.inputs)
      s += " (" + in.var->var_name() + " " + sig.sort(in.var->sort()).name + ")";
    s += ")\n";
  }
  s += "  (output (" + spec.output.var->var_name() + " " +
       sig.sort(spec.output.var->sort()).name + "))\n";
  s += "  (formula " + to_string(spec.formula, sig) + "))\n";
  return s;
}

namespace {

// Recursive-descent parser for the printed program syntax.
struct SurfaceParser {
  const std::string& text;
  std::size_t pos = 0;
  const Signature& sig;
  const std::vector<TermPtr>& vars;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(1, static_cast<int>(pos) + 1, msg);
  }

  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '$' || text[pos] == '!'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return text.substr(start, pos - start);
  }

  TermPtr term() {
    std::string name = ident();
    for (const auto& v : vars)
      if (v->var_name() == name) return v;
    auto sym = sig.find_symbol(name);
    if (!sym) fail("unknown symbol: " + name);
    std::vector<TermPtr> args;
    if (eat('(')) {
      if (!eat(')')) {
        do {
          args.push_back(term());
        } while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
    }
    return make_app(sig, *sym, std::move(args));
  }

  ProgramPtr program() {
    skip();
    std::size_t mark = pos;
    std::string name = ident();
    if (name == "ite" && eat('(')) {
      TermPtr l = term();
      if (!eat('=')) fail("expected '=' in ite condition");
      TermPtr r = term();
      if (!eat(',')) fail("expected ',' after ite condition");
      ProgramPtr t = program();
      if (!eat(',')) fail("expected ',' after then-branch");
      ProgramPtr e = program();
      if (!eat(')')) fail("expected ')'");
      return ProgramTerm::ite(l, r, t, e);
    }
    pos = mark;
    return ProgramTerm::leaf(term());
  }
};

}  // namespace

ProgramPtr parse_program_surface(const std::string& text, const Signature& sig,
                                 const std::vector<TermPtr>& vars) {
  SurfaceParser p{text, 0, sig, vars};
  ProgramPtr out = p.program();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input after program");
  return out;
}

}  // namespace supra

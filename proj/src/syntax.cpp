#include "sublink/syntax.hpp"

#include <cctype>
#include <sstream>

namespace sublink {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

ArityMismatch::ArityMismatch(const std::string& symbol, std::size_t expected, std::size_t got)
    : std::runtime_error("symbol '" + symbol + "' used with " + std::to_string(got) +
                         " arguments, expected " + std::to_string(expected)) {}

void Signature::absorb(const Term& t) {
  if (t.is_var()) return;
  auto [it, inserted] = functions.emplace(t.name(), t.args().size());
  if (!inserted && it->second != t.args().size())
    throw ArityMismatch(t.name(), it->second, t.args().size());
  for (const auto& a : t.args()) absorb(a);
}

void Signature::absorb(const Formula& f) {
  if (f.is(Kind::Pred)) {
    auto [it, inserted] = predicates.emplace(f.name(), f.terms().size());
    if (!inserted && it->second != f.terms().size())
      throw ArityMismatch(f.name(), it->second, f.terms().size());
  }
  for (const auto& t : f.terms()) absorb(t);
  for (const auto& c : f.children()) absorb(c);
}

std::optional<unsigned long> numeral_value(const Term& t) {
  unsigned long n = 0;
  const Term* cur = &t;
  while (cur->is_app() && cur->name() == "S" && cur->args().size() == 1) {
    ++n;
    cur = &cur->args()[0];
  }
  if (cur->is_app() && cur->name() == "0" && cur->args().empty()) return n;
  return std::nullopt;
}

Term numeral(unsigned long n) {
  Term t = Term::constant("0");
  for (unsigned long i = 0; i < n; ++i) t = Term::app("S", {t});
  return t;
}

namespace {

enum class Tok {
  Ident, Number, LParen, RParen, Comma, Dot, Equals, Plus, And, Or, Imp, Not,
  Forall, Exists, True, False, Assign, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t col = pos_ + 1;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col});
        return out;
      }
      out.push_back(next(col));
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  Token next(std::size_t col) {
    struct Fixed {
      std::string_view text;
      Tok kind;
    };
    static const Fixed fixed[] = {
        {":=", Tok::Assign}, {"/\\", Tok::And}, {"\\/", Tok::Or}, {"=>", Tok::Imp},
        {"->", Tok::Imp},    {"∧", Tok::And}, {"∨", Tok::Or}, {"⇒", Tok::Imp},
        {"→", Tok::Imp}, {"¬", Tok::Not}, {"∀", Tok::Forall},
        {"∃", Tok::Exists}, {"⊤", Tok::True}, {"⊥", Tok::False},
        {"~", Tok::Not},     {"(", Tok::LParen}, {")", Tok::RParen}, {",", Tok::Comma},
        {".", Tok::Dot},     {"=", Tok::Equals}, {"+", Tok::Plus},
    };
    for (const auto& f : fixed) {
      if (starts(f.text)) {
        pos_ += f.text.size();
        return {f.kind, std::string(f.text), line_, col};
      }
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Number, std::string(src_.substr(start, pos_ - start)), line_, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_' || src_[pos_] == '\''))
        ++pos_;
      std::string word(src_.substr(start, pos_ - start));
      if (word == "forall") return {Tok::Forall, word, line_, col};
      if (word == "exists") return {Tok::Exists, word, line_, col};
      if (word == "true") return {Tok::True, word, line_, col};
      if (word == "false") return {Tok::False, word, line_, col};
      return {Tok::Ident, word, line_, col};
    }
    throw SyntaxError(line_, col, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const SyntaxOptions& opts) : toks_(std::move(toks)), opts_(opts) {}

  Formula formula() { return implication(); }

  Term term() {
    Term t = primary_term();
    while (peek().kind == Tok::Plus) {
      ++pos_;
      t = Term::app("+", {t, primary_term()});
    }
    return t;
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

  void bind(const std::string& v) { scope_.push_back(v); }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(peek().line, peek().column, msg);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    ++pos_;
  }

  bool in_scope(const std::string& v) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (*it == v) return true;
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Imp) {
      ++pos_;
      return Formula::imp(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(f, unary());
    }
    return f;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not:
        ++pos_;
        return Formula::neg(unary());
      case Tok::Forall:
      case Tok::Exists: {
        Kind k = peek().kind == Tok::Forall ? Kind::Forall : Kind::Exists;
        ++pos_;
        if (peek().kind != Tok::Ident) fail("expected a variable after quantifier");
        std::vector<std::string> vars;
        while (peek().kind == Tok::Ident) {
          vars.push_back(peek().text);
          ++pos_;
        }
        expect(Tok::Dot, "'.' after quantified variable");
        for (const auto& v : vars) scope_.push_back(v);
        Formula body = implication();
        for (std::size_t i = 0; i < vars.size(); ++i) scope_.pop_back();
        for (auto it = vars.rbegin(); it != vars.rend(); ++it)
          body = Formula::quantifier(k, *it, body);
        return body;
      }
      default:
        return atom();
    }
  }

  Formula atom() {
    if (peek().kind == Tok::True) {
      ++pos_;
      return Formula::top();
    }
    if (peek().kind == Tok::False) {
      ++pos_;
      return Formula::bottom();
    }
    std::size_t save = pos_;
    try {
      Term lhs = term();
      if (peek().kind == Tok::Equals) {
        ++pos_;
        return Formula::eq(lhs, term());
      }
    } catch (const SyntaxError&) {
    }
    pos_ = save;
    if (peek().kind == Tok::LParen) {
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek().kind != Tok::Ident) fail("expected a formula");
    std::string name = peek().text;
    ++pos_;
    std::vector<Term> args;
    if (peek().kind == Tok::LParen) args = arguments();
    return Formula::pred(name, std::move(args));
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    if (peek().kind == Tok::RParen) fail("empty argument list");
    args.push_back(term());
    while (peek().kind == Tok::Comma) {
      ++pos_;
      args.push_back(term());
    }
    expect(Tok::RParen, "')'");
    return args;
  }

  Term primary_term() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Number) {
      ++pos_;
      if (opts_.peano_numerals) return numeral(std::stoul(t.text));
      return Term::constant(t.text);
    }
    if (t.kind != Tok::Ident) fail("expected a term");
    std::string name = t.text;
    ++pos_;
    if (peek().kind == Tok::LParen) return Term::app(name, arguments());
    if (in_scope(name)) return Term::var(name);
    return Term::constant(name);
  }

  std::vector<Token> toks_;
  SyntaxOptions opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

// ---- printing -------------------------------------------------------------

constexpr int kImpPrec = 1, kOrPrec = 2, kAndPrec = 3, kUnaryPrec = 4;

struct Printer {
  SyntaxOptions opts;
  bool full = false;
  std::string hole_text;

  std::string term(const Term& t, bool in_sum_rhs = false) const {
    if (t.is_var()) return t.name();
    if (opts.peano_numerals) {
      if (auto n = numeral_value(t)) return std::to_string(*n);
    }
    if (t.name() == "+" && t.args().size() == 2) {
      std::string s = term(t.args()[0]) + " + " + term(t.args()[1], true);
      return in_sum_rhs ? "(" + s + ")" : s;
    }
    if (t.args().empty()) return t.name();
    std::string s = t.name() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) s += ", ";
      s += term(t.args()[i]);
    }
    return s + ")";
  }

  // `rightmost`: nothing follows this subformula at the current nesting
  // level, so a quantifier here needs no parentheses.
  std::string formula(const Formula& f, int prec, bool rightmost) const {
    auto wrap = [&](int own, std::string s) {
      if (own < prec || (full && prec > 0)) return "(" + s + ")";
      return s;
    };
    switch (f.kind()) {
      case Kind::True: return "true";
      case Kind::False: return "false";
      case Kind::Eq: return term(f.lhs()) + " = " + term(f.rhs());
      case Kind::Pred: {
        if (f.name() == kHoleName) return hole_text;
        if (f.terms().empty()) return f.name();
        std::string s = f.name() + "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i) s += ", ";
          s += term(f.terms()[i]);
        }
        return s + ")";
      }
      case Kind::Imp: {
        if (f.is_negation()) {
          std::string inner = formula(f.left(), kUnaryPrec, rightmost);
          return full && prec > 0 ? "(~" + inner + ")" : "~" + inner;
        }
        bool paren = kImpPrec < prec || (full && prec > 0);
        bool rm = paren || rightmost;
        return wrap(kImpPrec, formula(f.left(), kOrPrec, false) + " => " +
                                  formula(f.right(), kImpPrec, rm));
      }
      case Kind::Or: {
        bool paren = kOrPrec < prec || (full && prec > 0);
        bool rm = paren || rightmost;
        return wrap(kOrPrec, formula(f.left(), kOrPrec, false) + " \\/ " +
                                 formula(f.right(), kAndPrec, rm));
      }
      case Kind::And: {
        bool paren = kAndPrec < prec || (full && prec > 0);
        bool rm = paren || rightmost;
        return wrap(kAndPrec, formula(f.left(), kAndPrec, false) + " /\\ " +
                                  formula(f.right(), kUnaryPrec, rm));
      }
      case Kind::Forall:
      case Kind::Exists: {
        std::string s = (f.is(Kind::Forall) ? "forall " : "exists ") + f.var() + ". " +
                        formula(f.body(), 0, true);
        if (!rightmost || (full && prec > 0)) return "(" + s + ")";
        return s;
      }
    }
    return "?";
  }
};

}  // namespace

Formula parse_formula(std::string_view text, const SyntaxOptions& opts, Signature* sig) {
  Parser p(Lexer(text, 1).run(), opts);
  Formula f = p.formula();
  p.expect_end();
  if (sig) sig->absorb(f);
  else Signature{}.absorb(f);
  return f;
}

Term parse_term(std::string_view text, const SyntaxOptions& opts, Signature* sig,
                const std::set<std::string>& bound) {
  Parser p(Lexer(text, 1).run(), opts);
  for (const auto& b : bound) p.bind(b);
  Term t = p.term();
  p.expect_end();
  if (sig) sig->absorb(t);
  else Signature{}.absorb(t);
  return t;
}

std::string print_term(const Term& t, const SyntaxOptions& opts) { return Printer{opts, false, {}}.term(t); }

std::string print_formula(const Formula& f, const SyntaxOptions& opts) {
  return Printer{opts, false, {}}.formula(f, 0, true);
}

std::string print_formula_full(const Formula& f, const SyntaxOptions& opts) {
  return Printer{opts, true, {}}.formula(f, 0, true);
}

std::string print_expr(const Expr& e, const SyntaxOptions& opts) {
  if (const auto* f = std::get_if<Formula>(&e)) return print_formula(*f, opts);
  return print_term(std::get<Term>(e), opts);
}

std::string print_with_hole(const Formula& f, const std::string& hole_text,
                            const SyntaxOptions& opts) {
  return Printer{opts, false, hole_text}.formula(f, 0, true);
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile pf;
  bool have_goal = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  struct Pending {
    std::string kind, body;
    std::size_t line, column;
  };
  std::vector<Pending> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_first_of(" \t", start);
    std::string keyword = line.substr(start, end == std::string::npos ? end : end - start);
    std::string body = end == std::string::npos ? "" : line.substr(end + 1);
    if (keyword == "flag") {
      std::size_t a = body.find_first_not_of(" \t\r");
      if (a == std::string::npos) throw SyntaxError(lineno, start + 1, "flag needs a name");
      std::size_t b = body.find_last_not_of(" \t\r");
      std::string name = body.substr(a, b - a + 1);
      pf.flags.insert(name);
      if (name == "peano_numerals") pf.options.peano_numerals = true;
    } else if (keyword == "hyp" || keyword == "goal" || keyword == "object") {
      if (keyword == "goal") {
        if (have_goal) throw DuplicateGoal(lineno);
        have_goal = true;
      }
      entries.push_back({keyword, body, lineno, (end == std::string::npos ? line.size() : end) + 2});
    } else {
      throw SyntaxError(lineno, start + 1, "unknown directive '" + keyword + "'");
    }
  }
  if (!have_goal) throw MissingGoal();

  // Flags apply to the whole file, so bodies are parsed after the scan.
  for (const auto& p : entries) {
    try {
      if (p.kind == "object") {
        std::string body = p.body;
        auto assign = body.find(":=");
        std::string name_part = body.substr(0, assign);
        std::size_t a = name_part.find_first_not_of(" \t");
        std::size_t b = name_part.find_last_not_of(" \t\r");
        if (a == std::string::npos) throw SyntaxError(p.line, p.column, "object needs a name");
        ObjectDecl decl{name_part.substr(a, b - a + 1), std::nullopt};
        Term named = parse_term(decl.name, pf.options);
        if (!named.is_app() || !named.args().empty() || named.name() != decl.name)
          throw SyntaxError(p.line, p.column, "object name must be an identifier");
        if (assign != std::string::npos) {
          Term t = parse_term(body.substr(assign + 2), pf.options, &pf.signature);
          decl.definition = t;
        }
        pf.signature.absorb(Term::constant(decl.name));
        pf.objects.push_back(std::move(decl));
      } else {
        Formula f = parse_formula(p.body, pf.options, &pf.signature);
        if (p.kind == "hyp")
          pf.hypotheses.push_back(f);
        else
          pf.conclusion = f;
      }
    } catch (const SyntaxError& e) {
      std::string msg = e.what();
      // Strip the inner "line:col: " prefix.
      auto colon = msg.find(": ");
      SyntaxError shifted(p.line, p.column + e.column() - 1,
                          colon == std::string::npos ? msg : msg.substr(colon + 2));
      throw shifted;
    }
  }
  return pf;
}

}  // namespace sublink

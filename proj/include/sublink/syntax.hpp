#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sublink/path.hpp"

namespace sublink {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class ArityMismatch : public std::runtime_error {
 public:
  ArityMismatch(const std::string& symbol, std::size_t expected, std::size_t got);
};

// Function and predicate arities, fixed at first use.
struct Signature {
  std::map<std::string, std::size_t> functions;
  std::map<std::string, std::size_t> predicates;

  // Registers every symbol of `f`; throws ArityMismatch on conflicting use.
  void absorb(const Formula& f);
  void absorb(const Term& t);
  bool knows_function(const std::string& name) const { return functions.count(name) != 0; }
};

struct SyntaxOptions {
  // Decimal literals denote S(...S(0)...) chains, and such chains print as decimals.
  bool peano_numerals = false;
};

// Parses a formula. Identifiers bound by an enclosing quantifier become
// variables; every other identifier is a constant or function symbol.
Formula parse_formula(std::string_view text, const SyntaxOptions& opts = {},
                      Signature* sig = nullptr);
// `bound` lists variable names in scope (e.g. for terms typed under binders).
Term parse_term(std::string_view text, const SyntaxOptions& opts = {}, Signature* sig = nullptr,
                const std::set<std::string>& bound = {});

std::string print_term(const Term& t, const SyntaxOptions& opts = {});
std::string print_formula(const Formula& f, const SyntaxOptions& opts = {});
// Print with redundant parentheses around every compound subformula.
std::string print_formula_full(const Formula& f, const SyntaxOptions& opts = {});
std::string print_expr(const Expr& e, const SyntaxOptions& opts = {});

// Placeholder atom whose printed form is supplied by the caller; used to
// render a formula around an interaction operator.
inline constexpr const char* kHoleName = "\x01hole";
std::string print_with_hole(const Formula& f, const std::string& hole_text,
                            const SyntaxOptions& opts = {});

// Decimal value of an S-chain ending in 0, if `t` is one.
std::optional<unsigned long> numeral_value(const Term& t);
Term numeral(unsigned long n);

class MissingGoal : public std::runtime_error {
 public:
  MissingGoal() : std::runtime_error("problem has no goal line") {}
};

class DuplicateGoal : public std::runtime_error {
 public:
  explicit DuplicateGoal(std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": second goal line") {}
};

struct ObjectDecl {
  std::string name;
  std::optional<Term> definition;
};

struct ProblemFile {
  SyntaxOptions options;
  std::set<std::string> flags;
  std::vector<Formula> hypotheses;
  std::vector<ObjectDecl> objects;
  Formula conclusion;
  Signature signature;
};

// Line-oriented format: `flag <name>`, `hyp <formula>`,
// `object <name>` or `object <name> := <term>`, exactly one `goal <formula>`.
// `#` starts a comment.
ProblemFile parse_problem(std::string_view text);

}  // namespace sublink

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sublink/term.hpp"

namespace sublink {

enum class Kind { Pred, Eq, True, False, And, Or, Imp, Forall, Exists };

const char* kind_name(Kind k);

// Immutable formula of single-sorted first-order logic with equality.
// Negation is not a constructor: ~A is Imp(A, False).
class Formula {
 public:
  Formula();  // True

  static Formula pred(std::string name, std::vector<Term> args = {});
  static Formula eq(Term lhs, Term rhs);
  static Formula top();
  static Formula bottom();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a) { return imp(std::move(a), bottom()); }
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula binary(Kind k, Formula a, Formula b);
  static Formula quantifier(Kind k, std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_atom() const { return is(Kind::Pred) || is(Kind::Eq); }
  bool is_unit() const { return is(Kind::True) || is(Kind::False); }
  bool is_binary() const { return is(Kind::And) || is(Kind::Or) || is(Kind::Imp); }
  bool is_quantifier() const { return is(Kind::Forall) || is(Kind::Exists); }
  bool is_negation() const { return is(Kind::Imp) && right().is(Kind::False); }

  // Predicate name for Pred, bound variable for quantifiers, empty otherwise.
  const std::string& name() const { return node_->name; }
  const std::string& var() const { return node_->name; }
  // Pred arguments, or {lhs, rhs} for Eq.
  const std::vector<Term>& terms() const { return node_->terms; }
  const Term& lhs() const { return node_->terms[0]; }
  const Term& rhs() const { return node_->terms[1]; }
  // {left, right} for binary connectives, {body} for quantifiers.
  const std::vector<Formula>& children() const { return node_->subs; }
  const Formula& left() const { return node_->subs[0]; }
  const Formula& right() const { return node_->subs[1]; }
  const Formula& body() const { return node_->subs[0]; }

  // Strict structural equality (bound names must coincide).
  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> subs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const Formula& f);
std::set<std::string> bound_vars(const Formula& f);
// Every identifier that could clash with a bound name when printed:
// variables, function symbols, predicate symbols.
void collect_names(const Formula& f, std::set<std::string>& out);
void collect_functions(const Formula& f, std::map<std::string, std::size_t>& out);
void collect_predicates(const Formula& f, std::map<std::string, std::size_t>& out);

// Number of connectives and quantifiers.
std::size_t connective_count(const Formula& f);

// "x" -> "x1", "x1" -> "x2", ...: the smallest numeric suffix not in `used`.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

// Capture-avoiding substitution of `t` for the free occurrences of `var`.
Formula substitute(const Formula& f, const std::string& var, const Term& t);
// Simultaneous capture-avoiding substitution.
Formula substitute(const Formula& f, const TermMap& sigma);

// Replace every free occurrence of the term `from` by `to` inside atoms.
Formula replace_term(const Formula& f, const Term& from, const Term& to);

bool alpha_eq(const Formula& f, const Formula& g);

// Renames binders so that each binder name is distinct from every other binder
// and from every name in `used`; the chosen names are added to `used`.
Formula barendregt(const Formula& f, std::set<std::string>& used);

}  // namespace sublink

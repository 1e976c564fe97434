#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace sublink {

// First-order term. Variables are only ever produced for names bound by a
// quantifier; free identifiers (constants, objects) are nullary applications.
class Term {
 public:
  enum class Kind { Var, App };

  static Term var(std::string name);
  static Term app(std::string fun, std::vector<Term> args = {});
  static Term constant(std::string name) { return app(std::move(name)); }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_app() const { return node_->kind == Kind::App; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  // Structural total order; used for deterministic containers.
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

using TermMap = std::map<std::string, Term>;

void collect_vars(const Term& t, std::set<std::string>& out);
std::set<std::string> vars_of(const Term& t);
bool occurs(const std::string& var, const Term& t);

// Simultaneous replacement of variables.
Term apply(const TermMap& sigma, const Term& t);

// Replace every occurrence of the subterm `from` (structural match) by `to`.
Term replace_subterm(const Term& t, const Term& from, const Term& to);

// Function symbols with their arities (constants have arity 0).
void collect_functions(const Term& t, std::map<std::string, std::size_t>& out);

std::size_t term_size(const Term& t);

}  // namespace sublink

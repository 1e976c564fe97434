#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sublink/formula.hpp"

namespace sublink {

// Child indices from the root of an item: binary connectives 0/1, quantifier
// body 0, Eq sides 0/1, predicate and function arguments by position.
using Path = std::vector<int>;

// A selected subexpression: either a subformula or a subterm.
using Expr = std::variant<Formula, Term>;

inline bool is_formula(const Expr& e) { return std::holds_alternative<Formula>(e); }
inline bool is_term(const Expr& e) { return std::holds_alternative<Term>(e); }

class PathOutOfRange : public std::out_of_range {
 public:
  explicit PathOutOfRange(const Path& p);
};

class ClassMismatch : public std::invalid_argument {
 public:
  ClassMismatch() : std::invalid_argument("replacement has a different syntactic class") {}
};

enum class Polarity { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}
const char* polarity_name(Polarity p);

// One layer of a formula context, from the root towards the hole.
struct Frame {
  Kind kind;          // And, Or, Imp, Forall, Exists
  int hole = 0;       // which child holds the hole (binary connectives)
  Formula sibling;    // the other child (binary connectives)
  std::string var;    // bound variable (quantifiers)

  static Frame binary(Kind k, int hole, Formula sibling) { return {k, hole, std::move(sibling), {}}; }
  static Frame binder(Kind k, std::string var) { return {k, 0, Formula(), std::move(var)}; }
  Formula plug(Formula inner) const;
};

// A formula with exactly one hole, stored as the frames above the hole.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<Frame> frames) : frames_(std::move(frames)) {}

  const std::vector<Frame>& frames() const { return frames_; }
  bool empty() const { return frames_.empty(); }
  void push(Frame f) { frames_.push_back(std::move(f)); }
  void pop() { frames_.pop_back(); }

  Formula plug(const Formula& inner) const;
  // Number of implications whose left-hand side contains the hole.
  int inversions() const;
  Polarity polarity() const { return inversions() % 2 == 0 ? Polarity::Positive : Polarity::Negative; }
  // Binder names above the hole, outermost first.
  std::vector<std::string> binders() const;

 private:
  std::vector<Frame> frames_;
};

struct Resolved {
  Context context;   // formula-level context down to the deepest formula node on the path
  Path term_path;    // rest of the path inside the atom; empty for formula selections
  Expr selection;
};

// Splits `item` at `path` into (context, selection).
Resolved resolve(const Formula& item, const Path& path);

// Number of leading path steps that traverse formula nodes.
std::size_t formula_prefix(const Formula& item, const Path& path);

Formula replace_at(const Formula& item, const Path& path, const Expr& replacement);
Term replace_at(const Term& t, const Path& path, const Term& replacement);
Term subterm_at(const Term& t, const Path& path);

// Every valid path in `item`, in preorder.
std::vector<Path> all_paths(const Formula& item);

std::string path_to_string(const Path& p);

}  // namespace sublink

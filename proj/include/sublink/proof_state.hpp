#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sublink/link.hpp"
#include "sublink/syntax.hpp"

namespace sublink {

enum class Color { Red, Blue, Green };
const char* color_name(Color c);

struct Item {
  int id = 0;
  Color color = Color::Blue;
  Formula formula;                 // red and blue items
  std::string name;                // green items
  std::optional<Term> definition;  // green items; empty for an opaque object
};

struct Goal {
  int id = 0;
  std::vector<Item> items;

  const Item& conclusion() const;
  const Item* find(int item) const;
  // Object names, function symbols and predicates occurring in the goal.
  std::set<std::string> symbols() const;
};

class InvalidAction : public std::runtime_error {
 public:
  explicit InvalidAction(const std::string& what) : std::runtime_error(what) {}
};

class NoClickAction : public InvalidAction {
 public:
  NoClickAction() : InvalidAction("nothing to do for this click") {}
};

class DuplicateName : public InvalidAction {
 public:
  explicit DuplicateName(const std::string& name) : InvalidAction(name + " is already in use") {}
};

class UnknownSymbol : public InvalidAction {
 public:
  explicit UnknownSymbol(const std::string& name) : InvalidAction("unknown symbol " + name) {}
};

// A drag-and-drop whose selections do not form a valid linkage.
class NotALinkage : public InvalidAction {
 public:
  explicit NotALinkage(Rejection r);
  const Rejection& rejection() const { return rejection_; }
  // "UnificationFailure(Cycle)", "PolarityViolation", ...
  std::string reason() const;

 private:
  Rejection rejection_;
};

struct Candidate {
  Path path;
  LinkageKind kind;
};

// The open goals of a proof. Operations replace the acted-on goal by its
// successors in place; a solved goal disappears.
class ProofState {
 public:
  static ProofState from_problem(const ProblemFile& p);

  const std::vector<Goal>& goals() const { return goals_; }
  bool complete() const { return goals_.empty(); }
  const SyntaxOptions& options() const { return options_; }
  const Goal& goal(int id) const;

  void click(int goal, int item, const Path& path);
  // Returns the linking trace of the executed linkage.
  std::vector<TraceStep> dnd(int goal, int src_item, const Path& src_path, int dst_item,
                             const Path& dst_path);
  void add_hyp(int goal, const std::string& text);
  void add_expr(int goal, const std::string& name, const std::string& text);

  std::vector<Candidate> candidates(int goal, int src_item, const Path& src_path,
                                    int dst_item) const;
  Classification classify(int goal, int src_item, const Path& src_path, int dst_item,
                          const Path& dst_path) const;

  std::string render_item(const Item& it) const;
  // Canonical text of the whole state; equal states render identically.
  std::string render() const;

 private:
  std::size_t index_of(int goal) const;
  Item make_item(Color c, Formula f);
  Goal make_goal(std::vector<Item> items);
  void normalize(Goal& g) const;
  Selection selection(const Goal& g, int item, const Path& path) const;
  void replace(std::size_t index, std::vector<Goal> successors);
  std::map<std::string, std::size_t> known_functions(const Goal& g) const;

  std::vector<Goal> goals_;
  SyntaxOptions options_;
  Signature signature_;
  int next_goal_ = 1;
  int next_item_ = 1;
};

}  // namespace sublink

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sublink/path.hpp"

namespace sublink {

enum class Side { Hypothesis, Conclusion };
enum class Rigidity { Instantiable, Rigid };

struct Binder {
  std::string name;
  Kind kind;              // Forall or Exists
  Polarity polarity;      // effective polarity: item role combined with inversions above
  Rigidity rigidity;
  std::size_t depth;      // position among the binders of its item, outermost 0
  int inversions;         // implications entered on the left above this binder
};

// Binders on the way from the item root to the selection, outermost first.
using QuantifierProfile = std::vector<Binder>;

QuantifierProfile profile(const Formula& item, const Path& path, Side side);
QuantifierProfile profile(const Context& context, Side side);

enum class UnifyFailure { Clash, OccursCheck, Cycle, RigidMismatch };
const char* failure_name(UnifyFailure f);

struct UnifyOutcome {
  bool success = false;
  UnifyFailure reason = UnifyFailure::Clash;
  TermMap sigma;                    // idempotent; binds instantiable variables only
  std::vector<std::string> order;   // binders, dependencies first

  explicit operator bool() const { return success; }
  static UnifyOutcome failure(UnifyFailure r) {
    UnifyOutcome o;
    o.reason = r;
    return o;
  }
};

// Most general unifier of two selections (both formulas or both terms).
// Instantiable binders of either profile may be bound; rigid ones behave as
// constants. When two instantiable variables meet, the one from `pa` is bound
// to the one from `pb`.
UnifyOutcome unify(const Expr& a, const Expr& b, const QuantifierProfile& pa,
                   const QuantifierProfile& pb);

// Only the substitution; `order` is left empty.
UnifyOutcome solve(const Expr& a, const Expr& b, const QuantifierProfile& pa,
                   const QuantifierProfile& pb);

using Edge = std::pair<std::string, std::string>;  // first must precede second

// Orders the binders of both profiles: nesting within each profile, every
// binder occurring in sigma(x) before x, plus `extra` edges.
// Returns false (order untouched) when the constraints are cyclic.
bool dependency_order(const TermMap& sigma, const QuantifierProfile& pa,
                      const QuantifierProfile& pb, const std::vector<Edge>& extra,
                      std::vector<std::string>& order);

// dependency_order, after re-choosing which variable of each group of
// instantiable variables unified with one another stays unbound, when the
// default choice is cyclic. Updates `sigma` to the choice that succeeded.
bool order_bindings(TermMap& sigma, const QuantifierProfile& pa, const QuantifierProfile& pb,
                    const std::vector<Edge>& extra, std::vector<std::string>& order);

}  // namespace sublink

#include "sublink/link.hpp"

#include <algorithm>

#include "sublink/units.hpp"

namespace sublink {

const char* direction_name(Direction d) { return d == Direction::Backward ? "backward" : "forward"; }

std::string kind_to_string(const LinkageKind& k) {
  std::string s = direction_name(k.direction);
  if (k.form == LinkForm::Logical) return s + " logical";
  s += " rewrite ";
  s += k.side == EqSide::Lhs ? "lhs " : "rhs ";
  s += k.equality_in == Role::Hypothesis ? "hypothesis" : "conclusion";
  return s;
}

const char* reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::BadShape: return "BadShape";
    case RejectReason::PolarityViolation: return "PolarityViolation";
    case RejectReason::UnificationFailure: return "UnificationFailure";
  }
  return "?";
}

namespace {

Side side_of(Role r) { return r == Role::Hypothesis ? Side::Hypothesis : Side::Conclusion; }

Rejection reject(RejectReason r, std::string msg) { return {r, std::nullopt, std::move(msg)}; }

Rejection unification_failure(UnifyFailure f) {
  return {RejectReason::UnificationFailure, f,
          std::string("selections do not unify: ") + failure_name(f)};
}

// Left-of-⊢ binders under the first inversion can only be opened once the
// right operand has crossed its own first inversion.
std::vector<Edge> barrier_edges(const QuantifierProfile& left, const QuantifierProfile& right) {
  std::vector<Edge> out;
  for (const auto& r : right) {
    if (r.inversions > 0) continue;
    for (const auto& l : left)
      if (l.inversions > 0) out.emplace_back(r.name, l.name);
  }
  return out;
}

bool is_eq_side(const Formula& item, const Path& path) {
  std::size_t n = formula_prefix(item, path);
  if (path.size() != n + 1) return false;
  Expr atom = resolve(item, Path(path.begin(), path.begin() + static_cast<long>(n))).selection;
  return std::get<Formula>(atom).is(Kind::Eq);
}

Linkage make_linkage(const Selection& src, const Selection& dst, LinkageKind kind,
                     const Selection& left, const Selection& right) {
  Linkage l;
  l.src = src;
  l.dst = dst;
  l.kind = kind;
  l.left = left;
  l.right = right;
  return l;
}

Classification classify_logical(const Selection& src, const Selection& dst, const Resolved& rs,
                                const Resolved& rd) {
  LinkageKind kind;
  kind.form = LinkForm::Logical;
  const Selection *hyp = &src, *other = &dst;
  const Resolved *rh = &rs, *ro = &rd;
  if (src.role == Role::Conclusion) {
    std::swap(hyp, other);
    std::swap(rh, ro);
  }
  kind.direction = other->role == Role::Conclusion ? Direction::Backward : Direction::Forward;
  int ih = rh->context.inversions(), io = ro->context.inversions();
  if (kind.direction == Direction::Backward) {
    bool ok = (ih == 0 && io == 0) || (ih == 1 && io == 1) || (ih == 0 && io == 2);
    if (!ok)
      return reject(RejectReason::PolarityViolation,
                    "inversion pair (" + std::to_string(ih) + "," + std::to_string(io) +
                        ") not allowed for a backward linkage");
  } else {
    if ((ih + io) != 1)
      return reject(RejectReason::PolarityViolation,
                    "inversion pair (" + std::to_string(ih) + "," + std::to_string(io) +
                        ") not allowed for a forward linkage");
  }

  const Selection& left = kind.direction == Direction::Backward ? *hyp : src;
  const Selection& right = kind.direction == Direction::Backward ? *other : dst;
  const Resolved& rl = &left == &src ? rs : rd;
  const Resolved& rr = &right == &src ? rs : rd;
  QuantifierProfile pl = profile(rl.context, side_of(left.role));
  QuantifierProfile pr = profile(rr.context, side_of(right.role));
  UnifyOutcome u = solve(rl.selection, rr.selection, pl, pr);
  if (!u) return unification_failure(u.reason);
  std::vector<Edge> extra;
  if (kind.direction == Direction::Backward) extra = barrier_edges(pl, pr);
  if (!order_bindings(u.sigma, pl, pr, extra, u.order))
    return unification_failure(UnifyFailure::Cycle);
  Linkage l = make_linkage(src, dst, kind, left, right);
  l.sigma = std::move(u.sigma);
  l.order = std::move(u.order);
  return l;
}

// `eq` holds the selected equation side, `term` the subterm to rewrite.
Classification classify_rewrite(const Selection& src, const Selection& dst, bool eq_is_src) {
  const Selection& eq = eq_is_src ? src : dst;
  const Selection& term = eq_is_src ? dst : src;
  Resolved re = resolve(eq.item, eq.path), rt = resolve(term.item, term.path);
  LinkageKind kind;
  kind.form = LinkForm::Rewrite;
  kind.side = eq.path.back() == 0 ? EqSide::Lhs : EqSide::Rhs;
  kind.equality_in = eq.role;
  int inv = re.context.inversions();
  if (eq.role == Role::Hypothesis) {
    if (inv != 0)
      return reject(RejectReason::PolarityViolation,
                    "an equation used from a hypothesis must not sit left of an implication");
    kind.direction = term.role == Role::Conclusion ? Direction::Backward : Direction::Forward;
  } else {
    if (term.role != Role::Hypothesis)
      return reject(RejectReason::BadShape, "rewrite needs a hypothesis and a conclusion");
    if (inv != 1)
      return reject(RejectReason::PolarityViolation,
                    "an equation in the conclusion must be an assumption of it");
    kind.direction = Direction::Backward;
  }

  bool eq_left;
  if (kind.direction == Direction::Backward)
    eq_left = eq.role == Role::Hypothesis;
  else
    eq_left = eq_is_src;
  const Selection& left = eq_left ? eq : term;
  const Selection& right = eq_left ? term : eq;
  const Resolved& rl = eq_left ? re : rt;
  const Resolved& rr = eq_left ? rt : re;
  QuantifierProfile pl = profile(rl.context, side_of(left.role));
  QuantifierProfile pr = profile(rr.context, side_of(right.role));
  UnifyOutcome u = solve(rl.selection, rr.selection, pl, pr);
  if (!u) return unification_failure(u.reason);

  // Only the binders of the rewritten item down to the deepest one that the
  // substitution touches need to be opened.
  std::set<std::string> relevant;
  for (const auto& [x, t] : u.sigma) {
    relevant.insert(x);
    collect_vars(t, relevant);
  }
  QuantifierProfile& pterm = eq_left ? pr : pl;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < pterm.size(); ++i)
    if (relevant.count(pterm[i].name)) keep = i + 1;
  pterm.resize(keep);

  std::vector<Edge> extra;
  if (kind.direction == Direction::Backward) extra = barrier_edges(pl, pr);
  if (!order_bindings(u.sigma, pl, pr, extra, u.order))
    return unification_failure(UnifyFailure::Cycle);
  Linkage l = make_linkage(src, dst, kind, left, right);
  l.equation = eq_left ? 0 : 1;
  l.sigma = std::move(u.sigma);
  l.order = std::move(u.order);
  return l;
}

}  // namespace

Classification classify(const Selection& src_in, const Selection& dst_in) {
  if (src_in.role == Role::Conclusion && dst_in.role == Role::Conclusion)
    return reject(RejectReason::BadShape, "both selections are in the conclusion");
  Selection src = src_in, dst = dst_in;
  std::set<std::string> used;
  src.item = barendregt(src.item, used);
  dst.item = barendregt(dst.item, used);

  Resolved rs = resolve(src.item, src.path), rd = resolve(dst.item, dst.path);
  bool fs = is_formula(rs.selection), fd = is_formula(rd.selection);
  if (fs && fd) return classify_logical(src, dst, rs, rd);
  if (fs || fd) return reject(RejectReason::BadShape, "a formula cannot be linked to a term");

  bool src_eq = is_eq_side(src.item, src.path), dst_eq = is_eq_side(dst.item, dst.path);
  if (!src_eq && !dst_eq)
    return reject(RejectReason::BadShape, "neither term is a side of an equation");
  std::optional<Rejection> first;
  if (src_eq) {
    Classification c = classify_rewrite(src, dst, true);
    if (std::holds_alternative<Linkage>(c)) return c;
    first = std::get<Rejection>(c);
  }
  if (dst_eq) {
    Classification c = classify_rewrite(src, dst, false);
    if (std::holds_alternative<Linkage>(c) || !first) return c;
  }
  return *first;
}

// ---- interaction ------------------------------------------------------------

InteractionState initial_state(const Linkage& l) {
  InteractionState s;
  s.op = l.kind.direction == Direction::Backward ? Operator::Turnstile : Operator::Star;
  s.left = l.left.item;
  s.right = l.right.item;
  s.left_path = l.left.path;
  s.right_path = l.right.path;
  s.sigma = l.sigma;
  s.equation = l.equation;
  if (l.equation >= 0) {
    std::set<std::string> relevant;
    for (const auto& [x, t] : l.sigma) {
      relevant.insert(x);
      collect_vars(t, relevant);
    }
    const Selection& term = l.equation == 0 ? l.right : l.left;
    for (const auto& b : resolve(term.item, term.path).context.binders())
      if (relevant.count(b)) s.needed.insert(b);
  }
  return s;
}

std::string render(const InteractionState& s, const SyntaxOptions& opts) {
  std::string hole = print_formula(s.left, opts) +
                     (s.op == Operator::Turnstile ? " |- " : " * ") +
                     print_formula(s.right, opts);
  if (s.outer.empty()) return hole;
  return print_with_hole(s.outer.plug(Formula::pred(kHoleName, {})), "(" + hole + ")", opts);
}

namespace {

// Rules available on one operand; `on_left` selects the ⊢ left-hand rules.
enum class Move {
  None,
  Blocked,
  And, Or, ImpPremise, ImpConclusion,
  ForallI, ForallS, ExistsI, ExistsS,
};

bool at_selection(const Formula& f, const Path& p) { return p.empty() || f.is_atom(); }

bool ready(const InteractionState& s, const std::string& x) {
  auto it = s.sigma.find(x);
  if (it == s.sigma.end()) return true;
  std::vector<std::string> bound = s.outer.binders();
  for (const auto& v : vars_of(it->second))
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) return false;
  return true;
}

bool operand_active(const InteractionState& s, int which) {
  const Formula& f = which == 0 ? s.left : s.right;
  const Path& p = which == 0 ? s.left_path : s.right_path;
  if (at_selection(f, p)) return false;
  if (s.equation < 0 || s.equation == which) return true;
  Formula cur = f;
  for (std::size_t i = 0; i < p.size() && !cur.is_atom(); ++i) {
    if (cur.is_quantifier() && s.needed.count(cur.var())) return true;
    cur = cur.children()[p[i]];
  }
  return false;
}

Move move_of(const InteractionState& s, int which) {
  if (!operand_active(s, which)) return Move::None;
  const Formula& f = which == 0 ? s.left : s.right;
  const Path& p = which == 0 ? s.left_path : s.right_path;
  switch (f.kind()) {
    case Kind::And: return Move::And;
    case Kind::Or: return Move::Or;
    case Kind::Imp:
      if (p[0] == 1) return Move::ImpConclusion;
      if (s.op == Operator::Turnstile && which == 0) return Move::Blocked;
      return Move::ImpPremise;
    case Kind::Forall:
    case Kind::Exists: {
      bool inst = s.sigma.count(f.var()) != 0;
      if (inst && !ready(s, f.var())) return Move::Blocked;
      if (f.is(Kind::Forall)) return inst ? Move::ForallI : Move::ForallS;
      return inst ? Move::ExistsI : Move::ExistsS;
    }
    default:
      return Move::None;
  }
}

int inversions_along(const Formula& f, const Path& p) {
  int n = 0;
  Formula cur = f;
  for (std::size_t i = 0; i < p.size() && !cur.is_atom(); ++i) {
    if (cur.is(Kind::Imp) && p[i] == 0) ++n;
    cur = cur.children()[p[i]];
  }
  return n;
}

// Lower is preferred. Backward: invertible left, invertible right, R∃i, L∀i,
// right non-invertible, left non-invertible.
int backward_priority(Move m, int which) {
  if (which == 0) {
    switch (m) {
      case Move::Or:
      case Move::ExistsS:
      case Move::ExistsI: return 0;
      case Move::ForallI: return 3;
      case Move::And:
      case Move::ImpConclusion:
      case Move::ForallS: return 5;
      default: return -1;
    }
  }
  switch (m) {
    case Move::ImpPremise:
    case Move::ImpConclusion:
    case Move::ForallS:
    case Move::ForallI: return 1;
    case Move::ExistsI: return 2;
    case Move::And:
    case Move::Or:
    case Move::ExistsS: return 4;
    default: return -1;
  }
}

// Forward: `consumer` is the operand whose selection still has an odd number
// of inversions ahead of it.
int forward_priority(Move m, bool consumer) {
  switch (m) {
    case Move::ExistsS:
    case Move::ExistsI: return consumer ? 0 : 1;
    case Move::ForallI: return consumer ? 2 : 3;
    case Move::And: return consumer ? 4 : 5;
    case Move::ForallS: return consumer ? 6 : 7;
    case Move::ImpConclusion: return consumer ? 8 : 11;
    case Move::Or: return consumer ? 12 : 9;
    case Move::ImpPremise: return consumer ? 10 : 13;
    default: return -1;
  }
}

Formula child_at(const Formula& f, const Path& p) { return f.children()[p[0]]; }
Path tail(const Path& p) { return Path(p.begin() + 1, p.end()); }

Step apply_backward(const InteractionState& s, Move m, int which) {
  InteractionState n = s;
  const Formula& f = which == 0 ? s.left : s.right;
  const Path& p = which == 0 ? s.left_path : s.right_path;
  Formula& slot = which == 0 ? n.left : n.right;
  Path& slot_path = which == 0 ? n.left_path : n.right_path;
  int k = p.empty() ? 0 : p[0];
  Formula chosen = f.is_atom() || f.is_unit() ? f : child_at(f, p);
  Formula other = k == 0 && f.is_binary() ? f.right() : (f.is_binary() ? f.left() : Formula());
  RuleId rule = RuleId::Id;
  auto descend = [&] {
    slot = chosen;
    slot_path = tail(p);
  };
  if (which == 0) {
    switch (m) {
      case Move::And:
        rule = k == 0 ? RuleId::LAnd1 : RuleId::LAnd2;
        descend();
        break;
      case Move::Or:
        rule = k == 0 ? RuleId::LOr1 : RuleId::LOr2;
        n.outer.push(Frame::binary(Kind::And, k, Formula::imp(other, s.right)));
        descend();
        break;
      case Move::ImpConclusion:
        rule = RuleId::LImp2;
        n.outer.push(Frame::binary(Kind::And, 1, f.left()));
        descend();
        break;
      case Move::ForallI:
        rule = RuleId::LForallI;
        slot = substitute(f.body(), f.var(), s.sigma.at(f.var()));
        slot_path = tail(p);
        break;
      case Move::ForallS:
        rule = RuleId::LForallS;
        n.outer.push(Frame::binder(Kind::Exists, f.var()));
        descend();
        break;
      case Move::ExistsS:
        rule = RuleId::LExistsS;
        n.outer.push(Frame::binder(Kind::Forall, f.var()));
        descend();
        break;
      default:
        throw StuckState("no left rule");
    }
    return {rule, n};
  }
  switch (m) {
    case Move::And:
      rule = k == 0 ? RuleId::RAnd1 : RuleId::RAnd2;
      n.outer.push(Frame::binary(Kind::And, k, other));
      descend();
      break;
    case Move::Or:
      rule = k == 0 ? RuleId::ROr1 : RuleId::ROr2;
      n.outer.push(Frame::binary(Kind::Or, k, other));
      descend();
      break;
    case Move::ImpPremise:
      rule = RuleId::RImp1;
      n.outer.push(Frame::binary(Kind::Imp, 0, f.right()));
      n.op = Operator::Star;
      descend();
      break;
    case Move::ImpConclusion:
      rule = RuleId::RImp2;
      n.outer.push(Frame::binary(Kind::Imp, 1, f.left()));
      descend();
      break;
    case Move::ForallS:
      rule = RuleId::RForallS;
      n.outer.push(Frame::binder(Kind::Forall, f.var()));
      descend();
      break;
    case Move::ExistsI:
      rule = RuleId::RExistsI;
      slot = substitute(f.body(), f.var(), s.sigma.at(f.var()));
      slot_path = tail(p);
      break;
    case Move::ExistsS:
      rule = RuleId::RExistsS;
      n.outer.push(Frame::binder(Kind::Exists, f.var()));
      descend();
      break;
    default:
      throw StuckState("no right rule");
  }
  return {rule, n};
}

// Forward rules decompose the right operand; the state is first turned so
// that `which` is on the right (the implicit Fcomm).
Step apply_forward(const InteractionState& s, Move m, int which) {
  InteractionState n = s;
  if (which == 0) {
    std::swap(n.left, n.right);
    std::swap(n.left_path, n.right_path);
    if (n.equation >= 0) n.equation = 1 - n.equation;
  }
  const Formula f = n.right;
  const Path p = n.right_path;
  int k = p[0];
  auto descend = [&] {
    n.right = child_at(f, p);
    n.right_path = tail(p);
  };
  RuleId rule;
  switch (m) {
    case Move::And:
      rule = k == 0 ? RuleId::FAnd1 : RuleId::FAnd2;
      descend();
      break;
    case Move::Or:
      rule = k == 0 ? RuleId::FOr1 : RuleId::FOr2;
      n.outer.push(Frame::binary(Kind::Or, k, f.children()[1 - k]));
      descend();
      break;
    case Move::ImpPremise:
      rule = RuleId::FImp1;
      n.outer.push(Frame::binary(Kind::Imp, 0, f.right()));
      n.op = Operator::Turnstile;
      descend();
      break;
    case Move::ImpConclusion:
      rule = RuleId::FImp2;
      n.outer.push(Frame::binary(Kind::Imp, 1, f.left()));
      descend();
      break;
    case Move::ForallI:
      rule = RuleId::FForallI;
      n.right = substitute(f.body(), f.var(), s.sigma.at(f.var()));
      n.right_path = tail(p);
      break;
    case Move::ForallS:
      rule = RuleId::FForallS;
      n.outer.push(Frame::binder(Kind::Forall, f.var()));
      descend();
      break;
    case Move::ExistsS:
    case Move::ExistsI:
      // An existential hypothesis is never instantiated.
      rule = RuleId::FExistsS;
      n.outer.push(Frame::binder(Kind::Exists, f.var()));
      descend();
      break;
    default:
      throw StuckState("no forward rule");
  }
  return {rule, n};
}

}  // namespace

bool is_redex(const InteractionState& s) {
  if (s.equation < 0)
    return s.op == Operator::Turnstile && at_selection(s.left, s.left_path) &&
           at_selection(s.right, s.right_path);
  const Formula& eq = s.equation == 0 ? s.left : s.right;
  const Path& ep = s.equation == 0 ? s.left_path : s.right_path;
  if (!eq.is(Kind::Eq) || ep.size() != 1) return false;
  if (operand_active(s, 1 - s.equation)) return false;
  return s.op == Operator::Star || s.equation == 0;
}

std::optional<Step> step(const InteractionState& s) {
  if (is_redex(s)) return std::nullopt;
  Move moves[2] = {move_of(s, 0), move_of(s, 1)};
  int best = -1, best_prio = 1 << 20;
  for (int w = 0; w < 2; ++w) {
    if (moves[w] == Move::None || moves[w] == Move::Blocked) continue;
    int prio;
    if (s.op == Operator::Turnstile) {
      prio = backward_priority(moves[w], w);
    } else {
      const Formula& f = w == 0 ? s.left : s.right;
      const Path& p = w == 0 ? s.left_path : s.right_path;
      bool consumer = inversions_along(f, p) % 2 == 1;
      if (s.equation >= 0 && inversions_along(s.left, s.left_path) % 2 == 0 &&
          inversions_along(s.right, s.right_path) % 2 == 0)
        consumer = w != s.equation;
      prio = forward_priority(moves[w], consumer);
    }
    if (prio >= 0 && prio < best_prio) {
      best = w;
      best_prio = prio;
    }
  }
  if (best < 0) throw StuckState("no applicable rule in " + render(s));
  if (s.op == Operator::Turnstile) return apply_backward(s, moves[best], best);
  return apply_forward(s, moves[best], best);
}

Interaction interact(const InteractionState& s) {
  if (!is_redex(s)) throw StuckState("not an interaction redex: " + render(s));
  if (s.equation < 0) {
    if (!alpha_eq(s.left, s.right))
      throw StuckState("linked formulas differ: " + render(s));
    return {RuleId::Id, s.plug(Formula::top())};
  }
  const Formula& eq = s.equation == 0 ? s.left : s.right;
  int side = (s.equation == 0 ? s.left_path : s.right_path)[0];
  const Term& from = side == 0 ? eq.lhs() : eq.rhs();
  const Term& to = side == 0 ? eq.rhs() : eq.lhs();
  const Formula& target = s.equation == 0 ? s.right : s.left;
  const Path& tp = s.equation == 0 ? s.right_path : s.left_path;
  Resolved r = resolve(target, tp);
  if (!is_term(r.selection) || std::get<Term>(r.selection) != from)
    throw StuckState("rewritten occurrence differs from the equation side: " + render(s));
  Formula rewritten = replace_at(target, tp, to);
  RuleId rule;
  if (s.op == Operator::Turnstile)
    rule = side == 0 ? RuleId::LEq1 : RuleId::LEq2;
  else
    rule = side == 0 ? RuleId::FEq1 : RuleId::FEq2;
  return {rule, s.plug(rewritten)};
}

DnDResult execute(const Linkage& l, const SyntaxOptions& opts) {
  DnDResult out;
  InteractionState s = initial_state(l);
  constexpr int kStepLimit = 100000;
  for (int i = 0;; ++i) {
    if (i > kStepLimit) throw StuckState("linking does not terminate");
    auto next = step(s);
    if (!next) break;
    s = std::move(next->next);
    out.trace.push_back({next->rule, render(s, opts)});
  }
  Interaction in = interact(s);
  out.trace.push_back({in.rule, print_formula(in.result, opts)});
  out.result = eliminate_units(in.result, &out.trace, opts);
  return out;
}

}  // namespace sublink

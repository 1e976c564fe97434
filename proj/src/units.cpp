#include "sublink/units.hpp"

namespace sublink {

namespace {

std::optional<std::pair<RuleId, Formula>> root_step(const Formula& f) {
  switch (f.kind()) {
    case Kind::And: {
      const Formula &l = f.left(), &r = f.right();
      if (l.is(Kind::True)) return {{RuleId::Neul, r}};
      if (r.is(Kind::True)) return {{RuleId::Neur, l}};
      if (l.is(Kind::False)) return {{RuleId::Absl, l}};
      if (r.is(Kind::False)) return {{RuleId::Absr, r}};
      return std::nullopt;
    }
    case Kind::Or: {
      const Formula &l = f.left(), &r = f.right();
      if (l.is(Kind::False)) return {{RuleId::Neul, r}};
      if (r.is(Kind::False)) return {{RuleId::Neur, l}};
      if (l.is(Kind::True)) return {{RuleId::Absl, l}};
      if (r.is(Kind::True)) return {{RuleId::Absr, r}};
      return std::nullopt;
    }
    case Kind::Imp: {
      const Formula &l = f.left(), &r = f.right();
      if (l.is(Kind::True)) return {{RuleId::Neul, r}};
      if (r.is(Kind::True)) return {{RuleId::Absr, r}};
      if (l.is(Kind::False)) return {{RuleId::Efq, Formula::top()}};
      return std::nullopt;
    }
    case Kind::Forall:
      if (f.body().is(Kind::True)) return {{RuleId::Absq, f.body()}};
      return std::nullopt;
    case Kind::Exists:
      if (f.body().is(Kind::False)) return {{RuleId::Absq, f.body()}};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

struct Normalizer {
  std::vector<TraceStep>* trace;
  const SyntaxOptions& opts;
  Context ctx;

  void record(RuleId r, const Formula& now) {
    if (trace) trace->push_back({r, print_formula(ctx.plug(now), opts)});
  }

  Formula run(const Formula& f) {
    Formula cur = f;
    if (cur.is_binary()) {
      ctx.push(Frame::binary(cur.kind(), 0, cur.right()));
      Formula l = run(cur.left());
      ctx.pop();
      ctx.push(Frame::binary(cur.kind(), 1, l));
      Formula r = run(cur.right());
      ctx.pop();
      cur = Formula::binary(cur.kind(), l, r);
    } else if (cur.is_quantifier()) {
      ctx.push(Frame::binder(cur.kind(), cur.var()));
      Formula b = run(cur.body());
      ctx.pop();
      cur = Formula::quantifier(cur.kind(), cur.var(), b);
    }
    // Each root step yields a unit or an already normal child.
    while (auto step = root_step(cur)) {
      cur = step->second;
      record(step->first, cur);
    }
    return cur;
  }
};

}  // namespace

std::optional<RuleId> unit_redex(const Formula& f) {
  auto step = root_step(f);
  if (!step) return std::nullopt;
  return step->first;
}

bool has_unit_redex(const Formula& f) {
  if (unit_redex(f)) return true;
  for (const auto& c : f.children())
    if (has_unit_redex(c)) return true;
  return false;
}

Formula eliminate_units(const Formula& f, std::vector<TraceStep>* trace,
                        const SyntaxOptions& opts) {
  Normalizer n{trace, opts, {}};
  return n.run(f);
}

}  // namespace sublink

#include "sublink/path.hpp"

namespace sublink {

namespace {

std::string describe(const Path& p) { return "path " + path_to_string(p) + " out of range"; }

}  // namespace

PathOutOfRange::PathOutOfRange(const Path& p) : std::out_of_range(describe(p)) {}

const char* polarity_name(Polarity p) { return p == Polarity::Positive ? "positive" : "negative"; }

std::string path_to_string(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Formula Frame::plug(Formula inner) const {
  switch (kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      return hole == 0 ? Formula::binary(kind, std::move(inner), sibling)
                       : Formula::binary(kind, sibling, std::move(inner));
    case Kind::Forall:
    case Kind::Exists:
      return Formula::quantifier(kind, var, std::move(inner));
    default:
      throw std::logic_error("frame over a non-connective");
  }
}

Formula Context::plug(const Formula& inner) const {
  Formula f = inner;
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) f = it->plug(std::move(f));
  return f;
}

int Context::inversions() const {
  int n = 0;
  for (const auto& fr : frames_)
    if (fr.kind == Kind::Imp && fr.hole == 0) ++n;
  return n;
}

std::vector<std::string> Context::binders() const {
  std::vector<std::string> out;
  for (const auto& fr : frames_)
    if (fr.kind == Kind::Forall || fr.kind == Kind::Exists) out.push_back(fr.var);
  return out;
}

Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (int step : path) {
    if (cur.is_var() || step < 0 || static_cast<std::size_t>(step) >= cur.args().size())
      throw PathOutOfRange(path);
    cur = cur.args()[step];
  }
  return cur;
}

Resolved resolve(const Formula& item, const Path& path) {
  Resolved r;
  Formula cur = item;
  std::size_t i = 0;
  for (; i < path.size(); ++i) {
    int step = path[i];
    if (cur.is_atom()) break;
    if (cur.is_binary()) {
      if (step != 0 && step != 1) throw PathOutOfRange(path);
      r.context.push(Frame::binary(cur.kind(), step, cur.children()[1 - step]));
      cur = cur.children()[step];
    } else if (cur.is_quantifier()) {
      if (step != 0) throw PathOutOfRange(path);
      r.context.push(Frame::binder(cur.kind(), cur.var()));
      cur = cur.body();
    } else {
      throw PathOutOfRange(path);
    }
  }
  if (i == path.size()) {
    r.selection = cur;
    return r;
  }
  int step = path[i];
  if (step < 0 || static_cast<std::size_t>(step) >= cur.terms().size()) throw PathOutOfRange(path);
  r.term_path.assign(path.begin() + static_cast<long>(i), path.end());
  Path rest(path.begin() + static_cast<long>(i) + 1, path.end());
  Term sub = cur.terms()[step];
  try {
    r.selection = subterm_at(sub, rest);
  } catch (const PathOutOfRange&) {
    throw PathOutOfRange(path);
  }
  return r;
}

std::size_t formula_prefix(const Formula& item, const Path& path) {
  Formula cur = item;
  std::size_t i = 0;
  for (; i < path.size() && !cur.is_atom(); ++i) {
    if (cur.is_unit()) throw PathOutOfRange(path);
    if (path[i] < 0 || static_cast<std::size_t>(path[i]) >= cur.children().size())
      throw PathOutOfRange(path);
    cur = cur.children()[path[i]];
  }
  return i;
}

Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  if (path.empty()) return replacement;
  int step = path.front();
  if (t.is_var() || step < 0 || static_cast<std::size_t>(step) >= t.args().size())
    throw PathOutOfRange(path);
  std::vector<Term> args = t.args();
  args[step] = replace_at(args[step], Path(path.begin() + 1, path.end()), replacement);
  return Term::app(t.name(), std::move(args));
}

namespace {

Formula replace_rec(const Formula& f, const Path& path, std::size_t i, const Expr& repl,
                    const Path& full) {
  if (i == path.size()) {
    if (!is_formula(repl)) throw ClassMismatch();
    return std::get<Formula>(repl);
  }
  int step = path[i];
  if (f.is_atom()) {
    if (step < 0 || static_cast<std::size_t>(step) >= f.terms().size()) throw PathOutOfRange(full);
    if (!is_term(repl)) throw ClassMismatch();
    std::vector<Term> ts = f.terms();
    try {
      ts[step] = replace_at(ts[step], Path(path.begin() + static_cast<long>(i) + 1, path.end()),
                            std::get<Term>(repl));
    } catch (const PathOutOfRange&) {
      throw PathOutOfRange(full);
    }
    if (f.is(Kind::Eq)) return Formula::eq(ts[0], ts[1]);
    return Formula::pred(f.name(), std::move(ts));
  }
  if (f.is_unit() || step < 0 || static_cast<std::size_t>(step) >= f.children().size())
    throw PathOutOfRange(full);
  if (f.is_quantifier())
    return Formula::quantifier(f.kind(), f.var(), replace_rec(f.body(), path, i + 1, repl, full));
  Formula l = f.left(), r = f.right();
  if (step == 0)
    l = replace_rec(l, path, i + 1, repl, full);
  else
    r = replace_rec(r, path, i + 1, repl, full);
  return Formula::binary(f.kind(), l, r);
}

void term_paths(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i));
    term_paths(t.args()[i], cur, out);
    cur.pop_back();
  }
}

void formula_paths(const Formula& f, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  if (f.is_atom()) {
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      cur.push_back(static_cast<int>(i));
      term_paths(f.terms()[i], cur, out);
      cur.pop_back();
    }
    return;
  }
  for (std::size_t i = 0; i < f.children().size(); ++i) {
    cur.push_back(static_cast<int>(i));
    formula_paths(f.children()[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

Formula replace_at(const Formula& item, const Path& path, const Expr& replacement) {
  return replace_rec(item, path, 0, replacement, path);
}

std::vector<Path> all_paths(const Formula& item) {
  std::vector<Path> out;
  Path cur;
  formula_paths(item, cur, out);
  return out;
}

}  // namespace sublink

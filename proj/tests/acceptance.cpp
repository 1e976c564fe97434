#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "properties.hpp"
#include "sublink/cli.hpp"
#include "sublink/proof_state.hpp"
#include "sublink/session.hpp"

using namespace sublink;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void report(const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > limit_s) {
    o.ok = false;
    o.detail = "took " + std::to_string(secs) + " s";
  }
  if (!o.ok) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << buf << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

Outcome from_suite(const fixtures::SuiteResult& r) {
  Outcome o;
  o.ok = r.ok;
  o.detail = r.ok ? std::to_string(r.cases) + " cases" +
                        (r.skipped ? ", " + std::to_string(r.skipped) + " skipped" : "") +
                        (r.detail.empty() ? "" : " (" + r.detail + ")")
                  : r.detail;
  return o;
}

SyntaxOptions peano_options() {
  SyntaxOptions o;
  o.peano_numerals = true;
  return o;
}

Selection sel(const std::string& text, Role role, Path p, const SyntaxOptions& o = {}) {
  return {parse_formula(text, o), role, std::move(p)};
}
Selection hyp(const std::string& text, Path p, const SyntaxOptions& o = {}) {
  return sel(text, Role::Hypothesis, std::move(p), o);
}
Selection concl(const std::string& text, Path p, const SyntaxOptions& o = {}) {
  return sel(text, Role::Conclusion, std::move(p), o);
}

DnDResult link(const Selection& a, const Selection& b, const SyntaxOptions& o = {}) {
  Classification c = classify(a, b);
  if (auto* r = std::get_if<Rejection>(&c)) throw NotALinkage(*r);
  return execute(std::get<Linkage>(c), o);
}

std::string rules_of(const DnDResult& r) {
  std::string out;
  for (const auto& s : r.trace) out += (out.empty() ? "" : " ") + std::string(rule_name(s.rule));
  return out;
}

void expect_result(Outcome& o, const DnDResult& r, const std::string& want,
                   const SyntaxOptions& opts = {}) {
  std::string got = print_formula(r.result, opts);
  o.expect(got == want, "got " + got + ", want " + want);
}

nlohmann::json load(const fs::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

// Final canonical state of a trace; rejected actions are recorded inline.
std::string final_render(const nlohmann::json& trace) {
  Session s(trace.at("problem").get<std::string>());
  std::string log;
  for (const auto& a : trace.at("actions")) {
    try {
      s.apply(action_from_json(a));
    } catch (const std::exception& e) {
      auto err = error_to_json(e);
      log += "rejected " + (err ? err->at("reason").get<std::string>() : std::string("error")) +
             "\n";
    }
  }
  return log + s.state().render();
}

std::string render_in_child(const std::string& self, const fs::path& trace) {
  std::string cmd = "\"" + self + "\" --render \"" + trace.string() + "\"";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  if (pclose(pipe) != 0) throw std::runtime_error("child failed for " + trace.string());
  return out;
}

std::vector<fs::path> shipped_traces() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(SUBLINK_SOURCE_DIR) / "traces"))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--render") {
    std::cout << final_render(load(argv[2]));
    return 0;
  }
  const std::string self = argv[0];
  const unsigned seed = 20261018;

  report("1 aristotle backward", 1, [] {
    Outcome o;
    auto r = link(hyp("forall x. Hum(x) => Mort(x)", {0, 1}), concl("Mort(Socr)", {}));
    expect_result(o, r, "Hum(Socr)");
    o.expect(rules_of(r) == "L∀i L⇒2 id neur", "trace " + rules_of(r));
    return o;
  });

  report("2 aristotle forward", 1, [] {
    Outcome o;
    auto r = link(hyp("Hum(Socr)", {}), hyp("forall x. Hum(x) => Mort(x)", {0, 0}));
    expect_result(o, r, "Mort(Socr)");
    o.expect(rules_of(r) == "F∀i F⇒1 id neul", "trace " + rules_of(r));
    return o;
  });

  report("3 peano rewriting", 1, [] {
    Outcome o;
    auto trace = load(fs::path(SUBLINK_SOURCE_DIR) / "traces" / "peano.json");
    Session s(trace.at("problem").get<std::string>());
    SyntaxOptions plain;
    auto conclusion = [&] { return s.state().goals().at(0).conclusion().formula; };
    const auto& actions = trace.at("actions");
    o.expect(actions.size() == 3, "expected three actions");
    s.apply(action_from_json(actions.at(0)));
    o.expect(conclusion() == parse_formula("S(1 + 0) = 2", peano_options()),
             "first rewrite gave " + print_formula(conclusion(), peano_options()));
    s.apply(action_from_json(actions.at(1)));
    o.expect(conclusion() == parse_formula("S(1) = 2", peano_options()),
             "second rewrite gave " + print_formula(conclusion(), plain));
    o.expect(print_formula(conclusion(), peano_options()) == "2 = 2",
             "displayed as " + print_formula(conclusion(), peano_options()));
    s.apply(action_from_json(actions.at(2)));
    o.expect(s.state().complete(), "click did not close the goal");
    return o;
  });

  report("4 propositional and quantifier examples", 1, [] {
    Outcome o;
    expect_result(o, link(hyp("A /\\ B", {0}), concl("A", {})), "true");
    expect_result(o, link(hyp("A", {}), concl("(B /\\ A) \\/ C", {0, 1})), "B \\/ C");
    expect_result(o, link(hyp("A \\/ B", {0}), hyp("~A", {0})), "B");
    expect_result(o, link(hyp("A => B", {1}), concl("B", {})), "A");
    auto curried = link(hyp("A => B => C", {1, 1}), concl("D \\/ C", {1}));
    auto uncurried = link(hyp("A /\\ B => C", {1}), concl("D \\/ C", {1}));
    expect_result(o, curried, print_formula(parse_formula("D \\/ (A /\\ B)")));
    expect_result(o, uncurried, print_formula(parse_formula("D \\/ (A /\\ B)")));
    expect_result(o, link(hyp("B => A => C", {1, 0}), hyp("A", {})), "B => C");
    expect_result(o, link(hyp("B /\\ A => C", {0, 1}), hyp("D => A", {1})), "B /\\ D => C");
    expect_result(o,
                  link(hyp("forall x. forall y. x + y = y + x", {0, 0, 0}),
                       concl("forall a. exists b. A(f(a) + g(b))", {0, 0, 0})),
                  "forall a. exists b. A(g(b) + f(a))");
    expect_result(o, link(hyp("forall x. forall y. P(y) => R(x, y)", {0, 0, 0}), hyp("P(a)", {})),
                  "forall x. R(x, a)");
    expect_result(o, link(hyp("P(a)", {}), concl("exists x. exists y. P(y) /\\ R(x, y)", {0, 0, 0})),
                  "exists x. R(x, a)");
    expect_result(o, link(hyp("forall x. ~x = 0 => f(x) = g(x)", {0, 1, 0}), concl("A(f(t))", {0})),
                  "~t = 0 /\\ A(g(t))");
    expect_result(o,
                  link(hyp("forall x. ~x = 0 => f(x) = g(x)", {0, 1, 0}),
                       concl("exists y. A(f(y))", {0, 0})),
                  "exists y. ~y = 0 /\\ A(g(y))");
    return o;
  });

  report("5 quantifier acyclicity", 1, [] {
    Outcome o;
    expect_result(o,
                  link(hyp("exists y. forall x. R(x, y)", {0, 0}),
                       concl("forall x1. exists y1. R(x1, y1)", {0, 0})),
                  "true");
    try {
      link(hyp("forall x. exists y. R(x, y)", {0, 0}),
           concl("exists y1. forall x1. R(x1, y1)", {0, 0}));
      o.expect(false, "contraposed linkage accepted");
    } catch (const NotALinkage& e) {
      o.expect(e.reason() == "UnificationFailure(Cycle)", "rejected with " + e.reason());
    }
    return o;
  });

  report("6 focusing", 1, [] {
    Outcome o;
    auto r = link(hyp("A \\/ B", {0}), concl("B \\/ A", {1}));
    o.expect(alpha_eq(r.result, parse_formula("B => B \\/ A")), "got " + print_formula(r.result));
    o.expect(!alpha_eq(r.result, parse_formula("B \\/ (B => A)")), "non-invertible rule first");
    return o;
  });

  report("7 riddle trace", 5, [] {
    Outcome o;
    std::ostringstream out;
    int code = cli::check(load(fs::path(SUBLINK_SOURCE_DIR) / "traces" / "edukera.json"), out);
    o.expect(code == 0, "check exited " + std::to_string(code) + "\n" + out.str());
    o.expect(out.str().find("final goals 0") != std::string::npos, "goals remain");
    return o;
  });

  report("8 productivity", 60,
         [&] { return from_suite(fixtures::productivity_suite(seed, 1000)); });
  report("9 polarity", 60, [&] { return from_suite(fixtures::polarity_suite(seed, 1000)); });
  report("10 finite model soundness", 60,
         [&] { return from_suite(fixtures::semantic_suite(seed, 1000)); });
  report("11 unit elimination", 60, [] { return from_suite(fixtures::units_suite(5)); });
  report("12 unify against interleavings", 60, [] { return from_suite(fixtures::unify_suite()); });
  report("13 print/parse round trip", 60,
         [&] { return from_suite(fixtures::roundtrip_suite(seed, 1000)); });

  report("replay determinism", 60, [&] {
    Outcome o;
    auto traces = shipped_traces();
    o.expect(!traces.empty(), "no shipped traces");
    for (const auto& p : traces) {
      auto t = load(p);
      std::string first = final_render(t), second = final_render(t);
      o.expect(first == second, p.filename().string() + " differs within one process");
      o.expect(first == render_in_child(self, p),
               p.filename().string() + " differs across processes");
    }
    if (o.ok) o.detail = std::to_string(traces.size()) + " traces";
    return o;
  });

  return failures == 0 ? 0 : 1;
}

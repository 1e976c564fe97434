#include <gtest/gtest.h>

#include "sublink/proof_state.hpp"

using namespace sublink;

namespace {

ProofState load(const std::string& text) { return ProofState::from_problem(parse_problem(text)); }

const char* kAristotle =
    "hyp forall x. Hum(x) => Mort(x)\n"
    "hyp Hum(Socr)\n"
    "goal Mort(Socr)\n";

std::string text_of(const ProofState& s, int goal, int item) {
  return s.render_item(*s.goal(goal).find(item));
}

std::vector<std::string> texts(const ProofState& s, const Goal& g, Color c) {
  std::vector<std::string> out;
  for (const auto& it : g.items)
    if (it.color == c) out.push_back(s.render_item(it));
  return out;
}

using Strings = std::vector<std::string>;

void single_red(const ProofState& s) {
  for (const auto& g : s.goals()) {
    int reds = 0;
    for (const auto& it : g.items) reds += it.color == Color::Red;
    EXPECT_EQ(reds, 1) << s.render();
  }
}

}  // namespace

TEST(ProofState, InitialAristotle) {
  ProofState s = load(kAristotle);
  ASSERT_EQ(s.goals().size(), 1u);
  const Goal& g = s.goals()[0];
  EXPECT_EQ(texts(s, g, Color::Blue), (Strings{"forall x. Hum(x) => Mort(x)", "Hum(Socr)"}));
  EXPECT_EQ(texts(s, g, Color::Red), (Strings{"Mort(Socr)"}));
  EXPECT_EQ(s.render(),
            "goal 1\n  1 blue forall x. Hum(x) => Mort(x)\n  2 blue Hum(Socr)\n  3 red Mort(Socr)\n");
}

TEST(ProofState, AristotleBackwardThenAxiom) {
  ProofState s = load(kAristotle);
  s.dnd(1, 1, {0, 1}, 3, {});
  EXPECT_EQ(texts(s, s.goal(1), Color::Red), (Strings{"Hum(Socr)"}));
  const Goal& g = s.goal(1);
  s.dnd(1, 2, {}, g.conclusion().id, {});
  EXPECT_TRUE(s.complete());
  EXPECT_EQ(s.render(), "no goals\n");
}

TEST(ProofState, AristotleForward) {
  ProofState s = load(kAristotle);
  s.dnd(1, 2, {}, 1, {0, 0});
  const Goal& g = s.goal(1);
  EXPECT_EQ(texts(s, g, Color::Blue),
            (Strings{"forall x. Hum(x) => Mort(x)", "Hum(Socr)", "Mort(Socr)"}));
  EXPECT_EQ(g.items.back().color, Color::Red);
}

TEST(ProofState, DndRejectionIsInvalidAction) {
  ProofState s = load("hyp exists x. forall y. R(x, y)\ngoal forall y. exists x. R(x, y)\n");
  s.dnd(1, 1, {0, 0}, 2, {0, 0});
  EXPECT_TRUE(s.complete());

  ProofState c = load("hyp forall y. exists x. R(x, y)\ngoal exists x. forall y. R(x, y)\n");
  try {
    c.dnd(1, 1, {0, 0}, 2, {0, 0});
    FAIL() << "accepted";
  } catch (const InvalidAction& e) {
    EXPECT_NE(std::string(e.what()).find("UnificationFailure"), std::string::npos) << e.what();
  }
  EXPECT_EQ(c.goals().size(), 1u);
}

TEST(ProofState, ClickBlueAnd) {
  ProofState s = load("hyp A /\\ B\ngoal C\n");
  s.click(1, 1, {});
  EXPECT_EQ(texts(s, s.goal(1), Color::Blue), (Strings{"A", "B"}));
}

TEST(ProofState, ClickRedAndSplits) {
  ProofState s = load("hyp C\ngoal A /\\ B\n");
  s.click(1, 2, {});
  ASSERT_EQ(s.goals().size(), 2u);
  EXPECT_EQ(texts(s, s.goals()[0], Color::Red), (Strings{"A"}));
  EXPECT_EQ(texts(s, s.goals()[1], Color::Red), (Strings{"B"}));
  EXPECT_EQ(texts(s, s.goals()[1], Color::Blue), (Strings{"C"}));
  EXPECT_NE(s.goals()[0].id, s.goals()[1].id);
}

TEST(ProofState, ClickBlueOrSplits) {
  ProofState s = load("hyp ~Rich(h) \\/ ~Rich(Mother(Mother(h)))\ngoal false\n");
  s.click(1, 1, {});
  ASSERT_EQ(s.goals().size(), 2u);
  EXPECT_EQ(texts(s, s.goals()[0], Color::Blue), (Strings{"~Rich(h)"}));
  EXPECT_EQ(texts(s, s.goals()[1], Color::Blue), (Strings{"~Rich(Mother(Mother(h)))"}));
}

TEST(ProofState, ClickRedDisjunct) {
  ProofState s = load("goal A \\/ B\n");
  s.click(1, 1, {1});
  EXPECT_EQ(texts(s, s.goal(1), Color::Red), (Strings{"B"}));
  ProofState t = load("goal A \\/ B\n");
  t.click(1, 1, {0});
  EXPECT_EQ(texts(t, t.goal(1), Color::Red), (Strings{"A"}));
  EXPECT_THROW(t.click(1, 2, {0}), NoClickAction);
}

TEST(ProofState, ClickRedImplication) {
  ProofState s = load("goal A => B\n");
  s.click(1, 1, {});
  EXPECT_EQ(texts(s, s.goal(1), Color::Blue), (Strings{"A"}));
  EXPECT_EQ(texts(s, s.goal(1), Color::Red), (Strings{"B"}));
}

TEST(ProofState, ClickRedForallIntroducesObject) {
  ProofState s = load("goal forall x. P(x)\n");
  s.click(1, 1, {});
  const Goal& g = s.goal(1);
  EXPECT_EQ(texts(s, g, Color::Green), (Strings{"x"}));
  EXPECT_EQ(texts(s, g, Color::Red), (Strings{"P(x)"}));
}

TEST(ProofState, ClickFreshensClashingName) {
  ProofState s = load("hyp P(x)\ngoal forall x. Q(x)\n");
  s.click(1, 2, {});
  const Goal& g = s.goal(1);
  auto green = texts(s, g, Color::Green);
  ASSERT_EQ(green.size(), 1u);
  EXPECT_NE(green[0], "x");
  EXPECT_EQ(texts(s, g, Color::Red), (Strings{"Q(" + green[0] + ")"}));
}

TEST(ProofState, ClickBlueExists) {
  ProofState s = load("hyp exists y. P(y)\ngoal A\n");
  s.click(1, 1, {});
  const Goal& g = s.goal(1);
  EXPECT_EQ(texts(s, g, Color::Green), (Strings{"y"}));
  EXPECT_EQ(texts(s, g, Color::Blue), (Strings{"P(y)"}));
}

TEST(ProofState, ClickReflexivitySolves) {
  ProofState s = load("flag peano_numerals\ngoal 1 = 1\n");
  s.click(1, 1, {});
  EXPECT_TRUE(s.complete());
  ProofState t = load("goal a = b\n");
  EXPECT_THROW(t.click(1, 1, {}), NoClickAction);
}

TEST(ProofState, OtherClicksAreIgnored) {
  ProofState s = load("object c := f(a)\nhyp A => B\nhyp forall x. P(x)\ngoal exists x. P(x)\n");
  std::string before = s.render();
  EXPECT_THROW(s.click(1, 1, {}), NoClickAction);
  EXPECT_THROW(s.click(1, 2, {}), NoClickAction);
  EXPECT_THROW(s.click(1, 3, {}), NoClickAction);
  EXPECT_THROW(s.click(1, 4, {}), NoClickAction);
  EXPECT_THROW(s.click(1, 2, {0}), NoClickAction);
  EXPECT_EQ(s.render(), before);
}

TEST(ProofState, MissingGoalOrItem) {
  ProofState s = load(kAristotle);
  EXPECT_THROW(s.click(9, 1, {}), InvalidAction);
  EXPECT_THROW(s.click(1, 99, {}), InvalidAction);
  EXPECT_THROW(s.dnd(1, 1, {7}, 3, {}), InvalidAction);
}

TEST(ProofState, AddHyp) {
  ProofState s = load("hyp P(b)\ngoal Q(a)\n");
  s.add_hyp(1, "P(a)");
  ASSERT_EQ(s.goals().size(), 2u);
  EXPECT_EQ(texts(s, s.goals()[0], Color::Blue), (Strings{"P(b)", "P(a)"}));
  EXPECT_EQ(texts(s, s.goals()[0], Color::Red), (Strings{"Q(a)"}));
  EXPECT_EQ(texts(s, s.goals()[1], Color::Blue), (Strings{"P(b)"}));
  EXPECT_EQ(texts(s, s.goals()[1], Color::Red), (Strings{"P(a)"}));
  single_red(s);
}

TEST(ProofState, AddHypTrueIsClickable) {
  ProofState s = load("goal A\n");
  s.add_hyp(1, "true");
  int second = s.goals()[1].id;
  s.click(second, s.goal(second).conclusion().id, {});
  EXPECT_EQ(s.goals().size(), 1u);
}

TEST(ProofState, AddHypErrors) {
  ProofState s = load("goal P(a)\n");
  EXPECT_THROW(s.add_hyp(1, "Q(z)"), UnknownSymbol);
  EXPECT_THROW(s.add_hyp(1, "P(a"), SyntaxError);
  EXPECT_THROW(s.add_hyp(1, "P(a, a)"), ArityMismatch);
  EXPECT_EQ(s.goals().size(), 1u);
}

TEST(ProofState, AddExpr) {
  ProofState s = load("object h\ngoal Rich(h) \\/ Rich(Mother(h))\n");
  s.add_expr(1, "m", "Mother(h)");
  const Goal& g = s.goal(1);
  EXPECT_EQ(texts(s, g, Color::Green), (Strings{"m := Mother(h)", "h"}));
  s.add_hyp(1, "Rich(m)");
  EXPECT_EQ(s.goals().size(), 2u);
}

TEST(ProofState, AddExprErrors) {
  ProofState s = load("object h\ngoal Rich(h)\n");
  EXPECT_THROW(s.add_expr(1, "h", "h"), DuplicateName);
  EXPECT_THROW(s.add_expr(1, "Rich", "h"), DuplicateName);
  EXPECT_THROW(s.add_expr(1, "k", "f(w)"), UnknownSymbol);
  EXPECT_THROW(s.add_expr(1, "1k", "h"), InvalidAction);
}

TEST(ProofState, CandidatesAristotle) {
  ProofState s = load(kAristotle);
  auto c = s.candidates(1, 1, {0, 1}, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].path, Path{});
  EXPECT_EQ(c[0].kind.direction, Direction::Backward);
  EXPECT_EQ(c[0].kind.form, LinkForm::Logical);
}

TEST(ProofState, CandidatesFromObjectAreEmpty) {
  ProofState s = load("object c := f(a)\nhyp P(c)\ngoal P(c)\n");
  EXPECT_TRUE(s.candidates(1, 1, {}, 3).empty());
  EXPECT_TRUE(s.candidates(1, 2, {}, 1).empty());
}

TEST(ProofState, CandidatesPeanoRewrite) {
  ProofState s = load(
      "flag peano_numerals\n"
      "hyp forall x. forall y. x + S(y) = S(x + y)\n"
      "goal 1 + 1 = 2\n");
  auto c = s.candidates(1, 1, {0, 0, 0}, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].path, (Path{0}));
  EXPECT_EQ(c[0].kind.form, LinkForm::Rewrite);
  EXPECT_EQ(c[0].kind.direction, Direction::Backward);
}

TEST(ProofState, PeanoProof) {
  ProofState s = load(
      "flag peano_numerals\n"
      "hyp forall x. forall y. x + S(y) = S(x + y)\n"
      "hyp forall x. x + 0 = x\n"
      "goal 1 + 1 = 2\n");
  s.dnd(1, 1, {0, 0, 0}, 3, {0});
  EXPECT_EQ(text_of(s, 1, s.goal(1).conclusion().id), "S(1 + 0) = 2");
  s.dnd(1, 2, {0, 0}, s.goal(1).conclusion().id, {0, 0});
  EXPECT_EQ(text_of(s, 1, s.goal(1).conclusion().id), "2 = 2");
  s.click(1, s.goal(1).conclusion().id, {});
  EXPECT_TRUE(s.complete());
}

TEST(ProofState, ItemIdsAreNeverReused) {
  ProofState s = load("goal (A => B) /\\ C\n");
  s.click(1, 1, {});
  s.click(s.goals()[0].id, s.goals()[0].conclusion().id, {});
  std::set<int> seen;
  for (const auto& g : s.goals())
    for (const auto& it : g.items) seen.insert(it.id);
  EXPECT_EQ(seen, (std::set<int>{3, 4, 5}));
}

TEST(ProofState, GoalCountBookkeeping) {
  ProofState s = load("hyp A \\/ B\ngoal C /\\ D\n");
  s.click(1, 2, {});
  EXPECT_EQ(s.goals().size(), 2u);
  int g = s.goals()[0].id;
  s.click(g, s.goal(g).items[0].id, {});
  EXPECT_EQ(s.goals().size(), 3u);
  single_red(s);
}

TEST(ProofState, ForwardKeepsHypotheses) {
  ProofState s = load("hyp A \\/ B\nhyp ~A\ngoal B\n");
  s.dnd(1, 1, {0}, 2, {0});
  EXPECT_EQ(texts(s, s.goal(1), Color::Blue), (Strings{"A \\/ B", "~A", "B"}));
}

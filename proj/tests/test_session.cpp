#include <gtest/gtest.h>

#include "sublink/session.hpp"

using namespace sublink;
using nlohmann::json;

namespace {

const char* kAristotle =
    "hyp forall x. Hum(x) => Mort(x)\n"
    "hyp Hum(Socr)\n"
    "goal Mort(Socr)\n";

Action dnd(int goal, int src, Path sp, int dst, Path dp) {
  Action a;
  a.type = Action::Type::DnD;
  a.goal = goal;
  a.item = src;
  a.path = std::move(sp);
  a.dst_item = dst;
  a.dst_path = std::move(dp);
  return a;
}

Action simple(Action::Type t) {
  Action a;
  a.type = t;
  return a;
}

}  // namespace

TEST(Session, AristotleTwoDrags) {
  Session s(kAristotle);
  s.apply(dnd(1, 1, {0, 1}, 3, {}));
  ASSERT_EQ(s.last_trace().size(), 4u);
  int red = s.state().goal(1).conclusion().id;
  s.apply(dnd(1, 2, {}, red, {}));
  EXPECT_TRUE(s.state().complete());
}

TEST(Session, UndoRedo) {
  Session s(kAristotle);
  std::string initial = s.state().render();
  s.apply(dnd(1, 1, {0, 1}, 3, {}));
  std::string after = s.state().render();
  s.apply(simple(Action::Type::Undo));
  EXPECT_EQ(s.state().render(), initial);
  s.apply(simple(Action::Type::Redo));
  EXPECT_EQ(s.state().render(), after);
  EXPECT_THROW(s.apply(simple(Action::Type::Redo)), InvalidAction);
  s.apply(simple(Action::Type::Undo));
  s.apply(dnd(1, 2, {}, 1, {0, 0}));
  EXPECT_FALSE(s.can_redo());
}

TEST(Session, FailedActionLeavesSessionUnchanged) {
  Session s(kAristotle);
  Action a;
  a.type = Action::Type::Click;
  a.goal = 7;
  EXPECT_THROW(s.apply(a), InvalidAction);
  EXPECT_TRUE(s.actions().empty());
  EXPECT_FALSE(s.can_undo());
}

TEST(Session, ActionJsonRoundTrip) {
  std::vector<json> records = {
      {{"type", "click"}, {"goal", 1}, {"item", 2}, {"path", {0, 1}}},
      {{"type", "dnd"}, {"goal", 1}, {"src", {{"item", 1}, {"path", {0}}}},
       {"dst", {{"item", 3}, {"path", json::array()}}}},
      {{"type", "add_hyp"}, {"goal", 2}, {"formula", "P(a)"}},
      {{"type", "add_expr"}, {"goal", 2}, {"name", "m"}, {"term", "f(a)"}},
      {{"type", "undo"}},
      {{"type", "redo"}},
  };
  for (const auto& r : records) EXPECT_EQ(action_to_json(action_from_json(r)), r);
  EXPECT_THROW(action_from_json({{"type", "jump"}}), InvalidAction);
  EXPECT_THROW(action_from_json({{"type", "click"}}), InvalidAction);
}

TEST(Session, TraceReplayIsDeterministic) {
  Session s(kAristotle);
  s.apply(dnd(1, 2, {}, 1, {0, 0}));
  s.apply(simple(Action::Type::Undo));
  s.apply(dnd(1, 1, {0, 1}, 3, {}));
  json t = s.trace();
  EXPECT_EQ(t["actions"].size(), 3u);
  Session a = Session::replay(t);
  Session b = Session::replay(json::parse(t.dump()));
  EXPECT_EQ(a.state().render(), s.state().render());
  EXPECT_EQ(b.state().render(), s.state().render());
}

TEST(Session, StateJson) {
  Session s(kAristotle);
  json j = state_to_json(s.state());
  EXPECT_FALSE(j["solved"].get<bool>());
  ASSERT_EQ(j["goals"].size(), 1u);
  const json& items = j["goals"][0]["items"];
  ASSERT_EQ(items.size(), 3u);
  EXPECT_EQ(items[2]["color"], "red");
  EXPECT_EQ(items[2]["text"], "Mort(Socr)");
  const json& tree = items[0]["tree"];
  EXPECT_EQ(tree["kind"], "Forall");
  EXPECT_EQ(tree["label"], "x");
  const json& mort = tree["children"][0]["children"][1];
  EXPECT_EQ(mort["path"], json({0, 1}));
  EXPECT_EQ(mort["text"], "Mort(x)");
  EXPECT_EQ(mort["children"][0]["path"], json({0, 1, 0}));
  EXPECT_EQ(mort["children"][0]["kind"], "Term");
}

TEST(Session, TreePathsResolve) {
  Formula f = parse_formula("forall x. P(f(x, a)) /\\ exists y. x = g(y) \\/ ~Q");
  std::function<void(const json&)> walk = [&](const json& n) {
    Path p = n["path"].get<Path>();
    Resolved r = resolve(f, p);
    std::string text = is_formula(r.selection) ? print_formula(std::get<Formula>(r.selection))
                                               : print_term(std::get<Term>(r.selection));
    EXPECT_EQ(text, n["text"].get<std::string>());
    for (const auto& c : n["children"]) walk(c);
  };
  walk(item_tree(f));
}

#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "sublink/server.hpp"

using namespace sublink;
using nlohmann::json;

namespace {

const char* kAristotle =
    "hyp forall x. Hum(x) => Mort(x)\n"
    "hyp Hum(Socr)\n"
    "goal Mort(Socr)\n";

class Api : public ::testing::Test {
 protected:
  void start(std::optional<std::filesystem::path> dir = std::nullopt) {
    store_ = std::make_unique<SessionStore>(dir);
    install_routes(server_, *store_);
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
  }
  void SetUp() override { start(); }
  void TearDown() override { stop(); }
  void stop() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  json post(const std::string& path, const json& body, int expect) {
    auto r = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, expect) << r->body;
    return json::parse(r->body);
  }
  json get(const std::string& path, int expect) {
    auto r = client_->Get(path);
    EXPECT_TRUE(r);
    EXPECT_EQ(r->status, expect) << r->body;
    return json::parse(r->body);
  }
  std::string open(const std::string& problem) {
    return post("/sessions", {{"problem", problem}}, 201)["session_id"];
  }

  httplib::Server server_;
  std::unique_ptr<SessionStore> store_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

json dnd(int goal, int src, Path sp, int dst, Path dp) {
  return {{"type", "dnd"},
          {"goal", goal},
          {"src", {{"item", src}, {"path", sp}}},
          {"dst", {{"item", dst}, {"path", dp}}}};
}

std::vector<std::string> colors(const json& state) {
  std::vector<std::string> out;
  for (const auto& it : state["goals"][0]["items"]) out.push_back(it["color"]);
  return out;
}

}  // namespace

TEST_F(Api, CreateSession) {
  json r = post("/sessions", {{"problem", kAristotle}}, 201);
  EXPECT_EQ(colors(r["state"]), (std::vector<std::string>{"blue", "blue", "red"}));
  EXPECT_FALSE(r["state"]["solved"].get<bool>());
  EXPECT_EQ(get("/sessions/" + r["session_id"].get<std::string>() + "/state", 200), r);
}

TEST_F(Api, AristotleByTwoDrags) {
  std::string id = open(kAristotle);
  json r = post("/sessions/" + id + "/actions", dnd(1, 1, {0, 1}, 3, {}), 200);
  const json& items = r["state"]["goals"][0]["items"];
  EXPECT_EQ(items[2]["text"], "Hum(Socr)");
  ASSERT_EQ(r["trace"].size(), 4u);
  EXPECT_EQ(r["trace"][0]["rule"], "L∀i");
  int red = items[2]["id"];
  r = post("/sessions/" + id + "/actions", dnd(1, 2, {}, red, {}), 200);
  EXPECT_TRUE(r["state"]["solved"].get<bool>());
  EXPECT_TRUE(r["state"]["goals"].empty());
}

TEST_F(Api, Candidates) {
  std::string id = open("object c := f(a)\n" + std::string(kAristotle));
  json r = get("/sessions/" + id + "/candidates?goal=1&src_item=2&src_path=0,1&dst_item=4", 200);
  ASSERT_EQ(r["candidates"].size(), 1u);
  EXPECT_EQ(r["candidates"][0]["path"], json::array());
  EXPECT_EQ(r["candidates"][0]["kind"]["direction"], "backward");
  r = get("/sessions/" + id + "/candidates?src_item=2&src_path=[0,1]&dst_item=4", 200);
  EXPECT_EQ(r["candidates"].size(), 1u);
  r = get("/sessions/" + id + "/candidates?src_item=1&dst_item=4", 200);
  EXPECT_TRUE(r["candidates"].empty());
}

TEST_F(Api, Errors) {
  get("/sessions/nope/state", 404);
  post("/sessions/nope/actions", {{"type", "undo"}}, 404);
  json bad = post("/sessions", {{"problem", "goal P("}}, 422);
  EXPECT_EQ(bad["reason"], "SyntaxError");
  std::string id = open("hyp forall y. exists x. R(x, y)\ngoal exists x. forall y. R(x, y)\n");
  json r = post("/sessions/" + id + "/actions", dnd(1, 1, {0, 0}, 2, {0, 0}), 422);
  EXPECT_EQ(r["reason"], "UnificationFailure(Cycle)");
  EXPECT_EQ(r["kind"], "NotALinkage");
  r = post("/sessions/" + id + "/actions", {{"type", "click"}, {"goal", 1}, {"item", 1}, {"path", json::array()}}, 422);
  EXPECT_EQ(r["reason"], "NoClickAction");
  r = post("/sessions/" + id + "/actions", {{"type", "teleport"}}, 422);
  EXPECT_EQ(r["reason"], "InvalidAction");
  r = post("/sessions/" + id + "/actions", {{"type", "click"}, {"goal", 5}, {"item", 1}}, 422);
  EXPECT_EQ(r["reason"], "InvalidAction");
}

TEST_F(Api, TraceAndDelete) {
  std::string id = open(kAristotle);
  post("/sessions/" + id + "/actions", dnd(1, 2, {}, 1, {0, 0}), 200);
  json t = get("/sessions/" + id + "/trace", 200);
  EXPECT_EQ(t["problem"], kAristotle);
  ASSERT_EQ(t["actions"].size(), 1u);
  Session replayed = Session::replay(t);
  json state = get("/sessions/" + id + "/state", 200)["state"];
  EXPECT_EQ(state_to_json(replayed.state()), state);
  auto r = client_->Delete("/sessions/" + id);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  get("/sessions/" + id + "/state", 404);
}

TEST_F(Api, ConcurrentActionsAreSerialized) {
  std::string id = open("goal A => A => A => A => A => A => A => A => A\n");
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      httplib::Client c("127.0.0.1", port_);
      json state = json::parse(c.Get("/sessions/" + id + "/state")->body)["state"];
      (void)state;
      auto r = c.Post("/sessions/" + id + "/actions", json{{"type", "undo"}}.dump(), "application/json");
      if (r && r->status == 422) ++ok;
    });
  for (auto& th : threads) th.join();
  EXPECT_EQ(ok.load(), 8);

  threads.clear();
  std::atomic<int> applied{0};
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      httplib::Client c("127.0.0.1", port_);
      json state = json::parse(c.Get("/sessions/" + id + "/state")->body)["state"];
      int red = state["goals"][0]["items"].back()["id"];
      json a{{"type", "click"}, {"goal", 1}, {"item", red}, {"path", json::array()}};
      auto r = c.Post("/sessions/" + id + "/actions", a.dump(), "application/json");
      if (r && r->status == 200) ++applied;
    });
  for (auto& th : threads) th.join();
  json t = get("/sessions/" + id + "/trace", 200);
  EXPECT_EQ(static_cast<int>(t["actions"].size()), applied.load());
  Session replayed = Session::replay(t);
  EXPECT_EQ(state_to_json(replayed.state()), get("/sessions/" + id + "/state", 200)["state"]);
}

TEST_F(Api, PersistAndReload) {
  stop();
  auto dir = std::filesystem::temp_directory_path() /
             ("sublink-persist-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
              "-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
  std::filesystem::remove_all(dir);
  {
    httplib::Server fresh;
    SessionStore store(dir);
    install_routes(fresh, store);
    int port = fresh.bind_to_any_port("127.0.0.1");
    std::thread th([&] { fresh.listen_after_bind(); });
    fresh.wait_until_ready();
    httplib::Client c("127.0.0.1", port);
    auto r = c.Post("/sessions", json{{"problem", kAristotle}}.dump(), "application/json");
    std::string id = json::parse(r->body)["session_id"];
    c.Post("/sessions/" + id + "/actions", dnd(1, 1, {0, 1}, 3, {}).dump(), "application/json");
    fresh.stop();
    th.join();
    EXPECT_TRUE(std::filesystem::exists(dir / (id + ".json")));

    SessionStore reloaded(dir);
    auto e = reloaded.find(id);
    ASSERT_TRUE(e);
    EXPECT_EQ(e->session.state().render(), store.find(id)->session.state().render());
    EXPECT_TRUE(reloaded.erase(id));
    EXPECT_FALSE(std::filesystem::exists(dir / (id + ".json")));
  }
  std::filesystem::remove_all(dir);
}

#include "sublink/server.hpp"

#include <fstream>
#include <sstream>

#include <httplib.h>

namespace sublink {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::int64_t epoch_ms(SessionStore::Clock::time_point t) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

SessionStore::Clock::time_point from_epoch_ms(std::int64_t ms) {
  return SessionStore::Clock::time_point(std::chrono::milliseconds(ms));
}

}  // namespace

SessionStore::SessionStore(std::optional<fs::path> persist_dir) : persist_(std::move(persist_dir)) {
  if (!persist_) return;
  fs::create_directories(*persist_);
  for (const auto& f : fs::directory_iterator(*persist_)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path());
    json j = json::parse(in);
    auto e = std::make_shared<Entry>(Session::replay(j.at("trace")));
    e->created = from_epoch_ms(j.value("created", std::int64_t{0}));
    e->updated = from_epoch_ms(j.value("updated", std::int64_t{0}));
    sessions_.emplace(f.path().stem().string(), std::move(e));
  }
}

std::string SessionStore::new_id() {
  static const char* hex = "0123456789abcdef";
  for (;;) {
    std::uint64_t r = rng_();
    std::string id;
    for (int i = 0; i < 16; ++i, r >>= 4) id += hex[r & 0xf];
    if (!sessions_.count(id)) return id;
  }
}

std::string SessionStore::create(std::string problem) {
  auto e = std::make_shared<Entry>(Session(std::move(problem)));
  std::string id;
  {
    std::lock_guard lock(mutex_);
    id = new_id();
    sessions_.emplace(id, e);
  }
  save(id, *e);
  return id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

bool SessionStore::erase(const std::string& id) {
  std::lock_guard lock(mutex_);
  if (!sessions_.erase(id)) return false;
  if (persist_) fs::remove(*persist_ / (id + ".json"));
  return true;
}

void SessionStore::save(const std::string& id, const Entry& e) const {
  if (!persist_) return;
  json j{{"id", id},
         {"trace", e.session.trace()},
         {"created", epoch_ms(e.created)},
         {"updated", epoch_ms(e.updated)}};
  fs::path target = *persist_ / (id + ".json");
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, target);
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void not_found(httplib::Response& res, const std::string& id) {
  reply(res, 404, {{"reason", "UnknownSession"}, {"message", "no session " + id}});
}

// Answers 422 for the known error types and rethrows anything else.
void reject(httplib::Response& res, const std::exception& e) {
  if (auto j = error_to_json(e)) return reply(res, 422, *j);
  throw;
}

// "0,1", "[0,1]" or "" (the root).
Path path_param(const std::string& text) {
  if (!text.empty() && text.front() == '[') return json::parse(text).get<Path>();
  Path out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) out.push_back(std::stoi(part));
  return out;
}

json snapshot(const std::string& id, const SessionStore::Entry& e) {
  return {{"session_id", id},
          {"state", state_to_json(e.session.state())},
          {"can_undo", e.session.can_undo()},
          {"can_redo", e.session.can_redo()}};
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.contains("problem") || !body["problem"].is_string())
      return reply(res, 400, {{"reason", "BadRequest"}, {"message", "expected {problem: string}"}});
    try {
      std::string id = store.create(body["problem"].get<std::string>());
      auto e = store.find(id);
      std::shared_lock lock(e->mutex);
      reply(res, 201, snapshot(id, *e));
    } catch (const std::exception& ex) {
      reject(res, ex);
    }
  });

  server.Get(R"(/sessions/([^/]+)/state)", [&store](const httplib::Request& req,
                                                         httplib::Response& res) {
    std::string id = req.matches[1];
    auto e = store.find(id);
    if (!e) return not_found(res, id);
    std::shared_lock lock(e->mutex);
    reply(res, 200, snapshot(id, *e));
  });

  server.Post(R"(/sessions/([^/]+)/actions)", [&store](const httplib::Request& req,
                                                           httplib::Response& res) {
    std::string id = req.matches[1];
    auto e = store.find(id);
    if (!e) return not_found(res, id);
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded())
      return reply(res, 400, {{"reason", "BadRequest"}, {"message", "body is not JSON"}});
    std::unique_lock lock(e->mutex);
    try {
      Action a = action_from_json(body);
      e->session.apply(a);
      e->updated = SessionStore::Clock::now();
      store.save(id, *e);
      json out = snapshot(id, *e);
      out["trace"] = a.type == Action::Type::DnD ? trace_to_json(e->session.last_trace())
                                                 : json::array();
      reply(res, 200, out);
    } catch (const std::exception& ex) {
      reject(res, ex);
    }
  });

  server.Get(R"(/sessions/([^/]+)/candidates)", [&store](const httplib::Request& req,
                                                             httplib::Response& res) {
    std::string id = req.matches[1];
    auto e = store.find(id);
    if (!e) return not_found(res, id);
    std::shared_lock lock(e->mutex);
    try {
      const ProofState& s = e->session.state();
      if (!req.has_param("src_item") || !req.has_param("dst_item"))
        throw InvalidAction("src_item and dst_item are required");
      if (s.complete()) throw InvalidAction("no open goal");
      int goal = req.has_param("goal") ? std::stoi(req.get_param_value("goal")) : s.goals()[0].id;
      int src = std::stoi(req.get_param_value("src_item"));
      int dst = std::stoi(req.get_param_value("dst_item"));
      Path src_path = path_param(req.get_param_value("src_path"));
      json list = json::array();
      for (const auto& c : s.candidates(goal, src, src_path, dst))
        list.push_back({{"path", c.path}, {"kind", kind_to_json(c.kind)}});
      reply(res, 200, {{"candidates", std::move(list)}});
    } catch (const std::invalid_argument&) {
      reply(res, 400, {{"reason", "BadRequest"}, {"message", "malformed query parameter"}});
    } catch (const json::exception&) {
      reply(res, 400, {{"reason", "BadRequest"}, {"message", "malformed path"}});
    } catch (const std::exception& ex) {
      reject(res, ex);
    }
  });

  server.Get(R"(/sessions/([^/]+)/trace)", [&store](const httplib::Request& req,
                                                         httplib::Response& res) {
    std::string id = req.matches[1];
    auto e = store.find(id);
    if (!e) return not_found(res, id);
    std::shared_lock lock(e->mutex);
    reply(res, 200, e->session.trace());
  });

  server.Delete(R"(/sessions/([^/]+))", [&store](const httplib::Request& req,
                                                      httplib::Response& res) {
    std::string id = req.matches[1];
    if (!store.erase(id)) return not_found(res, id);
    reply(res, 200, {{"session_id", id}, {"deleted", true}});
  });

  server.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                                  std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, 500, {{"reason", "InternalError"}, {"message", what}});
  });
}

}  // namespace sublink

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>

#include "sublink/session.hpp"

namespace httplib {
class Server;
}

namespace sublink {

// Live sessions keyed by an opaque id. With a persist directory every
// session is snapshotted to <dir>/<id>.json after each change and reloaded
// on construction.
class SessionStore {
 public:
  using Clock = std::chrono::system_clock;

  struct Entry {
    explicit Entry(Session s) : session(std::move(s)) {}
    // Actions take it exclusively, reads shared.
    std::shared_mutex mutex;
    Session session;
    Clock::time_point created = Clock::now(), updated = Clock::now();
  };

  explicit SessionStore(std::optional<std::filesystem::path> persist_dir = std::nullopt);

  // Throws the parser's errors on a malformed problem.
  std::string create(std::string problem);
  std::shared_ptr<Entry> find(const std::string& id) const;
  bool erase(const std::string& id);
  // Writes the snapshot of `id`; a no-op without a persist directory.
  void save(const std::string& id, const Entry& e) const;
  std::size_t size() const;

 private:
  std::string new_id();

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::optional<std::filesystem::path> persist_;
  std::mt19937_64 rng_{std::random_device{}()};
};

void install_routes(httplib::Server& server, SessionStore& store);

}  // namespace sublink

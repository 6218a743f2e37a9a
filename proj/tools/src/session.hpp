#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "json_io.hpp"

namespace qca::service {

// Thrown when a mutation races another one on the same session or carries a stale revision.
struct Conflict : Error {
  explicit Conflict(const std::string& what) : Error("conflict", what) {}
};

class Session {
 public:
  Session(std::string id, io::SeedConfig config);

  const std::string& id() const { return id_; }
  const io::SeedConfig& config() const { return config_; }

  io::json seed_json() const;
  long revision() const;
  std::vector<int> history() const;

  // expected_revision: reject with Conflict unless it matches the current revision
  io::json mutate(int k, std::optional<long> expected_revision = std::nullopt);
  io::json undo(std::optional<long> expected_revision = std::nullopt);
  io::json variable(int i) const;
  io::json gvectors() const;
  io::json snapshot() const;
  void restore(const std::vector<int>& history);

 private:
  std::string id_;
  io::SeedConfig config_;
  ClusterCache cache_;
  mutable std::mutex mu_;
  std::vector<int> history_;  // undo stack: letters applied so far
  QuantumSeed current_;
  long revision_ = 0;

  std::unique_lock<std::mutex> exclusive();
};

class SessionStore {
 public:
  std::shared_ptr<Session> create(const io::SeedConfig& config);
  std::shared_ptr<Session> load(const io::json& snapshot);
  std::shared_ptr<Session> find(const std::string& id) const;
  bool erase(const std::string& id);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::atomic<long> next_{1};
};

}  // namespace qca::service

#include "session.hpp"

namespace qca::service {

Session::Session(std::string id, io::SeedConfig config)
    : id_(std::move(id)), config_(std::move(config)), cache_(io::initial_seed_for(config_)) {
  current_ = cache_.initial();
}

std::unique_lock<std::mutex> Session::exclusive() {
  std::unique_lock lock(mu_, std::try_to_lock);
  if (!lock.owns_lock()) throw Conflict("another mutation of this session is in progress");
  return lock;
}

io::json Session::seed_json() const {
  std::lock_guard lock(mu_);
  return io::seed_to_json(config_, current_);
}

long Session::revision() const {
  std::lock_guard lock(mu_);
  return revision_;
}

std::vector<int> Session::history() const {
  std::lock_guard lock(mu_);
  return history_;
}

io::json Session::mutate(int k, std::optional<long> expected_revision) {
  auto lock = exclusive();
  if (expected_revision && *expected_revision != revision_)
    throw Conflict("stale revision " + std::to_string(*expected_revision) + ", current is " +
                   std::to_string(revision_));
  if (k < 1 || k > current_.mutable_count())
    throw Error("invalid_vertex", "k must be a mutable vertex in 1.." + std::to_string(current_.mutable_count()));
  std::vector<int> next = history_;
  next.push_back(k);
  current_ = cache_.seed_at(next);
  current_.history = next;
  history_ = std::move(next);
  ++revision_;
  return io::seed_to_json(config_, current_);
}

io::json Session::undo(std::optional<long> expected_revision) {
  auto lock = exclusive();
  if (expected_revision && *expected_revision != revision_)
    throw Conflict("stale revision " + std::to_string(*expected_revision) + ", current is " +
                   std::to_string(revision_));
  if (history_.empty()) throw Error("empty_history", "nothing to undo");
  history_.pop_back();
  current_ = cache_.seed_at(history_);
  current_.history = history_;
  ++revision_;
  return io::seed_to_json(config_, current_);
}

io::json Session::variable(int i) const {
  std::lock_guard lock(mu_);
  if (i < 1 || i > current_.total())
    throw Error("invalid_vertex", "i must be in 1.." + std::to_string(current_.total()));
  const TorusElement& x = current_.vars[i - 1];
  return {{"i", i}, {"value", io::to_json(x)}, {"gvector", io::to_json(g_vector(x, cache_.initial().b))}};
}

io::json Session::gvectors() const {
  std::lock_guard lock(mu_);
  io::json out = io::json::array();
  for (const auto& x : current_.vars) out.push_back(io::to_json(g_vector(x, cache_.initial().b)));
  return {{"gvectors", out}};
}

io::json Session::snapshot() const {
  std::lock_guard lock(mu_);
  return {{"schema", io::kSchemaVersion},
          {"kind", "session"},
          {"config", io::config_to_json(config_)},
          {"history", history_},
          {"seed", io::seed_to_json(config_, current_)}};
}

void Session::restore(const std::vector<int>& history) {
  std::lock_guard lock(mu_);
  for (int k : history)
    if (k < 1 || k > cache_.initial().mutable_count()) throw Error("invalid_vertex", "history has an invalid letter");
  current_ = cache_.seed_at(history);
  current_.history = history;
  history_ = history;
}

std::shared_ptr<Session> SessionStore::create(const io::SeedConfig& config) {
  std::string id = "s" + std::to_string(next_++);
  auto s = std::make_shared<Session>(id, config);
  std::unique_lock lock(mu_);
  sessions_[id] = s;
  return s;
}

std::shared_ptr<Session> SessionStore::load(const io::json& snapshot) {
  io::check_schema(snapshot);
  if (snapshot.value("kind", "") != "session") throw Error("invalid_json", "not a session snapshot");
  auto s = create(io::config_from_json(snapshot.at("config")));
  s->restore(snapshot.at("history").get<std::vector<int>>());
  if (snapshot.contains("seed") && snapshot["seed"] != s->seed_json()) {
    erase(s->id());
    throw Error("inconsistent_snapshot", "stored seed does not match the replayed history");
  }
  return s;
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

bool SessionStore::erase(const std::string& id) {
  std::unique_lock lock(mu_);
  return sessions_.erase(id) > 0;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

}  // namespace qca::service

#include <atomic>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "doctest.h"
#include "server.hpp"

using namespace qca;
using namespace qca::service;
using io::json;

namespace {

// Server on an ephemeral local port for the lifetime of the fixture.
struct LiveServer {
  SessionStore store;
  httplib::Server server;
  int port = 0;
  std::thread thread;

  LiveServer() {
    install_routes(server, store);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~LiveServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

const char* kA3 = R"({"quiver":{"n":3,"arrows":[[1,3],[2,3]]},"level":1,"setting":"E"})";

std::string create(httplib::Client& c, const std::string& body = kA3) {
  auto r = c.Post("/session", body, "application/json");
  REQUIRE(r);
  REQUIRE(r->status == 201);
  return json::parse(r->body)["id"].get<std::string>();
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

}  // namespace

TEST_CASE("session lifecycle over HTTP") {
  LiveServer srv;
  auto c = srv.client();
  std::string id = create(c);
  auto seed0 = c.Get("/session/" + id + "/seed");
  REQUIRE(seed0);
  CHECK(seed0->status == 200);

  auto m = c.Post("/session/" + id + "/mutate", R"({"k":2})", "application/json");
  REQUIRE(m);
  CHECK(m->status == 200);
  CHECK(json::parse(m->body)["history"] == json::array({2}));

  auto u = c.Post("/session/" + id + "/undo", "", "application/json");
  REQUIRE(u);
  CHECK(u->status == 200);
  CHECK(u->body == seed0->body);  // byte-identical round trip
  CHECK(c.Get("/session/" + id + "/seed")->body == seed0->body);

  auto v = c.Get("/session/" + id + "/variable/1");
  REQUIRE(v);
  CHECK(v->status == 200);
  CHECK(json::parse(v->body)["gvector"]["g"] == json::array({1, 0, 0, 0, 0, 0}));
  auto g = c.Get("/session/" + id + "/gvectors");
  REQUIRE(g);
  CHECK(json::parse(g->body)["gvectors"].size() == 6);

  auto d = c.Delete("/session/" + id);
  REQUIRE(d);
  CHECK(d->status == 204);
  CHECK(c.Get("/session/" + id + "/seed")->status == 404);
  CHECK(c.Delete("/session/" + id)->status == 404);
}

TEST_CASE("HTTP error codes") {
  LiveServer srv;
  auto c = srv.client();
  std::string id = create(c);
  CHECK(c.Get("/session/nope/seed")->status == 404);
  CHECK(c.Post("/session/nope/mutate", R"({"k":1})", "application/json")->status == 404);
  CHECK(c.Post("/session/" + id + "/mutate", R"({"k":4})", "application/json")->status == 422);
  CHECK(c.Post("/session/" + id + "/mutate", R"({"k":0})", "application/json")->status == 422);
  CHECK(c.Post("/session/" + id + "/mutate", R"({"k":"1"})", "application/json")->status == 422);
  CHECK(c.Post("/session/" + id + "/mutate", R"({})", "application/json")->status == 422);
  CHECK(c.Post("/session/" + id + "/undo", "", "application/json")->status == 422);
  CHECK(c.Get("/session/" + id + "/variable/7")->status == 422);
  CHECK(c.Post("/session", "not json", "application/json")->status == 400);
  CHECK(c.Post("/session", R"({"quiver":{"n":2,"arrows":[[2,1]]}})", "application/json")->status == 422);
  auto bad = c.Post("/session/" + id + "/mutate", R"({"k":9})", "application/json");
  CHECK(json::parse(bad->body)["error"]["code"] == "invalid_vertex");
}

TEST_CASE("stale revisions are rejected with 409") {
  LiveServer srv;
  auto c = srv.client();
  std::string id = create(c);
  auto r1 = c.Post("/session/" + id + "/mutate", R"({"k":1,"revision":0})", "application/json");
  CHECK(r1->status == 200);
  CHECK(r1->get_header_value("X-Session-Revision") == "1");
  // a second writer that also saw revision 0 loses
  auto r2 = c.Post("/session/" + id + "/mutate", R"({"k":2,"revision":0})", "application/json");
  CHECK(r2->status == 409);
  CHECK(json::parse(c.Get("/session/" + id + "/seed")->body)["history"] == json::array({1}));
}

TEST_CASE("concurrent mutations: every request either applies or is rejected, and the history replays") {
  LiveServer srv;
  std::string id;
  {
    auto c = srv.client();
    id = create(c);
  }
  std::atomic<int> ok{0}, conflict{0}, other{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      auto c = srv.client();
      for (int i = 0; i < 10; ++i) {
        auto r = c.Post("/session/" + id + "/mutate", json{{"k", 1 + (t + i) % 3}}.dump(), "application/json");
        if (r && r->status == 200) ++ok;
        else if (r && r->status == 409) ++conflict;
        else ++other;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(other == 0);
  CHECK(ok + conflict == 80);
  auto c = srv.client();
  json seed = json::parse(c.Get("/session/" + id + "/seed")->body);
  CHECK(static_cast<int>(seed["history"].size()) == ok.load());
  auto [cfg, replayed] = io::seed_from_json(seed);  // throws if the stored seed disagrees with the replay
  CHECK(replayed.history.size() == seed["history"].size());
}

TEST_CASE("HTTP seed after (1,2) equals the CLI output byte for byte") {
  LiveServer srv;
  auto c = srv.client();
  std::string id = create(c);
  c.Post("/session/" + id + "/mutate", R"({"k":1})", "application/json");
  auto r = c.Post("/session/" + id + "/mutate", R"({"k":2})", "application/json");
  std::string out = run_cli({"mutate", "--named", "a3", "--word", "1,2", "--indent", "-1"});
  CHECK(out == r->body + "\n");
  CHECK(c.Get("/session/" + id + "/seed")->body + "\n" == out);
}

TEST_CASE("session snapshots reload and reject other schema versions") {
  LiveServer srv;
  auto c = srv.client();
  std::string id = create(c);
  c.Post("/session/" + id + "/mutate", R"({"k":3})", "application/json");
  c.Post("/session/" + id + "/mutate", R"({"k":1})", "application/json");
  std::string snap = c.Get("/session/" + id + "/snapshot")->body;
  auto loaded = c.Post("/session/load", snap, "application/json");
  REQUIRE(loaded->status == 201);
  std::string id2 = json::parse(loaded->body)["id"];
  CHECK(c.Get("/session/" + id2 + "/seed")->body == c.Get("/session/" + id + "/seed")->body);
  // later computations agree too
  CHECK(c.Post("/session/" + id2 + "/mutate", R"({"k":2})", "application/json")->body ==
        c.Post("/session/" + id + "/mutate", R"({"k":2})", "application/json")->body);
  CHECK(c.Post("/session/" + id2 + "/undo", "", "application/json")->body ==
        c.Post("/session/" + id + "/undo", "", "application/json")->body);

  json future = json::parse(snap);
  future["schema"] = io::kSchemaVersion + 1;
  auto rejected = c.Post("/session/load", future.dump(), "application/json");
  CHECK(rejected->status == 400);
  CHECK(json::parse(rejected->body)["error"]["code"] == "schema_version");

  json tampered = json::parse(snap);
  tampered["history"] = json::array({3});
  CHECK(c.Post("/session/load", tampered.dump(), "application/json")->status == 422);
}

TEST_CASE("session store without HTTP") {
  SessionStore store;
  auto s = store.create({Quiver(2, {{1, 2}}), 1, Setting::L});
  CHECK(store.size() == 1);
  std::string before = s->seed_json().dump();
  s->mutate(1);
  s->mutate(2);
  CHECK(s->history() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(s->mutate(1, 0), Conflict);
  s->undo();
  s->undo();
  CHECK(s->seed_json().dump() == before);
  CHECK(store.erase(s->id()));
  CHECK_FALSE(store.find(s->id()));
}

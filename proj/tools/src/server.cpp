#include "server.hpp"

#include <iostream>

namespace qca::service {

namespace {

void reply(httplib::Response& res, int status, const io::json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, const std::string& code, const std::string& message) {
  reply(res, status, io::error_json(code, message));
}

int status_for(const Error& e) {
  if (e.code() == "conflict") return 409;
  if (e.code() == "invalid_json" || e.code() == "schema_version") return 400;
  return 422;
}

// Runs the handler and maps library errors onto HTTP statuses.
template <class F>
void guarded(httplib::Response& res, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    fail(res, status_for(e), e.code(), e.what());
  } catch (const io::json::exception& e) {
    fail(res, 400, "invalid_json", e.what());
  } catch (const std::exception& e) {
    fail(res, 500, "internal", e.what());
  }
}

io::json body_of(const httplib::Request& req) {
  if (req.body.empty()) return io::json::object();
  return io::json::parse(req.body);
}

std::optional<long> revision_of(const io::json& body) {
  if (!body.contains("revision")) return std::nullopt;
  if (!body["revision"].is_number_integer()) throw Error("invalid_json", "revision must be an integer");
  return body["revision"].get<long>();
}

void with_revision(httplib::Response& res, const Session& s) {
  res.set_header("X-Session-Revision", std::to_string(s.revision()));
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
  auto lookup = [&store](const httplib::Request& req, httplib::Response& res) -> std::shared_ptr<Session> {
    auto s = store.find(req.matches[1]);
    if (!s) fail(res, 404, "unknown_session", "no session with id " + std::string(req.matches[1]));
    return s;
  };

  server.Post("/session", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      io::json body = body_of(req);
      auto s = store.create(io::config_from_json(body));
      with_revision(res, *s);
      reply(res, 201, {{"id", s->id()}});
    });
  });

  server.Post("/session/load", [&store](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto s = store.load(body_of(req));
      with_revision(res, *s);
      reply(res, 201, {{"id", s->id()}});
    });
  });

  server.Get(R"(/session/([^/]+)/seed)", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (auto s = lookup(req, res)) {
        with_revision(res, *s);
        reply(res, 200, s->seed_json());
      }
    });
  });

  server.Post(R"(/session/([^/]+)/mutate)", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto s = lookup(req, res);
      if (!s) return;
      io::json body = body_of(req);
      if (!body.contains("k") || !body["k"].is_number_integer()) {
        fail(res, 422, "invalid_vertex", "body must contain an integer 'k'");
        return;
      }
      io::json seed = s->mutate(body["k"].get<int>(), revision_of(body));
      with_revision(res, *s);
      reply(res, 200, seed);
    });
  });

  server.Post(R"(/session/([^/]+)/undo)", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto s = lookup(req, res);
      if (!s) return;
      io::json seed = s->undo(revision_of(body_of(req)));
      with_revision(res, *s);
      reply(res, 200, seed);
    });
  });

  server.Get(R"(/session/([^/]+)/variable/(-?\d+))", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (auto s = lookup(req, res)) reply(res, 200, s->variable(std::stoi(req.matches[2])));
    });
  });

  server.Get(R"(/session/([^/]+)/gvectors)", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (auto s = lookup(req, res)) reply(res, 200, s->gvectors());
    });
  });

  server.Get(R"(/session/([^/]+)/snapshot)", [lookup](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      if (auto s = lookup(req, res)) reply(res, 200, s->snapshot());
    });
  });

  server.Delete(R"(/session/([^/]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    if (!store.erase(req.matches[1])) {
      fail(res, 404, "unknown_session", "no session with id " + std::string(req.matches[1]));
      return;
    }
    res.status = 204;
  });
}

int serve(const std::string& host, int port) {
  SessionStore store;
  httplib::Server server;
  install_routes(server, store);
  std::cerr << "listening on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "could not bind " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qca::service

#pragma once

#include <memory>
#include <string>

#include "httplib.h"
#include "session.hpp"

namespace qca::service {

// Registers the session routes on an httplib server. The store must outlive the server.
void install_routes(httplib::Server& server, SessionStore& store);

// Blocks until the server stops.
int serve(const std::string& host, int port);

}  // namespace qca::service

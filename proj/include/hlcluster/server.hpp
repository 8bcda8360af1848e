// HTTP front end for a Session: GET /seed, GET /log, POST /mutate,
// POST /undo, POST /load. Bodies and replies are JSON.
#pragma once

#include <mutex>
#include <string>

#include <httplib.h>

#include "hlcluster/session.hpp"

namespace hlc {

class SessionServer {
public:
    SessionServer();
    SessionServer(const SessionServer&) = delete;
    SessionServer& operator=(const SessionServer&) = delete;

    // blocks until stop()
    bool listen(const std::string& host, int port) { return srv_.listen(host, port); }
    // returns the bound port, or -1
    int bind_any(const std::string& host) { return srv_.bind_to_any_port(host); }
    bool listen_after_bind() { return srv_.listen_after_bind(); }
    void wait_until_ready() const { srv_.wait_until_ready(); }
    void stop() { srv_.stop(); }

private:
    Session session_;
    std::mutex mu_;
    httplib::Server srv_;
};

}  // namespace hlc

#include "hlcluster/server.hpp"

#include <json.hpp>

namespace hlc {

namespace {

using nlohmann::json;

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

}  // namespace

SessionServer::SessionServer() {
    auto handle = [this](httplib::Response& res, auto&& body) {
        std::lock_guard lock(mu_);
        try {
            reply(res, 200, body());
        } catch (const ExchangeError& e) {
            reply(res, 409, {{"error", e.what()}, {"record", e.record().to_json()}});
        } catch (const json::exception& e) {
            reply(res, 400, {{"error", e.what()}});
        } catch (const std::invalid_argument& e) {
            reply(res, 400, {{"error", e.what()}});
        } catch (const std::exception& e) {
            reply(res, 500, {{"error", e.what()}});
        }
    };
    srv_.Get("/seed", [=, this](const httplib::Request&, httplib::Response& res) {
        handle(res, [this] { return session_.seed(); });
    });
    srv_.Get("/log", [=, this](const httplib::Request&, httplib::Response& res) {
        handle(res, [this] { return session_.log(); });
    });
    srv_.Post("/mutate", [=, this](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] { return session_.mutate(json::parse(req.body).at("vertex").get<std::string>()); });
    });
    srv_.Post("/undo", [=, this](const httplib::Request&, httplib::Response& res) {
        handle(res, [this] { return session_.undo(); });
    });
    srv_.Post("/load", [=, this](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] { return session_.load(json::parse(req.body)); });
    });
}

}  // namespace hlc

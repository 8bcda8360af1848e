#include <doctest.h>

#include <thread>

#include <httplib.h>

#include "hlcluster/server.hpp"
#include "hlcluster/session.hpp"

using namespace hlc;
using nlohmann::json;

TEST_CASE("empty session") {
    Session s;
    CHECK(s.seed() == json{{"kind", "none"}});
    CHECK_THROWS_AS(s.mutate("1"), std::invalid_argument);
    CHECK_THROWS_AS(s.undo(), std::invalid_argument);
    CHECK_THROWS_AS(s.load(json::array()), std::invalid_argument);
    CHECK_THROWS_AS(s.load(json::object()), std::invalid_argument);
}

TEST_CASE("oracle session mutate and undo") {
    Session s;
    const json start = s.load({{"xi", "0,1,0"}});
    CHECK(start["kind"] == "oracle");
    auto out = s.mutate("1");
    CHECK(out["record"]["vertex"] == "1");
    CHECK(out["record"]["old_label"] == "x1");
    CHECK(out["seed"] != start);
    CHECK(s.depth() == 1);
    CHECK(s.log().size() == 1);
    CHECK(s.undo() == start);
    CHECK(s.log().empty());
    CHECK_THROWS(s.mutate("1'"));
    CHECK(s.seed() == start);
}

TEST_CASE("tracked sessions") {
    Session s;
    CHECK(s.load({{"xi", json::array({0, 1})}, {"r", 2}})["kind"] == "tracked");
    auto grid = s.load({{"n", 3}, {"ell", 2}});
    CHECK(grid["kind"] == "tracked");
    auto out = s.mutate("(2,1)");
    CHECK(out["record"]["chosen"] == "in");
    CHECK(s.log().size() == 1);
    // reloading clears history
    s.load({{"n", 2}});
    CHECK(s.depth() == 0);
    CHECK(s.log().empty());
}

TEST_CASE("a failed exchange leaves the session alone") {
    Session s;
    s.load({{"n", 2}, {"ell", 1}});
    const json before = s.seed();
    CHECK_THROWS(s.mutate("(1,2)"));  // frozen
    CHECK(s.seed() == before);
    CHECK(s.depth() == 0);
}

TEST_CASE("HTTP round trip") {
    SessionServer srv;
    const int port = srv.bind_any("127.0.0.1");
    REQUIRE(port > 0);
    std::thread t([&] { srv.listen_after_bind(); });
    srv.wait_until_ready();

    httplib::Client cli("127.0.0.1", port);
    auto seed0 = cli.Get("/seed");
    REQUIRE(seed0);
    CHECK(json::parse(seed0->body) == json{{"kind", "none"}});

    auto loaded = cli.Post("/load", R"({"xi":[-3,-2,-3,-4,-5,-4]})", "application/json");
    REQUIRE(loaded);
    CHECK(loaded->status == 200);
    const std::string initial = cli.Get("/seed")->body;
    CHECK(initial == loaded->body);

    auto m = cli.Post("/mutate", R"({"vertex":"1"})", "application/json");
    REQUIRE(m);
    CHECK(m->status == 200);
    CHECK(json::parse(m->body)["record"]["vertex"] == "1");
    CHECK(json::parse(cli.Get("/log")->body).size() == 1);

    auto u = cli.Post("/undo", "", "application/json");
    REQUIRE(u);
    CHECK(u->body == initial);
    CHECK(cli.Get("/seed")->body == initial);

    CHECK(cli.Post("/undo", "", "application/json")->status == 400);
    CHECK(cli.Post("/mutate", "not json", "application/json")->status == 400);
    CHECK(cli.Post("/mutate", R"({"vertex":"1'"})", "application/json")->status == 400);
    CHECK(cli.Post("/load", R"({"n":2,"ell":1})", "application/json")->status == 200);
    CHECK(json::parse(cli.Get("/seed")->body)["kind"] == "tracked");

    srv.stop();
    t.join();
}

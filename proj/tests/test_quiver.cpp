#include <doctest.h>

#include <random>

#include "hlcluster/quiver.hpp"
#include "hlcluster/sequences.hpp"
#include "support.hpp"

using namespace hlc;

namespace {

// Q_xi for xi = (-3,-2,-3,-4,-5,-4), arrow by arrow
IcedQuiver running_example() {
    IcedQuiver q;
    for (int i = 1; i <= 6; ++i) {
        q.add_vertex(std::to_string(i) + "'", true);
        q.add_vertex(std::to_string(i));
        q.add_vertex(std::to_string(i) + "''", true);
    }
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"1'", "1"},  {"3'", "2"},   {"4'", "3"},   {"5'", "5"},  {"1", "2"},    {"2", "2'"},
             {"2", "2''"}, {"2", "3"},    {"3", "3'"},   {"3", "3''"}, {"3", "4"},    {"4", "4'"},
             {"4", "4''"}, {"5", "4"},    {"5", "6"},    {"6", "6'"},  {"6", "6''"},  {"1''", "1"},
             {"3''", "2"}, {"4''", "3"},  {"5''", "5"}})
        q.add_arrows(u, v);
    return q;
}

}  // namespace

TEST_CASE("Q_xi of the running example") {
    const IcedQuiver q = build_q_xi(HeightFunction({-3, -2, -3, -4, -5, -4}));
    CHECK(q == running_example());
    CHECK(q.size() == 18);
    CHECK(q.frozen_vertices().size() == 12);
    CHECK(q.arrows().size() == 21);
}

TEST_CASE("mutation rule on a small quiver") {
    IcedQuiver q;
    q.add_vertex("a");
    q.add_vertex("b");
    q.add_vertex("c", true);
    q.add_arrows("a", "b", 2);
    q.add_arrows("b", "c");
    IcedQuiver m = q.mutate("b");
    CHECK(m.b("b", "a") == 2);
    CHECK(m.b("c", "b") == 1);
    CHECK(m.b("a", "c") == 2);
    CHECK(m.mutate("b") == q);
    CHECK_THROWS_AS(q.mutate("c"), std::invalid_argument);
}

TEST_CASE("two-cycles cancel") {
    IcedQuiver q;
    for (const char* v : {"1", "2", "3"}) q.add_vertex(v);
    q.add_arrows("1", "2");
    q.add_arrows("2", "3");
    q.add_arrows("3", "1");
    IcedQuiver m = q.mutate("2");
    CHECK(m.b("1", "3") == 0);
    CHECK(m.arrows().size() == 2);
}

TEST_CASE("construction errors") {
    IcedQuiver q;
    q.add_vertex("x");
    q.add_vertex("f", true);
    q.add_vertex("g", true);
    CHECK_THROWS_AS(q.add_vertex("x"), std::invalid_argument);
    CHECK_THROWS_AS(q.add_arrows("x", "x"), std::invalid_argument);
    CHECK_THROWS_AS(q.add_arrows("f", "g"), std::invalid_argument);
    CHECK_THROWS(q.index_of("nope"));
    q.set_arrows("x", "f", 1);
    CHECK_THROWS_AS(q.set_arrows("f", "x", 1), std::logic_error);
}

TEST_CASE("involution and commutation on random quivers") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const IcedQuiver q = testing::random_quiver(rng);
        for (int k = 0; k < q.size(); ++k) {
            if (q.is_frozen(k)) continue;
            const auto& vk = q.name(k);
            CHECK(q.mutate(vk).mutate(vk) == q);
            for (int l = 0; l < q.size(); ++l)
                if (l != k && !q.is_frozen(l) && q.b(k, l) == 0)
                    CHECK(q.mutate(vk).mutate(q.name(l)) == q.mutate(q.name(l)).mutate(vk));
        }
    }
}

TEST_CASE("incidence and arrows_at") {
    const IcedQuiver q = running_example();
    auto inc = q.incidence("5");
    CHECK(inc == std::map<std::string, int>{{"4", 1}, {"6", 1}, {"5'", -1}, {"5''", -1}});
    auto at = q.arrows_at("5");
    CHECK(at.size() == 4);
}

TEST_CASE("JSON and DOT") {
    const IcedQuiver q = running_example();
    CHECK(IcedQuiver::from_json(q.to_json()) == q);
    CHECK(IcedQuiver::from_json(nlohmann::json::parse(q.to_json().dump())) == q);
    const std::string dot = q.to_dot();
    CHECK(dot.find("\"1'\" [shape=box]") != std::string::npos);
    CHECK(dot.find("\"1\" -> \"2\"") != std::string::npos);
    auto bad = q.to_json();
    bad["arrows"].push_back({"1'", "2'", 1});
    CHECK_THROWS(IcedQuiver::from_json(bad));
}

TEST_CASE("freeze and restrict") {
    const IcedQuiver q = running_example();
    std::vector<std::string> keep{"1", "2", "1'", "1''", "2'", "2''", "3'", "3''", "3"};
    IcedQuiver sub = q.freeze_restrict({"3"}, keep);
    CHECK(sub.size() == 9);
    CHECK(sub.is_frozen("3"));
    CHECK(sub.b("2", "3") == 1);
    CHECK(sub.b("3", "3'") == 0);
    CHECK_THROWS_AS(q.freeze_restrict({}, {"1", "2"}), std::invalid_argument);
}

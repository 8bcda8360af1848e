#include <doctest.h>

#include <cstdlib>

#include "hlcluster/gridseeds.hpp"

using namespace hlc;

namespace {

YMonomial Y(int i, int s, int e = 1) { return YMonomial::var(i, s, e); }

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value)
            setenv("HLCLUSTER_ELL_POLICY", value, 1);
        else
            unsetenv("HLCLUSTER_ELL_POLICY");
    }
    ~EnvGuard() { unsetenv("HLCLUSTER_ELL_POLICY"); }
};

}  // namespace

TEST_CASE("initial seed labels for n = 6, ell = 4") {
    const TrackedSeed s = initial_seed(6, 4);
    CHECK(s.quiver().size() == 30);
    // odd columns start at X^{(-1)}, even ones at X^{(0)}, two steps down per row
    for (int k = 1; k <= 5; ++k)
        for (int i = 1; i <= 6; ++i) {
            const int start = (i % 2 ? -1 : 0) - 2 * (k - 1);
            CHECK(s.label(grid_vertex(i, k)) == kr_monomial(i, start, k));
        }
    CHECK(s.label("(1,2)") == Y(1, -3) * Y(1, -1));
    CHECK(s.label("(2,5)") == Y(2, -8) * Y(2, -6) * Y(2, -4) * Y(2, -2) * Y(2, 0));
    for (int i = 1; i <= 6; ++i) {
        CHECK(s.quiver().is_frozen(grid_vertex(i, 5)));
        CHECK_FALSE(s.quiver().is_frozen(grid_vertex(i, 4)));
    }
}

TEST_CASE("initial seed arrows") {
    const IcedQuiver q = initial_seed(6, 4).quiver();
    CHECK(q.b("(1,1)", "(2,2)") == 1);
    CHECK(q.b("(2,1)", "(1,1)") == 1);
    CHECK(q.b("(2,1)", "(3,1)") == 1);
    CHECK(q.b("(3,1)", "(2,2)") == 1);
    CHECK(q.b("(3,1)", "(4,2)") == 1);
    CHECK(q.b("(6,1)", "(5,1)") == 1);
    CHECK(q.b("(2,2)", "(2,1)") == 1);
    CHECK(q.b("(1,4)", "(2,5)") == 1);
    CHECK(q.b("(2,5)", "(2,4)") == 1);
    CHECK(q.b("(1,5)", "(2,5)") == 0);
    // 5 rows x 6 vertical arrows below row 1, plus 10 horizontal or diagonal per row 1..4
    CHECK(q.arrows().size() == 4 * 6 + 4 * 10);
}

TEST_CASE("first mutation is a T-system relation") {
    auto [s, rec] = mutate_tracked(initial_seed(6, 4), "(2,1)");
    CHECK(rec.p_in == Y(2, -2) * Y(2, 0));
    CHECK(rec.p_out == Y(1, -1) * Y(3, -1));
    CHECK(rec.chosen == Side::In);
    CHECK(rec.new_label == Y(2, -2));
    CHECK(s.label("(2,1)") == Y(2, -2));
    CHECK(t_system_conform(rec, 6));
    CHECK(s.log().size() == 1);
    CHECK(rec.to_json()["chosen"] == "in");
}

TEST_CASE("frozen vertices do not mutate") {
    TrackedSeed s = initial_seed(3, 2);
    CHECK_THROWS_AS(s.mutate_in_place("(1,3)"), std::invalid_argument);
    CHECK_THROWS(s.mutate_in_place("(9,9)"));
}

TEST_CASE("incomparable products raise with the record") {
    IcedQuiver q;
    q.add_vertex("a");
    q.add_vertex("b", true);
    q.add_vertex("c", true);
    q.add_arrows("b", "a");
    q.add_arrows("a", "c");
    TrackedSeed s(q, {Y(1, 0), Y(1, 0), Y(2, 0)}, 2);
    try {
        s.mutate_in_place("a");
        FAIL("expected ExchangeError");
    } catch (const ExchangeError& e) {
        CHECK(e.record().p_in == Y(1, 0));
        CHECK(e.record().p_out == Y(2, 0));
    }
    CHECK(s.log().empty());
}

TEST_CASE("t_system_conform rejects other relations") {
    ExchangeRecord rec;
    rec.old_label = Y(1, 0);
    rec.p_in = Y(1, 0) * Y(1, 2);
    rec.p_out = Y(2, 1);
    rec.chosen = Side::In;
    rec.new_label = Y(1, 2);
    CHECK(t_system_conform(rec, 2));
    rec.p_out = Y(2, 3);
    CHECK_FALSE(t_system_conform(rec, 2));
    rec.p_out = Y(2, 1);
    rec.new_label = Y(1, 4);
    CHECK_FALSE(t_system_conform(rec, 2));
}

TEST_CASE("grid vertex names") {
    CHECK(grid_vertex(3, 12) == "(3,12)");
    CHECK(parse_grid_vertex("(3,12)") == std::pair{3, 12});
    CHECK(parse_grid_vertex(" ( 3 , -1 ) ") == std::pair{3, -1});
    CHECK_THROWS_AS(parse_grid_vertex("3,12"), std::invalid_argument);
}

TEST_CASE("ell policy") {
    {
        EnvGuard g(nullptr);
        CHECK(default_ell(2, 5, 1) == 10);
    }
    {
        EnvGuard g("14");
        CHECK(default_ell(2, 5, 1) == 14);
    }
    {
        EnvGuard g("+5");
        CHECK(default_ell(2, 5, 1) == 13);
    }
    {
        EnvGuard g("lots");
        CHECK_THROWS_AS(default_ell(2, 5), std::invalid_argument);
    }
    {
        EnvGuard g("+x");
        CHECK_THROWS_AS(default_ell(2, 5), std::invalid_argument);
    }
}

TEST_CASE("seed JSON") {
    auto [s, rec] = mutate_tracked(initial_seed(2, 1), "(1,1)");
    auto j = s.to_json();
    CHECK(j["kind"] == "tracked");
    CHECK(j["labels"]["(1,1)"] == s.label("(1,1)").to_json());
    CHECK(j["log"].size() == 1);
    CHECK(IcedQuiver::from_json(j["quiver"]) == s.quiver());
}

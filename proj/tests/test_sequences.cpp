#include <doctest.h>

#include <random>
#include <set>

#include "hlcluster/hl.hpp"
#include "hlcluster/sequences.hpp"
#include "hlcluster/verify.hpp"

using namespace hlc;

namespace {

std::vector<std::string> V(std::initializer_list<std::pair<int, int>> vs) {
    std::vector<std::string> out;
    for (auto [i, k] : vs) out.push_back(grid_vertex(i, k));
    return out;
}

}  // namespace

TEST_CASE("principal part of Q_xi has sinks and sources at 1 and the fixed points") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& xi : all_height_functions(n)) {
            const IcedQuiver q = build_q_xi(xi);
            for (int j = 1; j <= n; ++j) {
                int in = 0, out = 0;
                for (int k : {j - 1, j + 1}) {
                    if (k < 1 || k > n) continue;
                    int b = q.b(qxi_vertex(j, Layer::Mid), qxi_vertex(k, Layer::Mid));
                    out += b > 0;
                    in += b < 0;
                }
                const bool extreme = in == 0 || out == 0;
                CHECK(extreme == (j == 1 || xi.diamond(j) == j));
            }
        }
}

TEST_CASE("interval quivers") {
    const HeightFunction xi({-3, -2, -3, -4, -5, -4});
    CHECK(q_xi_interval(xi, 3, 2) == build_q_xi(xi));
    CHECK(q_xi_interval(xi, 2, 2) == build_q_xi(xi).mutate("2"));
}

TEST_CASE("S starts with the even columns of row 1") {
    auto s = seq_S_rows(6, 4, 4);
    REQUIRE(s.size() >= 6);
    CHECK(std::vector<std::string>(s.begin(), s.begin() + 3) == V({{2, 1}, {4, 1}, {6, 1}}));
    CHECK(std::vector<std::string>(s.begin() + 3, s.begin() + 9) == V({{2, 2}, {4, 2}, {6, 2}, {1, 1}, {3, 1}, {5, 1}}));
    for (const auto& v : s) CHECK(parse_grid_vertex(v).second <= 4);
}

TEST_CASE("p parity table") {
    const HeightFunction down({0, 1, 0, -1});  // xi(3) > xi(4)
    const HeightFunction up({0, 1, 0, 1});
    const int n = 4;
    for (int ell = 3; ell <= 8; ++ell) {
        CHECK(p_for(down, 1, ell) % 2 == n % 2);
        CHECK(p_for(up, 2, ell) % 2 == n % 2);
        CHECK(p_for(down, 2, ell) % 2 == (n - 1) % 2);
        CHECK(p_for(up, 1, ell) % 2 == (n - 1) % 2);
        CHECK(p_for(up, 1, ell) >= ell);
        CHECK(p_for(up, 1, ell) <= ell + 1);
    }
}

TEST_CASE("S_t families") {
    const HeightFunction xi({-3, -2, -3, -4, -5, -4});
    CHECK(zero_d_nodes(xi) == std::vector<int>{2, 3});
    // j_t = 2 even, r = 2: odd rows take the even family, even rows the odd one
    auto s = seq_S_t(xi, 2, 1, 4);
    CHECK(s == V({{2, 1}, {2, 3}, {1, 2}, {1, 4}}));
    // j_t = 3 odd swaps the families
    auto t = seq_S_t(xi, 2, 2, 4);
    CHECK(t == V({{1, 1}, {3, 1}, {1, 3}, {3, 3}, {2, 2}, {2, 4}}));
    CHECK_THROWS_AS(seq_S_t(xi, 2, 3, 4), std::out_of_range);
}

TEST_CASE("S' columns and tail") {
    // t = 0 ascending column: one vertex
    const HeightFunction xi = build_from_hlr({1, 2}, {-3, 0});
    auto s = seq_S_prime(xi, {1, 2}, {-3, 0}, {0, 0}, 2);
    CHECK(s == V({{1, 2}, {2, 2}}));

    const GhlSpec spec{{1, 2, 3}, {-7, -4, -7}, 3, {2, 0, 1}};
    const HeightFunction x2 = build_from_hlr(spec.idx, spec.as);
    auto seq = seq_S_prime(x2, spec.idx, spec.as, spec.rs, spec.r);
    REQUIRE(x2.ascending(1));
    CHECK(std::vector<std::string>(seq.begin(), seq.begin() + 3) == V({{1, 5}, {1, 4}, {1, 3}}));
    CHECK(s_prime_has_tail(x2, spec.idx, spec.as, spec.rs));
    CHECK(std::vector<std::string>(seq.end() - 2, seq.end()) == V({{4, 3}, {4, 4}}));
}

TEST_CASE("every vertex of S' appears once") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        GhlSpec spec = random_ghl_spec(rng);
        const HeightFunction xi = build_from_hlr(spec.idx, spec.as);
        auto seq = seq_S_prime(xi, spec.idx, spec.as, spec.rs, spec.r);
        CHECK(std::set<std::string>(seq.begin(), seq.end()).size() == seq.size());
    }
}

TEST_CASE("local seed after S_m and normalization") {
    for (const auto& xi : all_height_functions(4))
        for (int r = 1; r <= 3; ++r) {
            auto rep = verify_local_seed(xi, r);
            CHECK_MESSAGE(rep.passed(), rep.summary());
        }
    auto one = verify_local_seed(HeightFunction({0}), 2);
    CHECK_MESSAGE(one.passed(), one.summary());
}

TEST_CASE("normalization does not depend on the scan direction") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& xi : all_height_functions(n))
            for (int r = 1; r <= 3; ++r) {
                const int ell = default_ell(r, n);
                SmPrime a = to_Sm_prime(initial_seed(n, ell), xi, r, ell, ScanOrder::RowMajor);
                SmPrime b = to_Sm_prime(initial_seed(n, ell), xi, r, ell, ScanOrder::RowMajorReversed);
                CHECK(a.normalization_steps < 200);
                LocalSeed la = extract_local(a.seed, n, r), lb = extract_local(b.seed, n, r);
                CHECK(la.quiver == lb.quiver);
                CHECK(la.labels == lb.labels);
            }
}

TEST_CASE("normalization is a no-op on a seed without the pattern") {
    // the initial grid has the pattern at even columns of row 1, so use a
    // seed that was already normalized
    const HeightFunction xi({0, 1, 0});
    SmPrime sm = to_Sm_prime(initial_seed(3, 5), xi, 3, 5);
    const std::size_t before = sm.seed.log().size();
    CHECK(normalize_uv(sm.seed, 3, 5, 3) == 0);
    CHECK(sm.seed.log().size() == before);
}

TEST_CASE("prefix quivers") {
    const GhlSpec spec{{1, 2}, {-3, 0}, 2, {0, 0}};
    GhlRun run = prepare_ghl(spec);
    CHECK(q_prefix(run.seed, run.seq, 1, 2, 0) == run.seed.quiver());
    CHECK(q_prefix(run.seed, run.seq, 2, 2, 0) == run.seed.quiver().mutate(grid_vertex(1, 2)));
    CHECK_THROWS_AS(q_prefix(run.seed, run.seq, 5, 2, 0), std::invalid_argument);
}

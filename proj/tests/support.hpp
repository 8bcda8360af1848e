// Helpers shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hlcluster/quiver.hpp"
#include "hlcluster/ymon.hpp"

namespace hlc::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// up to max_vertices vertices, some frozen, |b| <= max_mult, no arrows
// between frozen vertices
inline IcedQuiver random_quiver(std::mt19937_64& rng, int max_vertices = 12, int max_mult = 3) {
    IcedQuiver q;
    const int nv = uniform(rng, 2, max_vertices);
    for (int k = 0; k < nv; ++k) q.add_vertex("v" + std::to_string(k), k > 0 && uniform(rng, 0, 3) == 0);
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            if (q.is_frozen(u) && q.is_frozen(v)) continue;
            if (uniform(rng, 0, 2) == 0) continue;
            int m = uniform(rng, -max_mult, max_mult);
            if (m > 0) q.add_arrows(q.name(u), q.name(v), m);
            if (m < 0) q.add_arrows(q.name(v), q.name(u), -m);
        }
    return q;
}

// Exhaustive search for e in [-bound, bound]^vars with m1/m2 = prod A^e.
// Monomials are flattened to dense vectors over a window, and the sum is
// updated one odometer step at a time.
class BruteDominance {
public:
    BruteDominance(const Cartan& c, std::vector<YVar> vars, int bound) : c_(c), vars_(std::move(vars)), bound_(bound) {}

    std::optional<std::map<YVar, int>> solve(const YMonomial& q) const {
        std::set<YVar> keys;
        for (const auto& [v, e] : q.exponents()) keys.insert(v);
        std::vector<YMonomial> as;
        for (const auto& v : vars_) {
            as.push_back(a_monomial(v.node, v.shift, c_));
            for (const auto& [y, e] : as.back().exponents()) keys.insert(y);
        }
        std::vector<YVar> index(keys.begin(), keys.end());
        auto dense = [&](const YMonomial& m) {
            std::vector<int> d(index.size(), 0);
            for (const auto& [y, e] : m.exponents())
                d[static_cast<std::size_t>(std::lower_bound(index.begin(), index.end(), y) - index.begin())] = e;
            return d;
        };
        const std::vector<int> target = dense(q);
        std::vector<std::vector<int>> cols;
        for (const auto& a : as) cols.push_back(dense(a));
        const std::size_t k = vars_.size(), w = index.size();
        std::vector<int> e(k, -bound_), sum(w, 0);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t y = 0; y < w; ++y) sum[y] -= bound_ * cols[j][y];
        while (true) {
            if (sum == target) {
                std::map<YVar, int> cert;
                for (std::size_t j = 0; j < k; ++j)
                    if (e[j]) cert[vars_[j]] = e[j];
                return cert;
            }
            std::size_t j = 0;
            for (; j < k; ++j) {
                if (e[j] < bound_) {
                    ++e[j];
                    for (std::size_t y = 0; y < w; ++y) sum[y] += cols[j][y];
                    break;
                }
                for (std::size_t y = 0; y < w; ++y) sum[y] -= 2 * bound_ * cols[j][y];
                e[j] = -bound_;
            }
            if (j == k) return std::nullopt;
        }
    }

    Order order(const YMonomial& m1, const YMonomial& m2) const {
        auto cert = solve(m1 / m2);
        if (!cert) return Order::Incomparable;
        if (cert->empty()) return Order::Equal;
        bool pos = std::all_of(cert->begin(), cert->end(), [](const auto& kv) { return kv.second > 0; });
        bool neg = std::all_of(cert->begin(), cert->end(), [](const auto& kv) { return kv.second < 0; });
        return pos ? Order::Greater : neg ? Order::Less : Order::Incomparable;
    }

private:
    Cartan c_;
    std::vector<YVar> vars_;
    int bound_;
};

struct DominanceInstance {
    int n;
    YMonomial m1, m2;
    std::vector<YVar> vars;
};

// m1 = m2 * prod A^e with e in [-4,4] over at most 5 A-variables; a
// quarter of the instances get an extra Y factor, which leaves the
// A-lattice
inline DominanceInstance random_dominance_instance(std::mt19937_64& rng) {
    DominanceInstance in;
    in.n = uniform(rng, 1, 4);
    const Cartan c(in.n);
    for (int t = uniform(rng, 0, 4); t > 0; --t)
        in.m2 *= YMonomial::var(uniform(rng, 1, in.n), uniform(rng, -4, 4), uniform(rng, 1, 2));
    std::set<YVar> vs;
    const int nv = uniform(rng, 1, 5);
    while (static_cast<int>(vs.size()) < nv) vs.insert({uniform(rng, 1, in.n), uniform(rng, -3, 3)});
    in.vars.assign(vs.begin(), vs.end());
    const int mode = uniform(rng, 0, 3);  // 0 nonneg, 1 nonpos, 2 mixed, 3 off-lattice
    in.m1 = in.m2;
    for (const auto& v : in.vars) {
        int e = mode == 0 ? uniform(rng, 0, 4) : mode == 1 ? uniform(rng, -4, 0) : uniform(rng, -4, 4);
        in.m1 *= a_monomial(v.node, v.shift, c).pow(e);
    }
    if (mode == 3) in.m1 *= YMonomial::var(uniform(rng, 1, in.n), uniform(rng, -4, 4));
    return in;
}

}  // namespace hlc::testing

#include "hlcluster/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlc {

std::string qxi_vertex(int i, Layer layer) {
    switch (layer) {
        case Layer::Prime: return std::to_string(i) + "'";
        case Layer::Mid: return std::to_string(i);
        case Layer::DoublePrime: return std::to_string(i) + "''";
    }
    return {};
}

IcedQuiver build_q_xi(const HeightFunction& xi) {
    const int n = xi.n();
    IcedQuiver q;
    for (int i = 1; i <= n; ++i) q.add_vertex(qxi_vertex(i, Layer::Prime), true);
    for (int i = 1; i <= n; ++i) q.add_vertex(qxi_vertex(i, Layer::Mid));
    for (int i = 1; i <= n; ++i) q.add_vertex(qxi_vertex(i, Layer::DoublePrime), true);
    auto P = [](int i) { return qxi_vertex(i, Layer::Prime); };
    auto M = [](int i) { return qxi_vertex(i, Layer::Mid); };
    auto D = [](int i) { return qxi_vertex(i, Layer::DoublePrime); };
    auto arrow = [&q](const std::string& u, const std::string& v, bool rev) {
        if (rev)
            q.set_arrows(v, u);
        else
            q.set_arrows(u, v);
    };
    for (int j = 1; j < n; ++j) {
        const bool rev = xi(j) == xi(j + 1) + 1;
        arrow(P(j), M(j), rev);
        if (j >= 2) arrow(M(j), M(j - 1), rev);
        if (xi.d(j)) {
            arrow(M(j), M(j + 1), rev);
        } else {
            arrow(M(j), D(j + 1), rev);
            arrow(M(j), P(j + 1), rev);
            arrow(M(j + 1), M(j), rev);
        }
        arrow(D(j), M(j), rev);
    }
    const bool rev = n >= 2 && xi(n - 1) == xi(n) - 1;
    arrow(P(n), M(n), rev);
    if (n >= 2) arrow(M(n), M(n - 1), rev);
    arrow(D(n), M(n), rev);
    return q;
}

IcedQuiver q_xi_interval(const HeightFunction& xi, int i, int j) {
    IcedQuiver q = build_q_xi(xi);
    for (int k = i; k <= j; ++k) q.mutate_in_place(qxi_vertex(k, Layer::Mid));
    return q;
}

int p_for(const HeightFunction& xi, int r, int ell) {
    const int n = xi.n();
    const bool down = xi(n - 1) > xi(n);
    const int want = ((down && r % 2 == 1) || (!down && r % 2 == 0)) ? n % 2 : (n - 1) % 2;
    int p = ell;
    while (p % 2 != want) ++p;
    return p;
}

std::vector<std::string> seq_S_rows(int n, int ell, int p) {
    std::vector<std::string> out;
    for (int m = 1; m <= p; ++m)
        for (int t = 0; t < m; ++t) {
            const int k = m - t;
            if (k > ell) continue;
            for (int i = t % 2 == 0 ? 2 : 1; i <= n; i += 2) out.push_back(grid_vertex(i, k));
        }
    return out;
}

std::vector<std::string> seq_S(const HeightFunction& xi, int r, int n, int ell) {
    if (n != xi.n()) throw std::invalid_argument("seq_S: rank mismatch");
    return seq_S_rows(n, ell, p_for(xi, r, ell));
}

std::vector<int> zero_d_nodes(const HeightFunction& xi) {
    std::vector<int> out;
    for (int j = 1; j <= xi.n(); ++j)
        if (xi.d(j) == 0) out.push_back(j);
    return out;
}

std::vector<std::string> seq_S_t(const HeightFunction& xi, int r, int t, int ell) {
    const auto js = zero_d_nodes(xi);
    if (t < 1 || t > static_cast<int>(js.size())) throw std::out_of_range("seq_S_t: t out of range");
    const int jt = js[t - 1];
    const int first = jt % 2 == 0 ? 2 : 1;
    const int second = 3 - first;
    std::vector<std::string> out;
    auto rows = [&](int parity_of, int start) {
        for (int k = 1; k <= ell; ++k) {
            if ((k - parity_of) % 2 != 0) continue;
            for (int i = start; i <= jt; i += 2) out.push_back(grid_vertex(i, k));
        }
    };
    rows(r - 1, first);
    rows(r, second);
    return out;
}

namespace {

bool matches_uv(const TrackedSeed& s, int u, int w, int n, int ell) {
    std::map<std::string, int> want;
    if (w - 1 >= 1) want[grid_vertex(u, w - 1)] = -1;
    if (u - 1 >= 1) want[grid_vertex(u - 1, w)] = 1;
    if (u + 1 <= n) want[grid_vertex(u + 1, w)] = 1;
    if (w + 1 <= ell + 1) want[grid_vertex(u, w + 1)] = -1;
    return s.quiver().incidence(grid_vertex(u, w)) == want;
}

}  // namespace

int normalize_uv(TrackedSeed& s, int n, int ell, int r, ScanOrder order) {
    std::vector<int> rows;
    for (int w = 1; w <= r - 2; ++w) rows.push_back(w);
    for (int w = r + 2; w <= ell; ++w) rows.push_back(w);
    const int bound = 100 * n * ell;
    int count = 0;
    for (;;) {
        bool hit = false;
        for (int w : rows) {
            for (int c = 1; c <= n && !hit; ++c) {
                int u = order == ScanOrder::RowMajor ? c : n + 1 - c;
                if (matches_uv(s, u, w, n, ell)) {
                    s.mutate_in_place(grid_vertex(u, w));
                    hit = true;
                }
            }
            if (hit) break;
        }
        if (!hit) return count;
        if (++count > bound) throw std::runtime_error("normalization did not terminate within policy bound");
    }
}

SmPrime to_Sm_prime(TrackedSeed s, const HeightFunction& xi, int r, int ell, ScanOrder order) {
    const int n = xi.n();
    if (s.rank() != n) throw std::invalid_argument("to_Sm_prime: rank mismatch");
    if (r < 1 || r + 1 > ell + 1) throw std::invalid_argument("to_Sm_prime: need 1 <= r <= ell");
    run_in_place(s, seq_S(xi, r, n, ell));
    const int ts = static_cast<int>(zero_d_nodes(xi).size());
    for (int t = ts; t >= 1; --t) run_in_place(s, seq_S_t(xi, r, t, ell));
    int steps = normalize_uv(s, n, ell, r, order);
    return {std::move(s), ell, steps};
}

LocalSeed extract_local(const TrackedSeed& s, int n, int r) {
    std::vector<std::string> keep;
    std::set<std::string> freeze;
    std::map<std::string, std::string> rename;
    for (int k = r - 1; k <= r + 1; ++k) {
        if (k < 1) continue;
        Layer layer = k == r - 1 ? Layer::Prime : k == r ? Layer::Mid : Layer::DoublePrime;
        for (int i = 1; i <= n; ++i) {
            auto v = grid_vertex(i, k);
            if (!s.quiver().contains(v)) throw std::invalid_argument("extract_local: row " + std::to_string(k) + " missing");
            keep.push_back(v);
            if (k != r) freeze.insert(v);
            rename[v] = qxi_vertex(i, layer);
        }
    }
    IcedQuiver sub = s.quiver().freeze_restrict(freeze, keep);
    LocalSeed out;
    for (const auto& v : keep) out.quiver.add_vertex(rename[v], sub.is_frozen(v));
    for (const auto& a : sub.arrows()) out.quiver.add_arrows(rename[a.from], rename[a.to], a.mult);
    for (const auto& v : keep) out.labels.emplace(rename[v], s.label(v));
    return out;
}

std::optional<int> seed_shift(const TrackedSeed& s, const HeightFunction& xi, int r) {
    return shift_equivalent(kr_monomial(1, xi(2), r), s.label(grid_vertex(1, r)));
}

bool s_prime_has_tail(const HeightFunction& xi, const std::vector<int>& idx, const std::vector<int>& as,
                      const std::vector<int>& rs) {
    const std::size_t k = idx.size();
    return k >= 2 && idx.back() < xi.n() && as[k - 2] > as[k - 1] && rs.back() != 0;
}

std::vector<std::string> seq_S_prime(const HeightFunction& xi, const std::vector<int>& idx,
                                     const std::vector<int>& as, const std::vector<int>& rs, int r) {
    if (idx.size() != as.size() || idx.size() != rs.size()) throw std::invalid_argument("seq_S_prime: list sizes differ");
    const TProfile t(idx, rs);
    std::vector<std::string> out;
    auto column = [&](int u, int from, int to) {
        int step = to >= from ? 1 : -1;
        for (int x = from;; x += step) {
            out.push_back(grid_vertex(u, r + x));
            if (x == to) break;
        }
    };
    for (int u = t.first(); u <= t.last(); ++u) {
        if (xi.ascending(u))
            column(u, t.at(u), 0);
        else
            column(u, 0, t.at(u));
    }
    if (s_prime_has_tail(xi, idx, as, rs)) column(idx.back() + 1, 0, rs.back());
    return out;
}

IcedQuiver q_prefix(const TrackedSeed& normalized, const std::vector<std::string>& seq, int j, int r, int s) {
    const auto target = grid_vertex(j, r + s);
    auto it = std::find(seq.begin(), seq.end(), target);
    if (it == seq.end()) throw std::invalid_argument("q_prefix: " + target + " not in sequence");
    IcedQuiver q = normalized.quiver();
    for (auto p = seq.begin(); p != it; ++p) q.mutate_in_place(*p);
    return q;
}

}  // namespace hlc

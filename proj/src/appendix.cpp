#include "hlcluster/appendix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hlcluster/gridseeds.hpp"

namespace hlc {

namespace {

struct V {
    int u, w;
    auto operator<=>(const V&) const = default;
};

struct Edge {
    V from, to;
    int m;
};

int dl(int a, int b) { return a == b ? 1 : 0; }

struct Figure {
    int case_id;
    V v;
    std::vector<Edge> edges;
};

// s >= 0 convention; t gives the (possibly negated) t-values
std::optional<Figure> case_figure(const HeightFunction& xi, int i1, int r, int j, int s,
                                  const std::function<int(int)>& t) {
    auto d = [&](int p) { return xi.d(p); };
    const bool asc = xi.ascending(j);
    const int J = xi.bullet(j), i1b = xi.bullet(i1);
    Figure fig{0, {j, r}, {}};
    auto add = [&](V a, V b, int m) {
        if (m != 0) fig.edges.push_back({a, b, m});
    };

    if (j == i1) {
        if (t(j) == 0) {
            const V v{i1, r};
            const int D = d(i1);
            std::vector<Edge> l{{{i1, r - 1}, v, 1},         {v, {i1 - 1, r}, 1},         {v, {i1 + 1, r}, D},
                                {{i1 + 1, r}, v, 1 - D},     {v, {i1 + 1, r - 1}, 1 - D}, {v, {i1 + 1, r + 1}, 1 - D},
                                {{i1, r + 1}, v, 1}};
            for (const auto& e : l) asc ? add(e.from, e.to, e.m) : add(e.to, e.from, e.m);
            fig.case_id = 1;
            fig.v = v;
            return fig;
        }
        if (!asc) return std::nullopt;
        if (s == t(j)) {
            const int T = r + t(j);
            const V v{i1, T};
            add({i1 - 1, T - 1}, v, 1);
            add(v, {i1 - 1, T}, 1);
            add(v, {i1, T - 1}, 1);
            add({i1 + 1, T}, v, 1);
            add(v, {i1 + 1, T + 1}, 1);
            add({i1, T + 1}, v, 1);
            fig.case_id = 2;
            fig.v = v;
            return fig;
        }
        fig.case_id = 3;
        if (s == 0) {
            const V v{i1, r};
            const int D = d(i1);
            add({i1, r - 1}, v, 1);
            add(v, {i1 + 1, r - 1}, 1 - D);
            add(v, {i1 + 1, r}, D);
            add({i1 + 1, r}, v, 1 - D);
            add(v, {i1, r + 1}, 1);
            add({i1 + 1, r + 1}, v, D);
            add({i1, r + t(j) + 1}, v, 1);
            fig.v = v;
            return fig;
        }
        const V v{i1, r + s};
        add({i1 - 1, r + s - 1}, v, 1);
        add(v, {i1, r + s - 1}, 1);
        add(v, {i1, r + s + 1}, 1);
        add({i1 + 1, r + s}, v, 1);
        add({i1, r + t(j) + 1}, v, 1);
        fig.v = v;
        return fig;
    }

    if (asc) {
        const int tj = t(j);
        if (tj == 0 || s == 0) {
            const V v{j, r};
            const int K = 1 - dl(i1b, J) - dl(i1, J);
            if (tj == 0) {
                const int a1 = K * d(J - 1) * step_p(0, t(J)) + dl(i1, J);
                const int a2 = K * d(J - 1) * step_q(0, t(J)) + dl(i1, J);
                add({j, r - 1}, v, d(j - 1));
                add({j - 1, r}, v, 1);
                add(v, {J, r - 1}, a1);
                add(v, {J, r + 1}, a2);
                add(v, {std::max(i1 - 1, J - 1), r}, 1 - dl(i1, J));
                add(v, {j + 1, r - 1}, 1 - d(j));
                add(v, {j + 1, r + 1}, 1 - d(j));
                add(v, {j + 1, r}, d(j));
                add({j + 1, r}, v, 1 - d(j));
                add({j, r + 1}, v, d(j - 1));
                fig.case_id = 4;
            } else {
                const int a = K * d(J - 1) * step_p(0, t(J)) + dl(i1, J);
                const int b = K * step_q(0, t(J));
                add({j, r - 1}, v, d(j - 1));
                add({j - 1, r}, v, 1);
                add(v, {std::max(i1, J), r - 1}, a);
                add(v, {J - 1, r}, b);
                add(v, {j + 1, r - 1}, 1 - d(j));
                add(v, {j + 1, r}, d(j));
                add({j + 1, r}, v, 1 - d(j));
                add(v, {j, r + 1}, 1);
                add({j + 1, r + 1}, v, d(j));
                add({j, tj + r + 1}, v, d(j - 1));
                fig.case_id = 5;
            }
            fig.v = v;
            return fig;
        }
        const V v{j, r + s};
        const int a = d(j - 1) * step_q(t(j - 1), s) * (1 - dl(1, s));
        const int b = d(j - 1) * step_q(t(j - 1), s) * dl(1, s);
        const int c = d(j - 1) * step_p(t(j - 1), s - 1) + (1 - d(j - 1));
        if (s < tj) {
            add({j - 2, r + s - 1}, v, b);
            add({j - 1, r + s - 1}, v, a);
            add({j - 1, r + s}, v, c);
            add(v, {j, r + s - 1}, 1);
            add(v, {j, r + s + 1}, 1);
            add(v, {J, r + s}, dl(s, t(J)));
            add({j + 1, r + s}, v, 1);
            add({j, r + tj + 1}, v, d(j - 1));
            fig.case_id = 6;
        } else {
            const int dd = (1 - dl(i1, J) - dl(i1b, J)) * step_p(t(J), s) * d(J - 1) + dl(i1, J);
            add({j - 2, r + s - 1}, v, b);
            add({j - 1, r + s - 1}, v, a);
            add({j - 1, r + s}, v, c);
            add(v, {j, r + s - 1}, 1);
            add(v, {j + 1, r + s + 1}, 1);
            add(v, {J, r + s}, (1 - dl(i1b, J)) * step_q(t(J), s));
            add(v, {i1 - 1, r + s}, dl(i1b, J));
            add(v, {J, r + s + 1}, dd);
            add({j, r + s + 1}, v, d(j - 1));
            add({j + 1, r + s}, v, 1);
            fig.case_id = 7;
        }
        fig.v = v;
        return fig;
    }

    const int tj = t(j);
    if (s == 0) {
        const V v{j, r};
        const int a = d(j - 1) * step_p(0, t(j - 1));
        const int b = d(j - 1) * step_q(0, t(j - 1));
        const int K = dl(i1, J) + (1 - dl(i1b, J) - dl(i1, J)) * d(J - 1);
        const int c = K * step_q(-1, t(J)), dd = K * step_p(0, t(J));
        const int e = K * step_q(0, t(J)), f = K * step_p(1, t(J));
        add({J, r + t(J) - 1}, v, c);
        add({J, r - 1}, v, dd);
        add({std::max(i1 - 1, J - 1), r}, v, 1 - dl(i1, J));
        add(v, {j, r - 1}, a);
        add(v, {j - 1, r}, 1);
        add(v, {j + 1, r}, 1 - d(j));
        add({j + 1, r}, v, d(j));
        add(v, {j, r + 1}, b);
        add({j + 1, r - 1}, v, 1 - d(j));
        add({j + 1, r + 1}, v, 1 - d(j));
        add({J, r + 1}, v, e);
        add({J, r + t(J) + 1}, v, f);
        fig.case_id = 8;
        fig.v = v;
        return fig;
    }

    // X: the largest x in [i1, j) where xi descends
    int X = -99;
    for (int x = i1; x < j; ++x)
        if (xi(x) == xi(x + 1) + 1) X = x;
    const bool noX = X == -99;
    const int Y = X - 1;
    auto tx = [&](int p) { return noX ? 0 : t(p); };
    auto dx = [&](int p) { return noX ? 0 : d(p); };
    int h = (1 - dl(i1, X)) * dx(X - 1) * step_p(0, tx(X)) + dl(i1, X);
    const int jb1 = xi.bullet(j - 1);
    if (s == 1) {
        const V v{j, r + 1};
        int a = (1 - dl(i1, X)) * dx(X - 1) * step_q(0, tx(Y));
        int b = dx(X - 1) * d(j - 1) * (dl(1, tx(X)) + step_p(2, tx(X)) * dl(1, tj)) +
                d(j - 1) * (1 - dl(i1, X)) * (1 - dx(X - 1)) * dl(1, tj);
        const int c = (1 - d(j - 1)) * step_p(1, t(j - 1));
        const int dd = d(j - 1) * step_p(2, t(j - 1)) +
                       (1 - d(j - 1)) * ((1 - d(i1)) * dl(j - 1, i1) + (1 - dl(j - 1, i1)) * d(j - 2) * step_q(1, t(j - 1)));
        int e = (1 - dl(X, i1)) * dx(X - 1) * d(j - 1) * dl(1, tj) * step_q(1, tx(X)) + dl(X, i1) * d(j - 1) * dl(1, tj);
        const int f = (1 - d(j - 1)) + d(j - 1) * step_p(2, t(j - 1));
        const int g = d(j - 1) * dl(i1b, jb1) * dl(tj, 1);
        if (noX) h = a = b = e = 0;
        add({j - 1, r}, v, 1);
        add(v, {X, r - 1}, h);
        add(v, {Y, r}, a);
        add(v, {X, r + 1}, b);
        add(v, {i1 - 1, r + 1}, g);
        add(v, {j - 1, r + 1}, c);
        add(v, {j + 1, r + 1}, 1);
        add(v, {j - 1, r + 2}, dd);
        add(v, {X, r + 2}, e);
        add({j, r + 2}, v, f);
        fig.case_id = 9;
        fig.v = v;
        return fig;
    }
    const V v{j, r + s};
    int a = (1 - d(j - 1)) * d(j - 2) * step_p(1, t(j - 1)) * step_p(t(j - 1), s - 1) +
            d(j - 1) * dx(X - 1) * step_p(std::min(tx(X), t(j - 1)), s) * step_p(1, tx(X));
    const int b = (1 - d(j - 1)) * step_q(t(j - 1), s);
    int c = (1 - dl(X, i1)) * dx(X - 1) * d(j - 1) * dl(s, tj) * step_p(tx(X), tj) + dl(X, i1) * d(j - 1) * dl(s, tj);
    const int dd = d(j - 1) * (1 - dl(s, tj)) +
                   (1 - d(j - 1)) * ((1 - d(i1)) * dl(j - 1, i1) + (1 - dl(j - 1, i1)) * d(j - 2) * step_p(t(j - 1), s));
    int e = d(j - 1) * (1 - dl(i1, X)) * (1 - dx(X - 1)) * dl(s, tj);
    const int f = (1 - d(j - 1)) + d(j - 1) * step_p(s + 1, t(j - 1));
    const int g = d(j - 1) * dl(i1b, jb1) * dl(tj, s);
    const int yarrow = noX ? 0 : (1 - dl(i1, X)) * d(X - 1) * step_q(0, t(Y));
    if (noX) h = a = c = e = 0;
    add({j, r + s - 1}, v, 1);
    add(v, {X, r + tj}, e);
    add(v, {i1 - 1, r + tj}, g);
    add(v, {X, r + std::min(tx(X), t(j - 1))}, a);
    add(v, {X, r - 1}, h);
    add(v, {Y, r}, yarrow);
    add(v, {j - 1, r + s}, b);
    add(v, {j + 1, r + s}, 1);
    add(v, {j - 1, r + s + 1}, dd);
    add(v, {X, r + tj + 1}, c);
    add({j, r + s + 1}, v, f);
    fig.case_id = 10;
    fig.v = v;
    return fig;
}

}  // namespace

std::optional<CasePrediction> appendix_prediction(const GhlSpec& spec, const HeightFunction& xi, int j, int s,
                                                  int ell) {
    const TProfile tp(spec.idx, spec.rs);
    const int r = spec.r, n = xi.n();
    const bool mirrored = tp.at(j) < 0 || s < 0;
    const int sign = mirrored ? -1 : 1;
    auto fig = case_figure(xi, tp.first(), r, j, sign * s, [&](int p) { return sign * tp.at(p); });
    if (!fig) return std::nullopt;
    auto place = [&](V x) { return mirrored ? V{x.u, 2 * r - x.w} : x; };
    const V v = place(fig->v);
    CasePrediction out;
    out.case_id = fig->case_id;
    out.mirrored = mirrored;
    out.vertex = grid_vertex(v.u, v.w);
    for (const auto& e : fig->edges) {
        const V a = place(e.from), b = place(e.to);
        if (a != v && b != v) throw std::logic_error("appendix figure has an arrow not at the vertex");
        const V other = a == v ? b : a;
        if (other.u < 1 || other.u > n || other.w < 1 || other.w > ell + 1) continue;
        out.incidence[grid_vertex(other.u, other.w)] += a == v ? e.m : -e.m;
    }
    std::erase_if(out.incidence, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace hlc

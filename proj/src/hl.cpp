#include "hlcluster/hl.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hlc {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

int GhlSpec::max_abs_offset() const {
    int m = 0;
    for (int x : rs) m = std::max(m, std::abs(x));
    return m;
}

std::string GhlSpec::str() const {
    return "idx=(" + join(idx) + ") as=(" + join(as) + ") r=" + std::to_string(r) + " rs=(" + join(rs) + ")";
}

nlohmann::json GhlSpec::to_json() const { return {{"idx", idx}, {"as", as}, {"r", r}, {"rs", rs}}; }

GhlSpec GhlSpec::from_json(const nlohmann::json& j) {
    GhlSpec s;
    s.idx = j.at("idx").get<std::vector<int>>();
    s.as = j.at("as").get<std::vector<int>>();
    s.r = j.at("r").get<int>();
    s.rs = j.contains("rs") ? j.at("rs").get<std::vector<int>>() : std::vector<int>(s.idx.size(), 0);
    return s;
}

std::optional<std::string> ghl_violation(const GhlSpec& s) {
    const int k = s.k();
    if (k < 1) return "k >= 1";
    if (s.r < 1) return "r >= 1";
    if (static_cast<int>(s.as.size()) != k || static_cast<int>(s.rs.size()) != k)
        return "idx, as and rs have equal length";
    for (int j = 0; j < k; ++j) {
        if (s.idx[j] < 1) return "i_j is a node (>= 1)";
        if (s.rs[j] < -s.r) return "r_j >= -r";
    }
    for (int j = 1; j < k; ++j)
        if (s.idx[j] <= s.idx[j - 1]) return "(1) i_1 < i_2 < ... < i_k";
    for (int j = 1; j + 1 < k; ++j)
        if ((s.as[j] - s.as[j - 1]) * (s.as[j + 1] - s.as[j]) >= 0) return "(2) a_j alternate";
    for (int j = 1; j < k; ++j)
        if (std::abs(s.as[j] - s.as[j - 1]) != s.idx[j] - s.idx[j - 1] + 2) return "(3) |a_j - a_{j-1}| = i_j - i_{j-1} + 2";
    if (k >= 2) {
        if (s.as[0] > s.as[1] && s.rs[0] != 0) return "(4) r_1 = 0 if a_1 > a_2";
        for (int j = 1; j + 1 < k; ++j)
            if (s.as[j - 1] < s.as[j] && s.as[j] > s.as[j + 1] && s.rs[j] != 0)
                return "(4) r_j = 0 at an interior peak";
        if (s.as[k - 2] < s.as[k - 1] && s.rs[k - 1] != 0) return "(4) r_k = 0 if a_{k-1} < a_k";
    }
    return std::nullopt;
}

bool validate_hl(const YMonomial& m) {
    if (m.is_one() || !m.is_dominant()) return false;
    std::vector<int> idx, as;
    for (const auto& [v, e] : m.exponents()) {
        if (e != 1) return false;
        if (!idx.empty() && idx.back() == v.node) return false;
        idx.push_back(v.node);
        as.push_back(v.shift);
    }
    return hl_sequence_ok(idx, as);
}

YMonomial ghl_product(const GhlSpec& s) {
    YMonomial m;
    for (int j = 0; j < s.k(); ++j) m *= shifted_kr(s.idx[j], s.as[j], s.r, s.rs[j]);
    return m;
}

YMonomial ghl_monomial(const GhlSpec& s) {
    if (auto v = ghl_violation(s)) throw std::invalid_argument("not a generalized HL spec: " + *v);
    return ghl_product(s);
}

YMonomial closed_x_alpha(const HeightFunction& xi, int i, int j, int r) {
    if (i < 1 || i > j || j > xi.n()) throw std::invalid_argument("closed_x_alpha: need 1 <= i <= j <= n");
    if (j == xi.diamond(i)) {
        int a = xi(i) == xi(i + 1) + 1 ? xi(i) + 1 : xi(i) - 1;
        return kr_monomial(i, a, r);
    }
    const int jbar = xi.d(j) ? xi.bullet(j) + 1 : j + 1;
    return lift_r(omega(xi, i, jbar), r);
}

YMonomial omega_tilde(const GhlSpec& s, int t) {
    if (t < 0 || t > s.k()) throw std::out_of_range("omega_tilde: t out of range");
    YMonomial m;
    for (int q = 0; q < t; ++q) m *= shifted_kr(s.idx[q], s.as[q], s.r, s.rs[q]);
    return m;
}

YMonomial omega_tilde_upto(const GhlSpec& s, int x) {
    YMonomial m;
    for (int q = 0; q < s.k(); ++q)
        if (s.idx[q] <= x) m *= shifted_kr(s.idx[q], s.as[q], s.r, s.rs[q]);
    return m;
}

YMonomial closed_x_bracket(const GhlSpec& spec, const HeightFunction& xi, int j, int s) {
    const int n = xi.n(), r = spec.r;
    const TProfile tp(spec.idx, spec.rs);
    const int i1 = tp.first(), ik = tp.last();
    auto T = [&](int p) { return tp.at(p); };
    auto W = [&](int x) { return omega_tilde_upto(spec, x); };
    auto sk = [&](int i, int a, int rj) { return i < 1 || i > n ? YMonomial{} : shifted_kr(i, a, r, rj); };
    auto krs = [&](int i, int a, int len) {
        if (len < 0) throw std::domain_error("closed_x_bracket: negative KR length");
        return i < 1 || i > n ? YMonomial{} : kr_string(i, a, len);
    };
    if (j < 1 || j > n) throw std::out_of_range("closed_x_bracket: node out of range");
    const int J = xi.bullet(j), i1b = xi.bullet(i1);
    const int jb1 = J == i1b ? i1 : J + 1;
    const bool asc = xi.ascending(j);

    if (asc && i1 <= j && j <= ik) {
        if (s == 0) {
            if (xi.d(j) == 0) return W(jb1) * sk(j + 1, xi(j + 1) + 1, 0);
            if (T(j) == 0) return W(jb1);
            return W(jb1) * sk(j + 1, xi(j + 1) + 1, T(j) > 0 ? 1 : -1);
        }
        if (s > 0) {
            const int tt = T(jb1);
            YMonomial mid = krs(jb1, xi(jb1 + 1) - 2 * (tt + 1), tt - s + 1);
            YMonomial end = sk(j + 1, xi(j + 1) + 1, s);
            YMonomial first;
            if (i1b == J)
                first = sk(i1 - 1, xi(i1 - 1) + 1, s - 1);
            else if (i1 == J)
                first = sk(i1, xi(i1) + 1, s);
            else if (i1 < J && xi.d(J - 1) == 0)
                first = W(hat(xi, J, i1)) * sk(J, xi(J) - 1, s - 1);
            else if (i1 < J)
                first = (step_q(T(J), s) ? W(hat(xi, J, i1)) : YMonomial{}) * sk(J, xi(J) + 1, s);
            else
                throw std::domain_error("closed_x_bracket: no guard for s > 0");
            return first * mid * end;
        }
        const int tj = T(j);
        YMonomial mid = krs(j, xi(j + 1) + 2 * (r + tj), s - tj + 1);
        YMonomial end = sk(j + 1, xi(j + 1) + 1, tj - 1);
        YMonomial first;
        if (i1b == J)
            first = sk(i1 - 1, xi(i1 - 1) + 1, tj);
        else if (i1 == J)
            first = sk(J, xi(J) + 1, tj - 1);
        else if (i1 < J && xi.d(J - 1) == 0)
            first = W(hat(xi, J, i1)) * sk(J, xi(J) - 1, tj);
        else if (i1 < J)
            first = (step_p(T(J), s) ? W(hat(xi, J, i1)) : YMonomial{}) * sk(J, xi(J) + 1, tj - 1);
        else
            throw std::domain_error("closed_x_bracket: no guard for s < 0");
        return first * mid * end;
    }
    if (!asc && i1 <= j && j <= ik + 1) {
        if (s == 0) return xi.d(j) ? W(jb1) : W(jb1) * sk(j + 1, xi(j + 1) - 1, 0);
        const int h = hat(xi, j, i1);
        const int tj1 = T(j - 1);
        if (xi.d(j - 1) == 0) return W(h) * sk(j, xi(j) - 1, s);
        if (s == tj1) return W(h);
        if (0 < s && s < tj1) return W(h) * sk(j, xi(j) + 1, s + 1);
        if (tj1 < s && s < 0) return W(h) * sk(j, xi(j) + 1, s - 1);
        throw std::domain_error("closed_x_bracket: no guard for descending j with s != 0");
    }
    throw std::domain_error("closed_x_bracket: (j, s) outside every case");
}

LocalLabels frozen_and_initial_labels(const HeightFunction& xi, int i, int r) {
    if (r < 1) throw std::invalid_argument("frozen_and_initial_labels: r >= 1");
    if (i < 1 || i > xi.n()) throw std::out_of_range("frozen_and_initial_labels: node out of range");
    return {kr_string(i, xi(i) + 1, r - 1), kr_monomial(i, xi(i + 1), r), kr_monomial(i, xi(i) - 1, r + 1)};
}

TrackedSeed local_seed(const HeightFunction& xi, int r) {
    IcedQuiver q = build_q_xi(xi);
    std::vector<YMonomial> labels(static_cast<std::size_t>(q.size()));
    for (int i = 1; i <= xi.n(); ++i) {
        auto l = frozen_and_initial_labels(xi, i, r);
        labels[q.index_of(qxi_vertex(i, Layer::Prime))] = l.f_prime;
        labels[q.index_of(qxi_vertex(i, Layer::Mid))] = l.x;
        labels[q.index_of(qxi_vertex(i, Layer::DoublePrime))] = l.f_double;
    }
    return TrackedSeed(std::move(q), std::move(labels), xi.n());
}

std::string Factor::str() const {
    std::string s;
    switch (kind) {
        case Sym::X: s = "x_" + std::to_string(a); break;
        case Sym::XAlpha: s = "x[a_" + std::to_string(a) + "," + std::to_string(b) + "]"; break;
        case Sym::FPrime: s = "f'_" + std::to_string(a); break;
        case Sym::FDouble: s = "f''_" + std::to_string(a); break;
    }
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

namespace {

std::string product_str(const std::vector<Factor>& fs) {
    if (fs.empty()) return "1";
    std::string s;
    for (std::size_t q = 0; q < fs.size(); ++q) s += (q ? " " : "") + fs[q].str();
    return s;
}

// Builder that drops factors with zero power or a node outside [1,n].
struct Product {
    explicit Product(int rank) : n(rank) {}
    int n;
    std::vector<Factor> fs;

    Product& x(int a, int p = 1) { return push({Sym::X, a, 0, p}); }
    Product& xa(int i, int j) { return push({Sym::XAlpha, i, j, 1}); }
    Product& f(int a, int p = 1) {
        push({Sym::FPrime, a, 0, p});
        return push({Sym::FDouble, a, 0, p});
    }
    Product& push(Factor g) {
        if (g.power == 0 || g.a < 1 || g.a > n) return *this;
        if (g.kind == Sym::XAlpha && (g.b < g.a || g.b > n)) throw std::logic_error("bad x[alpha] range");
        fs.push_back(g);
        return *this;
    }
};

int delta(int a, int b) { return a == b ? 1 : 0; }

Relation exchange_impl(const HeightFunction& xi, int i, int j, bool literal) {
    const int n = xi.n();
    if (i < 1 || i > j || j > n) throw std::invalid_argument("exchange_relation: need 1 <= i <= j <= n");
    Relation rel;
    rel.lhs = Product{n}.x(j).xa(i, j).fs;
    if (i == j) {
        const int di = xi.d(i);
        rel.name = "exchange(i=j)";
        rel.rhs.push_back({1, Product{n}.f(i).x(i + 1, 1 - di).fs});
        rel.rhs.push_back({1, Product{n}.x(i - 1).f(i + 1, 1 - di).x(i + 1, di).fs});
        return rel;
    }
    rel.name = literal ? "exchange(i<j, literal)" : "exchange(i<j)";
    const int J = xi.bullet(j), ib = xi.bullet(i), dj = xi.d(j);
    auto prefix = [&] { return Product{n}.f(j + 1, 1 - dj).x(j + 1, dj); };
    const int first = delta(i, J) + delta(ib, J);
    if (first || literal) {
        auto p = prefix();
        p.f(i, delta(i, J)).x(i - 1, delta(ib, J));
        rel.rhs.push_back({1, p.fs});
    }
    if (1 - first != 0) {
        auto p = prefix();
        p.f(J, xi.d(J - 1)).xa(i, J - 1);
        rel.rhs.push_back({1, p.fs});
    }
    rel.rhs.push_back({1, Product{n}.xa(i, j - 1).f(j, xi.d(j - 1)).x(j + 1, 1 - dj).fs});
    return rel;
}

}  // namespace

std::string Relation::str() const {
    std::string s = product_str(lhs) + " =";
    for (std::size_t q = 0; q < rhs.size(); ++q) {
        if (q || rhs[q].sign < 0) s += rhs[q].sign < 0 ? " -" : " +";
        s += " " + product_str(rhs[q].factors);
    }
    return s;
}

nlohmann::json Relation::to_json() const {
    auto fj = [](const std::vector<Factor>& fs) {
        auto a = nlohmann::json::array();
        for (const auto& f : fs) a.push_back(f.str());
        return a;
    };
    auto terms = nlohmann::json::array();
    for (const auto& t : rhs) terms.push_back({{"sign", t.sign}, {"factors", fj(t.factors)}});
    return {{"name", name}, {"lhs", fj(lhs)}, {"rhs", terms}, {"text", str()}};
}

Relation exchange_relation(const HeightFunction& xi, int i, int j) { return exchange_impl(xi, i, j, false); }
Relation exchange_relation_literal(const HeightFunction& xi, int i, int j) { return exchange_impl(xi, i, j, true); }

bool recursion_guard(const HeightFunction& xi, int i, int j) {
    return 1 <= i && i <= j && j + 1 <= xi.n() && xi.diamond(j) == j && xi.diamond(j + 1) == j + 1;
}

Relation recursion_relation(const HeightFunction& xi, int i, int j) {
    if (!recursion_guard(xi, i, j)) throw std::invalid_argument("recursion_relation: guard j_diamond=j, (j+1)_diamond=j+1 fails");
    const int n = xi.n();
    const int J = xi.bullet(j), ib = xi.bullet(i);
    Relation rel;
    if (J == ib)
        rel.name = "recursion(j_bullet=i_bullet)";
    else if (J == i)
        rel.name = "recursion(j_bullet=i)";
    else if (xi.d(J - 1))
        rel.name = "recursion(j_bullet>i, d)";
    else
        rel.name = "recursion(j_bullet>i, no d)";
    rel.lhs = Product{n}.xa(i, j + 1).fs;
    rel.rhs.push_back({1, Product{n}.xa(i, j).xa(j + 1, j + 1).fs});
    Product sub{n};
    if (delta(i, J) == 0) {
        if (J > i)
            sub.xa(i, J - 1);
        else
            sub.x(i - 1);
    }
    const int b = std::min(1, (1 - delta(J, ib)) * xi.d(J - 1) + delta(J, i));
    sub.f(std::max(i, J), b).x(j + 2);
    rel.rhs.push_back({-1, sub.fs});
    return rel;
}

std::vector<Relation> exchange_predictions(const HeightFunction& xi, int i, int j, int r) {
    if (r < 1) throw std::invalid_argument("exchange_predictions: r >= 1");
    std::vector<Relation> out{exchange_relation(xi, i, j)};
    if (recursion_guard(xi, i, j)) out.push_back(recursion_relation(xi, i, j));
    return out;
}

YMonomial factor_monomial(const HeightFunction& xi, const Factor& f, int r) {
    YMonomial m;
    switch (f.kind) {
        case Sym::X: m = kr_monomial(f.a, xi(f.a + 1), r); break;
        case Sym::XAlpha: m = closed_x_alpha(xi, f.a, f.b, r); break;
        case Sym::FPrime: m = kr_string(f.a, xi(f.a) + 1, r - 1); break;
        case Sym::FDouble: m = kr_monomial(f.a, xi(f.a) - 1, r + 1); break;
    }
    return m.pow(f.power);
}

GhlRun prepare_ghl(const GhlSpec& spec, std::optional<int> ell) {
    if (auto v = ghl_violation(spec)) throw std::invalid_argument("not a generalized HL spec: " + *v);
    HeightFunction xi = build_from_hlr(spec.idx, spec.as);
    const int n = xi.n();
    const int L = ell ? *ell : default_ell(spec.r, n, spec.max_abs_offset());
    SmPrime sm = to_Sm_prime(initial_seed(n, L), xi, spec.r, L);
    auto c = seed_shift(sm.seed, xi, spec.r);
    if (!c) throw std::runtime_error("prepare_ghl: label at (1,r) is not an even shift of x_1; i_j + a_j must be even");
    auto seq = seq_S_prime(xi, spec.idx, spec.as, spec.rs, spec.r);
    std::string fin = s_prime_has_tail(xi, spec.idx, spec.as, spec.rs)
                          ? grid_vertex(spec.idx.back() + 1, spec.r + spec.rs.back())
                          : grid_vertex(spec.idx.back(), spec.r);
    return {spec, xi, L, std::move(sm.seed), *c, sm.normalization_steps, std::move(seq), fin};
}

}  // namespace hlc

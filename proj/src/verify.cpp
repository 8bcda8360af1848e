#include "hlcluster/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hlcluster/appendix.hpp"
#include "hlcluster/gridseeds.hpp"
#include "hlcluster/oracle.hpp"
#include "hlcluster/sequences.hpp"

namespace hlc {

void VerificationReport::fail(std::string what, nlohmann::json artifact) {
    ++checks;
    ++failure_count;
    if (failures.size() < kStoredFailures) failures.push_back({std::move(what), std::move(artifact)});
}

void VerificationReport::merge(const VerificationReport& o) {
    checks += o.checks;
    failure_count += o.failure_count;
    for (const auto& f : o.failures) {
        if (failures.size() >= kStoredFailures) break;
        auto a = f.artifact;
        if (!o.params.empty()) a["params"] = o.params;
        failures.push_back({o.suite.empty() || o.suite == suite ? f.what : o.suite + ": " + f.what, std::move(a)});
    }
    for (const auto& [k, v] : o.tallies) tallies[k] += v;
}

nlohmann::json VerificationReport::to_json() const {
    auto fs = nlohmann::json::array();
    for (const auto& f : failures) fs.push_back({{"what", f.what}, {"artifact", f.artifact}});
    return {{"suite", suite},     {"params", params},        {"passed", passed()}, {"checks", checks},
            {"failures", failure_count}, {"failure_samples", fs}, {"tallies", tallies}};
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << checks << " checks, " << failure_count
       << " failures)";
    for (const auto& f : failures) os << "\n  - " << f.what;
    if (static_cast<std::int64_t>(failures.size()) < failure_count)
        os << "\n  ... " << failure_count - static_cast<std::int64_t>(failures.size()) << " more";
    return os.str();
}

namespace {

int delta(int a, int b) { return a == b ? 1 : 0; }

nlohmann::json incidence_json(const std::map<std::string, int>& inc) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : inc) j[k] = v;
    return j;
}

YMonomial resolve(const HeightFunction& xi, const std::vector<Factor>& fs, int r) {
    YMonomial m;
    for (const auto& f : fs) m *= factor_monomial(xi, f, r);
    return m;
}

IcedQuiver drop_primes(const IcedQuiver& q) {
    IcedQuiver out;
    auto is_prime = [](const std::string& v) { return v.back() == '\'' && v[v.size() - 2] != '\''; };
    for (int k = 0; k < q.size(); ++k)
        if (!is_prime(q.name(k))) out.add_vertex(q.name(k), q.is_frozen(k));
    for (const auto& a : q.arrows())
        if (!is_prime(a.from) && !is_prime(a.to)) out.add_arrows(a.from, a.to, a.mult);
    return out;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t span) { return rng() % span; }
int uniform(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1))); }

// indices and alternating a-values with the gap rule
void random_hl_shape(std::mt19937_64& rng, int k, std::vector<int>& idx, std::vector<int>& as) {
    idx = {uniform(rng, 1, 3)};
    for (int q = 1; q < k; ++q) idx.push_back(idx.back() + uniform(rng, 1, 2));
    as = {(uniform(rng, 0, 1) == 0 ? -2 : 0) - idx[0] % 2};
    bool up = uniform(rng, 0, 1) == 0;
    for (int q = 1; q < k; ++q) {
        int g = idx[q] - idx[q - 1] + 2;
        as.push_back(as.back() + (up ? g : -g));
        up = !up;
    }
}

}  // namespace

std::map<std::string, int> lemma_arrows(const HeightFunction& xi, int i, int j) {
    const int n = xi.n();
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("lemma_arrows: need 1 <= i < j <= n");
    const int J = xi.bullet(j), ib = xi.bullet(i);
    const int a = 1 - delta(i, J);
    const int b = std::min(1, (1 - delta(J, ib)) * xi.d(J - 1) + delta(J, i));
    const int M = std::max(i, J), L = std::max(i - 1, J - 1);
    struct A {
        Layer lu;
        int u;
        Layer lv;
        int v;
        int m;
    };
    const Layer P = Layer::Prime, X = Layer::Mid, D = Layer::DoublePrime;
    const int dj1 = xi.d(j - 1), dj = xi.d(j);
    const std::vector<A> arrows{{P, M, X, j, b},          {D, M, X, j, b},          {X, L, X, j, a},
                                {X, j, P, j, dj1},        {X, j, D, j, dj1},        {X, j, X, j - 1, 1},
                                {X, j, X, j + 1, 1 - dj}, {X, j + 1, X, j, dj},     {P, j + 1, X, j, 1 - dj},
                                {D, j + 1, X, j, 1 - dj}};
    const bool reversed = build_q_xi(xi).b(qxi_vertex(j - 1, X), qxi_vertex(j, X)) < 0;
    const std::string centre = qxi_vertex(j, X);
    std::map<std::string, int> out;
    for (const auto& e : arrows) {
        if (e.m == 0 || e.u < 1 || e.u > n || e.v < 1 || e.v > n) continue;
        std::string u = qxi_vertex(e.u, e.lu), v = qxi_vertex(e.v, e.lv);
        if (reversed) std::swap(u, v);
        if (u == centre)
            out[v] += e.m;
        else
            out[u] -= e.m;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

VerificationReport verify_lemma_arrows(const HeightFunction& xi) {
    VerificationReport rep("arrows", {{"xi", xi.to_json()}});
    const int n = xi.n();
    for (int i = 1; i < n; ++i) {
        IcedQuiver q = build_q_xi(xi);
        for (int j = i + 1; j <= n; ++j) {
            q.mutate_in_place(qxi_vertex(j - 1, Layer::Mid));
            auto got = q.incidence(qxi_vertex(j, Layer::Mid));
            auto want = lemma_arrows(xi, i, j);
            rep.expect(got == want, "arrows at j of Q_xi[i,j-1] for i=" + std::to_string(i) + " j=" + std::to_string(j),
                       [&] {
                           return nlohmann::json{{"xi", xi.to_json()}, {"i", i}, {"j", j}, {"quiver", q.to_json()},
                                                 {"got", incidence_json(got)}, {"expected", incidence_json(want)}};
                       });
        }
    }
    return rep;
}

VerificationReport verify_highest_weights(const HeightFunction& xi, int r) {
    VerificationReport rep("highest", {{"xi", xi.to_json()}, {"r", r}});
    const int n = xi.n();
    for (int i = 1; i <= n; ++i) {
        TrackedSeed s = local_seed(xi, r);
        for (int j = i; j <= n; ++j) {
            const std::string v = qxi_vertex(j, Layer::Mid);
            auto base = [&] { return nlohmann::json{{"xi", xi.to_json()}, {"r", r}, {"i", i}, {"j", j}, {"seed", s.to_json()}}; };
            try {
                s.mutate_in_place(v);
            } catch (const ExchangeError& e) {
                auto a = base();
                a["record"] = e.record().to_json();
                rep.fail(std::string("exchange failed: ") + e.what(), a);
                break;
            }
            const ExchangeRecord& rec = s.log().back();
            const YMonomial want = closed_x_alpha(xi, i, j, r);
            rep.expect(s.label(v) == want, "x[alpha_{" + std::to_string(i) + "," + std::to_string(j) + "}] closed form",
                       [&] {
                           auto a = base();
                           a["got"] = s.label(v).str();
                           a["expected"] = want.str();
                           return a;
                       });

            const Relation rel = exchange_relation(xi, i, j);
            const YMonomial lhs = resolve(xi, rel.lhs, r);
            std::multiset<YMonomial> terms, sides{rec.p_in, rec.p_out};
            for (const auto& t : rel.rhs) terms.insert(resolve(xi, t.factors, r));
            rep.expect(terms == sides && lhs == rec.max_side() && lhs == rec.old_label * rec.new_label,
                       "exchange relation " + rel.str(), [&] {
                           auto a = base();
                           a["record"] = rec.to_json();
                           a["relation"] = rel.to_json();
                           return a;
                       });

            if (j < n && recursion_guard(xi, i, j)) {
                const Relation rr = recursion_relation(xi, i, j);
                const YMonomial l = resolve(xi, rr.lhs, r), plus = resolve(xi, rr.rhs.at(0).factors, r),
                                minus = resolve(xi, rr.rhs.at(1).factors, r);
                const bool ok = l == plus && compare_dominance(minus, plus, Cartan(n)).order == Order::Less;
                rep.expect(ok, rr.name + " at monomial level", [&] {
                    auto a = base();
                    a["relation"] = rr.to_json();
                    a["lhs"] = l.str();
                    a["plus"] = plus.str();
                    a["minus"] = minus.str();
                    return a;
                });
                ++rep.tallies[rr.name];
            }
        }
    }
    return rep;
}

VerificationReport verify_local_seed(const HeightFunction& xi, int r, std::optional<int> ell) {
    const int n = xi.n();
    const int L = ell ? *ell : default_ell(r, n);
    VerificationReport rep("local", {{"xi", xi.to_json()}, {"r", r}, {"ell", L}});
    auto base = [&] { return nlohmann::json{{"xi", xi.to_json()}, {"r", r}, {"ell", L}}; };
    try {
        SmPrime sm = to_Sm_prime(initial_seed(n, L), xi, r, L);
        rep.tallies["normalization steps"] += sm.normalization_steps;
        const auto s_len = seq_S(xi, r, n, L).size();
        const auto& log = sm.seed.log();
        for (std::size_t q = 0; q < log.size() && q < s_len; ++q)
            rep.expect(t_system_conform(log[q], n), "S-phase record at " + log[q].vertex + " is a T-system relation", [&] {
                auto a = base();
                a["step"] = q;
                a["record"] = log[q].to_json();
                return a;
            });
        auto c = seed_shift(sm.seed, xi, r);
        if (!rep.expect(c.has_value(), "label at (1,r) is a shift of x_1", [&] {
                auto a = base();
                a["label"] = sm.seed.label(grid_vertex(1, r)).str();
                return a;
            }))
            return rep;
        rep.params["shift"] = *c;
        LocalSeed loc = extract_local(sm.seed, n, r);
        IcedQuiver want_q = r == 1 ? drop_primes(build_q_xi(xi)) : build_q_xi(xi);
        rep.expect(loc.quiver == want_q, "local quiver equals Q_xi", [&] {
            auto a = base();
            a["got"] = loc.quiver.to_json();
            a["expected"] = want_q.to_json();
            return a;
        });
        TrackedSeed want = local_seed(xi, r);
        for (const auto& [name, lab] : loc.labels) {
            const YMonomial got = lab.shifted(-*c);
            const YMonomial& exp = want.label(name);
            rep.expect(got == exp, "local label at " + name, [&] {
                auto a = base();
                a["vertex"] = name;
                a["got"] = got.str();
                a["expected"] = exp.str();
                return a;
            });
        }
    } catch (const ExchangeError& e) {
        auto a = base();
        a["record"] = e.record().to_json();
        rep.fail(std::string("exchange failed: ") + e.what(), a);
    } catch (const std::exception& e) {
        rep.fail(std::string("error: ") + e.what(), base());
    }
    return rep;
}

VerificationReport verify_hlr(const std::vector<int>& idx, const std::vector<int>& as, int r) {
    VerificationReport rep("hlr", {{"idx", idx}, {"as", as}, {"r", r}});
    auto base = [&] { return nlohmann::json{{"idx", idx}, {"as", as}, {"r", r}}; };
    if (!rep.expect(hl_sequence_ok(idx, as), "HL conditions", base)) return rep;
    YMonomial m;
    for (std::size_t q = 0; q < idx.size(); ++q) m *= YMonomial::var(idx[q], as[q]);
    const YMonomial target = lift_r(m, r);
    const HeightFunction xi = build_from_hlr(idx, as);
    const int i1 = idx.front(), ik = idx.back();
    TrackedSeed s = local_seed(xi, r);
    try {
        for (int j = i1; j <= ik; ++j) s.mutate_in_place(qxi_vertex(j, Layer::Mid));
    } catch (const ExchangeError& e) {
        auto a = base();
        a["xi"] = xi.to_json();
        a["record"] = e.record().to_json();
        rep.fail(std::string("exchange failed: ") + e.what(), a);
        return rep;
    }
    const YMonomial got = s.label(qxi_vertex(ik, Layer::Mid));
    rep.expect(got == target, "tracked x[alpha_{i1,ik}] is the HL_r monomial", [&] {
        auto a = base();
        a["xi"] = xi.to_json();
        a["got"] = got.str();
        a["expected"] = target.str();
        return a;
    });
    const YMonomial closed = closed_x_alpha(xi, i1, ik, r);
    rep.expect(closed == target, "closed form of x[alpha_{i1,ik}] is the HL_r monomial", [&] {
        auto a = base();
        a["xi"] = xi.to_json();
        a["got"] = closed.str();
        a["expected"] = target.str();
        return a;
    });
    return rep;
}

namespace {

// Spec actually built on the grid. For k = 1 the offset folds into the
// level: (Y_{i,a})_{r,r1} is (Y_{i,a'})_{r+r1}.
std::optional<GhlSpec> buildable(const GhlSpec& spec, VerificationReport& rep) {
    if (auto v = ghl_violation(spec)) {
        rep.fail("not a generalized HL spec: " + *v, {{"spec", spec.to_json()}});
        return std::nullopt;
    }
    if (spec.k() == 1 && spec.rs[0] != 0) {
        const int r1 = spec.rs[0];
        if (spec.r + r1 == 0) {
            rep.fail("trivial module: r + r_1 = 0", {{"spec", spec.to_json()}});
            return std::nullopt;
        }
        return GhlSpec{spec.idx, {spec.as[0] - 2 * std::max(r1, 0)}, spec.r + r1, {0}};
    }
    return spec;
}

bool inside_grid(const std::string& v, int n, int ell) {
    auto [i, k] = parse_grid_vertex(v);
    return i >= 1 && i <= n && k >= 1 && k <= ell;
}

}  // namespace

VerificationReport verify_ghl(const GhlSpec& spec, std::optional<int> ell) {
    VerificationReport rep("ghl", {{"spec", spec.to_json()}});
    auto built = buildable(spec, rep);
    if (!built) return rep;
    auto base = [&] { return nlohmann::json{{"spec", spec.to_json()}}; };
    try {
        GhlRun run = prepare_ghl(*built, ell);
        rep.params["ell"] = run.ell;
        rep.params["xi"] = run.xi.to_json();
        rep.params["shift"] = run.shift;
        const int n = run.xi.n();
        for (const auto& v : run.seq)
            if (!inside_grid(v, n, run.ell)) {
                auto a = base();
                a["vertex"] = v;
                rep.fail("S' leaves the grid at " + v, a);
                return rep;
            }
        for (const auto& v : run.seq) {
            auto [j, row] = parse_grid_vertex(v);
            const int s = row - built->r;
            try {
                run.seed.mutate_in_place(v);
            } catch (const ExchangeError& e) {
                auto a = base();
                a["ell"] = run.ell;
                a["record"] = e.record().to_json();
                rep.fail(std::string("exchange failed at ") + v + ": " + e.what(), a);
                return rep;
            }
            const YMonomial got = run.seed.label(v).shifted(-run.shift);
            std::optional<YMonomial> want;
            std::string why;
            try {
                want = closed_x_bracket(*built, run.xi, j, s);
            } catch (const std::domain_error& e) {
                why = e.what();
            }
            rep.expect(want && *want == got, "intermediate x_{[i1," + std::to_string(j) + "]," + std::to_string(s) + "}",
                       [&] {
                           auto a = base();
                           a["ell"] = run.ell;
                           a["vertex"] = v;
                           a["got"] = got.str();
                           a["expected"] = want ? nlohmann::json(want->str()) : nlohmann::json(why);
                           a["record"] = run.seed.log().back().to_json();
                           return a;
                       });
            ++rep.tallies["intermediate"];
        }
        const YMonomial fin = run.seed.label(run.final_vertex).shifted(-run.shift);
        const YMonomial target = ghl_monomial(spec);
        rep.expect(fin == target, "final label at " + run.final_vertex, [&] {
            auto a = base();
            a["ell"] = run.ell;
            a["got"] = fin.str();
            a["expected"] = target.str();
            return a;
        });
    } catch (const ExchangeError& e) {
        auto a = base();
        a["record"] = e.record().to_json();
        rep.fail(std::string("exchange failed: ") + e.what(), a);
    } catch (const std::exception& e) {
        rep.fail(std::string("error: ") + e.what(), base());
    }
    return rep;
}

VerificationReport verify_appendix(const GhlSpec& spec, std::optional<int> ell) {
    VerificationReport rep("appendix", {{"spec", spec.to_json()}});
    auto base = [&] { return nlohmann::json{{"spec", spec.to_json()}}; };
    if (auto v = ghl_violation(spec)) {
        rep.fail("not a generalized HL spec: " + *v, base());
        return rep;
    }
    try {
        GhlRun run = prepare_ghl(spec, ell);
        rep.params["ell"] = run.ell;
        const int n = run.xi.n();
        for (const auto& v : run.seq) {
            if (!inside_grid(v, n, run.ell)) {
                auto a = base();
                a["vertex"] = v;
                rep.fail("S' leaves the grid at " + v, a);
                return rep;
            }
            auto [j, row] = parse_grid_vertex(v);
            const int s = row - spec.r;
            auto pred = appendix_prediction(spec, run.xi, j, s, run.ell);
            auto got = run.seed.quiver().incidence(v);
            const bool ok = pred && pred->incidence == got;
            std::string label = pred ? "case " + std::to_string(pred->case_id) + (pred->mirrored ? " mirrored" : "")
                                     : std::string("no case");
            rep.expect(ok, label + " at " + v, [&] {
                auto a = base();
                a["ell"] = run.ell;
                a["vertex"] = v;
                a["got"] = incidence_json(got);
                a["expected"] = pred ? incidence_json(pred->incidence) : nlohmann::json(nullptr);
                return a;
            });
            ++rep.tallies[label];
            run.seed.mutate_in_place(v);
        }
    } catch (const ExchangeError& e) {
        auto a = base();
        a["record"] = e.record().to_json();
        rep.fail(std::string("exchange failed: ") + e.what(), a);
    } catch (const std::exception& e) {
        rep.fail(std::string("error: ") + e.what(), base());
    }
    return rep;
}

VerificationReport verify_oracle_suite(const HeightFunction& xi) {
    VerificationReport rep("oracle", {{"xi", xi.to_json()}});
    const int n = xi.n();
    auto base = [&] { return nlohmann::json{{"xi", xi.to_json()}}; };
    const auto names = oracle_variable_names(n);
    try {
        const auto vars = closure(xi);
        const std::size_t want = static_cast<std::size_t>(n * (n + 3) / 2);
        rep.expect(vars.size() == want, "closure size n(n+3)/2", [&] {
            auto a = base();
            a["got"] = vars.size();
            a["expected"] = want;
            return a;
        });
        for (const auto& p : vars) {
            const auto lo = p.min_exponents();
            bool ok = true;
            for (int i = 1; i <= n; ++i)
                ok = ok && lo[oracle_variable(n, Layer::Prime, i)] >= 0 && lo[oracle_variable(n, Layer::DoublePrime, i)] >= 0;
            rep.expect(ok, "denominator only in mutable initial variables", [&] {
                auto a = base();
                a["variable"] = p.str(names);
                return a;
            });
            rep.tallies[p.all_coefficients_positive() ? "positive" : "not positive"] += 1;
        }
    } catch (const std::exception& e) {
        rep.fail(std::string("closure: ") + e.what(), base());
    }
    RelationEvaluator ev(xi);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const Relation rel = exchange_relation(xi, i, j);
            rep.expect(ev.holds(rel), rel.name + " i=" + std::to_string(i) + " j=" + std::to_string(j), [&] {
                auto a = base();
                a["relation"] = rel.to_json();
                return a;
            });
            if (i < j && !ev.holds(exchange_relation_literal(xi, i, j))) ++rep.tallies["literal bracket fails"];
            if (recursion_guard(xi, i, j)) {
                const Relation rr = recursion_relation(xi, i, j);
                rep.expect(ev.holds(rr), rr.name + " i=" + std::to_string(i) + " j=" + std::to_string(j), [&] {
                    auto a = base();
                    a["relation"] = rr.to_json();
                    return a;
                });
                ++rep.tallies[rr.name];
            }
        }
    }
    return rep;
}

GhlSpec random_ghl_spec(std::mt19937_64& rng, int kmax, int rmax, int rjmax) {
    GhlSpec s;
    const int k = uniform(rng, 1, kmax);
    s.r = uniform(rng, 1, rmax);
    random_hl_shape(rng, k, s.idx, s.as);
    for (int q = 0; q < k; ++q) s.rs.push_back(uniform(rng, std::max(-s.r, -rjmax), rjmax));
    if (k >= 2) {
        for (int q = 0; q < k; ++q) {
            if (q == 0 && s.as[0] > s.as[1]) s.rs[q] = 0;
            if (q > 0 && q < k - 1 && s.as[q - 1] < s.as[q] && s.as[q] > s.as[q + 1]) s.rs[q] = 0;
            if (q == k - 1 && s.as[q - 1] < s.as[q]) s.rs[q] = 0;
        }
    }
    return s;
}

GhlSpec random_hl_spec(std::mt19937_64& rng, int kmax, int rmax) {
    GhlSpec s;
    const int k = uniform(rng, 1, kmax);
    s.r = uniform(rng, 1, rmax);
    random_hl_shape(rng, k, s.idx, s.as);
    s.rs.assign(static_cast<std::size_t>(k), 0);
    return s;
}

}  // namespace hlc

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlcluster/gridseeds.hpp"
#include "hlcluster/heights.hpp"
#include "hlcluster/hl.hpp"
#include "hlcluster/oracle.hpp"
#include "hlcluster/quiver.hpp"
#include "hlcluster/sequences.hpp"
#include "hlcluster/server.hpp"
#include "hlcluster/verify.hpp"

using namespace hlc;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("not an integer: " + tok);
    }
    return out;
}

std::vector<std::string> split_vertices(const std::string& s) {
    // vertices look like "(2,1)" or "3''"; separate with spaces or ';'
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ';' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<HeightFunction> xis_for(const std::string& xi, int n, int nmax) {
    if (!xi.empty()) return {HeightFunction::parse(xi)};
    std::vector<HeightFunction> out;
    for (int m = n ? n : 1; m <= (n ? n : nmax); ++m)
        for (auto& h : all_height_functions(m)) out.push_back(h);
    return out;
}

struct VerifyArgs {
    std::string xi;
    int n = 0;
    int r = 0;
    std::uint64_t seed = 1;
    int count = 100;
    bool json = false;
    std::string idx, as, rs;
    int ell = 0;
};

int run_verify(const std::string& suite, const VerifyArgs& a) {
    VerificationReport all(suite, {{"seed", a.seed}});
    std::optional<int> ell = a.ell ? std::optional<int>(a.ell) : std::nullopt;
    std::vector<int> rvals = a.r ? std::vector<int>{a.r} : std::vector<int>{1, 2, 3};
    if (suite == "arrows") {
        for (const auto& xi : xis_for(a.xi, a.n, 6)) all.merge(verify_lemma_arrows(xi));
    } else if (suite == "highest") {
        for (const auto& xi : xis_for(a.xi, a.n, 6))
            for (int r : rvals) all.merge(verify_highest_weights(xi, r));
    } else if (suite == "local") {
        for (const auto& xi : xis_for(a.xi, a.n, 6))
            for (int r : rvals) all.merge(verify_local_seed(xi, r, ell));
    } else if (suite == "oracle") {
        for (const auto& xi : xis_for(a.xi, a.n, 5)) all.merge(verify_oracle_suite(xi));
    } else if (suite == "ghl" || suite == "appendix") {
        std::vector<GhlSpec> specs;
        if (!a.idx.empty()) {
            GhlSpec s{parse_ints(a.idx), parse_ints(a.as), a.r ? a.r : 1, {}};
            s.rs = a.rs.empty() ? std::vector<int>(s.idx.size(), 0) : parse_ints(a.rs);
            specs.push_back(s);
        } else {
            std::mt19937_64 rng(a.seed);
            for (int q = 0; q < a.count; ++q) specs.push_back(random_ghl_spec(rng));
        }
        for (const auto& s : specs) all.merge(suite == "ghl" ? verify_ghl(s, ell) : verify_appendix(s, ell));
    } else {
        throw std::invalid_argument("unknown suite " + suite);
    }
    if (a.json)
        std::cout << all.to_json().dump(2) << '\n';
    else
        std::cout << all.summary() << '\n';
    return all.passed() ? 0 : 1;
}

json relation_instance(const HeightFunction& xi, const Relation& rel, int r) {
    auto res = [&](const std::vector<Factor>& fs) {
        YMonomial m;
        for (const auto& f : fs) m *= factor_monomial(xi, f, r);
        return m.str();
    };
    json j = rel.to_json();
    j["lhs_monomial"] = res(rel.lhs);
    auto terms = json::array();
    for (const auto& t : rel.rhs) terms.push_back({{"sign", t.sign}, {"monomial", res(t.factors)}});
    j["rhs_monomials"] = terms;
    return j;
}

void serve(const std::string& host, int port) {
    SessionServer srv;
    std::cerr << "serving on " << host << ":" << port << '\n';
    if (!srv.listen(host, port)) throw std::runtime_error("cannot listen on port " + std::to_string(port));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster seeds, dominant monomial labels and their verification"};
    app.require_subcommand(1);

    std::string xi_s, vertices, format = "json", idx_s, as_s, rs_s, kind = "S";
    int n = 0, ell = 0, r = 1, i = 1, j = 1, t = 0;

    auto* quiver = app.add_subcommand("quiver", "Q_xi and its mutations");
    quiver->require_subcommand(1);
    auto* qbuild = quiver->add_subcommand("build", "print Q_xi");
    qbuild->add_option("--xi", xi_s, "height function, comma separated")->required();
    auto* qmut = quiver->add_subcommand("mutate", "mutate Q_xi along a sequence");
    qmut->add_option("--xi", xi_s)->required();
    qmut->add_option("--at", vertices, "vertices separated by spaces or ';'")->required();
    auto* qexp = quiver->add_subcommand("export", "Q_xi as json or dot");
    qexp->add_option("--xi", xi_s)->required();
    qexp->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* grid = app.add_subcommand("grid", "grid seeds with KR labels");
    grid->require_subcommand(1);
    auto* ginit = grid->add_subcommand("init", "initial grid seed");
    ginit->add_option("--n", n)->required();
    ginit->add_option("--ell", ell)->required();
    auto* grun = grid->add_subcommand("run", "mutate the grid seed; without --at runs S_m and normalization for --xi, --r");
    grun->add_option("--n", n);
    grun->add_option("--ell", ell);
    grun->add_option("--at", vertices);
    grun->add_option("--xi", xi_s);
    grun->add_option("--r", r);

    auto* seq = app.add_subcommand("seq", "mutation sequences");
    seq->require_subcommand(1);
    auto* sbuild = seq->add_subcommand("build", "print S, S_t or S' as a vertex list");
    sbuild->add_option("--xi", xi_s);
    sbuild->add_option("--r", r);
    sbuild->add_option("--ell", ell);
    sbuild->add_option("--kind", kind)->check(CLI::IsMember({"S", "St", "Sprime"}));
    sbuild->add_option("--t", t);
    sbuild->add_option("--idx", idx_s);
    sbuild->add_option("--as", as_s);
    sbuild->add_option("--rs", rs_s);

    auto* oracle = app.add_subcommand("oracle", "exact Laurent polynomial oracle");
    oracle->require_subcommand(1);
    auto* oclos = oracle->add_subcommand("closure", "all cluster variables of Q_xi");
    oclos->add_option("--xi", xi_s)->required();
    auto* ocheck = oracle->add_subcommand("check", "polynomial identities and closure count");
    ocheck->add_option("--xi", xi_s)->required();

    auto* hl = app.add_subcommand("hl", "HL monomials and relations");
    hl->require_subcommand(1);
    auto* hghl = hl->add_subcommand("ghl", "generalized HL monomial");
    hghl->add_option("--idx", idx_s)->required();
    hghl->add_option("--as", as_s)->required();
    hghl->add_option("--r", r);
    hghl->add_option("--rs", rs_s);
    auto* hpred = hl->add_subcommand("predict", "exchange relation instances with resolved monomials");
    hpred->add_option("--xi", xi_s)->required();
    hpred->add_option("--i", i)->required();
    hpred->add_option("--j", j)->required();
    hpred->add_option("--r", r);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    std::vector<CLI::App*> suites;
    for (auto [name, what] : std::initializer_list<std::pair<const char*, const char*>>{
             {"arrows", "arrows at j of Q_xi[i, j-1]"},
             {"highest", "tracked x[alpha_ij] against closed forms and exchange relations"},
             {"local", "grid seed after S_m and normalization against Q_xi"},
             {"ghl", "S' labels against the generalized HL monomial"},
             {"appendix", "case arrow sets before each S' mutation"},
             {"oracle", "exact Laurent identities and closure count"}}) {
        auto* s = verify->add_subcommand(name, what);
        s->add_option("--xi", va.xi, "height function, e.g. -3,-2,-3; default: all xi up to --n");
        s->add_option("--n", va.n, "largest rank in the sweep");
        s->add_option("--r", va.r, "level; default 1..3");
        s->add_option("--seed", va.seed, "RNG seed for random specs");
        s->add_option("--count", va.count, "number of random specs");
        s->add_option("--ell", va.ell, "grid height");
        s->add_option("--idx", va.idx, "spec nodes, e.g. 1,2,3");
        s->add_option("--as", va.as, "spec spectral parameters");
        s->add_option("--rs", va.rs, "spec offsets");
        s->add_flag("--json", va.json, "print the report as JSON");
        suites.push_back(s);
    }

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* srv = app.add_subcommand("serve", "JSON endpoint for the explorer");
    srv->add_option("--port", port, "default 8080");
    srv->add_option("--host", host, "default 127.0.0.1");

    CLI11_PARSE(app, argc, argv);

    try {
        if (qbuild->parsed()) {
            std::cout << build_q_xi(HeightFunction::parse(xi_s)).to_json().dump(2) << '\n';
        } else if (qmut->parsed()) {
            IcedQuiver q = build_q_xi(HeightFunction::parse(xi_s));
            for (const auto& v : split_vertices(vertices)) q.mutate_in_place(v);
            std::cout << q.to_json().dump(2) << '\n';
        } else if (qexp->parsed()) {
            IcedQuiver q = build_q_xi(HeightFunction::parse(xi_s));
            std::cout << (format == "dot" ? q.to_dot() : q.to_json().dump(2)) << '\n';
        } else if (ginit->parsed()) {
            std::cout << initial_seed(n, ell).to_json().dump(2) << '\n';
        } else if (grun->parsed()) {
            if (!vertices.empty()) {
                if (!n || !ell) throw std::invalid_argument("grid run --at needs --n and --ell");
                std::cout << run(initial_seed(n, ell), split_vertices(vertices)).to_json().dump(2) << '\n';
            } else {
                if (xi_s.empty()) throw std::invalid_argument("grid run needs --at or --xi");
                HeightFunction xi = HeightFunction::parse(xi_s);
                const int L = ell ? ell : default_ell(r, xi.n());
                SmPrime sm = to_Sm_prime(initial_seed(xi.n(), L), xi, r, L);
                json out = sm.seed.to_json();
                out["normalization_steps"] = sm.normalization_steps;
                out["shift"] = seed_shift(sm.seed, xi, r) ? json(*seed_shift(sm.seed, xi, r)) : json(nullptr);
                std::cout << out.dump(2) << '\n';
            }
        } else if (sbuild->parsed()) {
            std::vector<std::string> out;
            if (kind == "Sprime") {
                auto idx = parse_ints(idx_s), as = parse_ints(as_s);
                auto rs = rs_s.empty() ? std::vector<int>(idx.size(), 0) : parse_ints(rs_s);
                out = seq_S_prime(build_from_hlr(idx, as), idx, as, rs, r);
            } else {
                HeightFunction xi = HeightFunction::parse(xi_s);
                const int L = ell ? ell : default_ell(r, xi.n());
                out = kind == "S" ? seq_S(xi, r, xi.n(), L) : seq_S_t(xi, r, t, L);
            }
            std::cout << json(out).dump() << '\n';
        } else if (oclos->parsed()) {
            HeightFunction xi = HeightFunction::parse(xi_s);
            auto names = oracle_variable_names(xi.n());
            json vars = json::array();
            for (const auto& p : closure(xi)) vars.push_back(p.str(names));
            std::cout << json{{"count", vars.size()}, {"variables", vars}}.dump(2) << '\n';
        } else if (ocheck->parsed()) {
            auto rep = verify_oracle_suite(HeightFunction::parse(xi_s));
            std::cout << rep.to_json().dump(2) << '\n';
            return rep.passed() ? 0 : 1;
        } else if (hghl->parsed()) {
            GhlSpec s{parse_ints(idx_s), parse_ints(as_s), r, {}};
            s.rs = rs_s.empty() ? std::vector<int>(s.idx.size(), 0) : parse_ints(rs_s);
            std::cout << ghl_monomial(s).str() << '\n';
        } else if (hpred->parsed()) {
            HeightFunction xi = HeightFunction::parse(xi_s);
            json out = json::array();
            for (const auto& rel : exchange_predictions(xi, i, j, r)) out.push_back(relation_instance(xi, rel, r));
            std::cout << out.dump(2) << '\n';
        } else if (srv->parsed()) {
            serve(host, port);
        } else {
            for (auto* s : suites)
                if (s->parsed()) return run_verify(s->get_name(), va);
        }
    } catch (const ExchangeError& e) {
        std::cerr << "error: " << e.what() << '\n' << e.record().to_json().dump(2) << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "hlcluster/gridseeds.hpp"

#include <cstdlib>
#include <regex>
#include <stdexcept>

namespace hlc {

std::string grid_vertex(int i, int k) { return "(" + std::to_string(i) + "," + std::to_string(k) + ")"; }

std::pair<int, int> parse_grid_vertex(const std::string& v) {
    static const std::regex re(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(v, m, re)) throw std::invalid_argument("not a grid vertex: " + v);
    return {std::stoi(m[1]), std::stoi(m[2])};
}

nlohmann::json ExchangeRecord::to_json() const {
    return {{"vertex", vertex},
            {"old", old_label.to_json()},
            {"p_in", p_in.to_json()},
            {"p_out", p_out.to_json()},
            {"chosen", chosen == Side::In ? "in" : "out"},
            {"new", new_label.to_json()},
            {"text",
             old_label.str() + " * " + new_label.str() + " = max(" + p_in.str() + ", " + p_out.str() + ")"}};
}

TrackedSeed::TrackedSeed(IcedQuiver q, std::vector<YMonomial> labels, int rank)
    : q_(std::move(q)), labels_(std::move(labels)), cartan_(rank) {
    if (static_cast<int>(labels_.size()) != q_.size()) throw std::invalid_argument("TrackedSeed: one label per vertex");
    for (const auto& l : labels_)
        if (!l.is_dominant()) throw std::invalid_argument("TrackedSeed: label " + l.str() + " is not dominant");
}

const ExchangeRecord& TrackedSeed::mutate_in_place(const std::string& v) {
    const int k = q_.index_of(v);
    if (q_.is_frozen(k)) throw std::invalid_argument("mutate_tracked: vertex " + v + " is frozen");
    ExchangeRecord rec;
    rec.vertex = v;
    rec.old_label = labels_[k];
    for (int u = 0; u < q_.size(); ++u) {
        int m = q_.b(u, k);
        if (m > 0) rec.p_in *= labels_[u].pow(m);
        if (m < 0) rec.p_out *= labels_[u].pow(-m);
    }
    auto ord = compare_dominance(rec.p_in, rec.p_out, cartan_);
    if (ord.order == Order::Incomparable)
        throw ExchangeError("incomparable exchange products at " + v + ": " + rec.p_in.str() + " vs " + rec.p_out.str(),
                            rec);
    rec.chosen = ord.order == Order::Less ? Side::Out : Side::In;
    rec.new_label = rec.max_side() / rec.old_label;
    if (!rec.new_label.is_dominant())
        throw ExchangeError("non-dominant exchange quotient at " + v + ": " + rec.new_label.str(), rec);
    labels_[k] = rec.new_label;
    q_.mutate_in_place(k);
    log_.push_back(std::move(rec));
    return log_.back();
}

nlohmann::json TrackedSeed::to_json() const {
    nlohmann::json labels = nlohmann::json::object();
    for (int k = 0; k < q_.size(); ++k) labels[q_.name(k)] = labels_[k].to_json();
    auto log = nlohmann::json::array();
    for (const auto& r : log_) log.push_back(r.to_json());
    return {{"kind", "tracked"}, {"rank", rank()}, {"quiver", q_.to_json()}, {"labels", labels}, {"log", log}};
}

TrackedSeed initial_seed(int n, int ell) {
    if (n < 1 || ell < 1) throw std::invalid_argument("initial_seed: need n, ell >= 1");
    IcedQuiver q;
    std::vector<YMonomial> labels;
    for (int k = 1; k <= ell + 1; ++k)
        for (int i = 1; i <= n; ++i) {
            q.add_vertex(grid_vertex(i, k), k == ell + 1);
            int xi_i = i % 2 ? -1 : 0;
            labels.push_back(kr_monomial(i, xi_i - 2 * k + 2, k));
        }
    for (int k = 1; k <= ell + 1; ++k)
        for (int i = 1; i <= n; ++i) {
            if (k <= ell)
                for (int j : {i - 1, i + 1}) {
                    if (j < 1 || j > n) continue;
                    q.add_arrows(grid_vertex(i, k), grid_vertex(j, i % 2 ? k + 1 : k));
                }
            if (k >= 2) q.add_arrows(grid_vertex(i, k), grid_vertex(i, k - 1));
        }
    return TrackedSeed(std::move(q), std::move(labels), n);
}

std::pair<TrackedSeed, ExchangeRecord> mutate_tracked(TrackedSeed s, const std::string& v) {
    ExchangeRecord rec = s.mutate_in_place(v);
    return {std::move(s), std::move(rec)};
}

void run_in_place(TrackedSeed& s, const std::vector<std::string>& seq) {
    for (const auto& v : seq) s.mutate_in_place(v);
}

TrackedSeed run(TrackedSeed s, const std::vector<std::string>& seq) {
    run_in_place(s, seq);
    return s;
}

bool t_system_conform(const ExchangeRecord& rec, int n) {
    if (rec.old_label * rec.new_label != rec.max_side()) return false;
    const YMonomial g = gcd(rec.p_in, rec.p_out);
    const YMonomial big = rec.max_side() / g;
    const YMonomial small = rec.min_side() / g;
    if (big.is_one()) return false;
    // big must be X^{(s)}_{i,k+1} X^{(s+2)}_{i,k-1}: exponents 1,2,...,2,1
    const int i = big.exponents().begin()->first.node;
    for (const auto& [v, e] : big.exponents())
        if (v.node != i) return false;
    const int lo = big.min_shift(), hi = big.max_shift();
    if ((hi - lo) % 2 != 0 || hi == lo) return false;
    const int k = (hi - lo) / 2;
    if (big != kr_monomial(i, lo, k + 1) * kr_string(i, lo + 2, k - 1)) return false;
    YMonomial neighbors;
    for (int j : {i - 1, i + 1})
        if (j >= 1 && j <= n) neighbors *= kr_monomial(j, lo + 1, k);
    return small == neighbors;
}

int default_ell(int r, int n, int max_abs_rj) {
    int extra = 2;
    if (const char* env = std::getenv("HLCLUSTER_ELL_POLICY"); env && *env) {
        std::string s(env);
        try {
            std::size_t used = 0;
            if (s[0] == '+') {
                extra = std::stoi(s.substr(1), &used);
                if (used + 1 != s.size()) throw std::invalid_argument(s);
            } else {
                int fixed = std::stoi(s, &used);
                if (used != s.size() || fixed < 1) throw std::invalid_argument(s);
                return fixed;
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("HLCLUSTER_ELL_POLICY must be an integer or +k, got '" + s + "'");
        }
    }
    return r + n + max_abs_rj + extra;
}

}  // namespace hlc

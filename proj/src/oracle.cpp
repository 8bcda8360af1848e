#include "hlcluster/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hlcluster/sequences.hpp"

namespace hlc {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff c;
    if (__builtin_add_overflow(a, b, &c)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return c;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff c;
    if (__builtin_mul_overflow(a, b, &c)) throw std::overflow_error("LaurentPoly coefficient overflow");
    return c;
}

LaurentPoly::Exponent add_exp(const LaurentPoly::Exponent& a, const LaurentPoly::Exponent& b) {
    LaurentPoly::Exponent c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int width, Coeff c) {
    LaurentPoly p(width);
    p.add_term(Exponent(static_cast<std::size_t>(width), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int width, int index, int power) {
    if (index < 0 || index >= width) throw std::out_of_range("LaurentPoly::variable: index out of range");
    Exponent e(static_cast<std::size_t>(width), 0);
    e[index] = power;
    LaurentPoly p(width);
    p.add_term(e, 1);
    return p;
}

void LaurentPoly::add_term(const Exponent& e, Coeff c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_width(const LaurentPoly& o) const {
    if (width_ != o.width_) throw std::invalid_argument("LaurentPoly: width mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_width(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_width(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_width(b);
    LaurentPoly p(a.width_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(add_exp(ea, eb), checked_mul(ca, cb));
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly out = constant(width_, 1);
    for (unsigned q = 0; q < k; ++q) out = out * *this;
    return out;
}

LaurentPoly::Exponent LaurentPoly::min_exponents() const {
    if (terms_.empty()) throw std::logic_error("min_exponents of zero");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < e.size(); ++k) m[k] = std::min(m[k], e[k]);
    return m;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& b) const {
    check_width(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly q(width_);
    if (is_zero()) return q;
    // The quotient's support lies in the box range(N) - range(D) per
    // coordinate; anything outside means the division is not exact.
    const std::size_t w = static_cast<std::size_t>(width_);
    Exponent lo(w), hi(w);
    {
        Exponent nmin = min_exponents(), dmin = b.min_exponents(), nmax = nmin, dmax = dmin;
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < w; ++k) nmax[k] = std::max(nmax[k], e[k]);
        for (const auto& [e, c] : b.terms_)
            for (std::size_t k = 0; k < w; ++k) dmax[k] = std::max(dmax[k], e[k]);
        for (std::size_t k = 0; k < w; ++k) {
            lo[k] = nmin[k] - dmin[k];
            hi[k] = nmax[k] - dmax[k];
            if (lo[k] > hi[k]) throw std::domain_error("inexact division: Newton ranges incompatible");
        }
    }
    const auto& [dlead, dc] = *b.terms_.rbegin();
    LaurentPoly rem = *this;
    while (!rem.is_zero()) {
        const auto [rlead, rc] = *rem.terms_.rbegin();
        if (rc % dc != 0) throw std::domain_error("inexact division: coefficient");
        Exponent e(w);
        for (std::size_t k = 0; k < w; ++k) {
            e[k] = rlead[k] - dlead[k];
            if (e[k] < lo[k] || e[k] > hi[k]) throw std::domain_error("inexact division: quotient leaves Newton box");
        }
        const Coeff c = rc / dc;
        q.add_term(e, c);
        for (const auto& [eb, cb] : b.terms_) rem.add_term(add_exp(e, eb), -checked_mul(c, cb));
    }
    return q;
}

bool LaurentPoly::all_coefficients_positive() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c < 0 ? -c : c;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != 1 || constant_term) os << mag;
        bool need_star = mag != 1;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (need_star) os << '*';
            need_star = true;
            os << names.at(k);
            if (e[k] != 1) os << '^' << e[k];
        }
    }
    return os.str();
}

std::vector<std::string> oracle_variable_names(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("f'" + std::to_string(i));
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) v.push_back("f''" + std::to_string(i));
    return v;
}

int oracle_variable(int n, Layer layer, int i) {
    if (i < 1 || i > n) throw std::out_of_range("oracle_variable: node out of range");
    switch (layer) {
        case Layer::Prime: return i - 1;
        case Layer::Mid: return n + i - 1;
        case Layer::DoublePrime: return 2 * n + i - 1;
    }
    return -1;
}

LaurentSeed::LaurentSeed(IcedQuiver q, std::vector<LaurentPoly> labels, int n)
    : q_(std::move(q)), labels_(std::move(labels)), n_(n) {
    if (static_cast<int>(labels_.size()) != q_.size()) throw std::invalid_argument("LaurentSeed: one label per vertex");
}

void LaurentSeed::mutate_in_place(const std::string& v) {
    const int k = q_.index_of(v);
    if (q_.is_frozen(k)) throw std::invalid_argument("mutate_oracle: vertex " + v + " is frozen");
    const int w = 3 * n_;
    LaurentPoly in = LaurentPoly::constant(w, 1), out = LaurentPoly::constant(w, 1);
    for (int u = 0; u < q_.size(); ++u) {
        int m = q_.b(u, k);
        if (m > 0) in = in * labels_[u].pow(static_cast<unsigned>(m));
        if (m < 0) out = out * labels_[u].pow(static_cast<unsigned>(-m));
    }
    labels_[k] = (in + out).divide_exact(labels_[k]);
    q_.mutate_in_place(k);
}

std::vector<LaurentPoly> LaurentSeed::cluster() const {
    std::vector<LaurentPoly> c;
    for (int k = 0; k < q_.size(); ++k)
        if (!q_.is_frozen(k)) c.push_back(labels_[k]);
    std::sort(c.begin(), c.end());
    return c;
}

nlohmann::json LaurentSeed::to_json() const {
    const auto names = oracle_variable_names(n_);
    nlohmann::json labels = nlohmann::json::object();
    for (int k = 0; k < q_.size(); ++k) labels[q_.name(k)] = labels_[k].str(names);
    return {{"kind", "oracle"}, {"rank", n_}, {"quiver", q_.to_json()}, {"labels", labels}};
}

LaurentSeed init_oracle(const HeightFunction& xi) {
    const int n = xi.n();
    IcedQuiver q = build_q_xi(xi);
    std::vector<LaurentPoly> labels(static_cast<std::size_t>(q.size()));
    for (int i = 1; i <= n; ++i)
        for (Layer l : {Layer::Prime, Layer::Mid, Layer::DoublePrime})
            labels[q.index_of(qxi_vertex(i, l))] = LaurentPoly::variable(3 * n, oracle_variable(n, l, i));
    return LaurentSeed(std::move(q), std::move(labels), n);
}

LaurentSeed mutate_oracle(LaurentSeed s, const std::string& v) {
    s.mutate_in_place(v);
    return s;
}

LaurentPoly x_alpha(const HeightFunction& xi, int i, int j) {
    if (i < 1 || i > j || j > xi.n()) throw std::invalid_argument("x_alpha: need 1 <= i <= j <= n");
    LaurentSeed s = init_oracle(xi);
    for (int k = i; k <= j; ++k) s.mutate_in_place(qxi_vertex(k, Layer::Mid));
    return s.label(qxi_vertex(j, Layer::Mid));
}

std::vector<LaurentPoly> closure(const HeightFunction& xi, std::size_t cap) {
    LaurentSeed start = init_oracle(xi);
    std::set<std::vector<LaurentPoly>> seen{start.cluster()};
    std::set<LaurentPoly> vars;
    std::deque<LaurentSeed> queue{start};
    while (!queue.empty()) {
        LaurentSeed s = std::move(queue.front());
        queue.pop_front();
        for (const auto& c : s.cluster()) vars.insert(c);
        for (int k = 0; k < s.quiver().size(); ++k) {
            if (s.quiver().is_frozen(k)) continue;
            LaurentSeed t = mutate_oracle(s, s.quiver().name(k));
            if (seen.insert(t.cluster()).second) {
                if (seen.size() > cap) throw std::runtime_error("closure: seed cap exceeded");
                queue.push_back(std::move(t));
            }
        }
    }
    return {vars.begin(), vars.end()};
}

bool verify_identity(const std::vector<LaurentPoly>& lhs, const std::vector<std::vector<LaurentPoly>>& rhs,
                     const std::vector<int>& signs) {
    if (lhs.empty()) throw std::invalid_argument("verify_identity: empty left side");
    if (rhs.size() != signs.size()) throw std::invalid_argument("verify_identity: one sign per term");
    const int w = lhs.front().width();
    LaurentPoly l = LaurentPoly::constant(w, 1);
    for (const auto& p : lhs) l = l * p;
    LaurentPoly r(w);
    for (std::size_t t = 0; t < rhs.size(); ++t) {
        LaurentPoly term = LaurentPoly::constant(w, signs[t]);
        for (const auto& p : rhs[t]) term = term * p;
        r += term;
    }
    return l == r;
}

RelationEvaluator::RelationEvaluator(HeightFunction xi) : xi_(std::move(xi)) {}

LaurentPoly RelationEvaluator::factor(const Factor& f) {
    const int n = xi_.n();
    LaurentPoly base;
    switch (f.kind) {
        case Sym::X: base = LaurentPoly::variable(3 * n, oracle_variable(n, Layer::Mid, f.a)); break;
        case Sym::FPrime: base = LaurentPoly::variable(3 * n, oracle_variable(n, Layer::Prime, f.a)); break;
        case Sym::FDouble: base = LaurentPoly::variable(3 * n, oracle_variable(n, Layer::DoublePrime, f.a)); break;
        case Sym::XAlpha: {
            auto key = std::make_pair(f.a, f.b);
            auto it = cache_.find(key);
            if (it == cache_.end()) it = cache_.emplace(key, x_alpha(xi_, f.a, f.b)).first;
            base = it->second;
            break;
        }
    }
    if (f.power < 0) throw std::invalid_argument("RelationEvaluator: negative power");
    return base.pow(static_cast<unsigned>(f.power));
}

LaurentPoly RelationEvaluator::product(const std::vector<Factor>& fs) {
    LaurentPoly p = LaurentPoly::constant(3 * xi_.n(), 1);
    for (const auto& f : fs) p = p * factor(f);
    return p;
}

bool RelationEvaluator::holds(const Relation& rel) {
    LaurentPoly rhs(3 * xi_.n());
    for (const auto& t : rel.rhs) rhs += LaurentPoly::constant(3 * xi_.n(), t.sign) * product(t.factors);
    return product(rel.lhs) == rhs;
}

}  // namespace hlc

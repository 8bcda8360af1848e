#include "hlcluster/ymon.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hlc {

Cartan::Cartan(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Cartan: rank must be >= 1");
}

int Cartan::entry(int i, int j) const {
    if (!contains(i) || !contains(j)) throw std::out_of_range("Cartan: node out of range");
    if (i == j) return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

YMonomial YMonomial::var(int node, int shift, int exponent) {
    YMonomial m;
    m.add({node, shift}, exponent);
    return m;
}

void YMonomial::add(YVar v, int e) {
    if (e == 0) return;
    auto [it, fresh] = e_.try_emplace(v, e);
    if (!fresh) {
        it->second += e;
        if (it->second == 0) e_.erase(it);
    }
}

int YMonomial::exponent(YVar v) const {
    auto it = e_.find(v);
    return it == e_.end() ? 0 : it->second;
}

bool YMonomial::is_dominant() const {
    return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second > 0; });
}

int YMonomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

int YMonomial::min_shift() const {
    if (e_.empty()) throw std::logic_error("min_shift of the empty monomial");
    int s = e_.begin()->first.shift;
    for (const auto& [v, e] : e_) s = std::min(s, v.shift);
    return s;
}

int YMonomial::max_shift() const {
    if (e_.empty()) throw std::logic_error("max_shift of the empty monomial");
    int s = e_.begin()->first.shift;
    for (const auto& [v, e] : e_) s = std::max(s, v.shift);
    return s;
}

YMonomial& YMonomial::operator*=(const YMonomial& o) {
    for (const auto& [v, e] : o.e_) add(v, e);
    return *this;
}

YMonomial& YMonomial::operator/=(const YMonomial& o) {
    for (const auto& [v, e] : o.e_) add(v, -e);
    return *this;
}

YMonomial YMonomial::pow(int k) const {
    YMonomial m;
    if (k == 0) return m;
    for (const auto& [v, e] : e_) m.e_.emplace(v, e * k);
    return m;
}

YMonomial YMonomial::shifted(int c) const {
    YMonomial m;
    for (const auto& [v, e] : e_) m.e_.emplace(YVar{v.node, v.shift + c}, e);
    return m;
}

std::string YMonomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : e_) {
        if (!first) os << " * ";
        first = false;
        os << "Y[" << v.node << ',' << v.shift << ']';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t p = 0;

    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        ws();
        std::size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stoi(std::string(s.substr(start, p - start)));
    }
    bool done() {
        ws();
        return p == s.size();
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("monomial parse error at " + std::to_string(p) + ": " + what);
    }
};

}  // namespace

YMonomial YMonomial::parse(std::string_view text) {
    Cursor c{text};
    YMonomial m;
    if (c.eat('1')) {
        if (!c.done()) c.fail("trailing input after 1");
        return m;
    }
    do {
        c.expect('Y');
        c.expect('[');
        int i = c.integer();
        c.expect(',');
        int s = c.integer();
        c.expect(']');
        int e = 1;
        if (c.eat('^')) e = c.integer();
        m.add({i, s}, e);
    } while (c.eat('*'));
    if (!c.done()) c.fail("trailing input");
    return m;
}

nlohmann::json YMonomial::to_json() const {
    auto j = nlohmann::json::array();
    for (const auto& [v, e] : e_) j.push_back({v.node, v.shift, e});
    return j;
}

YMonomial YMonomial::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("monomial JSON must be an array");
    YMonomial m;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("monomial JSON entries are [i,s,e]");
        m.add({t[0].get<int>(), t[1].get<int>()}, t[2].get<int>());
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const YMonomial& m) { return os << m.str(); }

YMonomial a_inverse(int i, int s, const Cartan& c) {
    if (!c.contains(i)) throw std::out_of_range("a_inverse: node out of range");
    YMonomial m = YMonomial::var(i, s - 1, -1) * YMonomial::var(i, s + 1, -1);
    for (int j : {i - 1, i + 1})
        if (c.contains(j)) m *= YMonomial::var(j, s);
    return m;
}

YMonomial a_monomial(int i, int s, const Cartan& c) { return a_inverse(i, s, c).inverse(); }

YMonomial kr_string(int i, int s, int k) {
    if (k < 0) throw std::invalid_argument("KR string of negative length");
    YMonomial m;
    for (int t = 0; t < k; ++t) m *= YMonomial::var(i, s + 2 * t);
    return m;
}

YMonomial kr_monomial(int i, int s, int k) {
    if (k < 1) throw std::invalid_argument("kr_monomial: length must be >= 1");
    return kr_string(i, s, k);
}

YMonomial lift_r(const YMonomial& m, int r) {
    if (!m.is_dominant()) throw std::invalid_argument("lift_r: monomial is not dominant");
    if (r < 1) throw std::invalid_argument("lift_r: r must be >= 1");
    YMonomial out;
    for (const auto& [v, e] : m.exponents()) out *= kr_string(v.node, v.shift, r).pow(e);
    return out;
}

YMonomial shifted_kr(int i, int a, int r, int rj) {
    if (rj < -r) throw std::invalid_argument("shifted_kr: rj < -r");
    if (rj <= 0) return kr_string(i, a, r + rj);
    return kr_string(i, a - 2 * rj, r + rj);
}

YMonomial gcd(const YMonomial& a, const YMonomial& b) {
    YMonomial g;
    for (const auto& [v, e] : a.exponents()) {
        int f = b.exponent(v);
        int m = std::min(e, f);
        if (m > 0) g *= YMonomial::var(v.node, v.shift, m);
    }
    return g;
}

std::string_view to_string(Order o) {
    switch (o) {
        case Order::Equal: return "Equal";
        case Order::Greater: return "Greater";
        case Order::Less: return "Less";
        case Order::Incomparable: return "Incomparable";
    }
    return "?";
}

YMonomial a_product(const std::map<YVar, int>& cert, const Cartan& c) {
    YMonomial m;
    for (const auto& [v, e] : cert) m *= a_monomial(v.node, v.shift, c).pow(e);
    return m;
}

DomOrdering compare_dominance(const YMonomial& m1, const YMonomial& m2, const Cartan& c) {
    for (const auto& m : {m1, m2})
        for (const auto& [v, e] : m.exponents())
            if (!c.contains(v.node)) throw std::out_of_range("compare_dominance: node out of range");

    YMonomial q = m1 / m2;
    if (q.is_one()) return {Order::Equal, {}};

    // A_{i,s} has its lowest variable Y_{i,s-1} with exponent 1, so the
    // system is triangular in the shift: clear the lowest column each step.
    const int top = q.max_shift();
    std::map<YVar, int> cert;
    while (!q.is_one()) {
        int lo = q.min_shift();
        if (lo >= top) return {Order::Incomparable, {}};
        std::vector<std::pair<int, int>> column;
        for (const auto& [v, e] : q.exponents())
            if (v.shift == lo) column.emplace_back(v.node, e);
        for (auto [i, e] : column) {
            cert[{i, lo + 1}] += e;
            q *= a_inverse(i, lo + 1, c).pow(e);
        }
    }
    bool pos = true, neg = true;
    for (auto it = cert.begin(); it != cert.end();) {
        if (it->second == 0) {
            it = cert.erase(it);
            continue;
        }
        pos = pos && it->second > 0;
        neg = neg && it->second < 0;
        ++it;
    }
    if (pos) return {Order::Greater, std::move(cert)};
    if (neg) return {Order::Less, std::move(cert)};
    return {Order::Incomparable, {}};
}

std::optional<int> shift_equivalent(const YMonomial& m1, const YMonomial& m2) {
    const auto& a = m1.exponents();
    const auto& b = m2.exponents();
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return 0;
    const auto& [va, ea] = *a.begin();
    const auto& [vb, eb] = *b.begin();
    if (va.node != vb.node || ea != eb) return std::nullopt;
    int c = vb.shift - va.shift;
    if (c % 2 != 0) return std::nullopt;
    if (m1.shifted(c) != m2) return std::nullopt;
    return c;
}

}  // namespace hlc

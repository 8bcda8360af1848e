#include "hlcluster/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hlc {

int IcedQuiver::add_vertex(const std::string& name, bool frozen) {
    if (contains(name)) throw std::invalid_argument("duplicate vertex " + name);
    const std::size_t old = names_.size(), now = old + 1;
    std::vector<int> grown(now * now, 0);
    for (std::size_t u = 0; u < old; ++u)
        std::copy_n(b_.begin() + static_cast<std::ptrdiff_t>(u * old), old, grown.begin() + static_cast<std::ptrdiff_t>(u * now));
    b_ = std::move(grown);
    names_.push_back(name);
    frozen_.push_back(frozen ? 1 : 0);
    index_.emplace(name, static_cast<int>(old));
    return static_cast<int>(old);
}

int IcedQuiver::index_of(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::out_of_range("no vertex " + v);
    return it->second;
}

std::vector<std::string> IcedQuiver::frozen_vertices() const {
    std::vector<std::string> out;
    for (int k = 0; k < size(); ++k)
        if (is_frozen(k)) out.push_back(names_[k]);
    return out;
}

void IcedQuiver::add_arrows(const std::string& u, const std::string& v, int m) {
    int a = index_of(u), c = index_of(v);
    if (a == c) throw std::invalid_argument("loop at " + u);
    if (is_frozen(a) && is_frozen(c)) throw std::invalid_argument("arrow between frozen vertices " + u + ", " + v);
    at(a, c) += m;
    at(c, a) -= m;
}

void IcedQuiver::set_arrows(const std::string& u, const std::string& v, int m) {
    int a = index_of(u), c = index_of(v);
    if (a == c) throw std::invalid_argument("loop at " + u);
    if (is_frozen(a) && is_frozen(c)) throw std::invalid_argument("arrow between frozen vertices " + u + ", " + v);
    if (at(a, c) != 0 && at(a, c) != m)
        throw std::logic_error("conflicting arrows " + u + " -> " + v + ": " + std::to_string(at(a, c)) + " vs " + std::to_string(m));
    at(a, c) = m;
    at(c, a) = -m;
}

void IcedQuiver::mutate_in_place(int k) {
    if (k < 0 || k >= size()) throw std::out_of_range("mutate: vertex index out of range");
    if (is_frozen(k)) throw std::invalid_argument("mutate: vertex " + names_[k] + " is frozen");
    const int n = size();
    std::vector<int> col(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) col[u] = b(u, k);
    for (int u = 0; u < n; ++u) {
        if (u == k || col[u] <= 0) continue;  // u -> k
        for (int v = 0; v < n; ++v) {
            if (v == k || col[v] >= 0) continue;  // k -> v
            if (is_frozen(u) && is_frozen(v)) continue;
            int m = col[u] * -col[v];
            at(u, v) += m;
            at(v, u) -= m;
        }
    }
    for (int u = 0; u < n; ++u) {
        at(u, k) = -at(u, k);
        at(k, u) = -at(k, u);
    }
}

IcedQuiver IcedQuiver::mutate(const std::string& k) const {
    IcedQuiver q = *this;
    q.mutate_in_place(k);
    return q;
}

std::map<std::string, int> IcedQuiver::incidence(const std::string& v) const {
    int k = index_of(v);
    std::map<std::string, int> out;
    for (int u = 0; u < size(); ++u)
        if (b(k, u) != 0) out.emplace(names_[u], b(k, u));
    return out;
}

std::vector<Incidence> IcedQuiver::arrows_at(const std::string& v) const {
    std::vector<Incidence> out;
    int k = index_of(v);
    for (int u = 0; u < size(); ++u) {
        int m = b(k, u);
        if (m > 0) out.push_back({names_[u], m, Direction::Out});
        if (m < 0) out.push_back({names_[u], -m, Direction::In});
    }
    return out;
}

std::vector<Arrow> IcedQuiver::arrows() const {
    std::vector<Arrow> out;
    for (int u = 0; u < size(); ++u)
        for (int v = 0; v < size(); ++v)
            if (b(u, v) > 0) out.push_back({names_[u], names_[v], b(u, v)});
    return out;
}

IcedQuiver IcedQuiver::freeze_restrict(const std::set<std::string>& freeze, const std::vector<std::string>& keep) const {
    std::set<std::string> kept(keep.begin(), keep.end());
    for (const auto& f : freeze)
        if (!kept.count(f)) throw std::invalid_argument("freeze_restrict: frozen vertex " + f + " not kept");
    for (const auto& v : keep) {
        if (freeze.count(v) || is_frozen(v)) continue;
        for (const auto& [u, m] : incidence(v))
            if (!kept.count(u))
                throw std::invalid_argument("freeze_restrict: mutable " + v + " has arrow to dropped " + u +
                                            " (b=" + std::to_string(m) + ")");
    }
    IcedQuiver q;
    for (const auto& v : keep) q.add_vertex(v, freeze.count(v) || is_frozen(v));
    for (const auto& a : arrows()) {
        if (!kept.count(a.from) || !kept.count(a.to)) continue;
        if (q.is_frozen(a.from) && q.is_frozen(a.to)) continue;
        q.add_arrows(a.from, a.to, a.mult);
    }
    return q;
}

nlohmann::json IcedQuiver::to_json() const {
    nlohmann::json j;
    j["vertices"] = names_;
    j["frozen"] = frozen_vertices();
    auto arr = nlohmann::json::array();
    for (const auto& a : arrows()) arr.push_back({a.from, a.to, a.mult});
    j["arrows"] = arr;
    return j;
}

IcedQuiver IcedQuiver::from_json(const nlohmann::json& j) {
    IcedQuiver q;
    std::set<std::string> fr;
    for (const auto& f : j.at("frozen")) fr.insert(f.get<std::string>());
    for (const auto& v : j.at("vertices")) {
        auto name = v.get<std::string>();
        q.add_vertex(name, fr.count(name) != 0);
    }
    for (const auto& f : fr)
        if (!q.contains(f)) throw std::invalid_argument("frozen vertex " + f + " not in vertex list");
    for (const auto& a : j.at("arrows")) {
        int m = a.at(2).get<int>();
        if (m <= 0) throw std::invalid_argument("arrow multiplicity must be positive");
        q.add_arrows(a.at(0).get<std::string>(), a.at(1).get<std::string>(), m);
    }
    return q;
}

std::string IcedQuiver::to_dot() const {
    auto quote = [](const std::string& s) {
        std::string o = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') o += '\\';
            o += c;
        }
        return o + "\"";
    };
    std::ostringstream os;
    os << "digraph Q {\n";
    for (int k = 0; k < size(); ++k)
        os << "  " << quote(names_[k]) << (is_frozen(k) ? " [shape=box];\n" : " [shape=circle];\n");
    for (const auto& a : arrows()) {
        os << "  " << quote(a.from) << " -> " << quote(a.to);
        if (a.mult != 1) os << " [label=\"" << a.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

bool IcedQuiver::operator==(const IcedQuiver& o) const {
    if (size() != o.size()) return false;
    for (int u = 0; u < size(); ++u) {
        auto it = o.index_.find(names_[u]);
        if (it == o.index_.end() || is_frozen(u) != o.is_frozen(it->second)) return false;
    }
    for (int u = 0; u < size(); ++u) {
        int ou = o.index_.at(names_[u]);
        for (int v = 0; v < size(); ++v)
            if (b(u, v) != o.b(ou, o.index_.at(names_[v]))) return false;
    }
    return true;
}

}  // namespace hlc

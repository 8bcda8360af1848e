#include "hlcluster/heights.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hlc {

HeightFunction::HeightFunction(std::vector<int> values) : v_(std::move(values)) {
    if (v_.empty()) throw std::invalid_argument("height function needs n >= 1");
    for (std::size_t i = 1; i < v_.size(); ++i)
        if (std::abs(v_[i] - v_[i - 1]) != 1)
            throw std::invalid_argument("height function: |xi(i)-xi(i-1)| != 1 at i=" + std::to_string(i + 1));
}

int HeightFunction::operator()(int i) const {
    const int n = this->n();
    if (i < 0 || i > n + 1) throw std::out_of_range("height function index " + std::to_string(i));
    if (n == 1 && i != 1) return v_[0] + 1;
    if (i == 0) return v_[1];
    if (i == n + 1) return v_[n - 2];
    return v_[i - 1];
}

int HeightFunction::diamond(int i) const {
    const int n = this->n();
    if (i < 1 || i > n) throw std::out_of_range("diamond: node out of range");
    if (i >= n - 1) return i;
    for (int x = i; x <= n - 2; ++x)
        if ((*this)(x) == (*this)(x + 2)) return x;
    return n - 1;
}

int HeightFunction::d(int j) const {
    if (j < 1 || j > n()) return 0;
    return diamond(j) == j ? 1 : 0;
}

int HeightFunction::bullet(int j) const {
    if (j < 1 || j > n()) throw std::out_of_range("bullet: node out of range");
    const int one = diamond(1);
    if (j <= one) return 0;
    for (int x = j - 1; x >= one; --x)
        if (diamond(x) == x) return x;
    throw std::logic_error("bullet: 1_diamond is not a fixed point");
}

std::string HeightFunction::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    return os.str();
}

HeightFunction HeightFunction::parse(std::string_view csv) {
    std::vector<int> v;
    std::string item;
    std::istringstream is{std::string(csv)};
    while (std::getline(is, item, ',')) {
        std::size_t used = 0;
        int x = std::stoi(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument("bad height function entry '" + item + "'");
        v.push_back(x);
    }
    return HeightFunction(std::move(v));
}

HeightFunction HeightFunction::from_json(const nlohmann::json& j) {
    return HeightFunction(j.get<std::vector<int>>());
}

Derived derived(const HeightFunction& xi, int j) {
    return {xi.diamond(j), xi.bullet(j), xi.d(j)};
}

std::vector<HeightFunction> all_height_functions(int n) {
    if (n < 1) throw std::invalid_argument("all_height_functions: n >= 1");
    std::vector<HeightFunction> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> v{0};
        for (int k = 0; k < n - 1; ++k) v.push_back(v.back() + ((mask >> k) & 1u ? -1 : 1));
        out.emplace_back(std::move(v));
    }
    return out;
}

int hat_strict(const HeightFunction& xi, int j, int i1) {
    if (i1 > j) throw std::invalid_argument("hat: i1 > j");
    const int jb = xi.bullet(j);
    if ((jb == j - 1 && j - 1 == i1) || (j > i1 && jb == xi.bullet(i1))) return i1;
    for (int x = j - 1; x >= i1; --x)
        if (xi(x - 1) == xi(x + 1)) return x;
    throw std::domain_error("hat: no x in [i1, j-1] with xi(x-1)=xi(x+1)");
}

int hat(const HeightFunction& xi, int j, int i1) {
    try {
        return hat_strict(xi, j, i1);
    } catch (const std::domain_error&) {
        return i1;
    }
}

YMonomial omega(const HeightFunction& xi, int i, int j) {
    if (i >= j) throw std::invalid_argument("omega: need i < j");
    if (i < 1 || j > xi.n()) throw std::out_of_range("omega: node out of range");
    std::vector<int> nodes{i};
    for (int l = i + 1; l < j; ++l)
        if (xi(l - 1) == xi(l + 1)) nodes.push_back(l);
    nodes.push_back(j);
    YMonomial m;
    for (std::size_t t = 0; t < nodes.size(); ++t) {
        int p = nodes[t];
        bool up = t == 0 ? xi(p) == xi(p + 1) + 1 : xi(p) == xi(p - 1) + 1;
        m *= YMonomial::var(p, up ? xi(p) + 1 : xi(p) - 1);
    }
    return m;
}

TProfile::TProfile(std::vector<int> idx, std::vector<int> rs) : idx_(std::move(idx)), rs_(std::move(rs)) {
    if (idx_.empty() || idx_.size() != rs_.size()) throw std::invalid_argument("t_profile: need k >= 1 matching lists");
    for (std::size_t m = 1; m < idx_.size(); ++m)
        if (idx_[m] <= idx_[m - 1]) throw std::invalid_argument("t_profile: node list not strictly increasing");
    t_[idx_[0]] = rs_[0];
    for (std::size_t m = 1; m < idx_.size(); ++m)
        for (int p = idx_[m - 1] + 1; p <= idx_[m]; ++p) t_[p] = rs_[m - 1] + rs_[m];
}

int TProfile::at(int p) const {
    if (auto it = t_.find(p); it != t_.end()) return it->second;
    if (p == last() + 1) return rs_.back();
    return 0;
}

TProfile t_profile(const std::vector<int>& idx, const std::vector<int>& rs) { return TProfile(idx, rs); }

bool hl_sequence_ok(const std::vector<int>& idx, const std::vector<int>& as) {
    if (idx.empty() || idx.size() != as.size()) return false;
    for (std::size_t j = 1; j < idx.size(); ++j) {
        if (idx[j] <= idx[j - 1]) return false;
        if (std::abs(as[j] - as[j - 1]) != idx[j] - idx[j - 1] + 2) return false;
        if (j + 1 < idx.size() && (as[j] - as[j - 1]) * (as[j + 1] - as[j]) >= 0) return false;
    }
    return true;
}

HeightFunction build_from_hlr(const std::vector<int>& idx, const std::vector<int>& as) {
    if (!hl_sequence_ok(idx, as)) throw std::invalid_argument("build_from_hlr: input is not an HL monomial");
    if (idx.front() < 1) throw std::invalid_argument("build_from_hlr: nodes start at 1");
    const int k = static_cast<int>(idx.size());
    const int n = idx.back() + 2;
    std::vector<int> v(n + 1, 0);
    bool up;
    if (k == 1) {
        up = true;
        v[idx[0]] = as[0] + 1;
        v[idx[0] + 1] = as[0] + 2;
        v[idx[0] + 2] = as[0] + 1;
    } else {
        up = as[0] < as[1];
        v[idx[0]] = up ? as[0] + 1 : as[0] - 1;
        int dir = up ? 1 : -1;
        for (int s = 1; s < k; ++s) {
            for (int p = idx[s - 1] + 1; p <= idx[s]; ++p) v[p] = v[p - 1] + dir;
            dir = -dir;
        }
        v[idx.back() + 1] = v[idx.back()] + dir;
        v[idx.back() + 2] = v[idx.back()];
    }
    for (int p = idx[0] - 1; p >= 1; --p) v[p] = v[p + 1] - (up ? 1 : -1);
    return HeightFunction(std::vector<int>(v.begin() + 1, v.end()));
}

}  // namespace hlc

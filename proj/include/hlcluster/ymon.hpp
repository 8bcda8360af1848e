// Loop-weight monomials in the variables Y_{i,s}, the A-lattice and the
// dominance order.
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace hlc {

struct YVar {
    int node = 1;
    int shift = 0;
    auto operator<=>(const YVar&) const = default;
};

// Rank of the type A Cartan matrix. Nodes are 1..n.
class Cartan {
public:
    explicit Cartan(int n);
    int rank() const { return n_; }
    int entry(int i, int j) const;
    bool contains(int node) const { return node >= 1 && node <= n_; }

private:
    int n_;
};

class YMonomial {
public:
    using Map = std::map<YVar, int>;

    YMonomial() = default;
    static YMonomial var(int node, int shift, int exponent = 1);

    const Map& exponents() const { return e_; }
    int exponent(YVar v) const;
    bool is_one() const { return e_.empty(); }
    bool is_dominant() const;
    int degree() const;
    int min_shift() const;
    int max_shift() const;

    YMonomial& operator*=(const YMonomial& o);
    YMonomial& operator/=(const YMonomial& o);
    friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
    friend YMonomial operator/(YMonomial a, const YMonomial& b) { return a /= b; }
    YMonomial pow(int k) const;
    YMonomial inverse() const { return pow(-1); }
    YMonomial shifted(int c) const;

    bool operator==(const YMonomial&) const = default;
    auto operator<=>(const YMonomial& o) const { return e_ <=> o.e_; }

    // Y[i,s]^e * ... sorted by (i,s); "1" for the empty monomial
    std::string str() const;
    static YMonomial parse(std::string_view text);
    nlohmann::json to_json() const;
    static YMonomial from_json(const nlohmann::json& j);

private:
    void add(YVar v, int e);
    Map e_;
};

std::ostream& operator<<(std::ostream& os, const YMonomial& m);

// Y^{-1}_{i,s-1} Y^{-1}_{i,s+1} prod_{|j-i|=1} Y_{j,s}
YMonomial a_inverse(int i, int s, const Cartan& c);
YMonomial a_monomial(int i, int s, const Cartan& c);

// X^{(s)}_{i,k} = Y_{i,s} Y_{i,s+2} ... Y_{i,s+2k-2}; k >= 1
YMonomial kr_monomial(int i, int s, int k);
// same, but k = 0 gives the empty monomial
YMonomial kr_string(int i, int s, int k);
// (m)_r: every Y_{i,a}^e becomes X^{(a)}_{i,r}^e
YMonomial lift_r(const YMonomial& m, int r);
// (Y_{i,a})_{r,rj}
YMonomial shifted_kr(int i, int a, int r, int rj);

// componentwise min over the common support, for dominant inputs
YMonomial gcd(const YMonomial& a, const YMonomial& b);

enum class Order { Equal, Greater, Less, Incomparable };
std::string_view to_string(Order o);

struct DomOrdering {
    Order order = Order::Incomparable;
    // exponents of A_{i,s} in m1 m2^{-1}; empty when Incomparable or Equal
    std::map<YVar, int> certificate;
};

DomOrdering compare_dominance(const YMonomial& m1, const YMonomial& m2, const Cartan& c);

// product of A_{i,s}^{e} over a certificate
YMonomial a_product(const std::map<YVar, int>& cert, const Cartan& c);

// even c with m2 = m1 shifted by c
std::optional<int> shift_equivalent(const YMonomial& m1, const YMonomial& m2);

}  // namespace hlc

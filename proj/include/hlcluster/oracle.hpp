// Exact Laurent polynomials over the 3n initial variables of the cluster
// algebra on Q_xi, and the seed engine that uses them.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hlcluster/heights.hpp"
#include "hlcluster/hl.hpp"
#include "hlcluster/quiver.hpp"

namespace hlc {

class LaurentPoly {
public:
    using Exponent = std::vector<int>;
    using Coeff = std::int64_t;

    explicit LaurentPoly(int width = 0) : width_(width) {}
    static LaurentPoly constant(int width, Coeff c);
    static LaurentPoly variable(int width, int index, int power = 1);

    int width() const { return width_; }
    const std::map<Exponent, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly pow(unsigned k) const;

    // exact quotient; throws std::domain_error when b does not divide *this
    LaurentPoly divide_exact(const LaurentPoly& b) const;

    bool operator==(const LaurentPoly&) const = default;
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    bool all_coefficients_positive() const;
    // lowest exponent of each variable over the support
    Exponent min_exponents() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    void add_term(const Exponent& e, Coeff c);
    void check_width(const LaurentPoly& o) const;

    int width_;
    std::map<Exponent, Coeff> terms_;
};

// variable order: f'_1..f'_n, x_1..x_n, f''_1..f''_n
std::vector<std::string> oracle_variable_names(int n);
int oracle_variable(int n, Layer layer, int i);

class LaurentSeed {
public:
    LaurentSeed(IcedQuiver q, std::vector<LaurentPoly> labels, int n);

    const IcedQuiver& quiver() const { return q_; }
    int rank() const { return n_; }
    const LaurentPoly& label(const std::string& v) const { return labels_.at(q_.index_of(v)); }
    const std::vector<LaurentPoly>& labels() const { return labels_; }

    void mutate_in_place(const std::string& v);
    // sorted labels at mutable vertices
    std::vector<LaurentPoly> cluster() const;

    nlohmann::json to_json() const;

private:
    IcedQuiver q_;
    std::vector<LaurentPoly> labels_;
    int n_;
};

LaurentSeed init_oracle(const HeightFunction& xi);
LaurentSeed mutate_oracle(LaurentSeed s, const std::string& v);
LaurentPoly x_alpha(const HeightFunction& xi, int i, int j);

// every mutable cluster variable reachable from the initial seed
std::vector<LaurentPoly> closure(const HeightFunction& xi, std::size_t cap = 10000);

bool verify_identity(const std::vector<LaurentPoly>& lhs, const std::vector<std::vector<LaurentPoly>>& rhs,
                     const std::vector<int>& signs);

// Evaluates relations with x_i, f'_i, f''_i the initial variables and
// x[alpha_{i,j}] computed by mutation. Caches x_alpha per (i,j).
class RelationEvaluator {
public:
    explicit RelationEvaluator(HeightFunction xi);
    LaurentPoly factor(const Factor& f);
    LaurentPoly product(const std::vector<Factor>& fs);
    bool holds(const Relation& rel);

private:
    HeightFunction xi_;
    std::map<std::pair<int, int>, LaurentPoly> cache_;
};

}  // namespace hlc

// HL, HL_r and generalized HL monomials, and the closed forms predicted
// for labels produced by the mutation sequences.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlcluster/gridseeds.hpp"
#include "hlcluster/heights.hpp"
#include "hlcluster/sequences.hpp"
#include "hlcluster/ymon.hpp"

namespace hlc {

struct GhlSpec {
    std::vector<int> idx;
    std::vector<int> as;
    int r = 1;
    std::vector<int> rs;

    int k() const { return static_cast<int>(idx.size()); }
    int max_abs_offset() const;
    std::string str() const;
    nlohmann::json to_json() const;
    static GhlSpec from_json(const nlohmann::json& j);
    bool operator==(const GhlSpec&) const = default;
};

// name of the first violated condition, or nullopt when valid
std::optional<std::string> ghl_violation(const GhlSpec& spec);

bool validate_hl(const YMonomial& m);

// product of the shifted KR factors in the given order, no validation
YMonomial ghl_product(const GhlSpec& spec);
// same, after validation; throws std::invalid_argument naming the clause
YMonomial ghl_monomial(const GhlSpec& spec);

YMonomial closed_x_alpha(const HeightFunction& xi, int i, int j, int r);

// first t factors of the generalized HL monomial
YMonomial omega_tilde(const GhlSpec& spec, int t);
// factors with node <= x
YMonomial omega_tilde_upto(const GhlSpec& spec, int x);

// label at (j, r+s) after the S' prefix ending there
YMonomial closed_x_bracket(const GhlSpec& spec, const HeightFunction& xi, int j, int s);

struct LocalLabels {
    YMonomial f_prime, x, f_double;
};
LocalLabels frozen_and_initial_labels(const HeightFunction& xi, int i, int r);

// Q_xi with the (f', x, f'') labels at level r
TrackedSeed local_seed(const HeightFunction& xi, int r);

// Symbolic exchange relations.
enum class Sym { X, XAlpha, FPrime, FDouble };

struct Factor {
    Sym kind;
    int a;
    int b = 0;  // second index for XAlpha
    int power = 1;
    std::string str() const;
};

struct RelTerm {
    int sign = 1;
    std::vector<Factor> factors;
};

struct Relation {
    std::string name;
    std::vector<Factor> lhs;
    std::vector<RelTerm> rhs;
    std::string str() const;
    nlohmann::json to_json() const;
};

// Exchange relation for x_j x[alpha_{i,j}], i <= j, in the form read off
// the arrows at j of Q_xi[i, j-1].
Relation exchange_relation(const HeightFunction& xi, int i, int j);
// The same relation with the bracket printed literally (see the notes).
Relation exchange_relation_literal(const HeightFunction& xi, int i, int j);
// x[alpha_{i,j+1}] = x[alpha_{i,j}] x[alpha_{j+1,j+1}] - ...; needs
// j_diamond = j and (j+1)_diamond = j+1
Relation recursion_relation(const HeightFunction& xi, int i, int j);
bool recursion_guard(const HeightFunction& xi, int i, int j);

std::vector<Relation> exchange_predictions(const HeightFunction& xi, int i, int j, int r);

// highest monomial of a factor at level r
YMonomial factor_monomial(const HeightFunction& xi, const Factor& f, int r);

// Everything needed to run S' for a spec.
struct GhlRun {
    GhlSpec spec;
    HeightFunction xi;
    int ell;
    TrackedSeed seed;  // after S_m and normalization, before S'
    int shift;
    int normalization_steps;
    std::vector<std::string> seq;
    std::string final_vertex;
};

GhlRun prepare_ghl(const GhlSpec& spec, std::optional<int> ell = std::nullopt);

}  // namespace hlc

// Height functions on the A_n Dynkin diagram and their combinatorics.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hlcluster/ymon.hpp"

namespace hlc {

class HeightFunction {
public:
    explicit HeightFunction(std::vector<int> values);

    int n() const { return static_cast<int>(v_.size()); }
    const std::vector<int>& values() const { return v_; }

    // xi(i) for 0 <= i <= n+1, with xi(0)=xi(2) and xi(n+1)=xi(n-1).
    // For n = 1 both extensions are xi(1)+1.
    int operator()(int i) const;

    // xi(j) < xi(j+1) on the extended function
    bool ascending(int j) const { return (*this)(j) + 1 == (*this)(j + 1); }

    int diamond(int i) const;
    int bullet(int j) const;
    // d_j = [j_diamond == j], zero outside [1,n]
    int d(int j) const;

    std::string str() const;
    static HeightFunction parse(std::string_view csv);
    nlohmann::json to_json() const { return v_; }
    static HeightFunction from_json(const nlohmann::json& j);

    bool operator==(const HeightFunction&) const = default;

private:
    std::vector<int> v_;
};

struct Derived {
    int diamond;
    int bullet;
    int d;
};

Derived derived(const HeightFunction& xi, int j);

// every height function on n nodes with xi(1) = 0, in a fixed order
std::vector<HeightFunction> all_height_functions(int n);

// j-hat. When neither special case applies and no witness exists in
// [i1, j-1] this returns i1; hat_strict throws instead.
int hat(const HeightFunction& xi, int j, int i1);
int hat_strict(const HeightFunction& xi, int j, int i1);

YMonomial omega(const HeightFunction& xi, int i, int j);

class TProfile {
public:
    TProfile(std::vector<int> idx, std::vector<int> rs);

    const std::vector<int>& idx() const { return idx_; }
    const std::vector<int>& rs() const { return rs_; }
    int first() const { return idx_.front(); }
    int last() const { return idx_.back(); }
    // t_p on [i_1, i_k]; r_k at the tail column i_k+1; 0 elsewhere
    int at(int p) const;
    const std::map<int, int>& columns() const { return t_; }

private:
    std::vector<int> idx_, rs_;
    std::map<int, int> t_;
};

TProfile t_profile(const std::vector<int>& idx, const std::vector<int>& rs);

// p^x(t) = [t >= x], q^x(t) = [t <= x]
inline int step_p(int x, int t) { return t >= x ? 1 : 0; }
inline int step_q(int x, int t) { return t <= x ? 1 : 0; }

// HL monomial conditions on an ordered factor list (i_s, a_s)
bool hl_sequence_ok(const std::vector<int>& idx, const std::vector<int>& as);

// Height function realizing (Y_{i1,a1}...Y_{ik,ak})_r as x[alpha_{i1,j}]
// on n = i_k + 2 nodes.
HeightFunction build_from_hlr(const std::vector<int>& idx, const std::vector<int>& as);

}  // namespace hlc

// The quiver Q_xi, the mutation sequences on the grid seed, normalization
// and the local seed around row r.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "hlcluster/gridseeds.hpp"
#include "hlcluster/heights.hpp"
#include "hlcluster/quiver.hpp"

namespace hlc {

enum class Layer { Prime, Mid, DoublePrime };

// "i'", "i", "i''"
std::string qxi_vertex(int i, Layer layer);

IcedQuiver build_q_xi(const HeightFunction& xi);

// mutate build_q_xi at i, i+1, ..., j (unchanged when j < i)
IcedQuiver q_xi_interval(const HeightFunction& xi, int i, int j);

int p_for(const HeightFunction& xi, int r, int ell);
std::vector<std::string> seq_S(const HeightFunction& xi, int r, int n, int ell);
std::vector<std::string> seq_S_rows(int n, int ell, int p);

// nodes with d = 0, in increasing order
std::vector<int> zero_d_nodes(const HeightFunction& xi);
// t is 1-based into zero_d_nodes
std::vector<std::string> seq_S_t(const HeightFunction& xi, int r, int t, int ell);

enum class ScanOrder { RowMajor, RowMajorReversed };

// Repeatedly mutate the first vertex (rows [1,r-2] and [r+2,ell]) whose
// incident arrows are exactly in:(u,w-1),(u,w+1) out:(u-1,w),(u+1,w).
// Returns the number of mutations performed.
int normalize_uv(TrackedSeed& s, int n, int ell, int r, ScanOrder order = ScanOrder::RowMajor);

struct SmPrime {
    TrackedSeed seed;
    int ell;
    int normalization_steps;
};

// S, then S_s, ..., S_1, then normalization
SmPrime to_Sm_prime(TrackedSeed s, const HeightFunction& xi, int r, int ell,
                    ScanOrder order = ScanOrder::RowMajor);

struct LocalSeed {
    IcedQuiver quiver;
    std::map<std::string, YMonomial> labels;
};

// freeze rows r-1 and r+1, keep rows r-1..r+1, rename to i', i, i''
LocalSeed extract_local(const TrackedSeed& s, int n, int r);

// the spectral shift c with label(1,r) = kr(1, xi(2), r) shifted by c
std::optional<int> seed_shift(const TrackedSeed& s, const HeightFunction& xi, int r);

// S^{t_u} columns followed by the optional tail column
std::vector<std::string> seq_S_prime(const HeightFunction& xi, const std::vector<int>& idx,
                                     const std::vector<int>& as, const std::vector<int>& rs, int r);
bool s_prime_has_tail(const HeightFunction& xi, const std::vector<int>& idx, const std::vector<int>& as,
                      const std::vector<int>& rs);

// quiver after mutating the strict prefix of seq before vertex (j, r+s)
IcedQuiver q_prefix(const TrackedSeed& normalized, const std::vector<std::string>& seq, int j, int r, int s);

}  // namespace hlc

// Seeds whose labels are dominant monomials, mutated by the maximum rule.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hlcluster/quiver.hpp"
#include "hlcluster/ymon.hpp"

namespace hlc {

std::string grid_vertex(int i, int k);
// (i,k) from "(i,k)"; throws on anything else
std::pair<int, int> parse_grid_vertex(const std::string& v);

enum class Side { In, Out };

struct ExchangeRecord {
    std::string vertex;
    YMonomial old_label;
    YMonomial p_in;
    YMonomial p_out;
    Side chosen = Side::In;
    YMonomial new_label;

    const YMonomial& max_side() const { return chosen == Side::In ? p_in : p_out; }
    const YMonomial& min_side() const { return chosen == Side::In ? p_out : p_in; }
    nlohmann::json to_json() const;
};

// Raised when the two exchange products are incomparable or the quotient
// is not dominant. Carries the offending record.
class ExchangeError : public std::runtime_error {
public:
    ExchangeError(const std::string& what, ExchangeRecord rec)
        : std::runtime_error(what), record_(std::move(rec)) {}
    const ExchangeRecord& record() const { return record_; }

private:
    ExchangeRecord record_;
};

class TrackedSeed {
public:
    TrackedSeed(IcedQuiver q, std::vector<YMonomial> labels, int rank);

    const IcedQuiver& quiver() const { return q_; }
    int rank() const { return cartan_.rank(); }
    const Cartan& cartan() const { return cartan_; }
    const YMonomial& label(const std::string& v) const { return labels_.at(q_.index_of(v)); }
    const std::vector<YMonomial>& labels() const { return labels_; }
    const std::vector<ExchangeRecord>& log() const { return log_; }

    const ExchangeRecord& mutate_in_place(const std::string& v);

    nlohmann::json to_json() const;

private:
    IcedQuiver q_;
    std::vector<YMonomial> labels_;
    std::vector<ExchangeRecord> log_;
    Cartan cartan_;
};

// Q_ell on I x [1, ell+1] with KR labels; row ell+1 frozen
TrackedSeed initial_seed(int n, int ell);

std::pair<TrackedSeed, ExchangeRecord> mutate_tracked(TrackedSeed s, const std::string& v);
TrackedSeed run(TrackedSeed s, const std::vector<std::string>& seq);
void run_in_place(TrackedSeed& s, const std::vector<std::string>& seq);

// exchange relation is a T-system relation up to a common cofactor
bool t_system_conform(const ExchangeRecord& rec, int n);

// r + n + max|r_j| + 2, unless HLCLUSTER_ELL_POLICY overrides it: an
// integer fixes ell, "+k" replaces the trailing 2 by k.
int default_ell(int r, int n, int max_abs_rj = 0);

}  // namespace hlc

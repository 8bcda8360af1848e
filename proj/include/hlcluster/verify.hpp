// Batch verification drivers. Each suite returns a report; a failure
// always carries enough JSON to reproduce it.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlcluster/heights.hpp"
#include "hlcluster/hl.hpp"

namespace hlc {

struct Failure {
    std::string what;
    nlohmann::json artifact;
};

struct VerificationReport {
    static constexpr std::size_t kStoredFailures = 25;

    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::int64_t checks = 0;
    std::int64_t failure_count = 0;
    std::vector<Failure> failures;  // first kStoredFailures only
    std::map<std::string, std::int64_t> tallies;

    explicit VerificationReport(std::string name = {}, nlohmann::json p = nlohmann::json::object())
        : suite(std::move(name)), params(std::move(p)) {}

    bool passed() const { return failure_count == 0 && checks > 0; }
    void pass() { ++checks; }
    // counts a failed check
    void fail(std::string what, nlohmann::json artifact);
    // counts a check; on failure stores the artifact
    template <class ArtifactFn>
    bool expect(bool ok, const std::string& what, ArtifactFn&& artifact) {
        if (ok)
            ++checks;
        else
            fail(what, artifact());
        return ok;
    }
    void merge(const VerificationReport& o);
    nlohmann::json to_json() const;
    std::string summary() const;
};

// Arrows at j of Q_xi[i, j-1] as the arrow lemma states them
std::map<std::string, int> lemma_arrows(const HeightFunction& xi, int i, int j);

VerificationReport verify_lemma_arrows(const HeightFunction& xi);

// local seed mutations against the closed form and the exchange relations
VerificationReport verify_highest_weights(const HeightFunction& xi, int r);

// grid seed after S_m and normalization against Q_xi and its local labels;
// S-phase records must be T-system relations
VerificationReport verify_local_seed(const HeightFunction& xi, int r, std::optional<int> ell = std::nullopt);

// HL_r monomial (Y_{i1,a1}...Y_{ik,ak})_r built from its height function
VerificationReport verify_hlr(const std::vector<int>& idx, const std::vector<int>& as, int r);

VerificationReport verify_ghl(const GhlSpec& spec, std::optional<int> ell = std::nullopt);
VerificationReport verify_appendix(const GhlSpec& spec, std::optional<int> ell = std::nullopt);

// exact polynomial identities and closure count; meant for n <= 5
VerificationReport verify_oracle_suite(const HeightFunction& xi);

// Seeded spec generators. Offsets range over [max(-r, -rjmax), rjmax] and
// are zeroed where the spec conditions demand it.
GhlSpec random_ghl_spec(std::mt19937_64& rng, int kmax = 3, int rmax = 3, int rjmax = 2);
GhlSpec random_hl_spec(std::mt19937_64& rng, int kmax = 4, int rmax = 3);

}  // namespace hlc

// Single mutation session behind the serve endpoint: one current seed,
// an undo stack and the exchange log.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hlcluster/gridseeds.hpp"
#include "hlcluster/oracle.hpp"

namespace hlc {

class Session {
public:
    // {"xi": ...} oracle seed on Q_xi; {"xi": ..., "r": r} tracked local
    // seed; {"n": n, "ell"?: ell, "r"?: r} grid seed. xi is a list or "a,b,c".
    nlohmann::json load(const nlohmann::json& request);
    nlohmann::json seed() const;
    // returns {"seed", "record"}; ExchangeError leaves the session unchanged
    nlohmann::json mutate(const std::string& vertex);
    nlohmann::json undo();
    nlohmann::json log() const { return log_; }
    std::size_t depth() const { return history_.size(); }

private:
    using State = std::variant<std::monostate, TrackedSeed, LaurentSeed>;
    State current_;
    std::vector<State> history_;
    nlohmann::json log_ = nlohmann::json::array();
};

}  // namespace hlc

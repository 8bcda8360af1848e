#include "hlcluster/session.hpp"

#include <stdexcept>

#include "hlcluster/hl.hpp"
#include "hlcluster/sequences.hpp"

namespace hlc {

namespace {

HeightFunction xi_from(const nlohmann::json& j) {
    if (j.is_string()) return HeightFunction::parse(j.get<std::string>());
    return HeightFunction::from_json(j);
}

}  // namespace

nlohmann::json Session::load(const nlohmann::json& req) {
    if (!req.is_object()) throw std::invalid_argument("load: expected a JSON object");
    if (req.contains("xi")) {
        HeightFunction xi = xi_from(req.at("xi"));
        if (req.contains("r"))
            current_ = local_seed(xi, req.at("r").get<int>());
        else
            current_ = init_oracle(xi);
    } else if (req.contains("n")) {
        const int n = req.at("n").get<int>();
        const int r = req.value("r", 1);
        const int ell = req.contains("ell") ? req.at("ell").get<int>() : default_ell(r, n);
        current_ = initial_seed(n, ell);
    } else {
        throw std::invalid_argument("load: need xi or n");
    }
    history_.clear();
    log_ = nlohmann::json::array();
    return seed();
}

nlohmann::json Session::seed() const {
    return std::visit(
        [](const auto& s) -> nlohmann::json {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, std::monostate>)
                return {{"kind", "none"}};
            else
                return s.to_json();
        },
        current_);
}

nlohmann::json Session::mutate(const std::string& v) {
    State next = current_;
    nlohmann::json rec;
    if (auto* t = std::get_if<TrackedSeed>(&next)) {
        rec = t->mutate_in_place(v).to_json();
    } else if (auto* o = std::get_if<LaurentSeed>(&next)) {
        const auto names = oracle_variable_names(o->rank());
        rec = {{"vertex", v}, {"old_label", o->label(v).str(names)}};
        o->mutate_in_place(v);
        rec["new_label"] = o->label(v).str(names);
    } else {
        throw std::invalid_argument("mutate: no seed loaded");
    }
    history_.push_back(std::move(current_));
    current_ = std::move(next);
    log_.push_back(rec);
    return {{"seed", seed()}, {"record", rec}};
}

nlohmann::json Session::undo() {
    if (history_.empty()) throw std::invalid_argument("undo: nothing to undo");
    current_ = std::move(history_.back());
    history_.pop_back();
    log_.erase(log_.end() - 1);
    return seed();
}

}  // namespace hlc

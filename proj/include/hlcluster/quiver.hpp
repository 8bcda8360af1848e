// Iced quivers as skew-symmetric matrices over named vertices.
#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace hlc {

struct Arrow {
    std::string from, to;
    int mult;
    bool operator==(const Arrow&) const = default;
    auto operator<=>(const Arrow&) const = default;
};

enum class Direction { In, Out };

struct Incidence {
    std::string neighbor;
    int multiplicity;
    Direction dir;
    bool operator==(const Incidence&) const = default;
};

class IcedQuiver {
public:
    IcedQuiver() = default;

    int add_vertex(const std::string& name, bool frozen = false);
    void add_arrows(const std::string& u, const std::string& v, int m = 1);
    // set b_{uv} = m, refusing to overwrite a different nonzero value
    void set_arrows(const std::string& u, const std::string& v, int m = 1);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertices() const { return names_; }
    bool contains(const std::string& v) const { return index_.count(v) != 0; }
    int index_of(const std::string& v) const;
    const std::string& name(int k) const { return names_.at(k); }
    bool is_frozen(int k) const { return frozen_.at(k) != 0; }
    bool is_frozen(const std::string& v) const { return is_frozen(index_of(v)); }
    std::vector<std::string> frozen_vertices() const;

    int b(int u, int v) const { return b_[static_cast<std::size_t>(u) * names_.size() + v]; }
    int b(const std::string& u, const std::string& v) const { return b(index_of(u), index_of(v)); }

    IcedQuiver mutate(const std::string& k) const;
    void mutate_in_place(int k);
    void mutate_in_place(const std::string& k) { mutate_in_place(index_of(k)); }

    std::vector<Incidence> arrows_at(const std::string& v) const;
    // neighbor -> b_{v,neighbor}; positive means v -> neighbor
    std::map<std::string, int> incidence(const std::string& v) const;
    std::vector<Arrow> arrows() const;

    IcedQuiver freeze_restrict(const std::set<std::string>& freeze, const std::vector<std::string>& keep) const;

    nlohmann::json to_json() const;
    static IcedQuiver from_json(const nlohmann::json& j);
    std::string to_dot() const;

    // same vertex set, frozen set and matrix, independent of vertex order
    bool operator==(const IcedQuiver& o) const;

private:
    int& at(int u, int v) { return b_[static_cast<std::size_t>(u) * names_.size() + v]; }

    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<char> frozen_;
    std::vector<int> b_;
};

}  // namespace hlc

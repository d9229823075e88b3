#pragma once

#include <json.hpp>

#include "klrtab/crystal.hpp"
#include "klrtab/tableaux.hpp"

namespace klrtab {

inline void to_json(nlohmann::json& j, const YoungDiagram& d) { j = d.parts(); }
inline void from_json(const nlohmann::json& j, YoungDiagram& d) {
    d = YoungDiagram(j.get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const ColumnTableau& t) {
    j = nlohmann::json{{"n", t.n}, {"entries", t.entries}};
}
inline void from_json(const nlohmann::json& j, ColumnTableau& t) {
    t = ColumnTableau(j.at("n").get<int>(), j.at("entries").get<std::vector<int>>());
}

inline void to_json(nlohmann::json& j, const SSYTab& t) {
    j = nlohmann::json{{"n", t.n}, {"rows", t.rows}};
}
inline void from_json(const nlohmann::json& j, SSYTab& t) {
    t = SSYTab(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

inline void to_json(nlohmann::json& j, const TensorElt& b) {
    std::vector<std::vector<int>> factors;
    for (const auto& f : b.factors) factors.push_back(f.entries);
    j = nlohmann::json{{"n", b.n}, {"factors", factors}};
}
inline void from_json(const nlohmann::json& j, TensorElt& b) {
    int n = j.at("n").get<int>();
    std::vector<ColumnTableau> factors;
    for (const auto& f : j.at("factors")) factors.emplace_back(n, f.get<std::vector<int>>());
    b = TensorElt(n, std::move(factors));
}

}  // namespace klrtab

#include "liminal/json_io.hpp"

#include <json.hpp>

namespace liminal {

using nlohmann::json;

std::string transcript_to_json(const Transcript& t) {
    json rounds = json::array();
    for (const auto& r : t.rounds) {
        json jr;
        jr["propagated"] = r.propagated;
        jr["revealed"] = r.revealed;
        if (r.burned) jr["burned"] = *r.burned;
        else jr["burned"] = nullptr;
        rounds.push_back(std::move(jr));
    }
    json j;
    j["graph_spec"] = t.graph_spec;
    j["k"] = t.k;
    if (t.strict_arsonist) j["strict_arsonist"] = true;
    j["rounds"] = std::move(rounds);
    j["length"] = t.length;
    if (t.relabel) j["relabel"] = *t.relabel;
    return j.dump(2);
}

Transcript transcript_from_json(const std::string& text) {
    json j = json::parse(text);
    Transcript t;
    t.graph_spec = j.at("graph_spec").get<std::string>();
    t.k = j.at("k").get<int>();
    t.strict_arsonist = j.value("strict_arsonist", false);
    t.length = j.at("length").get<int>();
    for (const auto& jr : j.at("rounds")) {
        RoundRecord r;
        r.propagated = jr.at("propagated").get<std::vector<int>>();
        r.revealed = jr.at("revealed").get<std::vector<int>>();
        if (!jr.at("burned").is_null()) r.burned = jr.at("burned").get<int>();
        t.rounds.push_back(std::move(r));
    }
    if (j.contains("relabel")) t.relabel = j["relabel"].get<std::vector<int>>();
    return t;
}

std::string bound_report_to_json(const BoundReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["theorem"] = e.theorem;
        je["kind"] = e.kind == BoundKind::Lower   ? "lower"
                     : e.kind == BoundKind::Upper ? "upper"
                                                  : "exact";
        je["value"] = e.value;
        je["tightened"] = e.tightened;
        je["hypotheses_ok"] = e.hypotheses_ok;
        if (e.asymptotic) je["asymptotic"] = true;
        if (!e.notes.empty()) je["notes"] = e.notes;
        entries.push_back(std::move(je));
    }
    json j;
    j["entries"] = std::move(entries);
    if (auto lo = rep.best_lower()) j["best_lower"] = *lo;
    if (auto hi = rep.best_upper()) j["best_upper"] = *hi;
    j["consistent"] = rep.consistent();
    return j.dump(2);
}

std::string reduction_meta_to_json(const ReductionGraph& rg) {
    json j;
    j["k"] = rg.k;
    j["n_vars"] = rg.n_vars;
    j["m_clauses"] = rg.m_clauses;
    j["T"] = rg.T;
    j["threshold"] = rg.threshold;
    j["padding_clauses"] = rg.padding_clauses;
    j["vertices"] = rg.graph.n();
    j["edges"] = rg.graph.edge_count();
    json roles = json::array();
    for (int v = 0; v < rg.graph.n(); ++v) roles.push_back(rg.graph.label(v));
    j["roles"] = std::move(roles);
    return j.dump(2);
}

}  // namespace liminal

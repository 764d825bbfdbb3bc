#include "crossfam/report.hpp"

namespace crossfam {

Json to_json(const SetWord& s) { return s.elements(); }

Json to_json(const SetFamily& f) {
    Json members = Json::array();
    for (const auto& s : f.members()) members.push_back(to_json(s));
    return {{"n", f.ground_n()}, {"members", std::move(members)}};
}

SetFamily family_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Word> words;
    for (const auto& m : j.at("members")) {
        const auto elems = m.get<std::vector<int>>();
        words.push_back(SetWord::of(std::span<const int>(elems), n).bits());
    }
    return SetFamily(n, std::move(words));
}

Json to_json(const CompressionTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"i", s.pair.i},
                         {"j", s.pair.j},
                         {"potential_before", s.potential_before},
                         {"potential_after", s.potential_after}});
    return steps;
}

Json to_json(const SearchResult& r) {
    Json j;
    j["max_product"] = r.max_product;
    j["witness_a"] = to_json(r.witness_a);
    j["witness_b"] = to_json(r.witness_b);
    j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
    j["equality"] = r.equality;
    j["nodes_explored"] = r.nodes_explored;
    j["strategy"] = to_string(r.strategy);
    return j;
}

Json to_json(const KSearchResult& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    Json j;
    j["max_product"] = r.max_product;
    j["witnesses"] = std::move(witnesses);
    j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
    j["equality"] = r.equality;
    j["nodes_explored"] = r.nodes_explored;
    return j;
}

Json to_json(const SliceDecomposition& s) {
    return {{"element", s.element}, {"lower", to_json(s.f0)}, {"upper", to_json(s.f1)}};
}

Json to_json(const ConflictSystem& cs) {
    Json pairs = Json::array();
    for (const auto& p : cs.pairs) pairs.push_back({{"a", to_json(p.a)}, {"b", to_json(p.b)}});
    return {{"n", cs.n},
            {"a_slices", to_json(cs.a_slices)},
            {"b_slices", to_json(cs.b_slices)},
            {"conflicts", to_json(cs.conflicts)},
            {"pairs", std::move(pairs)},
            {"k", cs.k},
            {"r", cs.r}};
}

Json to_json(const AlterationLedger& l) {
    auto opt_family = [](const std::optional<SetFamily>& f) {
        return f ? to_json(*f) : Json(nullptr);
    };
    auto opt_int = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
    Json checks = Json::object();
    for (const auto& c : l.checks) checks[c.name] = c.passed;
    Json j;
    j["n"] = l.n;
    j["k"] = l.k;
    j["r"] = l.r;
    j["ground_a"] = to_json(l.g);
    j["ground_b"] = to_json(l.h);
    j["primed"] = {{"a0", to_json(l.a0p)},
                   {"a1", to_json(l.a1p)},
                   {"b0", to_json(l.b0p)},
                   {"b1", to_json(l.b1p)}};
    j["double_primed"] = l.a0pp ? Json{{"a0", opt_family(l.a0pp)},
                                       {"a1", opt_family(l.a1pp)},
                                       {"b0", opt_family(l.b0pp)},
                                       {"b1", opt_family(l.b1pp)}}
                                : Json(nullptr);
    j["sizes"] = {{"a", l.size_a},
                  {"b", l.size_b},
                  {"a0", l.a0},
                  {"a1", l.a1},
                  {"b0", l.b0},
                  {"b1", l.b1},
                  {"a0_primed", l.a0p_size},
                  {"a1_primed", l.a1p_size},
                  {"b0_primed", l.b0p_size},
                  {"b1_primed", l.b1p_size},
                  {"a0_double_primed", opt_int(l.a0pp_size)},
                  {"a1_double_primed", opt_int(l.a1pp_size)},
                  {"b0_double_primed", opt_int(l.b0pp_size)},
                  {"b1_double_primed", opt_int(l.b1pp_size)},
                  {"g0", l.g0},
                  {"g1", l.g1},
                  {"h0", l.h0},
                  {"h1", l.h1}};
    j["checks"] = std::move(checks);
    j["all_passed"] = l.all_passed();
    return j;
}

Json to_json(const InjectionReport& r) {
    Json mapping = Json::array();
    for (const auto& [from, to] : r.mapping)
        mapping.push_back({{"from", to_json(from)}, {"to", to_json(to)}});
    Json j;
    j["mapping"] = std::move(mapping);
    j["well_defined"] = r.well_defined;
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["missed"] = r.missed ? to_json(*r.missed) : Json(nullptr);
    j["hypothesis_holds"] = r.hypothesis_holds;
    return j;
}

Json RunReport::to_json() const {
    Json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    j["wall_time_ms"] = wall_time_ms;
    j["version"] = version;
    return j;
}

RunReport RunReport::from_json(const Json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    r.version = j.at("version").get<std::string>();
    return r;
}

}  // namespace crossfam

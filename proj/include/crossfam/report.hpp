#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "crossfam/compression.hpp"
#include "crossfam/family.hpp"
#include "crossfam/hereditary.hpp"
#include "crossfam/prooflab.hpp"
#include "crossfam/search.hpp"

namespace crossfam {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Families serialize as {"n": 3, "members": [[1,2],[3],[]]} in canonical order.
Json to_json(const SetWord& s);
Json to_json(const SetFamily& f);
SetFamily family_from_json(const Json& j);

Json to_json(const CompressionTrace& t);
Json to_json(const SearchResult& r);
Json to_json(const KSearchResult& r);
Json to_json(const SliceDecomposition& s);
Json to_json(const ConflictSystem& cs);
Json to_json(const AlterationLedger& l);
Json to_json(const InjectionReport& r);

/// One CLI invocation: {command, parameters, results, wall_time_ms, version}.
struct RunReport {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    std::int64_t wall_time_ms = 0;
    std::string version = kVersion;

    Json to_json() const;
    static RunReport from_json(const Json& j);
};

}  // namespace crossfam

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquelab/absorption.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/constructions.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/factor.hpp"
#include "cliquelab/independence.hpp"
#include "cliquelab/sweep.hpp"
#include "cliquelab/weighted.hpp"

namespace cliquelab::capi {

using Json = nlohmann::ordered_json;

// Malformed or missing request fields.
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Read-only view over a request object with typed, defaulted lookups.
class Request {
public:
    explicit Request(const char* text);
    explicit Request(Json body) : body_(std::move(body)) {}

    bool has(const char* key) const;
    int integer(const char* key, std::optional<int> fallback = std::nullopt) const;
    std::uint64_t unsigned_integer(const char* key, std::optional<std::uint64_t> fallback = std::nullopt) const;
    double real(const char* key, std::optional<double> fallback = std::nullopt) const;
    bool boolean(const char* key, bool fallback) const;
    std::string text(const char* key, std::optional<std::string> fallback = std::nullopt) const;
    std::vector<int> integers(const char* key, std::optional<std::vector<int>> fallback = std::nullopt) const;
    std::vector<double> reals(const char* key, std::optional<std::vector<double>> fallback = std::nullopt) const;
    std::vector<std::vector<int>> integer_rows(const char* key) const;
    Number number(const char* key) const;
    Budget budget() const;
    const Json& raw(const char* key) const;
    const Json& body() const { return body_; }

private:
    const Json& at(const char* key) const;
    Json body_;
};

Json stats_json(const SearchStats& s);
Json to_json(const CliqueList& list);
Json to_json(const AlphaResult& a);
Json to_json(const AlphaThreshold& a);
Json to_json(const Tiling& t);
Json to_json(const FactorCertificate& c);
Json to_json(const LabeledInstance& inst);
Json to_json(const ConstructionSpec& spec);
Json to_json(const Census& c);
Json to_json(const TransferralResult& t, const IntegerLattice& lattice);
Json to_json(const ReachableFamily& f);
Json to_json(const AbsorbingCheck& c);
Json to_json(const InequalityResult& r);
Json to_json(const ConditionEResult& r);
Json to_json(const PartitionSearchResult& r);
Json to_json(const BadSetEstimate& r);

WeightedGraph weighted_graph(const Request& req);
SweepConfig sweep_config(const Request& req);
Json to_json(const std::vector<ReportRow>& rows);

} // namespace cliquelab::capi

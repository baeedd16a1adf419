#pragma once

#include <string>

#include <json.hpp>

#include "valmon/monoid.hpp"
#include "valmon/sequences.hpp"
#include "valmon/series.hpp"

namespace valmon {

/// {"prefix":[{"c":"1","e":"1/2"},...], "tail":{"kind":"geometric","base":2} | {"kind":"none"}}
SimpleSeriesSpec spec_from_json(const nlohmann::json& j);
/// Callback tails have no JSON form; throws InvalidSpec for them.
nlohmann::json spec_to_json(const SimpleSeriesSpec& spec);

/// A built-in name ("dyadic", "harmonic", "primes") or a path to a JSON file.
SimpleSeriesSpec load_spec(const std::string& name_or_path);

nlohmann::json sequences_to_json(const DerivedSequences& seqs);
nlohmann::json rep_to_json(const MonoidRep& rep);

}  // namespace valmon

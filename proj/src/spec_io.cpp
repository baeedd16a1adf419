#include "valmon/spec_io.hpp"

#include <fstream>

#include "valmon/error.hpp"

namespace valmon {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidSpec(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw InvalidSpec(e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InvalidSpec(std::string("field '") + key + "' must be a \"p/q\" string");
}

}  // namespace

SimpleSeriesSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.at("prefix").is_array())
    throw InvalidSpec("spec needs a \"prefix\" array");
  std::vector<SeriesTerm> prefix;
  for (const auto& t : j.at("prefix")) prefix.push_back({rational_field(t, "c"), rational_field(t, "e")});
  std::string kind = "none";
  if (j.contains("tail")) {
    const json& tail = j.at("tail");
    if (!tail.is_object() || !tail.contains("kind") || !tail.at("kind").is_string())
      throw InvalidSpec("tail needs a \"kind\"");
    kind = tail.at("kind").get<std::string>();
    if (kind == "geometric") {
      if (!tail.contains("base") || !tail.at("base").is_number_unsigned())
        throw InvalidSpec("geometric tail needs an integer \"base\"");
      return SimpleSeriesSpec::geometric(std::move(prefix), tail.at("base").get<unsigned>());
    }
  }
  if (kind != "none") throw InvalidSpec("unknown tail kind '" + kind + "'");
  return SimpleSeriesSpec::finite(std::move(prefix));
}

json spec_to_json(const SimpleSeriesSpec& spec) {
  json prefix = json::array();
  for (const auto& t : spec.prefix()) prefix.push_back({{"c", to_string(t.coeff)}, {"e", to_string(t.exponent)}});
  json tail;
  switch (spec.tail_kind()) {
    case TailKind::none:
      tail = {{"kind", "none"}};
      break;
    case TailKind::geometric:
      tail = {{"kind", "geometric"}, {"base", spec.geometric_base()}};
      break;
    case TailKind::callback:
      throw InvalidSpec("callback tails cannot be serialized");
  }
  return {{"prefix", prefix}, {"tail", tail}};
}

SimpleSeriesSpec load_spec(const std::string& name_or_path) {
  if (name_or_path == "dyadic") return dyadic_spec();
  if (name_or_path == "harmonic") return harmonic_spec();
  if (name_or_path == "primes") return primes_spec();
  std::ifstream in(name_or_path);
  if (!in) throw InvalidSpec("cannot open spec file '" + name_or_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("malformed spec JSON: ") + e.what());
  }
  return spec_from_json(j);
}

namespace {

template <class T>
json strings(const std::vector<T>& values, std::size_t from) {
  json out = json::array();
  for (std::size_t i = from; i < values.size(); ++i) out.push_back(to_string(values[i]));
  return out;
}

}  // namespace

json sequences_to_json(const DerivedSequences& seqs) {
  json l = json::array();
  for (auto v : seqs.l) l.push_back(v);
  return {{"depth", seqs.depth}, {"e", strings(seqs.e, 1)}, {"r", strings(seqs.r, 0)},
          {"l", l},              {"u", strings(seqs.u, 0)}, {"rho", strings(seqs.rho, 1)},
          {"s", strings(seqs.s, 1)}, {"c", strings(seqs.c, 1)}};
}

json rep_to_json(const MonoidRep& rep) {
  json digits = json::array();
  for (auto d : rep.digits) digits.push_back(d);
  return {{"n", to_string(rep.n)}, {"digits", digits}};
}

}  // namespace valmon

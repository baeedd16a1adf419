// valmon: command-line front end for the valmon library.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "valmon/error.hpp"
#include "valmon/groebner.hpp"
#include "valmon/spec_io.hpp"

namespace {

using nlohmann::json;
using namespace valmon;

enum class Format { json, text };

struct Config {
  std::string spec = "dyadic";
  std::size_t depth = 8;
  std::size_t max_rounds = GbLimits{}.max_rounds;
  std::size_t step_limit = GbLimits{}.step_limit;
  Format output = Format::json;
  bool output_set = false;
};

// Thrown for malformed command arguments; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitParse = 4;

std::vector<BivarPoly> parse_list(const std::string& text) {
  std::vector<BivarPoly> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_poly(item));
  if (out.empty()) throw UsageError("empty polynomial list");
  return out;
}

Integer parse_natural(const std::string& text) {
  Rational q = parse_rational(text);
  if (!is_integer(q) || q < 0) throw UsageError("expected a natural number, got '" + text + "'");
  return q.get_num();
}

json poly_list(const std::vector<BivarPoly>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_string(p));
  return out;
}

std::string digits_text(const std::vector<unsigned long>& digits) {
  std::string out = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) out += (i ? "," : "") + std::to_string(digits[i]);
  return out + ")";
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.output == Format::json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

class Cli {
 public:
  explicit Cli(Config& cfg) : cfg_(cfg) {}

  Valuation valuation() const { return Valuation(MonoidContext(load_spec(cfg_.spec), cfg_.depth)); }
  MonoidContext context() const { return MonoidContext(load_spec(cfg_.spec), cfg_.depth); }

  int sequences() const {
    const MonoidContext ctx = context();
    const json j = sequences_to_json(ctx.seqs());
    std::ostringstream text;
    for (const char* key : {"e", "r", "l", "u", "rho", "s", "c"}) {
      text << key << ":";
      for (const auto& v : j[key]) text << " " << (v.is_string() ? v.get<std::string>() : v.dump());
      text << "\n";
    }
    emit(cfg_, j, text.str());
    return 0;
  }

  int member(const std::string& m_text) const {
    const MonoidContext ctx = context();
    const Rational m = parse_rational(m_text);
    auto rep = decompose(m, ctx);
    json j{{"in_monoid", rep.has_value()}};
    std::string text = rep ? "yes\n" : "no\n";
    if (rep) {
      j.update(rep_to_json(*rep));
      text = "yes n=" + to_string(rep->n) + " digits=" + digits_text(rep->digits) + "\n";
    }
    emit(cfg_, j, text);
    return 0;
  }

  int decompose_cmd(const std::string& m_text) const {
    const MonoidContext ctx = context();
    const Rational m = parse_rational(m_text);
    auto rep = decompose(m, ctx);
    if (!rep) throw NotInMonoid(to_string(m) + " is not in the value monoid");
    json j = rep_to_json(*rep);
    j["value"] = to_string(rep_value(*rep, ctx));
    std::string text = to_string(rep->n);
    for (std::size_t i = 0; i < rep->digits.size(); ++i)
      if (rep->digits[i]) text += " + " + std::to_string(rep->digits[i]) + "*rho_" + std::to_string(i + 1);
    emit(cfg_, j, text + "\n");
    return 0;
  }

  int lambda(const std::string& d_text) const {
    const MonoidContext ctx = context();
    auto [value, rep] = lambda_d(parse_natural(d_text), ctx);
    json j{{"d", d_text}, {"lambda", to_string(value)}};
    j.update(rep_to_json(rep));
    emit(cfg_, j, to_string(value) + "\n");
    return 0;
  }

  int preimage_cmd(const std::string& m_text) const {
    const Valuation val = valuation();
    const Preimage p = preimage_with_lc(parse_rational(m_text), val);
    // Plain polynomial text unless JSON is requested explicitly.
    if (!cfg_.output_set || cfg_.output == Format::text) {
      std::cout << to_string(p.poly) << "\n";
    } else {
      std::cout << json{{"poly", to_string(p.poly)}, {"lc", to_string(p.lc)}}.dump() << "\n";
    }
    return 0;
  }

  int leadexp(const std::string& f_text) const {
    const BivarPoly f = parse_poly(f_text);
    const LeadingData lead = eval_leading(f, load_spec(cfg_.spec));
    emit(cfg_, json{{"le", to_string(lead.le)}, {"lc", to_string(lead.lc)}},
         "le=" + to_string(lead.le) + " lc=" + to_string(lead.lc) + "\n");
    return 0;
  }

  int divide(const std::string& f_text, const std::string& g_text) const {
    const Valuation val = valuation();
    auto h = approx_quotient(parse_poly(f_text), parse_poly(g_text), val);
    emit(cfg_, json{{"quotient", h ? json(to_string(*h)) : json(nullptr)}},
         (h ? to_string(*h) : std::string("none")) + "\n");
    return 0;
  }

  int reduce_cmd(const std::string& basis_text, const std::string& f_text) const {
    const Valuation val = valuation();
    const auto basis = parse_list(basis_text);
    const ReductionTrace trace = reduce(parse_poly(f_text), basis, val, cfg_.step_limit);
    json steps = json::array();
    std::string text;
    for (const auto& s : trace.steps) {
      steps.push_back({{"divisor", s.divisor}, {"quotient", to_string(s.quotient)}, {"value", to_string(s.value)}});
      text += "value " + to_string(s.value) + ": subtract g" + std::to_string(s.divisor + 1) + " * (" +
              to_string(s.quotient) + ")\n";
    }
    text += "remainder: " + to_string(trace.remainder) + "\n";
    emit(cfg_, json{{"steps", steps}, {"remainder", to_string(trace.remainder)}}, text);
    return 0;
  }

  int syzygy(const std::string& f_text, const std::string& g_text) const {
    const Valuation val = valuation();
    json family = json::array();
    std::string text;
    for (const auto& el : syzygy_family(parse_poly(f_text), parse_poly(g_text), val)) {
      family.push_back({{"value", to_string(el.value)},
                        {"a", to_string(el.a)},
                        {"b", to_string(el.b)},
                        {"spoly", to_string(el.spoly)}});
      text += to_string(el.value) + ": (" + to_string(el.a) + ")*f - (" + to_string(el.b) + ")*g = " +
              to_string(el.spoly) + "\n";
    }
    emit(cfg_, family, text);
    return 0;
  }

  int gb(const std::string& gens_text) const {
    const Valuation val = valuation();
    const GbResult result = buchberger(parse_list(gens_text), val, {cfg_.max_rounds, cfg_.step_limit});
    std::string text;
    for (const auto& g : result.basis) text += to_string(g) + "\n";
    text += std::string(result.complete ? "complete" : "incomplete") + " after " + std::to_string(result.iterations) +
            " rounds\n";
    emit(cfg_, json{{"basis", poly_list(result.basis)}, {"complete", result.complete}, {"iterations", result.iterations}},
         text);
    return result.complete ? 0 : kExitIncomplete;
  }

  int selfcheck() const {
    const MonoidContext ctx = context();
    const SelfCheckReport report = self_check(ctx.seqs());
    std::string text;
    for (const auto& id : report.identities) text += "ok " + id + "\n";
    emit(cfg_, json{{"identities", report.identities}, {"checks", report.checks}, {"ok", true}}, text);
    return 0;
  }

 private:
  Config& cfg_;
};

int run(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Valuation-based Groebner bases over Q[x, y]"};
  app.require_subcommand(1);
  app.add_option("--spec", cfg.spec, "built-in series (dyadic, harmonic, primes) or spec JSON file");
  app.add_option("--depth", cfg.depth, "sequence derivation depth")->check(CLI::PositiveNumber);
  app.add_option("--max-rounds", cfg.max_rounds, "round cap for gb")->check(CLI::PositiveNumber);
  app.add_option("--step-limit", cfg.step_limit, "step cap for reductions")->check(CLI::PositiveNumber);
  std::string output;
  app.add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));

  Cli cli(cfg);
  std::function<int()> action;
  std::string a, b, basis;

  auto one = [&](const char* name, const char* help, const char* arg, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(arg, a)->required();
    sub->callback([&, fn] { action = [&, fn] { return (cli.*fn)(a); }; });
    return sub;
  };
  auto two = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("f", a)->required();
    sub->add_option("g", b)->required();
    sub->callback([&, fn] { action = [&, fn] { return (cli.*fn)(a, b); }; });
  };

  app.add_subcommand("sequences", "print the derived sequences")->callback([&] {
    action = [&] { return cli.sequences(); };
  });
  one("member", "value monoid membership", "m", &Cli::member);
  one("decompose", "canonical representation n + sum d_j rho_j", "m", &Cli::decompose_cmd);
  one("lambda", "least value of a polynomial of y-degree d", "d", &Cli::lambda);
  one("preimage", "polynomial x^n prod p_j^d_j with value m", "m", &Cli::preimage_cmd);
  one("leadexp", "leading exponent and coefficient of f(t, z)", "f", &Cli::leadexp);
  two("divide", "approximate quotient of f by g", &Cli::divide);
  two("syzygy", "syzygy family of f and g", &Cli::syzygy);
  auto* red = app.add_subcommand("reduce", "reduce f over a basis");
  red->add_option("--basis", basis, "comma-separated polynomials")->required();
  red->add_option("f", a)->required();
  red->callback([&] { action = [&] { return cli.reduce_cmd(basis, a); }; });
  one("gb", "basis construction from comma-separated generators", "gens", &Cli::gb);
  app.add_subcommand("selfcheck", "verify the sequence identities")->callback([&] {
    action = [&] { return cli.selfcheck(); };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (!output.empty()) {
    cfg.output = output == "text" ? Format::text : Format::json;
    cfg.output_set = true;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const IncompleteBasis& e) {
    std::cerr << e.what() << "\n";
    return kExitIncomplete;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

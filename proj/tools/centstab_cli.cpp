#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "centstab/errors.hpp"
#include "centstab/json_io.hpp"
#include "centstab/specht.hpp"
#include "centstab/stability.hpp"
#include "centstab/verify.hpp"

namespace {

using namespace centstab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

constexpr int kHardMaxN = 8;
constexpr int kHardMaxK = 6;
constexpr int kHardMaxM = 10;

struct GlobalOptions {
  std::string field_spec = "Q";
  std::string format = "text";
  int max_n = 5;
  int max_k = 3;
  int max_m = 9;
  std::string filter;
};

void check_bounds(const GlobalOptions& g) {
  if (g.max_n < 0 || g.max_n > kHardMaxN || g.max_k < 0 || g.max_k > kHardMaxK ||
      g.max_m < 0 || g.max_m > kHardMaxM)
    throw ParseError("bounds exceed the configured maxima (n <= " +
                     std::to_string(kHardMaxN) + ", k <= " +
                     std::to_string(kHardMaxK) + ", M <= " +
                     std::to_string(kHardMaxM) + ")");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_specht(const std::string& mu_text, const GlobalOptions& g) {
  const Partition mu = Partition::parse(mu_text);
  const Field field = Field::parse(g.field_spec);
  if (mu.n() > kHardMaxN || tabloid_count(mu.weak()) > 3000)
    throw ParseError("partition exceeds the desk-scale bounds");
  SpechtModule s = specht_module(mu, field);

  if (g.format == "json") {
    Json basis = Json::array();
    for (const Tableau& t : standard_tableaux(mu)) basis.push_back(tableau_to_json(t));
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["type"] = "specht";
    doc["mu"] = mu.str();
    doc["n"] = s.rep->n;
    doc["dim"] = s.rep->dim;
    doc["field"] = field.spec();
    doc["basis"] = std::move(basis);
    Json gens = Json::array();
    for (const Matrix& gmat : s.rep->gens) {
      Json entries = Json::array();
      for (int r = 0; r < gmat.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < gmat.cols(); ++c) row.push_back(gmat.at(r, c).str());
        entries.push_back(std::move(row));
      }
      gens.push_back(std::move(entries));
    }
    doc["gens"] = std::move(gens);
    emit(doc);
    return kExitOk;
  }

  std::cout << "S^{" << mu.str() << "} over " << field.spec() << "\n";
  std::cout << "dim " << s.rep->dim << "\n";
  std::cout << "standard basis:\n";
  for (const std::string& label : s.rep->labels) std::cout << "  " << label << "\n";
  for (size_t i = 0; i < s.rep->gens.size(); ++i) {
    std::cout << "generator (" << i + 1 << "," << i + 2 << "):\n"
              << s.rep->gens[i].str() << "\n";
  }
  return kExitOk;
}

EquivMap seed_map(const std::string& spec, const Field& field) {
  if (spec == "trivial") return trivial_inclusion(2, field);
  if (spec == "perm") return perm_inclusion(2, field);
  if (spec.rfind("specht:", 0) == 0) {
    const Partition mu = Partition::parse(spec.substr(7));
    if (mu.n() + 1 > kHardMaxN) throw ParseError("seed partition too large");
    return stabilization_map(mu, field);
  }
  throw ParseError("seed must be trivial, perm, or specht:<mu>");
}

int cmd_stabilize(const std::string& seed_spec, int steps, const GlobalOptions& g) {
  const Field field = Field::parse(g.field_spec);
  if (steps < 1) throw ParseError("--steps must be at least 1");
  EquivMap phi = seed_map(seed_spec, field);
  const int total_terms = steps + 1;
  const int top_n = phi.source->n + total_terms - 1;
  if (top_n > kHardMaxN) throw ParseError("--steps pushes past the configured maxima");
  CoherentSequence seq = central_stabilization_sequence(phi, total_terms - 2);

  // Constituents are listed in semisimple mode; a prime field that is
  // too small for the largest symmetric group is refused.
  require_semisimple(field, seq.reps.back()->n);

  if (g.format == "json") {
    Json terms = Json::array();
    for (const SymRepPtr& rep : seq.reps) {
      Json term;
      term["n"] = rep->n;
      term["dim"] = rep->dim;
      Json constituents;
      for (const auto& [mu, mult] : decompose(*rep))
        constituents[mu.str()] = mult;
      term["constituents"] = std::move(constituents);
      terms.push_back(std::move(term));
    }
    Json doc;
    doc["schema"] = kSchemaTag;
    doc["type"] = "stabilize-report";
    doc["seed"] = seed_spec;
    doc["field"] = field.spec();
    doc["steps"] = steps;
    doc["terms"] = std::move(terms);
    emit(doc);
    return kExitOk;
  }

  std::cout << "central stabilization sequence from seed '" << seed_spec
            << "' over " << field.spec() << "\n";
  for (const SymRepPtr& rep : seq.reps) {
    std::cout << "n=" << rep->n << "  dim " << rep->dim << "  constituents:";
    for (const auto& [mu, mult] : decompose(*rep)) {
      std::cout << " (" << mu.str() << ")";
      if (mult > 1) std::cout << "x" << mult;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const GlobalOptions& g) {
  VerifyOptions opt;
  opt.field = Field::parse(g.field_spec);
  opt.max_n = g.max_n;
  opt.max_k = g.max_k;
  opt.max_m = g.max_m;
  opt.filter = g.filter;
  const std::vector<VerifyCase> cases = run_suite(suite, opt);

  if (g.format == "json") {
    emit(report_to_json(suite, opt, cases));
  } else {
    for (const VerifyCase& c : cases) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.id << "  ["
                << c.paper_statement << "]";
      if (!c.pass) std::cout << "  " << c.detail;
      std::cout << "\n";
    }
    size_t passed = 0;
    for (const VerifyCase& c : cases) passed += c.pass ? 1 : 0;
    std::cout << passed << "/" << cases.size() << " cases passed\n";
  }
  return all_passed(cases) ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"central stability workbench for symmetric group representations"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--field", g.field_spec, "coefficient field: Q or Fp:<prime>");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", g.max_n, "largest symmetric group index");
  app.add_option("--max-k", g.max_k, "largest induction/stabilization depth");
  app.add_option("--max-m", g.max_m, "largest chain complex group index");
  app.add_option("--filter", g.filter, "case-id glob for verify");

  std::string mu_text;
  auto* specht_cmd = app.add_subcommand("specht", "standard basis and action of S^mu");
  specht_cmd->add_option("mu", mu_text, "partition, e.g. 2,1")->required();

  std::string seed_spec = "trivial";
  int steps = 3;
  auto* stab_cmd =
      app.add_subcommand("stabilize", "iterate the central stabilization");
  stab_cmd->add_option("seed", seed_spec, "trivial | perm | specht:<mu>");
  stab_cmd->add_option("--seed-spec", seed_spec, "alternative spelling of the seed");
  stab_cmd->add_option("--steps", steps, "number of maps in the sequence");

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite,
                         "chain | resolution | restriction | duality | dimpoly | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    check_bounds(g);
    if (specht_cmd->parsed()) return cmd_specht(mu_text, g);
    if (stab_cmd->parsed()) return cmd_stabilize(seed_spec, steps, g);
    if (verify_cmd->parsed()) return cmd_verify(suite, g);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SemisimplicityError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PotentialStabilityError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvalidSubrepresentationError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

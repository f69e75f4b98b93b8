// SPDX-License-Identifier: Apache-2.0
// vkg: fundamental groupoids of finite 2-complexes and the coequalizer
// pipeline for locally sectionable covers.
//
// Subcommands:
//   pi1 FILE        direct fundamental groupoid of the base complex
//   vk FILE         full coequalizer pipeline with comparison report
//   crosscheck FILE the three-way comparison across the coproduct cover
//                   and the pullback composite
//
// Exit codes: 0 pass, 1 validation/usage error, 2 hypothesis failure,
// 3 comparison mismatch.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vkg/colimits.hpp"
#include "vkg/instance.hpp"
#include "vkg/pi1.hpp"
#include "vkg/snf.hpp"
#include "vkg/vk.hpp"
#include "vkg/weighted.hpp"

using namespace vkg;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitComparison = 3;

struct CommonOptions {
  std::string file;
  std::string mode; // "", "set", "all", "point"
  std::vector<std::string> base_set;
  std::uint64_t seed = 0;
  int trials = 0;
  std::uint64_t budget = 0; // 0 = default / environment
  int fingerprint_order = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_trials) {
  cmd->add_option("file", opts.file, "instance document (JSON)")->required();
  cmd->add_option("--mode", opts.mode, "base-set mode: set, all, or point")
      ->check(CLI::IsMember({"set", "all", "point"}));
  cmd->add_option("--base-set", opts.base_set,
                  "base vertices (comma separated); overrides the document")
      ->delimiter(',');
  cmd->add_option("--budget", opts.budget, "relator-evaluation budget for hom searches");
  cmd->add_option("--fingerprint-order", opts.fingerprint_order,
                  "largest finite-group order in the fingerprint catalog (<= 12)");
  if (with_trials) {
    cmd->add_option("--seed", opts.seed, "seed for the randomized spot checks");
    cmd->add_option("--trials", opts.trials,
                    "randomized independence spot checks to run after the pipeline");
  }
}

Budget make_budget(const CommonOptions& opts) {
  Budget b;
  if (const char* env = std::getenv("VKG_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) b.hom_budget = parsed;
  }
  if (opts.budget > 0) b.hom_budget = opts.budget;
  if (opts.fingerprint_order > 0) b.fingerprint_order = opts.fingerprint_order;
  return b;
}

BaseSet resolve_base(const InstanceDocument& doc, const CommonOptions& opts) {
  std::string mode = opts.mode;
  // "--base-set all" is accepted as a spelling of the all-vertices mode
  // unless a vertex is literally named "all"
  if (mode.empty() && opts.base_set.size() == 1 && opts.base_set[0] == "all" &&
      !doc.complex.has_vertex("all"))
    mode = "all";
  if (mode.empty()) {
    if (!opts.base_set.empty())
      mode = opts.base_set.size() == 1 ? "point" : "set";
    else
      switch (doc.base_kind) {
        case InstanceDocument::BaseKind::All: mode = "all"; break;
        case InstanceDocument::BaseKind::Point: mode = "point"; break;
        case InstanceDocument::BaseKind::List: mode = "set"; break;
      }
  }
  if (mode == "all") return BaseSet::all_of(doc.complex);

  std::vector<std::string> vertices = opts.base_set;
  if (vertices.empty()) vertices = doc.base_vertices;
  if (vertices.empty())
    throw ContractError("mode '" + mode + "' needs base vertices (document or --base-set)");
  if (mode == "point" && vertices.size() != 1)
    throw ContractError("mode 'point' needs exactly one base vertex");
  BaseSet s;
  for (const auto& v : vertices) {
    if (!doc.complex.has_vertex(v))
      throw ContractError("base vertex '" + v + "' is not a vertex of the complex");
    s.vertices.insert(v);
  }
  return s;
}

void print_summary(const json& j) {
  std::cout << "----- SUMMARY -----\n" << j.dump(2) << "\n";
}

json invariants_json(const AbelianInvariants& inv) {
  return json{{"free_rank", inv.free_rank}, {"torsion", inv.torsion}};
}

json fingerprint_json(const Fingerprint& fp) {
  json homs = json::object();
  for (const auto& [name, count] : fp.hom_counts) {
    if (count)
      homs[name] = *count;
    else
      homs[name] = nullptr;
  }
  return json{{"invariants", invariants_json(fp.invariants)}, {"hom_counts", std::move(homs)}};
}

int cmd_pi1(const CommonOptions& opts) {
  InstanceDocument doc = load_instance(opts.file);
  BaseSet base = resolve_base(doc, opts);

  Pi1Presentation p;
  try {
    p = pi1(doc.complex, base);
  } catch (const HypothesisError& e) {
    std::cout << "hypothesis failure: " << e.what() << "\n";
    print_summary(json{{"command", "pi1"},
                       {"status", "hypothesis-failure"},
                       {"representative", e.representative}});
    return kExitHypothesis;
  }

  std::cout << "objects (" << p.presentation.objects().size() << "):";
  for (const auto& o : p.presentation.objects()) std::cout << ' ' << o;
  std::cout << "\ngenerators (" << p.presentation.arrows().size() << "):\n";
  for (const auto& a : p.presentation.arrows())
    std::cout << "  " << a.id << ": " << a.src << " -> " << a.dst
              << "  [witness: " << to_string(p.witness.at(a.id)) << "]\n";
  std::cout << "relators (" << p.presentation.relators().size() << "):\n";
  for (const auto& r : p.presentation.relators())
    std::cout << "  " << to_string(r.lhs) << " = " << to_string(r.rhs) << "\n";

  json inv = json::object();
  for (const auto& o : p.presentation.objects()) {
    AbelianInvariants a = abelian_invariants(vertex_group(p.presentation, o));
    std::cout << "invariants at " << o << ": " << to_string(a) << "\n";
    inv[o] = invariants_json(a);
  }

  print_summary(json{{"command", "pi1"},
                     {"status", "ok"},
                     {"objects", p.presentation.objects()},
                     {"generators", p.presentation.arrows().size()},
                     {"relators", p.presentation.relators().size()},
                     {"invariants", std::move(inv)}});
  return kExitOk;
}

json hypothesis_json(const HypothesisReport& r) {
  json offenders = json::array();
  for (const auto& off : r.offenders)
    offenders.push_back({{"representative", off.representative}, {"base", off.base}});
  return offenders;
}

int trial_checks(const VkRunResult& result, const CommonOptions& opts, json& summary) {
  // Optional randomized spot checks of choice independence: connector
  // re-choices and homotopy perturbations must not move evaluate_epsilon.
  const VkSetting& setting = *result.setting;
  auto battery = std::make_shared<EqualityBattery>(result.coequalizer->presentation,
                                                   make_budget(opts));
  EpsilonEvaluator eps(setting, result.coequalizer->quotient_map, battery);
  Rng rng(opts.seed);
  std::size_t equal = 0, unknown = 0, distinct = 0;
  for (int t = 0; t < opts.trials; ++t) {
    EdgePath f = random_base_path(setting, rng);
    WeightedPath w = weigh_path(setting, f);
    Word reference = eps.evaluate(w);
    WeightedPath rechosen = randomize_connectors(setting, w, rng);
    EqualityVerdict verdict = battery->decide(reference, eps.evaluate(rechosen));
    if (verdict.equal())
      ++equal;
    else if (verdict.unknown())
      ++unknown;
    else
      ++distinct;
  }
  std::cout << "independence trials: " << opts.trials << " equal=" << equal
            << " unknown=" << unknown << " distinct=" << distinct << "\n";
  summary["trials"] = json{{"count", opts.trials},
                           {"equal", equal},
                           {"unknown", unknown},
                           {"distinct", distinct}};
  return distinct == 0 ? kExitOk : kExitComparison;
}

int cmd_vk(const CommonOptions& opts) {
  InstanceDocument doc = load_instance(opts.file);
  BuiltInstance built = build_instance(doc);
  BaseSet base = resolve_base(doc, opts);
  Budget budget = make_budget(opts);

  VkRunResult result = run_vk(built.cover, base, budget);
  std::cout << "status: " << to_string(result.status) << "\n";

  json summary{{"command", "vk"}, {"status", to_string(result.status)}};

  if (result.status == VkStatus::SectionFailure) {
    for (const auto& f : result.section_report.failures) std::cout << "  " << f << "\n";
    summary["section_failures"] = result.section_report.failures;
    summary["exit"] = kExitValidation;
    print_summary(summary);
    return kExitValidation;
  }
  if (result.status == VkStatus::HypothesisFailure) {
    for (const auto& off : result.hypothesis_report.offenders)
      std::cout << "  component of " << off.representative << " misses the base set (over "
                << off.base << ")\n";
    summary["offenders"] = hypothesis_json(result.hypothesis_report);
    summary["exit"] = kExitHypothesis;
    print_summary(summary);
    return kExitHypothesis;
  }

  const CoequalizerResult& coeq = *result.coequalizer;
  const ComparisonReport& cmp = *result.comparison;
  std::cout << "coequalizer: " << coeq.presentation.objects().size() << " objects, "
            << coeq.presentation.arrows().size() << " generators, "
            << coeq.presentation.relators().size() << " relators\n";
  json objects = json::object();
  for (const auto& entry : cmp.objects) {
    std::cout << "object " << entry.coeq_object << " -> " << entry.base_object << ": "
              << to_string(entry.coeq_fingerprint) << (entry.agree ? "  (agrees)" : "  (MISMATCH)")
              << "\n";
    objects[entry.base_object] = json{{"coequalizer", fingerprint_json(entry.coeq_fingerprint)},
                                      {"direct", fingerprint_json(entry.base_fingerprint)},
                                      {"agree", entry.agree}};
  }
  std::cout << "round-trips: equal=" << cmp.roundtrip_equal << " unknown=" << cmp.roundtrip_unknown
            << " distinct=" << cmp.roundtrip_distinct << "\n";
  for (const auto& n : cmp.notes) std::cout << "note: " << n << "\n";

  summary["fingerprints"] = std::move(objects);
  summary["roundtrips"] = json{{"equal", cmp.roundtrip_equal},
                               {"unknown", cmp.roundtrip_unknown},
                               {"distinct", cmp.roundtrip_distinct}};

  int exit_code = result.pass() ? kExitOk : kExitComparison;
  if (result.pass() && opts.trials > 0) {
    int trial_exit = trial_checks(result, opts, summary);
    if (trial_exit != kExitOk) exit_code = trial_exit;
  }
  summary["exit"] = exit_code;
  print_summary(summary);
  return exit_code;
}

int cmd_crosscheck(const CommonOptions& opts) {
  InstanceDocument doc = load_instance(opts.file);
  BuiltInstance built = build_instance(doc);
  BaseSet base = resolve_base(doc, opts);
  Budget budget = make_budget(opts);

  CrosscheckResult r = crosscheck_section4(built.cover, base, budget);
  auto describe = [](const char* name, const VkRunResult& x) {
    std::cout << name << ": " << to_string(x.status);
    if (x.comparison && !x.comparison->objects.empty())
      std::cout << "  " << to_string(x.comparison->objects.front().coeq_fingerprint);
    std::cout << "\n";
  };
  describe("given cover   ", r.given);
  describe("coproduct of U", r.coproduct);
  describe("pullback      ", r.pullback);
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  std::cout << (r.agree ? (r.absolute ? "AGREE (absolute)" : "AGREE") : "DISAGREE") << "\n";

  json summary{{"command", "crosscheck"},
               {"agree", r.agree},
               {"absolute", r.absolute},
               {"pipelines",
                json{{"given", to_string(r.given.status)},
                     {"coproduct", to_string(r.coproduct.status)},
                     {"pullback", to_string(r.pullback.status)}}}};

  int exit_code = kExitOk;
  if (!r.agree) {
    bool hypothesis = r.given.status == VkStatus::HypothesisFailure ||
                      r.coproduct.status == VkStatus::HypothesisFailure ||
                      r.pullback.status == VkStatus::HypothesisFailure;
    exit_code = hypothesis ? kExitHypothesis : kExitComparison;
  }
  summary["exit"] = exit_code;
  print_summary(summary);
  return exit_code;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groupoid coequalizers for sectioned covers of 2-complexes"};
  app.require_subcommand(1);

  CommonOptions pi1_opts, vk_opts, cross_opts;
  CLI::App* pi1_cmd = app.add_subcommand("pi1", "direct fundamental groupoid of the base");
  add_common(pi1_cmd, pi1_opts, false);
  CLI::App* vk_cmd = app.add_subcommand("vk", "coequalizer pipeline and comparison");
  add_common(vk_cmd, vk_opts, true);
  CLI::App* cross_cmd = app.add_subcommand("crosscheck", "three-pipeline comparison");
  add_common(cross_cmd, cross_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (pi1_cmd->parsed()) return cmd_pi1(pi1_opts);
    if (vk_cmd->parsed()) return cmd_vk(vk_opts);
    if (cross_cmd->parsed()) return cmd_crosscheck(cross_opts);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

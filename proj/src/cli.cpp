#include "subord/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "subord/errors.hpp"
#include "subord/generators.hpp"
#include "subord/parallel.hpp"
#include "subord/plot.hpp"

namespace subord {

namespace {

const std::vector<std::string> kCommands = {"verify", "threshold", "falsify", "plot"};

struct SchwarzSpec {
  enum class Kind { Random, Monomial, Blaschke } kind = Kind::Random;
  unsigned m = 1;
  Complex a = 0.0;
};

std::optional<SchwarzSpec> parse_schwarz(const std::string& s) {
  SchwarzSpec spec;
  if (s == "random") return spec;
  const auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string head = s.substr(0, colon);
  const std::string tail = s.substr(colon + 1);
  try {
    std::size_t used = 0;
    if (head == "monomial") {
      const int m = std::stoi(tail, &used);
      if (used != tail.size() || m < 1) return std::nullopt;
      spec.kind = SchwarzSpec::Kind::Monomial;
      spec.m = static_cast<unsigned>(m);
      return spec;
    }
    if (head == "blaschke") {
      const auto comma = tail.find(',');
      if (comma == std::string::npos) return std::nullopt;
      const std::string re = tail.substr(0, comma);
      const std::string im = tail.substr(comma + 1);
      std::size_t u1 = 0, u2 = 0;
      spec.a = Complex(std::stod(re, &u1), std::stod(im, &u2));
      if (u1 != re.size() || u2 != im.size() || !(std::abs(spec.a) < 1.0)) return std::nullopt;
      spec.kind = SchwarzSpec::Kind::Blaschke;
      return spec;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

SchwarzFunction trial_schwarz(const SchwarzSpec& spec, std::uint64_t seed, std::size_t index) {
  switch (spec.kind) {
    case SchwarzSpec::Kind::Monomial: return make_schwarz(Monomial{spec.m});
    case SchwarzSpec::Kind::Blaschke: return make_schwarz(BlaschkeFactor{spec.a});
    case SchwarzSpec::Kind::Random: break;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  return random_schwarz(rng);
}

Tolerances tolerances(const RunConfig& cfg) {
  Tolerances t = kTolerances;
  t.verdict = cfg.tol;
  return t;
}

// beta for falsify and plot: explicit, or a factor of the closed-form
// threshold (1 when the lemma holds for every beta > 0).
std::optional<double> resolve_beta(const RunConfig& cfg, LemmaId id, const LemmaParams& p) {
  if (cfg.beta) return cfg.beta;
  const double factor = cfg.beta_factor.value_or(1.0);
  const ThresholdResult th = closed_form_threshold(id, p);
  switch (th.status) {
    case ThresholdResult::Status::Feasible: return factor * th.beta_star;
    case ThresholdResult::Status::AlwaysFeasible: return factor;
    case ThresholdResult::Status::Infeasible: return std::nullopt;
  }
  return std::nullopt;
}

std::string params_line(LemmaId id, const LemmaParams& p) {
  std::string s(short_name(id));
  for (Parameter q : lemma_info(id).parameters) {
    s += "  " + std::string(to_string(q)) + "=" + format_sig(p.get(q));
  }
  s += "  beta=" + format_sig(p.beta);
  return s;
}

void finish_document(ReportDocument& doc, const RunConfig& cfg) {
  doc.config = config_json(cfg);
  doc.metadata = Json{{"timestamp", utc_timestamp()},
                      {"tool", "subord"},
                      {"version", std::string(kToolVersion)},
                      {"outputs", Json{{"json", cfg.json_path},
                                       {"csv", cfg.csv_path},
                                       {"svg", cfg.svg_path}}}};
}

int cmd_verify(const RunConfig& cfg, LemmaId id, const LemmaParams& p, std::ostream& out,
               ReportDocument& doc) {
  const Tolerances tol = tolerances(cfg);
  const VerificationReport rep = check_superordination(id, p, cfg.grid, cfg.adm_grid, tol);
  doc.results = verification_json(rep, tol);
  doc.verdict = std::string(to_string(rep.verdict));

  out << params_line(id, p) << "\n";
  out << "hypothesis: " << (rep.feasible ? "holds" : "fails");
  if (rep.threshold.status == ThresholdResult::Status::Feasible) {
    out << "  (beta* = " << format_sig(rep.threshold.beta_star) << ")";
  } else {
    out << "  (" << to_string(rep.threshold.status) << ")";
  }
  out << "\n";
  if (rep.margin) {
    out << "min_margin: " << format_sig(rep.margin->min_margin)
        << " at t = " << format_sig(rep.margin->argmin_t) << "\n";
  }
  for (const auto& a : rep.admissibility) {
    out << "admissibility " << to_string(a.quantity) << " (r = " << format_sig(a.radius)
        << "): " << format_sig(a.value) << "\n";
  }
  for (const auto& d : rep.diagnostics) out << "note: " << d << "\n";
  out << "verdict: " << doc.verdict << "\n";
  return rep.verdict == Verdict::Verified ? kExitOk : kExitFailed;
}

int cmd_threshold(const RunConfig& cfg, LemmaId id, const std::vector<LemmaParams>& sweep,
                  std::ostream& out, ReportDocument& doc) {
  const Tolerances tol = tolerances(cfg);
  const auto rows = parallel_map(sweep.size(), [&](std::size_t i) {
    return threshold_row(id, sweep[i], cfg.grid, tol);
  });
  std::string csv(csv_header());
  csv += "\n";
  Json jrows = Json::array();
  for (const auto& r : rows) {
    csv += csv_row(r) + "\n";
    jrows.push_back(threshold_row_json(r, tol));
  }
  doc.results = Json{{"rows", jrows}};
  doc.verdict = "Completed";
  if (cfg.csv_path.empty()) {
    out << csv;
  } else {
    write_text_file(cfg.csv_path, csv);
    out << "wrote " << rows.size() << " row(s) to " << cfg.csv_path << "\n";
  }
  return kExitOk;
}

int cmd_falsify(const RunConfig& cfg, LemmaId id, LemmaParams p, std::ostream& out,
                ReportDocument& doc) {
  const Tolerances tol = tolerances(cfg);
  p.beta = *resolve_beta(cfg, id, p);
  const SchwarzSpec spec = *parse_schwarz(cfg.schwarz);
  const auto trials = parallel_map(cfg.trials, [&](std::size_t i) {
    Json j;
    j["index"] = i;
    try {
      const SchwarzFunction w = trial_schwarz(spec, cfg.seed, i);
      const TrialReport t = implication_trial(id, p, w, cfg.order, cfg.radii, tol);
      Json body = trial_json(t, tol);
      j.update(body);
      j["error"] = nullptr;
    } catch (const Error& e) {
      j["passed"] = false;
      j["error"] = e.what();
    }
    return j;
  });

  std::size_t passed = 0, errors = 0;
  double min_margin = std::numeric_limits<double>::max();
  double max_residual = 0.0;
  for (const auto& t : trials) {
    if (!t["error"].is_null()) {
      ++errors;
      continue;
    }
    if (t["passed"].get<bool>()) ++passed;
    min_margin = std::min(min_margin, t["conclusion_margin"]["value"].get<double>());
    max_residual = std::max(max_residual, t["premise_residual"]["value"].get<double>());
  }
  const bool any_result = errors < trials.size();
  Json summary{{"trials", trials.size()},
               {"passed", passed},
               {"failed", trials.size() - passed - errors},
               {"errors", errors},
               {"min_conclusion_margin",
                any_result ? annotated(min_margin, tol.verdict) : Json(nullptr)},
               {"max_premise_residual",
                any_result ? annotated(max_residual, tol.premise_residual) : Json(nullptr)}};
  doc.results = Json{{"lemma", std::string(short_name(id))},
                     {"params", params_json(p)},
                     {"feasible", feasibility_check(id, p)},
                     {"summary", summary},
                     {"trials", trials}};
  doc.verdict = passed == trials.size() ? "NoCounterexample" : "CounterexampleCandidate";

  out << params_line(id, p) << "\n";
  out << "hypothesis: " << (feasibility_check(id, p) ? "holds" : "fails") << "\n";
  out << "trials: " << trials.size() << "  passed: " << passed << "  errors: " << errors << "\n";
  if (any_result) {
    out << "min conclusion margin: " << format_sig(min_margin) << "\n";
    out << "max premise residual: " << format_sig(max_residual) << "\n";
  }
  out << "result: " << doc.verdict << " (sampled evidence, not a proof)\n";
  return kExitOk;
}

int cmd_plot(const RunConfig& cfg, LemmaId id, LemmaParams p, std::ostream& out,
             ReportDocument& doc) {
  p.beta = resolve_beta(cfg, id, p).value_or(1.0);
  const std::string svg = render_svg(id, p);
  write_text_file(cfg.svg_path, svg);
  doc.results = Json{{"lemma", std::string(short_name(id))}, {"params", params_json(p)}};
  doc.verdict = "Completed";
  out << "wrote " << cfg.svg_path << "\n";
  return kExitOk;
}

template <class T>
CLI::Option* add_list(CLI::App* sub, const std::string& name, std::vector<T>& v,
                      const std::string& help) {
  return sub->add_option(name, v, help)->delimiter(',')->expected(1, 1 << 20);
}

}  // namespace

std::vector<std::string> validate(const RunConfig& cfg) {
  std::vector<std::string> issues;
  const auto issue = [&](std::string s) { issues.push_back(std::move(s)); };
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end()) {
    issue("unknown command '" + cfg.command + "'");
  }
  const auto id = parse_lemma(cfg.lemma);
  if (!id) issue("unknown lemma '" + cfg.lemma + "' (expected L1..L11)");
  if (cfg.grid < 64) issue("--grid must be at least 64");
  if (cfg.adm_grid < 64) issue("--adm-grid must be at least 64");
  if (cfg.order < 2 || cfg.order > kMaxOrder) {
    issue("--order must lie in [2, " + std::to_string(kMaxOrder) + "]");
  }
  if (cfg.radii.empty()) issue("--radii needs at least one radius");
  for (double r : cfg.radii) {
    if (!(r > 0.0 && r < 1.0)) issue("radius " + format_sig(r) + " is outside (0, 1)");
  }
  if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) issue("--tol must lie in (0, 1)");

  const bool sweep = cfg.command == "threshold";
  const std::pair<const char*, const std::vector<double>*> lists[] = {
      {"--A", &cfg.A}, {"--B", &cfg.B}, {"--D", &cfg.D}, {"--E", &cfg.E}, {"--k", &cfg.k}};
  for (const auto& [name, v] : lists) {
    if (v->empty()) issue(std::string(name) + " needs a value");
    if (!sweep && v->size() > 1) issue(std::string(name) + " takes one value outside threshold");
    for (double x : *v) {
      if (!std::isfinite(x)) issue(std::string(name) + " must be finite");
    }
  }
  if (cfg.beta && !std::isfinite(*cfg.beta)) issue("--beta must be finite");
  if (cfg.beta_factor && !(*cfg.beta_factor > 0.0 && std::isfinite(*cfg.beta_factor))) {
    issue("--beta-factor must be positive");
  }
  if (cfg.beta_factor && cfg.command != "falsify" && cfg.command != "plot") {
    issue("--beta-factor applies to falsify and plot only");
  }
  if (cfg.beta && cfg.beta_factor) issue("give --beta or --beta-factor, not both");
  if (cfg.command == "verify" && !cfg.beta) issue("verify needs --beta");
  if (cfg.command == "falsify") {
    if (!cfg.beta && !cfg.beta_factor) issue("falsify needs --beta or --beta-factor");
    if (cfg.trials < 1) issue("--trials must be at least 1");
    if (!parse_schwarz(cfg.schwarz)) {
      issue("--schwarz must be random, monomial:<m>=1..., or blaschke:<re>,<im> with |a| < 1");
    }
  }
  if (cfg.command == "plot" && cfg.svg_path.empty()) issue("plot needs --svg <path>");
  if (cfg.command != "threshold" && !cfg.csv_path.empty()) {
    issue("--csv applies to threshold only");
  }

  if (id) {
    for (LemmaParams p : expand_sweep(cfg)) {
      const bool explicit_beta = cfg.beta.has_value();
      if (explicit_beta) p.beta = *cfg.beta;
      const auto problems = validate_params(*id, p, explicit_beta);
      for (const auto& s : problems) issue(params_line(*id, p) + ": " + s);
      if (problems.empty() && !explicit_beta && cfg.beta_factor && cfg.command == "falsify" &&
          !resolve_beta(cfg, *id, p)) {
        issue(params_line(*id, p) + ": --beta-factor needs a closed-form threshold, which " +
              "does not exist for these parameters");
      }
    }
  }
  return issues;
}

std::vector<LemmaParams> expand_sweep(const RunConfig& cfg) {
  std::vector<LemmaParams> out;
  for (double a : cfg.A) {
    for (double b : cfg.B) {
      for (double d : cfg.D) {
        for (double e : cfg.E) {
          for (double k : cfg.k) {
            LemmaParams p;
            p.A = a;
            p.B = b;
            p.D = d;
            p.E = e;
            p.k = k;
            p.beta = cfg.beta.value_or(1.0);
            out.push_back(p);
          }
        }
      }
    }
  }
  return out;
}

Json config_json(const RunConfig& cfg) {
  Json j;
  j["command"] = cfg.command;
  j["lemma"] = cfg.lemma;
  j["A"] = cfg.A;
  j["B"] = cfg.B;
  j["D"] = cfg.D;
  j["E"] = cfg.E;
  j["k"] = cfg.k;
  j["beta"] = cfg.beta ? Json(*cfg.beta) : Json(nullptr);
  j["beta_factor"] = cfg.beta_factor ? Json(*cfg.beta_factor) : Json(nullptr);
  j["grid"] = cfg.grid;
  j["adm_grid"] = cfg.adm_grid;
  j["order"] = cfg.order;
  j["trials"] = cfg.trials;
  j["radii"] = cfg.radii;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["schwarz"] = cfg.schwarz;
  return j;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                ReportDocument* doc_out) {
  const auto issues = validate(cfg);
  if (!issues.empty()) {
    err << "invalid configuration:\n";
    for (const auto& s : issues) err << "  - " << s << "\n";
    return kExitInvalid;
  }
  const LemmaId id = *parse_lemma(cfg.lemma);
  const auto sweep = expand_sweep(cfg);
  ReportDocument doc;
  int code = kExitOk;
  try {
    if (cfg.command == "verify") {
      code = cmd_verify(cfg, id, sweep.front(), out, doc);
    } else if (cfg.command == "threshold") {
      code = cmd_threshold(cfg, id, sweep, out, doc);
    } else if (cfg.command == "falsify") {
      code = cmd_falsify(cfg, id, sweep.front(), out, doc);
    } else {
      code = cmd_plot(cfg, id, sweep.front(), out, doc);
    }
    finish_document(doc, cfg);
    if (!cfg.json_path.empty()) write_text_file(cfg.json_path, doc.dump());
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Io: return kExitIo;
      case ErrorKind::InvalidParameters:
      case ErrorKind::InvalidConfig:
      case ErrorKind::NotApplicable: return kExitInvalid;
      default: return kExitFailed;
    }
  }
  if (doc_out) *doc_out = std::move(doc);
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of differential subordination lemmas for the lemniscate "
               "of Bernoulli and Janowski regions.",
               "subord"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  RunConfig cfg;
  double beta = 0.0;
  double beta_factor = 1.0;
  struct Sub {
    CLI::App* app;
    CLI::Option* beta;
    CLI::Option* beta_factor;
  };
  std::vector<Sub> subs;
  const std::pair<const char*, const char*> descriptions[] = {
      {"verify", "Check one lemma at one parameter point; exit 0 iff Verified"},
      {"threshold", "Closed-form and numeric beta thresholds over a parameter sweep (CSV)"},
      {"falsify", "Implication trials with seeded Schwarz functions"},
      {"plot", "SVG of the regions, h(e^it) and p(0.999 e^it)"},
  };
  for (const auto& [name, desc] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--lemma", cfg.lemma, "Lemma L1..L11")->required();
    add_list(sub, "--A", cfg.A, "Janowski A of the conclusion (comma list for threshold)");
    add_list(sub, "--B", cfg.B, "Janowski B of the conclusion (comma list for threshold)");
    add_list(sub, "--D", cfg.D, "Janowski D of the premise, L9..L11 (comma list for threshold)");
    add_list(sub, "--E", cfg.E, "Janowski E of the premise, L9..L11 (comma list for threshold)");
    add_list(sub, "--k", cfg.k, "Exponent k of L1 (comma list for threshold)");
    Sub s{sub, sub->add_option("--beta", beta, "beta"), nullptr};
    s.beta->default_str("");
    s.beta_factor = sub->add_option("--beta-factor", beta_factor,
                                    "beta as a multiple of the closed-form beta*");
    s.beta_factor->default_str("");
    sub->add_option("--grid", cfg.grid, "Boundary grid for the margin profile");
    sub->add_option("--adm-grid", cfg.adm_grid, "Boundary grid for admissibility minima");
    sub->add_option("--order", cfg.order, "Initial series order for premise solutions");
    sub->add_option("--trials", cfg.trials, "Number of implication trials");
    add_list(sub, "--radii", cfg.radii, "Radii for subordination sampling");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--tol", cfg.tol, "Verdict tolerance: criterion holds when margin >= 1 - tol");
    sub->add_option("--schwarz", cfg.schwarz,
                    "Schwarz functions: random, monomial:<m>, blaschke:<re>,<im>");
    sub->add_option("--json", cfg.json_path, "Write the JSON report here");
    sub->add_option("--csv", cfg.csv_path, "Write threshold CSV here (default: stdout)");
    sub->add_option("--svg", cfg.svg_path, "Write the SVG figure here");
    subs.push_back(s);
  }
  app.footer("Environment: SUBORD_WORKERS sets the worker count (default: hardware threads).\n"
             "Exit codes: 0 ok, 1 verification failed, 2 invalid configuration, 3 I/O error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  for (const auto& s : subs) {
    if (!s.app->parsed()) continue;
    cfg.command = s.app->get_name();
    if (s.beta->count() > 0) cfg.beta = beta;
    if (s.beta_factor->count() > 0) cfg.beta_factor = beta_factor;
  }
  return run_command(cfg, out, err);
}

}  // namespace subord

#include "mixnorm/run_config.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixnorm/corpus.hpp"
#include "mixnorm/errors.hpp"
#include "mixnorm/integrate.hpp"
#include "mixnorm/maximal.hpp"
#include "mixnorm/norms.hpp"
#include "mixnorm/seminorms.hpp"
#include "mixnorm/verify.hpp"
#include "mixnorm/weights.hpp"

namespace mixnorm {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

double parse_number(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const std::size_t slash = s.find('/');
    try {
      if (slash != std::string::npos) {
        const double num = std::stod(s.substr(0, slash));
        const double den = std::stod(s.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument(what + ": zero denominator in '" + s + "'");
        return num / den;
      }
      return std::stod(s);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(what + ": cannot parse number '" + s + "'");
    }
  }
  throw std::invalid_argument(what + ": expected a number or rational string");
}

ExponentVector parse_exponents(const json& v, const std::string& what) {
  if (!v.is_array() || v.empty())
    throw std::invalid_argument(what + ": expected a nonempty array of exponents");
  std::vector<double> entries;
  for (const json& e : v) entries.push_back(parse_number(e, what));
  return ExponentVector(std::move(entries));  // enforces 1 < p_i < inf
}

Box parse_box(const json& v) {
  if (!v.is_object() || !v.contains("lower") || !v.contains("upper"))
    throw std::invalid_argument("box: expected {\"lower\": [...], \"upper\": [...]}");
  return Box(v["lower"].get<std::vector<double>>(), v["upper"].get<std::vector<double>>());
}

FnSpec parse_fnspec(const json& v, const std::string& what) {
  if (!v.is_object() || !v.contains("kind"))
    throw std::invalid_argument(what + ": expected an object with a \"kind\"");
  const std::string kind = v["kind"].get<std::string>();
  if (kind == "indicator") return FnSpec::indicator(parse_box(v.at("box")));
  if (kind == "power") return FnSpec::power(parse_number(v.at("exponent"), what));
  if (kind == "logabs") return FnSpec::logabs();
  if (kind == "coordinate") return FnSpec::coordinate(v.value("axis", 0));
  if (kind == "gaussian")
    return FnSpec::gaussian(v.at("center").get<std::vector<double>>(),
                            parse_number(v.at("width"), what));
  if (kind == "smooth-random")
    return FnSpec::smooth_random(v.value("seed", 0ULL), v.value("bandwidth", 2.0));
  if (kind == "lipschitz-power") return FnSpec::lipschitz_power(parse_number(v.at("beta"), what));
  throw std::invalid_argument(what + ": unknown function kind '" + kind + "'");
}

FnSpec::Kind parse_kind_name(const std::string& kind) {
  if (kind == "indicator") return FnSpec::Kind::indicator;
  if (kind == "gaussian") return FnSpec::Kind::gaussian;
  if (kind == "smooth-random") return FnSpec::Kind::smooth_random;
  throw std::invalid_argument("corpus kinds: unsupported kind '" + kind + "'");
}

std::vector<std::vector<int>> parse_resolutions(const json& v) {
  if (!v.is_array() || v.empty()) throw std::invalid_argument("resolutions: expected a nonempty array");
  std::vector<std::vector<int>> out;
  if (v[0].is_array()) {
    for (const json& r : v) out.push_back(r.get<std::vector<int>>());
  } else {
    out.push_back(v.get<std::vector<int>>());
  }
  return out;
}

HarnessConfig parse_harness(const json& raw) {
  if (!raw.contains("box")) throw std::invalid_argument("config: missing \"box\"");
  if (!raw.contains("resolutions")) throw std::invalid_argument("config: missing \"resolutions\"");
  HarnessConfig hc{parse_box(raw["box"]), parse_resolutions(raw["resolutions"])};
  if (raw.contains("family")) {
    hc.family_levels = raw["family"].value("levels", 5);
    hc.family_translates = raw["family"].value("translates", 1);
  }
  if (raw.contains("tolerances")) {
    hc.stability_tol = raw["tolerances"].value("stability", 0.10);
  }
  if (raw.value("diagonal", std::string("analytic")) == "drop")
    hc.quadrature.diagonal = KernelQuadrature::Diagonal::drop;
  return hc;
}

Corpus parse_corpus(const json& raw, const Box& box) {
  const std::uint64_t seed = raw.value("seed", 42ULL);
  const int size = raw.value("corpus_size", 8);
  if (raw.contains("corpus_kinds")) {
    std::vector<FnSpec::Kind> kinds;
    for (const json& k : raw["corpus_kinds"]) kinds.push_back(parse_kind_name(k.get<std::string>()));
    return make_corpus(seed, size, kinds, box);
  }
  return make_corpus(seed, size, box);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write output file " + path.string());
  out << text;
}

// Report file = volatile metadata + deterministic body; reruns of the same
// config produce byte-identical bodies. The resolved input config is embedded
// for provenance.
void write_report(const RunConfig& cfg, const std::string& stem, const VerificationReport& rep) {
  json file;
  file["meta"] = json{{"generated_at", timestamp_utc()}, {"wall_seconds", rep.wall_seconds}};
  file["config"] = cfg.raw;
  file["report"] = rep.body_json();
  write_text(fs::path(cfg.out_dir) / ("report_" + stem + ".json"), file.dump(2) + "\n");
  write_text(fs::path(cfg.out_dir) / ("ratios_" + stem + ".csv"), rep.ratios_csv());
  if (!cfg.quiet) std::cout << rep.summary_line() << "\n";
}

int run_norm(const RunConfig& cfg) {
  const json& raw = cfg.raw;
  const Box box = parse_box(raw.at("box"));
  const Grid grid(box, parse_resolutions(raw.at("resolutions")).back());
  const FnSpec fn = parse_fnspec(raw.at("fn"), "fn");
  const GridFunction f = sample(fn, grid);

  json out;
  out["command"] = "norm";
  out["fn"] = fn.describe();
  std::ostringstream line;
  if (raw.contains("p_vec")) {
    const ExponentVector p = parse_exponents(raw["p_vec"], "p_vec");
    const double value = mixed_norm(f, p);
    out["mixed_norm"] = value;
    line << "mixed norm " << p.describe() << " = " << value;
    if (fn.kind == FnSpec::Kind::indicator && fn.box->is_cube()) {
      const double formula = indicator_norm_formula(*fn.box, p);
      out["indicator_closed_form"] = formula;
      line << "  (indicator closed form = " << formula << ")";
    }
  } else if (raw.contains("p") && raw.contains("weight")) {
    const double p = parse_number(raw["p"], "p");
    const GridFunction w = sample(parse_fnspec(raw["weight"], "weight"), grid);
    const double value = weighted_norm(f, p, w);
    out["weighted_norm"] = value;
    line << "weighted norm p=" << p << " = " << value;
  } else if (raw.contains("p")) {
    const double p = parse_number(raw["p"], "p");
    const double value = classical_norm(f, p);
    out["classical_norm"] = value;
    line << "classical norm p=" << p << " = " << value;
  } else {
    throw std::invalid_argument("norm: config needs \"p\" (classical) or \"p_vec\" (mixed)");
  }
  if (!cfg.quiet) std::cout << line.str() << "\n";
  json file;
  file["meta"] = json{{"generated_at", timestamp_utc()}};
  file["report"] = out;
  write_text(fs::path(cfg.out_dir) / "report_norm.json", file.dump(2) + "\n");
  return 0;
}

int run_op(const RunConfig& cfg) {
  const json& raw = cfg.raw;
  const Box box = parse_box(raw.at("box"));
  const Grid grid(box, parse_resolutions(raw.at("resolutions")).back());
  const FnSpec fn = parse_fnspec(raw.at("fn"), "fn");
  const GridFunction f = sample(fn, grid);
  const std::string opname = raw.at("op").get<std::string>();

  KernelQuadrature quad;
  if (raw.value("diagonal", std::string("analytic")) == "drop")
    quad.diagonal = KernelQuadrature::Diagonal::drop;
  const double alpha = raw.contains("alpha") ? parse_number(raw["alpha"], "alpha") : 0.5;

  GridFunction result = f;
  if (opname == "maximal" || opname == "sharp_maximal" || opname == "fractional_maximal") {
    const CubeFamily family =
        CubeFamily::dyadic(box, 0, raw.contains("family") ? raw["family"].value("levels", 5) : 5,
                           raw.contains("family") ? raw["family"].value("translates", 1) : 1);
    if (opname == "maximal")
      result = maximal(f, family).values;
    else if (opname == "sharp_maximal")
      result = sharp_maximal(f, family).values;
    else
      result = fractional_maximal(f, alpha, family).values;
  } else if (opname == "fractional_integral") {
    result = fractional_integral(f, alpha, quad);
  } else if (opname == "commutator" || opname == "abs_commutator") {
    const GridFunction b = sample(parse_fnspec(raw.at("b"), "b"), grid);
    result = opname == "commutator" ? commutator_fractional(b, f, alpha, quad)
                                    : abs_commutator(b, f, alpha, quad);
  } else {
    throw std::invalid_argument("op: unknown operator '" + opname + "'");
  }

  double vmin = result[0], vmax = result[0];
  for (std::size_t k = 0; k < result.size(); ++k) {
    vmin = std::min(vmin, result[k]);
    vmax = std::max(vmax, result[k]);
  }
  json out;
  out["command"] = "op";
  out["op"] = opname;
  out["alpha"] = alpha;
  out["fn"] = fn.describe();
  out["min"] = vmin;
  out["max"] = vmax;
  out["integral"] = riemann_integral(result);

  std::ostringstream csv;
  csv << "flat_index,value\n";
  for (std::size_t k = 0; k < result.size(); ++k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", result[k]);
    csv << k << "," << buf << "\n";
  }
  write_text(fs::path(cfg.out_dir) / "op_values.csv", csv.str());
  json file;
  file["meta"] = json{{"generated_at", timestamp_utc()}};
  file["report"] = out;
  write_text(fs::path(cfg.out_dir) / "report_op.json", file.dump(2) + "\n");
  if (!cfg.quiet)
    std::cout << "op " << opname << ": min=" << vmin << " max=" << vmax << "\n";
  return 0;
}

int run_weight(const RunConfig& cfg) {
  const json& raw = cfg.raw;
  const Box box = parse_box(raw.at("box"));
  const Grid grid(box, parse_resolutions(raw.at("resolutions")).back());
  const CubeFamily family =
      CubeFamily::dyadic(box, 0, raw.contains("family") ? raw["family"].value("levels", 5) : 5,
                         raw.contains("family") ? raw["family"].value("translates", 1) : 1);
  const double p = raw.contains("p") ? parse_number(raw["p"], "p") : 2.0;

  Weight w = [&]() {
    if (raw.contains("weight")) {
      const FnSpec spec = parse_fnspec(raw["weight"], "weight");
      return Weight(sample(spec, grid), spec.describe());
    }
    return Weight(GridFunction(grid, std::vector<double>(grid.size(), 1.0)), "unit");
  }();

  const double constant = p > 1.0 ? ap_constant(w, p, family) : a1_constant(w, family);

  // Per-cube table: cube bounds, averages, and the cube's contribution.
  std::ostringstream csv;
  csv << "cube_lower,cube_upper,avg_w,companion,contribution\n";
  const double e = p > 1.0 ? 1.0 / (1.0 - p) : 0.0;
  family.for_each_cube([&](const Box& q) {
    const std::vector<IndexRange> ranges = grid.cell_ranges(q);
    const std::size_t cells = cell_count(ranges);
    if (cells == 0) return;
    long double sw = 0.0L, sc = 0.0L;
    double wmin = std::numeric_limits<double>::infinity();
    for_each_row(grid, ranges, [&](std::size_t base, int klo, int khi) {
      for (int k = klo; k <= khi; ++k) {
        const double v = w.w[base + static_cast<std::size_t>(k)];
        sw += v;
        if (p > 1.0) sc += std::pow(v, e);
        wmin = std::min(wmin, v);
      }
    });
    const double avg = static_cast<double>(sw) / static_cast<double>(cells);
    const double companion =
        p > 1.0 ? static_cast<double>(sc) / static_cast<double>(cells) : 1.0 / wmin;
    const double contribution =
        p > 1.0 ? avg * std::pow(companion, p - 1.0) : avg * companion;
    auto fmt_vec = [](const std::vector<double>& v) {
      std::ostringstream os;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ";";
        os << v[i];
      }
      return os.str();
    };
    csv << '"' << fmt_vec(q.lower()) << '"' << ',' << '"' << fmt_vec(q.upper()) << '"' << ','
        << avg << ',' << companion << ',' << contribution << "\n";
  });
  write_text(fs::path(cfg.out_dir) / "weight_cubes.csv", csv.str());

  json out;
  out["command"] = "weight";
  out["p"] = p;
  out["provenance"] = w.provenance;
  out["constant"] = constant;
  json file;
  file["meta"] = json{{"generated_at", timestamp_utc()}};
  file["report"] = out;
  write_text(fs::path(cfg.out_dir) / "report_weight.json", file.dump(2) + "\n");
  if (!cfg.quiet) std::cout << "weight constant (p=" << p << ") = " << constant << "\n";
  return 0;
}

int run_seminorm(const RunConfig& cfg) {
  const json& raw = cfg.raw;
  const Box box = parse_box(raw.at("box"));
  const Grid grid(box, parse_resolutions(raw.at("resolutions")).back());
  const GridFunction b = sample(parse_fnspec(raw.at("b"), "b"), grid);
  const std::string kind = raw.value("seminorm", std::string("bmo"));

  double value = 0.0;
  if (kind == "bmo") {
    const CubeFamily family =
        CubeFamily::dyadic(box, 0, raw.contains("family") ? raw["family"].value("levels", 5) : 5,
                           raw.contains("family") ? raw["family"].value("translates", 1) : 1);
    value = bmo_norm(b, family);
  } else if (kind == "lipschitz-pointwise") {
    value = lipschitz_norm_pointwise(b, parse_number(raw.at("beta"), "beta"));
  } else if (kind == "lipschitz-oscillation") {
    const CubeFamily family =
        CubeFamily::dyadic(box, 0, raw.contains("family") ? raw["family"].value("levels", 5) : 5,
                           raw.contains("family") ? raw["family"].value("translates", 1) : 1);
    value = lipschitz_norm_oscillation(b, parse_number(raw.at("beta"), "beta"),
                                       raw.value("q", 2.0), family);
  } else {
    throw std::invalid_argument("seminorm: unknown kind '" + kind + "'");
  }

  json out;
  out["command"] = "seminorm";
  out["seminorm"] = kind;
  out["value"] = value;
  json file;
  file["meta"] = json{{"generated_at", timestamp_utc()}};
  file["report"] = out;
  write_text(fs::path(cfg.out_dir) / "report_seminorm.json", file.dump(2) + "\n");
  if (!cfg.quiet) std::cout << "seminorm " << kind << " = " << value << "\n";
  return 0;
}

int run_verify(const RunConfig& cfg) {
  const json& raw = cfg.raw;
  if (!raw.contains("experiment"))
    throw std::invalid_argument("verify: config needs an \"experiment\" id");
  const std::string id = raw["experiment"].get<std::string>();
  const HarnessConfig hc = parse_harness(raw);
  const Corpus corpus = parse_corpus(raw, hc.box);

  VerificationReport rep;
  if (id == "thm3.10") {
    rep = experiment_sharp_maximal(parse_exponents(raw.at("p"), "p"), corpus, hc);
  } else if (id == "lem4.1") {
    rep = experiment_fractional_bound(
        ExponentPair(parse_exponents(raw.at("p"), "p"), parse_exponents(raw.at("q"), "q")), corpus,
        hc);
  } else if (id == "thm4.3") {
    const ExponentPair pair(parse_exponents(raw.at("p"), "p"), parse_exponents(raw.at("q"), "q"));
    const FnSpec b = raw.contains("b") ? parse_fnspec(raw["b"], "b") : FnSpec::logabs();
    std::vector<double> dil = raw.value("dilations", std::vector<double>{0.25, 0.5, 1.0, 2.0, 4.0});
    const double r = raw.contains("r") ? parse_number(raw["r"], "r") : 1.5;
    const double dil_tol =
        raw.contains("tolerances") ? raw["tolerances"].value("dilation", 0.20) : 0.20;
    rep = experiment_bmo_sufficiency(pair, b, corpus, hc, r, dil, dil_tol);
  } else if (id == "thm4.3-necessity") {
    const ExponentPair pair(parse_exponents(raw.at("p"), "p"), parse_exponents(raw.at("q"), "q"));
    const FnSpec b = raw.contains("b") ? parse_fnspec(raw["b"], "b") : FnSpec::coordinate(0);
    std::vector<double> dil = raw.value("dilations", std::vector<double>{1.0, 2.0, 4.0, 8.0});
    const double slope = raw.value("expected_slope", 1.0);
    const double slope_tol =
        raw.contains("tolerances") ? raw["tolerances"].value("slope", 0.15) : 0.15;
    rep = experiment_bmo_necessity_probe(pair, b, corpus, hc, dil, slope, slope_tol);
  } else if (id == "thm5.3") {
    const double beta = parse_number(raw.at("beta"), "beta");
    const ExponentPair pair(parse_exponents(raw.at("p"), "p"), parse_exponents(raw.at("q"), "q"),
                            beta);
    const FnSpec b = raw.contains("b") ? parse_fnspec(raw["b"], "b") : FnSpec::lipschitz_power(beta);
    rep = experiment_lipschitz(pair, b, corpus, hc);
  } else if (id == "dominations") {
    DominationParams params;
    if (raw.contains("alpha")) params.alpha = parse_number(raw["alpha"], "alpha");
    if (raw.contains("b")) params.b_spec = parse_fnspec(raw["b"], "b");
    if (raw.contains("heat_n")) params.heat_n = raw["heat_n"].get<int>();
    if (raw.contains("heat_alpha")) params.heat_alpha = parse_number(raw["heat_alpha"], "heat_alpha");
    rep = experiment_pointwise_dominations(corpus, hc, params);
  } else if (id == "ball-axioms") {
    NormDescriptor nd;
    const std::string kind = raw.value("norm_kind", std::string("mixed"));
    if (kind == "classical") {
      nd.kind = NormDescriptor::Kind::classical;
      nd.p = raw.contains("p") ? parse_number(raw["p"], "p") : 2.0;
    } else if (kind == "mixed") {
      nd.kind = NormDescriptor::Kind::mixed;
      nd.pvec = parse_exponents(raw.at("p"), "p");
    } else if (kind == "weighted") {
      nd.kind = NormDescriptor::Kind::weighted;
      nd.p = raw.contains("p") ? parse_number(raw["p"], "p") : 2.0;
      nd.weight = raw.contains("weight") ? parse_fnspec(raw["weight"], "weight")
                                         : FnSpec::gaussian(std::vector<double>(
                                               parse_box(raw.at("box")).dim(), 0.0), 2.0);
    } else {
      throw std::invalid_argument("ball-axioms: unknown norm kind '" + kind + "'");
    }
    rep = experiment_ball_axioms(nd, raw.value("samples", 200), raw.value("seed", 42ULL), hc);
  } else if (id == "rdf") {
    rep = experiment_rubio_contracts(parse_exponents(raw.at("p"), "p"), corpus, hc,
                                     raw.value("iterations", 6));
  } else {
    throw std::invalid_argument("verify: unknown experiment id '" + id + "'");
  }

  std::string stem = id;
  for (char& c : stem)
    if (c == '.' || c == '/') c = '_';
  write_report(cfg, stem, rep);
  return rep.passed ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg) {
  if (!fs::is_directory(cfg.out_dir))
    throw std::invalid_argument("output directory does not exist: " + cfg.out_dir);
  if (cfg.command == "norm") return run_norm(cfg);
  if (cfg.command == "op") return run_op(cfg);
  if (cfg.command == "weight") return run_weight(cfg);
  if (cfg.command == "seminorm") return run_seminorm(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

int run_cli(int argc, char** argv) {
  CLI::App app{"mixed-norm operator laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::string resolution_csv;
  long long seed = -1;
  bool quiet = false;

  std::vector<CLI::App*> subs;
  for (const char* name : {"norm", "op", "weight", "seminorm", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "override corpus seed");
    sub->add_option("--resolution", resolution_csv, "override resolution, comma-separated ints");
    sub->add_flag("--quiet", quiet, "suppress stdout summary");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    nlohmann::json err{{"error", {{"code", "usage"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open config file " + config_path);
      in >> cfg.raw;
    } else {
      cfg.raw = nlohmann::json::object();
    }
    if (seed >= 0) cfg.raw["seed"] = static_cast<std::uint64_t>(seed);
    if (!resolution_csv.empty()) {
      std::vector<int> res;
      std::stringstream ss(resolution_csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) res.push_back(std::stoi(tok));
      cfg.raw["resolutions"] = nlohmann::json::array({res});
    }
    cfg.out_dir = out_dir;
    cfg.quiet = quiet;
    return run(cfg);
  } catch (const std::invalid_argument& e) {
    nlohmann::json err{{"error", {{"code", "config"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    nlohmann::json err{{"error", {{"code", "config"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}

}  // namespace mixnorm

#include "acp/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "acp/core.hpp"
#include "acp/densities.hpp"
#include "acp/enumerate.hpp"
#include "acp/error.hpp"
#include "acp/histogram_io.hpp"
#include "acp/localglobal.hpp"
#include "acp/orbits.hpp"
#include "acp/primestats.hpp"
#include "acp/render.hpp"
#include "json.hpp"

namespace acp::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalConfig {
  std::string root = "bugeye";
  unsigned threads = 1;
  std::string memory_budget = "2G";
  bool check_invariants = false;
};

std::uint64_t parse_bytes(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad memory budget '" + text + "'");
  }
  const std::string suffix = text.substr(used);
  std::uint64_t scale = 1;
  if (suffix == "K" || suffix == "k") scale = std::uint64_t{1} << 10;
  else if (suffix == "M" || suffix == "m") scale = std::uint64_t{1} << 20;
  else if (suffix == "G" || suffix == "g") scale = std::uint64_t{1} << 30;
  else if (!suffix.empty()) throw UsageError("bad memory budget suffix '" + suffix + "'");
  return value * scale;
}

RunOptions run_options(const GlobalConfig& g) {
  return RunOptions{std::max(1u, g.threads), parse_bytes(g.memory_budget), g.check_invariants};
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw FormatError("cannot open " + path + " for writing");
  file << content;
}

json gamma_json(const std::vector<Rational>& gamma) {
  json g = json::object();
  for (std::size_t n = 0; n < gamma.size(); ++n) g[std::to_string(n)] = gamma[n].to_string();
  return g;
}

std::string fmt12(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral Apollonian circle packing experiments", "acp"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig g;
  app.add_option("--root", g.root, "preset (bugeye, coins) or quadruple like -1,2,2,3")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str();
  app.add_option("--memory-budget", g.memory_budget, "bytes, K/M/G suffix allowed")
      ->capture_default_str();
  app.add_flag("--assert", g.check_invariants, "check every quadruple during traversal");

  std::string out_path;

  auto* stats = app.add_subcommand("stats", "prime and kissing-prime ratio series (CSV)");
  Curvature stats_bound = 1000000;
  std::size_t stats_points = 16;
  Curvature stats_min = 10;
  stats->add_option("--bound", stats_bound, "largest checkpoint x_max")->capture_default_str();
  stats->add_option("--checkpoints", stats_points, "number of checkpoints")->capture_default_str();
  stats->add_option("--x-min", stats_min, "smallest checkpoint")->capture_default_str();
  stats->add_option("--out", out_path, "output file (stdout if omitted)");

  auto* orbit = app.add_subcommand("orbit", "orbit of the root modulo d (JSON)");
  std::uint32_t modulus = 24;
  orbit->add_option("--mod", modulus, "modulus d")->required();
  orbit->add_option("--out", out_path, "output file");

  auto* residues = app.add_subcommand("residues", "gamma(n) profile mod 24 (JSON)");
  residues->add_option("--out", out_path, "output file");

  auto* exceptions = app.add_subcommand("exceptions", "admissible integers never hit (JSON)");
  Curvature lo = 1, hi = 0;
  std::optional<int> residue;
  exceptions->add_option("--lo", lo, "window start")->required();
  exceptions->add_option("--hi", hi, "window end (exclusive)")->required();
  exceptions->add_option("--residue", residue, "restrict to one class mod 24");
  exceptions->add_option("--out", out_path, "output file");

  auto* hist = app.add_subcommand("hist", "curvature histogram to an ACPH file");
  hist->add_option("--lo", lo, "window start")->required();
  hist->add_option("--hi", hi, "window end (exclusive)")->required();
  hist->add_option("--out", out_path, "ACPH output file")->required();

  auto* summary = app.add_subcommand("hist-summary", "frequency distribution of an ACPH file");
  std::string acph_path;
  int summary_residue = 0;
  summary->add_option("file", acph_path, "ACPH file")->required();
  summary->add_option("--residue", summary_residue, "class mod 24")->required();
  summary->add_option("--out", out_path, "output file");

  auto* constants = app.add_subcommand("constants", "L(2,chi_4), c and alpha (JSON)");
  double tolerance = 1e-12;
  std::uint32_t prime_bound = 1000000;
  constants->add_option("--tol", tolerance, "tolerance for L(2,chi_4)")->capture_default_str();
  constants->add_option("--prime-bound", prime_bound, "last prime in the product")
      ->capture_default_str();

  auto* render = app.add_subcommand("render", "SVG drawing of the packing");
  Curvature max_curvature = 100;
  SvgOptions svg;
  bool no_labels = false;
  render->add_option("--max", max_curvature, "draw circles with curvature < max")
      ->capture_default_str();
  render->add_option("--out", out_path, "SVG output file");
  render->add_option("--canvas", svg.canvas_px, "canvas size in pixels")->capture_default_str();
  render->add_option("--stroke", svg.stroke, "stroke colour")->capture_default_str();
  render->add_option("--fill", svg.fill, "fill colour")->capture_default_str();
  render->add_option("--stroke-width", svg.stroke_width, "stroke width")->capture_default_str();
  render->add_flag("--no-labels", no_labels, "omit curvature labels");

  auto* fit = app.add_subcommand("fit", "fit N(x) ~ c x^delta");
  std::vector<Curvature> fit_xs{10000, 100000, 1000000};
  fit->add_option("--xs", fit_xs, "sample points")->delimiter(',')->capture_default_str();

  std::vector<std::string> storage{"acp"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "acp: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    const RunOptions opt = run_options(g);

    if (*stats) {
      const PackingDescriptor p = packing_from_spec(g.root);
      std::ostringstream csv;
      write_csv(csv, ratio_series(p, stats_bound, stats_points, opt, stats_min));
      emit(out_path, csv.str(), out);
    } else if (*orbit) {
      const PackingDescriptor p = packing_from_spec(g.root);
      const OrbitModD o = orbit_mod(p, modulus);
      const auto gamma = residue_proportions(o);
      json j;
      j["modulus"] = o.modulus;
      j["size"] = o.size();
      j["states"] = o.states;
      j["gamma"] = gamma_json(gamma);
      json admissible = json::array();
      for (std::size_t n = 0; n < gamma.size(); ++n) {
        if (gamma[n] > Rational(0)) admissible.push_back(n);
      }
      j["admissible"] = admissible;
      emit(out_path, j.dump() + "\n", out);
    } else if (*residues) {
      const PackingDescriptor p = packing_from_spec(g.root);
      const ResidueProfile profile = gamma_profile(p);
      json j;
      j["root"] = p.root.v;
      j["modulus"] = 24;
      j["gamma"] = gamma_json({profile.gamma.begin(), profile.gamma.end()});
      j["admissible"] = profile.admissible;
      emit(out_path, j.dump() + "\n", out);
    } else if (*exceptions) {
      const PackingDescriptor p = packing_from_spec(g.root);
      emit(out_path, find_exceptions(p, lo, hi, residue, opt).to_json() + "\n", out);
    } else if (*hist) {
      const PackingDescriptor p = packing_from_spec(g.root);
      save_acph(out_path, histogram(p, lo, hi, opt));
    } else if (*summary) {
      const CurvatureHistogram h = load_acph(acph_path);
      const PackingDescriptor p = validate_packing(h.root);
      const FrequencyDistribution d = frequency_distribution(h, summary_residue);
      // N(hi) - N(lo) is exactly the number of circles recorded in the window.
      MeanInputs in;
      in.circles_lo = 0;
      in.circles_hi = h.total();
      const double predicted =
          predicted_mean(gamma_profile(p), summary_residue, static_cast<Curvature>(h.lo),
                         static_cast<Curvature>(h.hi), in);
      std::ostringstream csv;
      csv << "m,count\n";
      for (const auto& [m, count] : d.delta) csv << m << ',' << count << '\n';
      csv << "mean,variance,predicted_mean\n"
          << fmt12(d.mean) << ',' << fmt12(d.variance) << ',' << fmt12(predicted) << '\n';
      emit(out_path, csv.str(), out);
    } else if (*constants) {
      const double l = catalan_L2chi4(tolerance);
      const Enclosure c = kissing_constant_c(prime_bound);
      json j;
      j["L2chi4"] = l;
      j["c"] = c.value();
      j["c_error"] = c.half_width();
      j["alpha"] = kissing_ratio_alpha(c.value(), l);
      j["delta"] = kDelta;
      out << j.dump() << "\n";
    } else if (*render) {
      const PackingDescriptor p = packing_from_spec(g.root);
      svg.labels = !no_labels;
      emit(out_path, render_svg(p, max_curvature, svg), out);
    } else if (*fit) {
      const PackingDescriptor p = packing_from_spec(g.root);
      const PrimeStatSeries s = prime_stats(p, fit_xs, opt);
      std::vector<std::pair<double, double>> samples;
      json pts = json::array();
      for (const PrimeStatRow& r : s.rows) {
        samples.emplace_back(static_cast<double>(r.x), static_cast<double>(r.circles));
        pts.push_back({r.x, r.circles});
      }
      const GrowthFit f = fit_growth(samples);
      json j;
      j["root"] = p.root.v;
      j["samples"] = pts;
      j["delta"] = f.delta;
      j["c"] = f.c;
      out << j.dump() << "\n";
    }
  } catch (const CapacityError& e) {
    err << "acp: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ArithmeticOverflow& e) {
    err << "acp: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InvariantViolation& e) {
    err << "acp: internal invariant violated: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "acp: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace acp::cli

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclab/acceptance.hpp"
#include "cyclab/approximants.hpp"
#include "cyclab/branches.hpp"
#include "cyclab/classifier.hpp"
#include "cyclab/dilation.hpp"
#include "cyclab/errors.hpp"
#include "cyclab/expression.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/report.hpp"
#include "cyclab/spaces.hpp"
#include "cyclab/zerosets.hpp"

using namespace cyclab;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Inline expression, or a path to a {"coeffs": ...} file.
BivariateSeries load_poly(const std::string& src) {
  if (src.size() > 5 && src.ends_with(".json")) {
    Json j;
    try {
      j = Json::parse(read_file(src));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::Parse, src + ": " + e.what());
    }
    return series_from_json(j);
  }
  return parse_polynomial(src);
}

WeightPair weights(const Json& cfg) {
  const auto& a = cfg.at("alpha");
  return {a.at(0).get<double>(), a.at(1).get<double>()};
}

BasisShape shape_of(const std::string& s) {
  if (s == "square") return BasisShape::square;
  if (s == "diagonal") return BasisShape::diagonal;
  throw ConfigError("unknown shape '" + s + "'");
}

std::vector<BivariateSeries> factors_of(const Json& cfg) {
  std::vector<BivariateSeries> out;
  if (cfg.contains("factors"))
    for (const auto& f : cfg["factors"]) out.push_back(series_from_json(f));
  return out;
}

struct Outcome {
  std::string text;
  int code = 0;
};

Outcome wrap_json(const Json& cfg, Json result) {
  result["config"] = cfg;
  return {result.dump(2) + "\n", 0};
}

Outcome run_norm(const Json& cfg) {
  const auto p = series_from_json(cfg.at("poly"));
  const WeightPair w = weights(cfg);
  const double n = coeff_norm_sq(p, w);
  if (cfg.at("format") == "json") {
    Json r{{"norm_sq", n}};
    if (w.alpha1 < 2.0 && w.alpha2 < 2.0) {
      const auto in = seminorm_moments(p, w);
      r["integral"] = {{"constant", in.constant}, {"axis1", in.axis1}, {"axis2", in.axis2},
                       {"mixed", in.mixed}, {"total", in.total()}};
    }
    return wrap_json(cfg, r);
  }
  return {format_double(n) + "\n", 0};
}

Outcome run_approx(const Json& cfg) {
  const auto p = series_from_json(cfg.at("poly"));
  const WeightPair w = weights(cfg);
  const int nmax = cfg.at("nmax");
  const auto seq = distance_sequence(p, w, nmax, shape_of(cfg.at("shape")));
  if (cfg.at("format") == "csv") return {distance_csv(seq, cfg), 0};
  Json pts = Json::array();
  for (const auto& d : seq) pts.push_back({{"N", d.n}, {"dist_sq", d.dist_sq}});
  Json r{{"sequence", pts}};
  if (seq.size() >= 8) {
    const auto fit = decay_fit(seq);
    r["decay_fit"] = {{"regime", to_string(fit.regime)}, {"slope", fit.slope}, {"r_squared", fit.r_squared},
                      {"limit", fit.limit}, {"window_start", fit.window_start}, {"detail", fit.detail}};
  }
  return wrap_json(cfg, r);
}

Outcome run_dilate(const Json& cfg) {
  const auto p = series_from_json(cfg.at("poly"));
  const auto grid = cfg.at("r_grid").get<std::vector<double>>();
  const auto sweep = two_var_sweep(p, weights(cfg), grid, cfg.at("box_cap"));
  if (cfg.at("format") == "csv") return {dilation_csv(sweep, cfg), 0};
  Json recs = Json::array();
  std::vector<double> norms;
  for (const auto& d : sweep) {
    recs.push_back({{"r", d.r}, {"norm_sq", d.norm_sq}, {"seminorm", std::isnan(d.seminorm) ? Json() : Json(d.seminorm)},
                    {"box", {d.box.k, d.box.l}}, {"tail", d.tail}, {"reliable", d.reliable}});
    norms.push_back(d.norm_sq);
  }
  Json r{{"records", recs}};
  if (norms.size() >= 3) {
    const auto b = assess_boundedness(norms);
    r["boundedness"] = {{"max_over_min", b.max_over_min}, {"last_decade_growth", b.last_decade_growth},
                        {"bounded", b.bounded}, {"divergent", b.divergent}};
  }
  return wrap_json(cfg, r);
}

Outcome run_zeroset(const Json& cfg) {
  const int grid_n = cfg.at("grid_n");
  auto one = [&](const BivariateSeries& p) {
    return zeroset_to_json(torus_zero_search(p, grid_n), stability_check(p));
  };
  const auto p = series_from_json(cfg.at("poly"));
  Json r = one(p);
  const auto fs = factors_of(cfg);
  if (!fs.empty()) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(one(f));
    r["factors"] = arr;
  }
  return wrap_json(cfg, r);
}

Outcome run_branches(const Json& cfg) {
  const auto p = series_from_json(cfg.at("poly"));
  const auto S = singular_set(p);
  Json pts = Json::array();
  for (const auto& s : S) {
    Json e{{"a", complex_to_json(s.a)}, {"kind", to_string(s.kind)}, {"discriminant", s.discriminant}};
    try {
      const auto perm = monodromy_around(p, s.a, S);
      e["monodromy"] = one_line(perm);
      e["transposition"] = is_transposition(perm);
    } catch (const Error& err) {
      e["monodromy_error"] = err.what();
    }
    if (std::abs(s.a) < 1.0) e["exponent"] = exponent_to_json(branch_exponent(p, s.a));
    pts.push_back(std::move(e));
  }
  Json r{{"singular_set", pts}};
  if (cfg.value("track", false)) {
    // One loop around the origin at radius 1/2, clear of the singular set.
    r["track"] = track_to_json(track_branches(p, circle_path(0.0, cfg.value("track_radius", 0.5)), S));
  }
  r["hopf"] = hopf_to_json(hopf_ratio(p, cfg.at("samples"), cfg.at("seed").get<std::uint64_t>()));
  return wrap_json(cfg, r);
}

Outcome run_classify(const Json& cfg) {
  const auto p = series_from_json(cfg.at("poly"));
  Assertions as;
  as.irreducible = cfg.at("irreducible");
  as.factors = factors_of(cfg);
  AnalyzeOptions opt;
  opt.grid_n = cfg.at("grid_n");
  const WeightPair w = weights(cfg);
  auto v = classify(p, w, as, opt);
  if (cfg.at("cross_validate") && v.verdict != Verdict::out_of_theorem_scope) {
    const int n = cfg.at("nmax").get<int>() > 0 ? cfg.at("nmax").get<int>() : default_cross_nmax(p);
    v.cross_check = cross_validate(p, w, v, n);
  }
  return wrap_json(cfg, verdict_to_json(v));
}

Outcome run_fr(const Json& cfg) {
  const double v = forelli_rudin(cfg.at("a"), cfg.at("b"), cfg.at("w"));
  if (cfg.at("format") == "json") return wrap_json(cfg, Json{{"value", v}});
  return {format_double(v) + "\n", 0};
}

Outcome run_suite(const Json& cfg) {
  const auto results = run_acceptance(cfg.at("criteria").get<std::vector<int>>());
  bool all = true;
  if (cfg.at("format") == "json") {
    Json arr = Json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    Outcome o = wrap_json(cfg, Json{{"criteria", arr}, {"all_pass", all}});
    o.code = all ? 0 : 3;
    return o;
  }
  std::string out;
  char line[128];
  for (const auto& r : results) {
    all = all && r.pass;
    std::snprintf(line, sizeof line, "%2d  %-4s %-28s %8.2fs  ", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                  r.seconds);
    out += line + r.detail + "\n";
  }
  return {out, all ? 0 : 3};
}

Outcome run(const Json& cfg) {
  if (cfg.contains("threads") && cfg["threads"].get<int>() > 0) set_thread_count(cfg["threads"]);
  const std::string cmd = cfg.at("command");
  if (cmd == "norm") return run_norm(cfg);
  if (cmd == "approx") return run_approx(cfg);
  if (cmd == "dilate") return run_dilate(cfg);
  if (cmd == "zeroset") return run_zeroset(cfg);
  if (cmd == "branches") return run_branches(cfg);
  if (cmd == "classify") return run_classify(cfg);
  if (cmd == "fr-integral") return run_fr(cfg);
  if (cmd == "suite") return run_suite(cfg);
  throw ConfigError("unknown command '" + cmd + "'");
}

// The config recorded in a JSON artifact, or on the comment line of a CSV.
Json config_from_artifact(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (text.starts_with("# ")) return Json::parse(text.substr(2, text.find('\n') - 2));
    return Json::parse(text).at("config");
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": no recorded config (" + e.what() + ")");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclab: cyclicity experiments for polynomials in Dirichlet-type spaces on the bidisk"};
  app.require_subcommand(1);

  std::string poly;
  std::vector<double> alpha{0.0, 0.0};
  int nmax = 24;
  std::string shape = "square";
  std::string format;
  std::string out_path;
  int grid_n = 512;
  std::vector<double> r_grid{0.5, 0.9, 0.99, 0.999};
  int box_cap = 512;
  std::uint64_t seed = 0;
  int samples = 4096;
  int threads = 0;
  bool irreducible = false;
  bool cross = false;
  bool track = false;
  std::vector<std::string> factors;
  double fr_a = 0.0, fr_b = 0.0, fr_w = 0.9;
  std::vector<int> criteria;
  std::string artifact;

  auto add_poly = [&](CLI::App* s) {
    s->add_option("-p,--poly", poly, "polynomial expression in z1, z2, or a .json coefficient file")->required();
  };
  auto add_alpha = [&](CLI::App* s) {
    s->add_option("--alpha", alpha, "weight pair alpha1 alpha2")->expected(2)->required();
  };
  auto add_common = [&](CLI::App* s, const std::string& default_format) {
    format = "";
    s->add_option("--format", format, "output format (json|csv)")->default_str(default_format);
    s->add_option("--out", out_path, "write output to this file (atomic)");
    s->add_option("--threads", threads, "worker threads (overrides CYCLAB_THREADS)");
  };

  auto* norm = app.add_subcommand("norm", "coefficient norm squared");
  add_poly(norm);
  add_alpha(norm);
  add_common(norm, "text");

  auto* approx = app.add_subcommand("approx", "optimal approximant distance sequence");
  add_poly(approx);
  add_alpha(approx);
  approx->add_option("--nmax", nmax, "largest box index")->capture_default_str();
  approx->add_option("--shape", shape, "basis shape (square|diagonal)")->capture_default_str();
  add_common(approx, "csv");

  auto* dilate = app.add_subcommand("dilate", "radial dilation quotient sweep");
  add_poly(dilate);
  add_alpha(dilate);
  dilate->add_option("--r-grid", r_grid, "dilation radii")->capture_default_str();
  dilate->add_option("--box-cap", box_cap, "largest truncation box per axis")->capture_default_str();
  add_common(dilate, "csv");

  auto* zeroset = app.add_subcommand("zeroset", "torus zero set and stability");
  add_poly(zeroset);
  zeroset->add_option("--grid-n", grid_n, "angular grid resolution")->capture_default_str();
  zeroset->add_option("--factor", factors, "factor to analyse separately (repeatable)");
  add_common(zeroset, "json");

  auto* branches = app.add_subcommand("branches", "singular set, monodromy, exponents, Hopf ratio");
  add_poly(branches);
  branches->add_option("--seed", seed, "quasi-random sample offset")->capture_default_str();
  branches->add_option("--samples", samples, "Hopf ratio sample count")->capture_default_str();
  branches->add_flag("--track", track, "include a tracked loop of radius 1/2 around the origin");
  add_common(branches, "json");

  auto* classify_cmd = app.add_subcommand("classify", "cyclicity verdict");
  add_poly(classify_cmd);
  add_alpha(classify_cmd);
  classify_cmd->add_flag("--irreducible", irreducible, "assert that p is irreducible");
  classify_cmd->add_option("--factor", factors, "irreducible factor of p (repeatable)");
  classify_cmd->add_option("--grid-n", grid_n, "angular grid resolution")->capture_default_str();
  classify_cmd->add_flag("--cross-validate", cross, "compare with the decay of optimal approximants");
  classify_cmd->add_option("--nmax", nmax, "cross-validation box limit (0: automatic)");
  add_common(classify_cmd, "json");

  auto* fr = app.add_subcommand("fr-integral", "weighted kernel integral over the disk");
  fr->add_option("--a", fr_a, "exponent of (1 - |z|), > -1")->capture_default_str();
  fr->add_option("--b", fr_b, "excess kernel exponent")->capture_default_str();
  fr->add_option("--w", fr_w, "modulus of w in [0, 1)")->capture_default_str();
  add_common(fr, "text");

  auto* suite = app.add_subcommand("suite", "acceptance criteria table");
  suite->add_option("--criteria", criteria, "criterion ids (default: all)");
  add_common(suite, "text");

  auto* rerun = app.add_subcommand("rerun", "repeat the run recorded in a JSON or CSV artifact");
  rerun->add_option("artifact", artifact, "artifact file")->required();
  rerun->add_option("--out", out_path, "write output to this file (atomic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  try {
    Json cfg;
    if (cmd == "rerun") {
      cfg = config_from_artifact(artifact);
    } else {
      if (nmax == 24 && cmd == "classify" && sub->count("--nmax") == 0) nmax = 0;
      cfg["command"] = cmd;
      const std::string fmt_default =
          (cmd == "approx" || cmd == "dilate") ? "csv" : (cmd == "zeroset" || cmd == "branches" || cmd == "classify") ? "json" : "text";
      cfg["format"] = format.empty() ? fmt_default : format;
      if (cmd == "approx" || cmd == "dilate") {
        if (cfg["format"] != "csv" && cfg["format"] != "json") throw ConfigError("--format must be csv or json");
      } else if (cmd == "zeroset" || cmd == "branches" || cmd == "classify") {
        if (cfg["format"] != "json") throw ConfigError("--format must be json");
      } else if (cfg["format"] != "text" && cfg["format"] != "json") {
        throw ConfigError("--format must be text or json");
      }
      if (sub->get_option_no_throw("--poly")) {
        cfg["poly"] = series_to_json(load_poly(poly));
        cfg["poly_source"] = poly;
      }
      if (sub->get_option_no_throw("--alpha")) cfg["alpha"] = alpha;
      if (cmd == "approx") {
        shape_of(shape);
        cfg["nmax"] = nmax;
        cfg["shape"] = shape;
      }
      if (cmd == "dilate") {
        cfg["r_grid"] = r_grid;
        cfg["box_cap"] = box_cap;
      }
      if (cmd == "zeroset" || cmd == "classify") {
        cfg["grid_n"] = grid_n;
        Json fs = Json::array();
        for (const auto& f : factors) fs.push_back(series_to_json(load_poly(f)));
        if (!fs.empty()) cfg["factors"] = fs;
      }
      if (cmd == "branches") {
        cfg["seed"] = seed;
        cfg["samples"] = samples;
        cfg["track"] = track;
      }
      if (cmd == "classify") {
        cfg["irreducible"] = irreducible;
        cfg["cross_validate"] = cross;
        cfg["nmax"] = nmax;
      }
      if (cmd == "fr-integral") {
        cfg["a"] = fr_a;
        cfg["b"] = fr_b;
        cfg["w"] = fr_w;
      }
      if (cmd == "suite") cfg["criteria"] = criteria;
      cfg["threads"] = threads;
    }

    const Outcome o = run(cfg);
    if (out_path.empty()) {
      std::cout << o.text;
    } else {
      write_file_atomic(out_path, o.text);
    }
    return o.code;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::InvalidArgument) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

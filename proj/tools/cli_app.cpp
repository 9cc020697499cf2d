#include "cli_app.hpp"

#include <cmath>
#include <fstream>

#include "CLI11.hpp"
#include "troplat/amoeba.hpp"
#include "troplat/io.hpp"
#include "troplat/measure.hpp"

namespace troplat::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  int json_indent = -1;
  std::uint64_t seed = 1;
  int trials = 1000;
  std::uint64_t prime = 101;
  std::int64_t trunc = 10;
  double alpha = 1.0;
  double lambda = 3.0;
  double radius = 10.0;
  std::string point;
  std::string subset;
  std::string density;
  bool sigma_only = false;
  bool atom = false;
};

void emit(const Json& j, const Options& opt, std::ostream& out) {
  auto dump = j.dump(opt.json_indent) + "\n";
  if (opt.output.empty()) {
    out << dump;
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw Error(errc::io_error, "cannot write " + opt.output);
  f << dump;
}

LatticeMatrix load(const Options& opt) {
  if (opt.input.empty()) throw Error(errc::bad_document, "missing input document (-i)");
  return load_matrix_document(opt.input).to_matrix();
}

std::vector<Rational> finite_coords(const TropicalPoint& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.value());
  return out;
}

Json cmd_entropy(const Options& opt) { return entropy_to_json(entropy_vector(load(opt))); }

Json cmd_bimatroid(const Options& opt) {
  BimatroidTable nu = minor_valuations(load(opt));
  Json j = bimatroid_to_json(nu);
  Json violations = Json::array();
  for (const auto& v : bimatroid_axiom_check(nu)) {
    violations.push_back(Json{{"axiom", v.axiom},
                              {"I", subset_to_string(v.I, nu.r)},
                              {"J", subset_to_string(v.J, nu.n)},
                              {"I2", subset_to_string(v.I2, nu.r)},
                              {"J2", subset_to_string(v.J2, nu.n)}});
  }
  j["axiom_violations"] = std::move(violations);
  Json h = entropy_to_json(entropy_from_bimatroid(nu));
  j["h"] = h.at("h");
  return j;
}

Json cmd_generators(const Options& opt) {
  EntropyVector h = entropy_vector(load(opt));
  Json j;
  j["n"] = h.n;
  j["generators"] = generators_to_json(generators(h), h.n);
  return j;
}

Json cmd_complex(const Options& opt, bool with_vrep) {
  LatticeMatrix a = load(opt);
  if (with_vrep && a.cols() > 3)
    throw Error(errc::guard_exceeded, "plot export limited to n <= 3");
  EntropyVector h = entropy_vector(a);
  Complex c = enumerate_complex(h);
  label_and_extract_sigma(c);
  return complex_to_json(c, h, opt.sigma_only, with_vrep);
}

Json cmd_member(const Options& opt) {
  EntropyVector h = entropy_vector(load(opt));
  TropicalPoint v = parse_point(opt.point);
  PhiResult phi = phi_eval(h, v);
  Json j;
  j["member"] = is_member(h, v);
  j["phi"] = to_string(phi.value);
  Json active = Json::array();
  for (Mask J : phi.active) active.push_back(subset_to_string(J, h.n));
  j["active"] = std::move(active);
  return j;
}

Json cmd_reconstruct(const Options& opt) {
  EntropyVector h = entropy_vector(load(opt));
  ReconstructResult r = reconstruct(h, parse_point(opt.point));
  Json lj = Json::object();
  for (const auto& [J, lam] : r.lambda) lj[subset_to_string(J, h.n)] = to_string(lam);
  Json j;
  j["lambda"] = std::move(lj);
  j["recombined"] = point_to_json(r.recombined);
  j["ok"] = r.ok;
  return j;
}

Json cmd_sample(const Options& opt) {
  LatticeMatrix a = load(opt);
  EntropyVector h = entropy_vector(a);
  SampleConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  auto samples = sample_lattice_valuation(a, cfg);
  bool all_members = true;
  Json pts = Json::array();
  for (const auto& s : samples) {
    all_members = all_members && is_member(h, s);
    pts.push_back(point_to_json(s));
  }
  Json j;
  j["trials"] = opt.trials;
  j["seed"] = opt.seed;
  j["samples"] = std::move(pts);
  j["all_members"] = all_members;
  return j;
}

Json cmd_witness(const Options& opt) {
  LatticeMatrix a = load(opt);
  if (opt.subset.empty()) throw Error(errc::bad_document, "missing --subset");
  Mask J = parse_subset(opt.subset, a.cols());
  SampleConfig cfg;
  cfg.seed = opt.seed;
  Witness w = witness_for_generator(a, J, cfg);
  Json j = witness_to_json(w, a.cols());
  j["subset"] = opt.subset;
  return j;
}

Json cmd_ff_survival(const Options& opt) {
  LatticeMatrix a = load(opt);
  FfConfig cfg;
  cfg.prime = opt.prime;
  cfg.trunc = opt.trunc;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;

  Json j;
  j["prime"] = cfg.prime;
  j["trunc"] = cfg.trunc;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  auto point_report = [&](const std::vector<Rational>& v) {
    SurvivalPoint s = ff_survival(a, v, cfg);
    Json pj;
    Json coords = Json::array();
    for (const auto& c : v) coords.push_back(to_string(c));
    pj["v"] = std::move(coords);
    pj["phi"] = to_string(s.phi);
    pj["exact"] = s.exact;
    pj["empirical"] = s.empirical;
    double sigma = std::sqrt(std::max(s.exact * (1 - s.exact), 0.0) / s.trials);
    pj["abs_dev"] = std::fabs(s.empirical - s.exact);
    pj["three_sigma"] = 3 * sigma;
    return pj;
  };

  if (!opt.point.empty()) {
    j["points"] = Json::array({point_report(finite_coords(parse_point(opt.point)))});
    return j;
  }
  // default grid {0,1,2}^n
  Json points = Json::array();
  int n = a.cols();
  std::vector<int> g(n, 0);
  while (true) {
    std::vector<Rational> v(g.begin(), g.end());
    points.push_back(point_report(v));
    int k = n - 1;
    while (k >= 0 && g[k] == 2) g[k--] = 0;
    if (k < 0) break;
    ++g[k];
  }
  j["points"] = std::move(points);
  return j;
}

Json cmd_amoeba(const Options& opt, std::ostream& out) {
  LatticeMatrix a = load(opt);
  double t = std::exp(-opt.lambda);
  AmoebaCloud cloud = sample_amoeba(a, t, opt.trials, opt.seed);
  EntropyVector h = entropy_vector(a);
  Complex c = enumerate_complex(h);
  label_and_extract_sigma(c);
  double dist = distance_to_sigma(cloud, c);

  if (!opt.output.empty() && opt.output.size() > 4 &&
      opt.output.substr(opt.output.size() - 4) == ".csv") {
    std::ofstream f(opt.output);
    if (!f) throw Error(errc::io_error, "cannot write " + opt.output);
    for (int j = 0; j < a.cols(); ++j) f << (j ? "," : "") << "x" << (j + 1);
    f << "\n";
    f.precision(17);
    for (const auto& p : cloud.points) {
      for (std::size_t j = 0; j < p.size(); ++j) f << (j ? "," : "") << p[j];
      f << "\n";
    }
    Json j;
    j["points_written"] = cloud.points.size();
    j["one_sided_distance"] = dist;
    out << j.dump(opt.json_indent) << "\n";
    return Json();  // already emitted
  }

  Json j;
  j["lambda"] = opt.lambda;
  j["t"] = t;
  j["seed"] = opt.seed;
  j["requested"] = cloud.requested;
  Json pts = Json::array();
  for (const auto& p : cloud.points) pts.push_back(p);
  j["points"] = std::move(pts);
  j["one_sided_distance"] = dist;
  return j;
}

Json cmd_measure(const Options& opt) {
  if (!opt.density.empty()) {
    ProjectedFamily family;
    if (opt.density == "mixture") family = ProjectedFamily::MixtureAtomLaplace;
    else if (opt.density == "plane") family = ProjectedFamily::PlaneExponential;
    else if (opt.density == "rays") family = ProjectedFamily::ThreeRayLine;
    else throw Error(errc::bad_document, "unknown density family: " + opt.density);
    Json j;
    j["family"] = opt.density;
    j["alpha"] = opt.alpha;
    if (opt.atom) {
      j["atom_mass"] = projected_atom_mass(family, opt.alpha);
    } else {
      std::vector<double> pt;
      for (const auto& c : finite_coords(parse_point(opt.point))) pt.push_back(to_double(c));
      j["point"] = pt;
      j["density"] = projected_density(family, opt.alpha, pt);
    }
    return j;
  }

  SurvivalSpec spec{entropy_vector(load(opt)), opt.alpha};
  ScanResult scan = positivity_scan(spec, opt.trials, opt.radius, opt.seed);
  Json j;
  j["alpha"] = opt.alpha;
  j["cubes"] = scan.cubes;
  j["radius"] = opt.radius;
  j["seed"] = opt.seed;
  j["min_mass"] = scan.min_mass;
  j["argmin"] = Json{{"u", scan.u}, {"v", scan.v}};
  j["note"] = "observational scan; nonnegativity of box masses is reported, never asserted";
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropicalization of finitely generated lattices over Puiseux series"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "matrix document (JSON)");
    sub->add_option("-o,--output", opt.output, "output path (default stdout)");
    sub->add_option("--json-indent", opt.json_indent, "indentation for JSON output");
    sub->add_option("--seed", opt.seed, "random seed");
    sub->add_option("--trials", opt.trials, "trial/sample/cube count");
    sub->add_option("--prime", opt.prime, "prime modulus");
    sub->add_option("--trunc", opt.trunc, "series truncation index");
    sub->add_option("--alpha", opt.alpha, "survival exponent");
    sub->add_option("--lambda", opt.lambda, "amoeba scale (t = exp(-lambda))");
    sub->add_option("--radius", opt.radius, "scan box radius");
    sub->add_option("--point", opt.point, "comma-separated rational coordinates");
    sub->add_option("--subset", opt.subset, "column subset, e.g. \"13\"");
    sub->add_option("--density", opt.density, "density family: mixture|plane|rays");
    sub->add_flag("--sigma-only", opt.sigma_only, "restrict output to the sigma subcomplex");
    sub->add_flag("--atom", opt.atom, "report the atomic mass of the density family");
    return sub;
  };

  std::vector<std::string> names = {"entropy",   "complex", "generators",  "member",
                                    "reconstruct", "sample",  "witness",     "ff-survival",
                                    "amoeba",    "measure", "bimatroid",   "export-plot"};
  for (const auto& name : names) add_common(app.add_subcommand(name));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << "\n";
      return 0;
    }
    Json j;
    j["error"] = Json{{"code", "usage"}, {"message", e.what()}};
    err << j.dump() << "\n";
    return 2;
  }

  try {
    const std::string sub = app.get_subcommands().front()->get_name();
    Json result;
    if (sub == "entropy") result = cmd_entropy(opt);
    else if (sub == "bimatroid") result = cmd_bimatroid(opt);
    else if (sub == "generators") result = cmd_generators(opt);
    else if (sub == "complex") result = cmd_complex(opt, false);
    else if (sub == "export-plot") result = cmd_complex(opt, true);
    else if (sub == "member") result = cmd_member(opt);
    else if (sub == "reconstruct") result = cmd_reconstruct(opt);
    else if (sub == "sample") result = cmd_sample(opt);
    else if (sub == "witness") result = cmd_witness(opt);
    else if (sub == "ff-survival") result = cmd_ff_survival(opt);
    else if (sub == "measure") result = cmd_measure(opt);
    else if (sub == "amoeba") {
      result = cmd_amoeba(opt, out);
      if (result.is_null()) return 0;
    }
    emit(result, opt, out);
    return 0;
  } catch (const Error& e) {
    Json j;
    j["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = Json{{"code", errc::domain_error}, {"message", e.what()}};
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace troplat::cli

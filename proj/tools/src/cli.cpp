#include "cli.hpp"

#include "report_io.hpp"

#include "cfvar/catalog.hpp"
#include "cfvar/energy.hpp"
#include "cfvar/error.hpp"
#include "cfvar/invariant_algebra.hpp"
#include "cfvar/isopara_algebra.hpp"
#include "cfvar/jet_calculus.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

namespace cfvar::cli {

namespace {

constexpr int kSchema = 1;

struct ChartOptions {
  std::string family;
  std::vector<std::string> params;
  std::vector<int> grid;
  std::string mode = "induced";
  std::string config;
  std::string input;
  std::string ambient;
  int order = 4;
};

struct OutputOptions {
  bool json = false;
  std::string out;
};

void add_chart_options(CLI::App* sub, ChartOptions& o) {
  sub->add_option("--family", o.family, "built-in chart family id");
  sub->add_option("--param", o.params, "family parameter name=value (repeatable)");
  sub->add_option("--grid", o.grid, "grid size(s), one value or one per axis")->delimiter(',');
  sub->add_option("--mode", o.mode, "induced or explicit domain metric")->check(CLI::IsMember({"induced", "explicit"}));
  sub->add_option("--config", o.config, "JSON chart configuration file");
  sub->add_option("--input", o.input, "binary sampled map");
  sub->add_option("--ambient", o.ambient, "ambient of --input: euclidean:n, sphere:n[:c], hyperbolic:n[:c], pseudo:n:q");
  sub->add_option("--order", o.order, "stencil order")->check(CLI::IsMember({2, 4}));
}

void add_output_options(CLI::App* sub, OutputOptions& o) {
  sub->add_flag("--json", o.json, "emit JSON instead of text");
  sub->add_option("--out", o.out, "write the report to this path instead of stdout");
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgumentError("cannot read " + what + " '" + s + "' as a number");
  }
}

SpaceForm parse_ambient(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
  if (parts.size() < 2) throw ConfigError("ambient spec '" + spec + "' needs kind:dimension");
  const int n = static_cast<int>(parse_double(parts[1], "ambient dimension"));
  const auto& k = parts[0];
  if (k == "euclidean" && parts.size() == 2) return SpaceForm::euclidean(n);
  if (k == "sphere") return SpaceForm::sphere(n, parts.size() > 2 ? parse_double(parts[2], "curvature") : 1.0);
  if (k == "hyperbolic") return SpaceForm::hyperbolic(n, parts.size() > 2 ? parse_double(parts[2], "curvature") : -1.0);
  if (k == "pseudo" && parts.size() == 3)
    return SpaceForm::pseudo_euclidean(n, static_cast<int>(parse_double(parts[2], "index")));
  throw ConfigError("unknown ambient spec '" + spec + "'");
}

ChartedMap load_chart(const ChartOptions& o, int min_grid) {
  const int sources = !o.family.empty() + !o.config.empty() + !o.input.empty();
  if (sources != 1) throw InvalidArgumentError("give exactly one of --family, --config, --input");
  std::optional<ChartedMap> map;
  if (!o.input.empty()) {
    if (o.ambient.empty()) throw InvalidArgumentError("--input needs --ambient");
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw ConfigError("cannot open sampled map '" + o.input + "'");
    map = read_sampled_map(in, parse_ambient(o.ambient), o.input);
  } else {
    std::string family = o.family;
    FamilyParams params;
    std::vector<int> grid = o.grid;
    std::string mode = o.mode;
    if (!o.config.empty()) {
      std::ifstream in(o.config);
      if (!in) throw ConfigError("cannot open config '" + o.config + "'");
      Json j;
      try {
        j = Json::parse(in);
        if (!j.is_object()) throw ConfigError("top level is not an object");
        family = j.at("family").get<std::string>();
        if (j.contains("params"))
          for (auto it = j["params"].begin(); it != j["params"].end(); ++it) params[it.key()] = it.value().get<double>();
        if (j.contains("grid")) {
          grid.clear();
          if (j["grid"].is_array())
            for (const auto& x : j["grid"]) grid.push_back(x.get<int>());
          else
            grid.push_back(j["grid"].get<int>());
        }
        if (j.contains("mode")) mode = j["mode"].get<std::string>();
      } catch (const ConfigError& e) {
        throw ConfigError("malformed config '" + o.config + "': " + e.what());
      } catch (const Json::exception& e) {
        throw ConfigError("malformed config '" + o.config + "': " + e.what());
      }
      if (mode != "induced" && mode != "explicit") throw ConfigError("malformed config: mode must be induced or explicit");
    }
    for (const auto& kv : o.params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw InvalidArgumentError("--param expects name=value, got '" + kv + "'");
      params[kv.substr(0, eq)] = parse_double(kv.substr(eq + 1), "parameter " + kv.substr(0, eq));
    }
    if (grid.empty()) grid = {64};
    map = build_family(family, params, grid, mode == "explicit" ? MetricMode::Explicit : MetricMode::Induced);
  }
  for (int a = 0; a < map->m(); ++a)
    if (map->grid().axis(a).n < min_grid)
      throw InvalidArgumentError("grid must have at least " + std::to_string(min_grid) + " points per axis");
  return *map;
}

Json chart_json(const ChartedMap& map, int order) {
  Json j;
  j["name"] = map.name();
  j["m"] = map.m();
  Json g = Json::array();
  for (int a = 0; a < map.m(); ++a) g.push_back(map.grid().axis(a).n);
  j["grid"] = g;
  j["ambient"] = map.ambient().describe();
  j["mode"] = map.mode() == MetricMode::Induced ? "induced" : "explicit";
  j["stencil_order"] = order;
  return j;
}

Json norms_json(const NormSummary& s) { return Json{{"max", s.max}, {"l2", s.l2}}; }

Json deviation_json(const DeviationReport& d) {
  return Json{{"max_abs", d.max_abs}, {"scale", d.scale}, {"relative", d.relative}, {"points", d.points}};
}

Json energy_values_json(const EnergyValues& v) {
  return Json{{"Q1", v.q1}, {"Q2", v.q2}, {"CF", v.cf}, {"WC", v.wc}};
}

void emit(const Json& report, const OutputOptions& o, std::ostream& out, const std::string& text = {}) {
  const std::string body = o.json ? dump_json(report) : (text.empty() ? render_text(report) : text);
  if (o.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write '" + o.out + "'");
  f << body;
}

Json header(const std::string& command) { return Json{{"schema", kSchema}, {"command", command}}; }

// ------------------------------------------------------------- subcommands

struct InvariantsArgs {
  ChartOptions chart;
  OutputOptions output;
  bool random = false;
  int dim = 3, index = 0, codim = 2, cindex = 0;
  std::uint64_t seed = 1;
  long point = -1;
};

FormCoefficients random_form(const Signature& dom, const Signature& cod, std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  std::vector<Eigen::MatrixXd> slices;
  for (int a = 0; a < cod.dim; ++a) {
    Eigen::MatrixXd s(dom.dim, dom.dim);
    for (int i = 0; i < dom.dim; ++i)
      for (int j = 0; j <= i; ++j) s(i, j) = s(j, i) = n01(rng);
    slices.push_back(s);
  }
  return FormCoefficients(dom, cod, slices);
}

Json form_json(const FormCoefficients& h) {
  Json j{{"Q1", eval_q1(h)}, {"Q2", eval_q2(h)}, {"CF", eval_cf(h)}, {"WC", eval_wc(h)}};
  const S4SymmetryReport s4 = s4_symmetry_report(h);
  Json vals = Json::array(), signs = Json::array();
  for (int k = 0; k < 6; ++k) {
    vals.push_back(s4.values[static_cast<std::size_t>(k)]);
    signs.push_back(s4.sign[static_cast<std::size_t>(k)]);
  }
  j["cf_pattern"] = Json{{"base", s4.base_value},
                         {"sigma_values", vals},
                         {"sigma_signs", signs},
                         {"sigma3_defect", s4.antisymmetry_defect_sigma3},
                         {"sigma6_defect", s4.antisymmetry_defect_sigma6}};
  return j;
}

int cmd_invariants(const InvariantsArgs& a, std::ostream& out) {
  Json r = header("invariants");
  if (a.random) {
    if (a.index < 0 || a.index > a.dim || a.cindex < 0 || a.cindex > a.codim)
      throw InvalidArgumentError("signature index out of range");
    const Signature dom(a.dim, a.index), cod(a.codim, a.cindex);
    std::mt19937_64 rng(a.seed);
    const FormCoefficients h = random_form(dom, cod, rng);
    r["seed"] = a.seed;
    r["domain_signature"] = Json{{"dim", a.dim}, {"index", a.index}};
    r["codomain_signature"] = Json{{"dim", a.codim}, {"index", a.cindex}};
    r["form"] = form_json(h);
    const Eigen::MatrixXd ga = random_pseudo_orthogonal(dom, a.seed + 1);
    const Eigen::MatrixXd gb = random_pseudo_orthogonal(cod, a.seed + 2);
    const FormCoefficients moved = act_group(ga, gb, h);
    r["group_action"] = Json{{"Q1_change", std::abs(eval_q1(moved) - eval_q1(h))},
                             {"Q2_change", std::abs(eval_q2(moved) - eval_q2(h))}};
    emit(r, a.output, out);
    return kSuccess;
  }
  const ChartedMap map = load_chart(a.chart, 8);
  ChartGeometry geo(map, GeometryOptions{a.chart.order, 1e8});
  r["chart"] = chart_json(map, a.chart.order);
  const auto pts = geo.interior_points();
  double lo[4], hi[4], sum[4];
  for (int k = 0; k < 4; ++k) lo[k] = 1e300, hi[k] = -1e300, sum[k] = 0;
  for (std::size_t p : pts) {
    const FormCoefficients h = geo.second_fundamental_form(p);
    const double v[4] = {eval_q1(h), eval_q2(h), eval_cf(h), eval_wc(h)};
    for (int k = 0; k < 4; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
      sum[k] += v[k];
    }
  }
  const char* names[4] = {"Q1", "Q2", "CF", "WC"};
  Json dens;
  for (int k = 0; k < 4; ++k)
    dens[names[k]] = Json{{"min", lo[k]}, {"max", hi[k]}, {"mean", pts.empty() ? 0.0 : sum[k] / pts.size()}};
  r["interior_points"] = pts.size();
  r["densities"] = dens;
  const std::size_t p = a.point >= 0 ? static_cast<std::size_t>(a.point) : (pts.empty() ? 0 : pts[pts.size() / 2]);
  if (p >= geo.size()) throw InvalidArgumentError("--point out of range");
  Json at = form_json(geo.second_fundamental_form(p));
  at["point"] = p;
  Json u = Json::array();
  for (double x : geo.grid().coords(p)) u.push_back(x);
  at["coords"] = u;
  r["at_point"] = at;
  emit(r, a.output, out);
  return kSuccess;
}

struct ResidualArgs {
  ChartOptions chart;
  OutputOptions output;
  double alpha = -1.0, beta = 1.0;
  std::string csv;
  double tol = -1.0;
};

int cmd_residual(const ResidualArgs& a, std::ostream& out) {
  const ChartedMap map = load_chart(a.chart, 16);
  ChartGeometry geo(map, GeometryOptions{a.chart.order, 1e8});
  const CovariantJets jets = covariant_jets(geo);
  const ResidualField res = residuals(geo, jets, a.alpha, a.beta);
  Json r = header("residual");
  r["chart"] = chart_json(map, a.chart.order);
  r["alpha"] = a.alpha;
  r["beta"] = a.beta;
  r["margin"] = geo.margin();
  r["interior_points"] = geo.interior_points().size();
  const NormSummary cf = summarize(geo, res.cf);
  r["norms"] = Json{{"W1", norms_json(summarize(geo, res.w1))},
                    {"W2", norms_json(summarize(geo, res.w2))},
                    {"CF", norms_json(cf)},
                    {"WC", norms_json(summarize(geo, res.wc))},
                    {"alpha_beta", norms_json(summarize(geo, res.alpha_beta))}};
  if (geo.immersion_mode()) {
    const SecondOrderCF so = cf_residual_second_order(geo);
    r["second_order_cf"] = Json{{"tangent", norms_json(summarize(geo, so.tangent))},
                                {"normal", norms_json(summarize(geo, so.normal))},
                                {"total", norms_json(summarize(geo, so.total))}};
    r["oracle_equivalence"] = deviation_json(oracle_equivalence(geo, jets));
  }
  if (!a.csv.empty()) {
    std::ofstream f(a.csv);
    if (!f) throw ConfigError("cannot write '" + a.csv + "'");
    write_residual_csv(f, geo, res);
  }
  bool ok = true;
  if (a.tol >= 0) {
    ok = summarize(geo, res.alpha_beta).max <= a.tol;
    r["verdict"] = ok ? "pass" : "fail";
  }
  emit(r, a.output, out);
  return ok ? kSuccess : kVerdictFailure;
}

struct EnergyArgs {
  ChartOptions chart;
  OutputOptions output;
  double homothety = 0.0;
  bool allow_open = false;
};

int cmd_energy(const EnergyArgs& a, std::ostream& out) {
  const ChartedMap map = load_chart(a.chart, 8);
  EnergyOptions eo;
  eo.geometry.stencil_order = a.chart.order;
  eo.allow_open = a.allow_open;
  const EnergyReport er = integrate_invariants(map, eo);
  Json r = header("energy");
  r["chart"] = chart_json(map, a.chart.order);
  r["invariant"] = er.invariant;
  r["volume"] = er.volume;
  r["integrals"] = energy_values_json(er.values);
  r["half_grid"] = er.half_grid ? energy_values_json(*er.half_grid) : Json(nullptr);
  r["quadrature_error"] = er.quadrature_error;
  ChartGeometry geo(map, eo.geometry);
  const double e2 = bienergy(geo);
  r["bienergy"] = e2;
  r["Q2_minus_2E2"] = er.values.q2 - 2 * e2;
  if (a.homothety > 0) {
    const HomothetyReport h = homothety_check(map, a.homothety, eo.geometry);
    r["homothety"] = Json{{"scale", h.scale},
                          {"invariance_expected", h.invariance_expected},
                          {"expected_factor", h.expected_factor},
                          {"base", energy_values_json(h.base)},
                          {"scaled", energy_values_json(h.scaled)},
                          {"relative_change_Q1", h.relative_change_q1},
                          {"relative_change_Q2", h.relative_change_q2},
                          {"law_defect_Q1", h.law_defect_q1},
                          {"law_defect_Q2", h.law_defect_q2}};
  }
  emit(r, a.output, out);
  return kSuccess;
}

struct IsoparaArgs {
  OutputOptions output;
  int g = 0;
  std::string family;
  std::vector<int> mult;
  int m = 0, p = 1;
  std::string kind = "CF";
  std::string c = "1";
};

int cmd_isopara(const IsoparaArgs& a, std::ostream& out) {
  Rational c;
  try {
    c = Rational(a.c);
  } catch (const std::exception&) {
    throw InvalidArgumentError("--c must be a rational number, got '" + a.c + "'");
  }
  const ConditionKind kind = parse_condition_kind(a.kind);
  Json r = header("isopara");
  int g = a.g;
  std::vector<int> mult = a.mult;
  if (!a.family.empty()) {
    if (!mult.empty()) throw InvalidArgumentError("give either --family or --mult");
    const IsoparaFamily f = isopara_family(a.family, a.g, a.m, a.p);
    g = f.g;
    mult = f.multiplicities;
    r["family"] = f.id;
    r["title"] = f.title;
    if (!f.evidence.empty()) r["multiplicity_evidence"] = f.evidence;
  } else if (mult.empty()) {
    throw InvalidArgumentError("isopara needs --family or --g with --mult");
  }
  const PrincipalSpectrum s = spherical_family_spectrum(g, mult, c);
  const ConditionPolynomial cp = condition_polynomial(s, kind);
  r["g"] = g;
  r["multiplicities"] = mult;
  r["m"] = s.m();
  r["kind"] = to_string(kind);
  r["c"] = to_string(c);
  r["identically_zero"] = cp.identically_zero;
  Json coeffs = Json::array();
  for (const auto& x : cp.coefficients) coeffs.push_back(to_string(x));
  r["coefficients"] = coeffs;
  r["polynomial"] = cp.identically_zero ? "0" : cp.poly().to_string();
  r["zero_root_multiplicity"] = cp.zero_root_multiplicity;
  const OpenInterval range = c == 1 ? family_lambda_range(g)
                                    : OpenInterval{ExactPoint::rational(0), ExactPoint::infinity()};
  r["interval"] = range.to_string();
  Json roots = Json::array();
  if (!cp.identically_zero)
    for (const auto& e : isolate_positive_roots(cp, range).roots) {
      Json x{{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}, {"value", e.midpoint()}, {"width", e.width()}};
      if (g == 1) x["radius"] = radius_from_lambda(e.midpoint());
      roots.push_back(x);
    }
  r["roots"] = roots;
  emit(r, a.output, out);
  return kSuccess;
}

struct CatalogArgs {
  OutputOptions output;
  int max_m = 8;
  bool families = false;
};

int cmd_catalog(const CatalogArgs& a, std::ostream& out) {
  if (a.families) {
    Json list = Json::array();
    for (const auto& f : chart_families()) {
      Json params = Json::object();
      for (const auto& p : f.params) params[p.name] = Json{{"default", p.default_value}, {"meaning", p.meaning}};
      list.push_back(Json{{"id", f.id}, {"description", f.description}, {"m", f.m}, {"params", params}});
    }
    Json r = header("catalog");
    r["families"] = list;
    emit(r, a.output, out);
    return kSuccess;
  }
  const auto reports = classification_suite(a.max_m);
  Json arr = Json::array();
  bool all = true;
  for (const auto& rep : reports) {
    all = all && rep.match;
    Json roots = Json::array();
    for (const auto& x : rep.roots) roots.push_back(Json{{"lo", x.lo}, {"hi", x.hi}, {"value", x.value}, {"matched", x.matched}});
    arr.push_back(Json{{"schema", kSchema},
                       {"id", rep.id},
                       {"title", rep.title},
                       {"kind", to_string(rep.kind)},
                       {"parameters", rep.parameters},
                       {"derived", rep.derived},
                       {"expected", rep.expected},
                       {"coefficients", rep.coefficients},
                       {"zero_root_multiplicity", rep.zero_root_multiplicity},
                       {"roots", roots},
                       {"expected_roots", rep.expected_roots},
                       {"multiplicities", rep.multiplicities},
                       {"evidence", rep.evidence},
                       {"verdict", rep.match ? "match" : "mismatch"}});
  }
  emit(arr, a.output, out, format_table(reports));
  return all ? kSuccess : kVerdictFailure;
}

struct FlatTorusArgs {
  OutputOptions output;
  double alpha = 0.0, beta = 0.0;
  bool check = false;
  int grid = 64;
};

int cmd_flat_torus(const FlatTorusArgs& a, std::ostream& out) {
  const FlatTorusCase fc = flat_torus_classify(a.alpha, a.beta);
  Json r = header("flat-torus");
  r["alpha"] = a.alpha;
  r["beta"] = a.beta;
  r["case"] = fc.label;
  r["H_squared"] = fc.h_squared;
  try {
    const CliffordRadii cr = clifford_radii(a.alpha, a.beta);
    const double H = clifford_mean_curvature(cr.r1);
    r["radii"] = Json{{"r1", cr.r1}, {"r2", cr.r2}, {"H_squared", H * H}};
  } catch (const InvalidArgumentError& e) {
    r["radii"] = nullptr;
    r["radii_note"] = e.what();
  }
  bool ok = true;
  if (a.check) {
    if (a.grid < 16) throw InvalidArgumentError("grid must have at least 16 points per axis");
    const FlatTorusCrossCheck x = flat_torus_cross_check(a.alpha, a.beta, a.grid);
    Json charts = Json::array();
    for (const auto& c : x.charts)
      charts.push_back(Json{{"H", c.H},
                            {"admissible", c.predicted_solution},
                            {"predicted_coefficient", c.predicted},
                            {"residual_max", c.residual_max},
                            {"deviation_from_prediction", c.measured_max}});
    r["chart_check"] = Json{{"grid", a.grid}, {"charts", charts}, {"agree", x.agree}};
    ok = x.agree;
  }
  emit(r, a.output, out);
  return ok ? kSuccess : kVerdictFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-Federer and (alpha Q1 + beta Q2) map toolkit", "cfvar"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "cap worker threads (same as CFVAR_THREADS)");

  InvariantsArgs inv;
  auto* s_inv = app.add_subcommand("invariants", "Q1, Q2, CF, WC densities of a chart or a random form");
  add_chart_options(s_inv, inv.chart);
  add_output_options(s_inv, inv.output);
  s_inv->add_flag("--random", inv.random, "use a random second fundamental form instead of a chart");
  s_inv->add_option("--dim", inv.dim, "domain dimension (random form)");
  s_inv->add_option("--index", inv.index, "domain index (random form)");
  s_inv->add_option("--codim", inv.codim, "codomain dimension (random form)");
  s_inv->add_option("--cindex", inv.cindex, "codomain index (random form)");
  s_inv->add_option("--seed", inv.seed, "random seed");
  s_inv->add_option("--point", inv.point, "grid point for the detailed report");

  ResidualArgs res;
  auto* s_res = app.add_subcommand("residual", "Euler-Lagrange residual fields W1, W2 and their combinations");
  add_chart_options(s_res, res.chart);
  add_output_options(s_res, res.output);
  s_res->add_option("--alpha", res.alpha, "coefficient of W1");
  s_res->add_option("--beta", res.beta, "coefficient of W2");
  s_res->add_option("--csv", res.csv, "export per-point residual fields");
  s_res->add_option("--tol", res.tol, "fail (exit 1) when max |alpha W1 + beta W2| exceeds this");
  s_res->add_option("--r1", [&res](const CLI::results_t& v) {
    res.chart.params.push_back("r1=" + v[0]);
    return true;
  }, "shorthand for --param r1=...");

  EnergyArgs en;
  auto* s_en = app.add_subcommand("energy", "integral invariants over a closed chart");
  add_chart_options(s_en, en.chart);
  add_output_options(s_en, en.output);
  s_en->add_option("--homothety", en.homothety, "also rescale the explicit metric by this factor");
  s_en->add_flag("--allow-open", en.allow_open, "integrate open charts (reported as non-invariant)");

  IsoparaArgs iso;
  auto* s_iso = app.add_subcommand("isopara", "exact condition polynomial of an isoparametric family");
  add_output_options(s_iso, iso.output);
  s_iso->add_option("--g", iso.g, "number of distinct principal curvatures");
  s_iso->add_option("--family", iso.family, "family id (g4_2) or dimension alias (M18)");
  s_iso->add_option("--mult", iso.mult, "multiplicities, comma separated")->delimiter(',');
  s_iso->add_option("--m", iso.m, "family parameter m");
  s_iso->add_option("--p", iso.p, "first multiplicity of g2");
  s_iso->add_option("--kind", iso.kind, "CF, Q1, Q2 or WC");
  s_iso->add_option("--c", iso.c, "ambient curvature (rational)");

  CatalogArgs cat;
  auto* s_cat = app.add_subcommand("catalog", "classification suite or the list of chart families");
  add_output_options(s_cat, cat.output);
  s_cat->add_option("--max-m", cat.max_m, "largest parameter instance checked")->check(CLI::Range(4, 16));
  s_cat->add_flag("--families", cat.families, "list built-in chart families");

  FlatTorusArgs ft;
  auto* s_ft = app.add_subcommand("flat-torus", "CMC flat tori in S^3 for alpha Q1 + beta Q2");
  add_output_options(s_ft, ft.output);
  s_ft->add_option("--alpha", ft.alpha, "coefficient of Q1")->required();
  s_ft->add_option("--beta", ft.beta, "coefficient of Q2")->required();
  s_ft->add_flag("--check", ft.check, "compare with residuals on Clifford charts");
  s_ft->add_option("--grid", ft.grid, "grid size of the check charts");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kSuccess;
  } catch (const CLI::Success&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  if (threads > 0) setenv("CFVAR_THREADS", std::to_string(threads).c_str(), 1);

  try {
    if (s_inv->parsed()) return cmd_invariants(inv, out);
    if (s_res->parsed()) return cmd_residual(res, out);
    if (s_en->parsed()) return cmd_energy(en, out);
    if (s_iso->parsed()) return cmd_isopara(iso, out);
    if (s_cat->parsed()) return cmd_catalog(cat, out);
    if (s_ft->parsed()) return cmd_flat_torus(ft, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SingularChartError& e) {
    err << "singular chart: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnsupportedModeError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgumentError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace cfvar::cli

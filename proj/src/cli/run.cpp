#include "singkit/cli/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <random>
#include <sstream>

#include "singkit/deform/merle.hpp"
#include "singkit/lattice/k3_audit.hpp"
#include "singkit/poly/parser.hpp"
#include "singkit/versal/plane_curve.hpp"
#include "singkit/versal/stratum.hpp"

namespace singkit::cli {

namespace {

using json = nlohmann::ordered_json;
using poly::Polynomial;

constexpr const char* kGrammar =
    "expression grammar:\n"
    "  expr    = term { (\"+\" | \"-\") term }\n"
    "  term    = unary { \"*\" unary }\n"
    "  unary   = (\"+\" | \"-\") unary | power\n"
    "  power   = atom [ \"^\" integer ]\n"
    "  atom    = integer [ \"/\" integer ] | identifier | \"(\" expr \")\"\n";

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool ok;
};

// One output record; text and JSON are rendered from the same data.
struct Record {
  explicit Record(std::string name = "") : command(std::move(name)) {}

  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::vector<std::string> text;
  std::vector<Check> checks;

  void check(std::string name, std::string lhs, std::string rhs, bool ok) {
    checks.push_back({std::move(name), std::move(lhs), std::move(rhs), ok});
  }
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }
};

struct Options {
  std::string format = "text";
  int bound = localstd::kDefaultDegreeGuard;
  std::string vars;
};

poly::Ring ring_for(const Options& o, const char* fallback) {
  return poly::make_ring(o.vars.empty() ? std::string_view(fallback) : std::string_view(o.vars));
}

std::vector<Polynomial> parse_all(const std::vector<std::string>& exprs, const poly::Ring& R) {
  std::vector<Polynomial> out;
  for (const auto& e : exprs) out.push_back(poly::parse_polynomial(e, R));
  return out;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::vector<std::string> basis_strings(const localstd::QuotientBasis& b, const poly::VariableSet& vars) {
  std::vector<std::string> out;
  for (const auto& m : b.basis) out.push_back(localstd::to_string(m, vars));
  return out;
}

std::optional<poly::DegreesWeights> weights_from(const std::string& degrees, const std::string& weights) {
  if (degrees.empty() && weights.empty()) return std::nullopt;
  if (degrees.empty() || weights.empty()) throw UsageError("--degrees and --weights go together");
  return poly::DegreesWeights(parse_list(degrees), poly::WeightSystem(parse_list(weights)));
}

void emit_tau(Record& r, const std::optional<std::size_t>& tau) {
  r.results["tau"] = tau ? json(*tau) : json("infinite");
  r.text.push_back("tau = " + (tau ? std::to_string(*tau) : std::string("infinite")));
}

Record cmd_t1(const Options& o, const std::vector<std::string>& exprs) {
  Record r{"t1"};
  const auto R = ring_for(o, "x,y,z");
  const deform::MapGerm f(parse_all(exprs, R));
  r.inputs = {{"germ", exprs}, {"vars", R->names()}};
  const deform::T1Result t = deform::t1_compute(f, o.bound);
  emit_tau(r, t.tau);
  const auto basis = basis_strings(t.basis, *R);
  r.results["basis"] = basis;
  r.results["order"] = deform::default_order(f).describe();
  if (t.tau) r.text.push_back("basis: " + join(basis));
  return r;
}

Record cmd_grade(const Options& o, const std::vector<std::string>& exprs, const std::string& degrees,
                 const std::string& weights) {
  Record r{"grade"};
  const auto R = ring_for(o, "x,y,z");
  const deform::MapGerm f(parse_all(exprs, R));
  r.inputs = {{"germ", exprs}, {"vars", R->names()}};
  auto dw = weights_from(degrees, weights);
  if (!dw) dw = poly::find_weights(f.f());
  if (!dw) throw std::invalid_argument("germ is not quasi-homogeneous for any positive weights");
  const deform::T1Result t =
      deform::t1_grading(f, *dw, deform::t1_compute(f, localstd::LocalOrder::weighted(*dw), o.bound));
  r.results["type"] = dw->to_string();
  r.text.push_back("type " + dw->to_string());
  emit_tau(r, t.tau);
  json grading = json::array();
  std::size_t total = 0;
  for (const auto& [nu, items] : *t.grading) {
    std::vector<std::string> names;
    for (const auto& m : items) names.push_back(localstd::to_string(m, *R));
    grading.push_back({{"nu", to_string(nu)}, {"dim", items.size()}, {"basis", names}});
    r.text.push_back("nu = " + to_string(nu) + ": dim " + std::to_string(items.size()) + " (" + join(names) + ")");
    total += items.size();
  }
  r.results["grading"] = grading;
  r.results["alpha"] = t.alpha ? json(to_string(*t.alpha)) : json(nullptr);
  r.results["threshold"] = to_string(deform::merle_threshold(t));
  r.text.push_back("alpha = " + (t.alpha ? to_string(*t.alpha) : std::string("absent")));
  r.text.push_back("merle threshold max(0, alpha) = " + to_string(deform::merle_threshold(t)));
  r.check("sum of graded dimensions = tau", std::to_string(total), std::to_string(*t.tau), total == *t.tau);
  return r;
}

Record cmd_merle(const Options& o, const std::vector<std::string>& exprs, const std::vector<std::string>& perturb,
                 const std::string& degrees, const std::string& weights) {
  Record r{"merle"};
  const auto R = ring_for(o, "x,y,z");
  const deform::MapGerm f(parse_all(exprs, R));
  r.inputs = {{"germ", exprs}, {"perturbation", perturb}, {"vars", R->names()}};
  const deform::MerleReport m = deform::merle_equivalence(f, parse_all(perturb, R), weights_from(degrees, weights), o.bound);
  r.results["type"] = m.weights.to_string();
  r.results["nu"] = m.nu.to_string();
  r.results["alpha"] = m.alpha ? json(to_string(*m.alpha)) : json(nullptr);
  r.results["threshold"] = to_string(m.threshold);
  r.results["verdict"] = deform::to_string(m.verdict);
  r.text.push_back("type " + m.weights.to_string());
  r.text.push_back("nu(g) = " + m.nu.to_string() + ", threshold max(0, alpha) = " + to_string(m.threshold));
  r.text.push_back(deform::to_string(m.verdict));
  return r;
}

Record cmd_versal(const Options& o, const std::vector<std::string>& exprs) {
  Record r{"versal"};
  const auto R = ring_for(o, "x,y,z");
  const deform::MapGerm f(parse_all(exprs, R));
  r.inputs = {{"germ", exprs}, {"vars", R->names()}};
  const versal::VersalFamily fam = versal::versal_family(f, deform::t1_compute(f, o.bound));
  std::vector<std::string> eqs;
  for (const auto& e : fam.equations) eqs.push_back(e.to_string());
  r.results["parameters"] = fam.parameters;
  r.results["equations"] = eqs;
  r.text.push_back("parameters: " + join(fam.parameters));
  for (std::size_t i = 0; i < eqs.size(); ++i) r.text.push_back("F" + std::to_string(i + 1) + " = " + eqs[i]);
  return r;
}

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

Record cmd_stratum(const Options& o, const std::vector<std::string>& exprs, const std::string& sign, int samples,
                   unsigned long seed) {
  Record r{"stratum"};
  const versal::SignMode mode = versal::parse_sign_mode(sign);
  const auto R = poly::make_ring("x,y,z");
  const std::vector<std::string> germ = exprs.empty() ? std::vector<std::string>{"x*z+y*z+z^3", "x*y"} : exprs;
  const deform::MapGerm f(parse_all(germ, R));
  r.inputs = {{"germ", germ}, {"sign", versal::to_string(mode)}, {"samples", samples}, {"seed", seed}};
  const versal::VersalFamily fam = versal::versal_family(f, deform::t1_compute(f, o.bound));
  const versal::PlaneModel plane = versal::eliminate_to_plane(fam, mode);
  const versal::StratumDescription s = versal::triple_point_stratum(fam, mode);

  r.results["sign"] = versal::to_string(mode);
  r.results["substitution"] = plane.substitution;
  r.results["plane_equation"] = plane.equation.to_string();
  r.results["stratum"] = s.format();
  std::vector<std::string> vanish, nonvanish;
  for (const auto& v : s.vanishing) vanish.push_back(v.to_string());
  for (const auto& v : s.nonvanishing) nonvanish.push_back(v.to_string());
  r.results["vanishing"] = vanish;
  r.results["nonvanishing"] = nonvanish;
  r.text.push_back("sign mode " + std::string(versal::to_string(mode)) + " (" + plane.substitution + ")");
  r.text.push_back("F(y,z) = " + plane.equation.to_string());
  r.text.push_back(s.format());
  r.text.push_back("nonvanishing: " + join(nonvanish));
  if (s.witness) {
    const std::string w = "(y, z) = (" + s.witness->at("y").to_string() + ", " + s.witness->at("z").to_string() + ")";
    r.results["witness"] = w;
    r.text.push_back("witness " + w);
  }

  const versal::GammaChecks g = versal::check_gamma(s);
  r.results["tangent_directions"] = g.tangent_directions;
  r.check("stratum closure is a smooth curve at 0", "true", g.smooth_curve_at_origin ? "true" : "false",
          g.smooth_curve_at_origin);
  r.check("tangent line at 0 lies in b1=b2=b3=0", "true", g.tangent_inside_gamma ? "true" : "false",
          g.tangent_inside_gamma);
  r.check("closure meets b1=b2=b3=0 only at 0", "true", g.meets_gamma_only_at_origin ? "true" : "false",
          g.meets_gamma_only_at_origin);

  std::mt19937_64 rng(seed);
  const Rational b_sign = mode == versal::SignMode::Paper ? 1 : -1;
  std::size_t on_ok = 0, off_ok = 0;
  for (int i = 0; i < samples; ++i) {
    std::map<std::string, Rational> pt = {{"a1", 0}, {"a2", 0}, {"a3", 0}, {"b2", 0}, {"b3", 0}};
    pt["a4"] = random_rational(rng, true);
    pt["b1"] = b_sign * pt["a4"] * pt["a4"] / 4;
    const auto w = s.witness_at(pt);
    const auto c = versal::classify_plane_singularity(versal::plane_fiber(plane, pt), w, o.bound);
    if (s.contains(pt) && c.tag == versal::SingularityTag::OrdinaryTriple) ++on_ok;
  }
  for (int i = 0; i < samples; ++i) {
    std::map<std::string, Rational> pt;
    for (const char* n : {"a1", "a2", "a3", "a4"}) pt[n] = random_rational(rng, false);
    pt["b1"] = random_rational(rng, true);
    pt["b2"] = pt["b3"] = 0;
    if (s.contains(pt)) continue;
    const auto L = versal::triple_locus(versal::plane_fiber(plane, pt), true);
    if (L.status == versal::MultiplicityLocus::Status::Empty) ++off_ok;
  }
  if (samples > 0) {
    r.check("ordinary triple point at sampled stratum points", std::to_string(on_ok), std::to_string(samples),
            on_ok == static_cast<std::size_t>(samples));
    r.check("no multiplicity >= 3 point at sampled off-stratum points", std::to_string(off_ok),
            std::to_string(samples), off_ok == static_cast<std::size_t>(samples));
  }
  return r;
}

Record cmd_classify(const Options& o, const std::string& expr, const std::string& point) {
  Record r{"classify"};
  const auto R = ring_for(o, "x,y");
  const Polynomial F = poly::parse_polynomial(expr, R);
  const std::vector<Rational> pt = point.empty() ? std::vector<Rational>(R->size(), Rational(0)) : parse_list(point);
  std::vector<std::string> pts;
  for (const auto& q : pt) pts.push_back(to_string(q));
  r.inputs = {{"curve", expr}, {"point", pts}, {"vars", R->names()}};
  const versal::SingularityClass c = versal::classify_plane_singularity(F, pt, o.bound);
  r.results["class"] = c.to_string();
  r.results["multiplicity"] = c.multiplicity;
  r.results["tangent_cone"] = c.cone.form.to_string();
  r.results["distinct_lines"] = c.distinct_lines;
  r.results["milnor"] = c.milnor ? json(*c.milnor) : json(nullptr);
  r.text.push_back(c.to_string());
  r.text.push_back("multiplicity " + std::to_string(c.multiplicity) + ", tangent cone " + c.cone.form.to_string() +
                   " (translated), " + std::to_string(c.distinct_lines) + " distinct lines");
  if (c.milnor) r.text.push_back("milnor number " + std::to_string(*c.milnor));
  return r;
}

void add_lines(Record& r, const lattice::CheckReport& rep) {
  for (const auto& l : rep.lines) r.check(l.name, l.lhs, l.rhs, l.ok);
}

Record cmd_k3(long p, long n, long m) {
  Record r{"k3-audit"};
  r.inputs = {{"p", p}, {"n", n}, {"m", m}};
  const auto pd = lattice::pa_dim_nH(p, n);
  const auto tt = lattice::tuple_targets(p, n);
  r.results["pa"] = pd.pa;
  r.results["dim"] = pd.dim;
  r.results["target"] = tt.target;
  r.text.push_back("pa(nH) = dim|nH| = " + std::to_string(pd.pa));
  r.text.push_back("tuple target = " + std::to_string(tt.target));
  r.check(tt.identity.name, tt.identity.lhs, tt.identity.rhs, tt.identity.ok);

  json budgets = json::array();
  for (const auto& b : lattice::enumerate_budgets(p, n, m)) {
    std::vector<std::string> parts;
    json entries = json::object();
    for (const auto& e : b.entries) {
      parts.push_back(e.label() + ": " + std::to_string(e.count));
      entries[e.label()] = e.count;
    }
    const long es = lattice::es_expected_dim(pd.dim, b);
    budgets.push_back({{"entries", entries}, {"d", b.d}, {"expected_dim", es}});
    r.text.push_back("budget {" + join(parts) + "} expected ES dim " + std::to_string(es));
    r.check("expected ES dimension of budget {" + join(parts) + "}", std::to_string(es), "0", es == 0);
  }
  r.results["budgets"] = budgets;

  const auto led = lattice::proof_ledger(p, n);
  json steps = json::array();
  for (const auto& s : led.steps) {
    steps.push_back({{"name", s.name}, {"claimed", s.claimed}, {"computed", s.computed}, {"agrees", s.agrees},
                     {"asserted", s.asserted}});
    if (s.asserted) {
      r.check(s.name, s.claimed, s.computed, s.agrees);
    } else {
      r.text.push_back(std::string(s.agrees ? "ledger " : "ledger discrepancy ") + s.name + ": claimed " + s.claimed +
                       ", computed " + s.computed);
    }
  }
  r.results["ledger"] = steps;
  r.results["inventory_total"] = led.inventory_total;
  r.results["tprime_total"] = led.tprime_total;
  return r;
}

Record cmd_scroll(long p, long n) {
  Record r{"scroll-check"};
  r.inputs = {{"p", p}, {"n", n}};
  const auto pol = lattice::polarization(p, n);
  const auto c = lattice::scroll_classes(pol);
  r.results["surface"] = lattice::to_string(pol.kind);
  r.results["classes"] = {{"C", c.c.to_string()}, {"D", c.d.to_string()}, {"L", c.l.to_string()},
                          {"E", c.e.to_string()}, {"H", c.h.to_string()}};
  r.text.push_back(std::string("surface ") + lattice::to_string(pol.kind) + ", l = " + std::to_string(pol.l));
  r.text.push_back("C ~ " + c.c.to_string() + ", D ~ " + c.d.to_string() + ", L ~ " + c.l.to_string() + ", E ~ " +
                   c.e.to_string());
  if ((p == 3 || p == 4) && n == 1) r.check("n >= 2 when p = 3 or 4", "n = 1", "n >= 2", false);
  else add_lines(r, lattice::decomposition_check(p, n));
  add_lines(r, lattice::degree_on_E_check(p, n));
  const long pe = lattice::arithmetic_genus(c.e);
  r.check("pa(E) = 1", std::to_string(pe), "1", pe == 1);
  return r;
}

Record cmd_blowup(long mF) {
  Record r{"blowup"};
  r.inputs = {{"m_F", mF}};
  const auto b = lattice::blowup_restriction(mF);
  std::vector<std::string> parts;
  for (const auto& c : b.decomposition) parts.push_back(c.to_string());
  r.results["class"] = b.cls.to_string();
  r.results["effective"] = b.effective;
  r.results["minimal"] = b.minimal;
  r.results["decomposition"] = parts;
  r.text.push_back("class " + b.cls.to_string() + " on F1 (sigma = the -1 section, F = the fiber)");
  r.text.push_back(std::string(b.effective ? "effective" : "not effective") + (b.minimal ? ", minimal" : ""));
  if (!parts.empty()) r.text.push_back("decomposition " + join(parts, " + "));
  return r;
}

void emit(const Record& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"ok", c.ok}});
    const json rec = {{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"checks", checks},
                      {"verdict", r.ok() ? "ok" : "check-failed"}};
    out << rec.dump() << "\n";
    return;
  }
  for (const auto& t : r.text) out << t << "\n";
  for (const auto& c : r.checks) {
    if (c.ok) out << "check ok: " << c.name << "\n";
    else out << "check FAILED: " << c.name << ": " << c.lhs << " != " << c.rhs << "\n";
  }
  out << "verdict: " << (r.ok() ? "ok" : "check-failed") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"singkit: local algebra of curve singularities and K3 degeneration arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", o.bound, "Degree guard for standard monomials")->check(CLI::PositiveNumber);
  app.add_option("--vars", o.vars, "Comma separated variable names");

  std::vector<std::string> exprs, perturb;
  std::string degrees, weights, sign = "paper", point, curve;
  int samples = 0;
  unsigned long seed = 1;
  bool paper = false;
  long p = 0, n = 0, m = 2, mF = 0;

  auto* t1 = app.add_subcommand("t1", "Dimension and monomial basis of T^1 of a germ");
  t1->add_option("exprs", exprs, "Germ components")->required();
  auto* grade = app.add_subcommand("grade", "Quasi-homogeneous grading of T^1");
  grade->add_option("exprs", exprs, "Germ components")->required();
  grade->add_option("--degrees", degrees, "Degrees d_i, comma separated");
  grade->add_option("--weights", weights, "Weights a_j, comma separated");
  auto* merle = app.add_subcommand("merle", "Merle criterion for f + g against f");
  merle->add_option("exprs", exprs, "Germ components")->required();
  merle->add_option("--perturb", perturb, "Perturbation component (repeat once per component)")->required();
  merle->add_option("--degrees", degrees, "Degrees d_i, comma separated");
  merle->add_option("--weights", weights, "Weights a_j, comma separated");
  auto* vers = app.add_subcommand("versal", "Versal family of a germ");
  vers->add_option("exprs", exprs, "Germ components")->required();
  auto* strat = app.add_subcommand("stratum", "Ordinary triple point stratum of the quadruple point family");
  strat->add_option("exprs", exprs, "Germ components (default xz+yz+z^3, xy)");
  strat->add_flag("--paper", paper, "Use the quadruple point germ xz+yz+z^3, xy");
  strat->add_option("--sign", sign, "Elimination sign convention")->check(CLI::IsMember({"paper", "consistent"}));
  strat->add_option("--samples", samples, "Random samples on and off the stratum")->check(CLI::NonNegativeNumber);
  strat->add_option("--seed", seed, "Sampling seed");
  auto* cls = app.add_subcommand("classify", "Singularity type of a plane curve at a rational point");
  cls->add_option("curve", curve, "Curve equation")->required();
  cls->add_option("--point", point, "Point coordinates, comma separated (default origin)");
  auto* k3 = app.add_subcommand("k3-audit", "Targets, budgets, expected dimensions and ledger");
  k3->add_option("p", p)->required();
  k3->add_option("n", n)->required();
  k3->add_option("m", m)->required();
  auto* scroll = app.add_subcommand("scroll-check", "Class decompositions and degrees on E");
  scroll->add_option("p", p)->required();
  scroll->add_option("n", n)->required();
  auto* blow = app.add_subcommand("blowup", "Restriction class on the exceptional F1");
  blow->add_option("m_F", mF)->required();

  std::vector<std::string> argv_store = {"singkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Record r;
    if (*t1) r = cmd_t1(o, exprs);
    else if (*grade) r = cmd_grade(o, exprs, degrees, weights);
    else if (*merle) r = cmd_merle(o, exprs, perturb, degrees, weights);
    else if (*vers) r = cmd_versal(o, exprs);
    else if (*strat) r = cmd_stratum(o, paper ? std::vector<std::string>{} : exprs, sign, samples, seed);
    else if (*cls) r = cmd_classify(o, curve, point);
    else if (*k3) r = cmd_k3(p, n, m);
    else if (*scroll) r = cmd_scroll(p, n);
    else r = cmd_blowup(mF);
    emit(r, o, out);
    return r.ok() ? kExitOk : kExitCheckFailed;
  } catch (const poly::ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << "\n" << kGrammar;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace singkit::cli

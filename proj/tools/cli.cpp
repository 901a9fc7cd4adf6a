#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "liethomas/classifier.hpp"
#include "liethomas/determining_system.hpp"
#include "liethomas/lie_algebra.hpp"
#include "liethomas/reduction.hpp"
#include "liethomas/solution_families.hpp"
#include "liethomas/verification.hpp"

namespace lie_thomas::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<Rational> parse_list(const std::string& text, std::size_t n, const char* what) {
  auto parts = split(text, ',');
  if (parts.size() != n) throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

ThomasParams parse_params(const std::string& text) {
  if (text.empty()) return ThomasParams::symbolic();
  auto v = parse_list(text, 3, "--params");
  auto p = ThomasParams::numeric(v[0], v[1], v[2]);
  try {
    p.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return p;
}

NumericParams numeric_params(const std::string& text) {
  if (text.empty()) throw UsageError("--params alpha,beta,gamma is required");
  return NumericParams::from(parse_params(text));
}

std::map<std::string, double> parse_constants(const std::string& text) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("constants are written name=value: '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1)).to_double();
  }
  return out;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  if (text.empty()) return g;
  auto parts = split(text, ',');
  if (parts.size() != 6) throw UsageError("--grid needs xmin,xmax,ymin,ymax,nx,ny");
  g.x_min = parse_rational(parts[0]).to_double();
  g.x_max = parse_rational(parts[1]).to_double();
  g.y_min = parse_rational(parts[2]).to_double();
  g.y_max = parse_rational(parts[3]).to_double();
  g.nx = std::stoi(parts[4]);
  g.ny = std::stoi(parts[5]);
  if (g.nx < 2 || g.ny < 2) throw UsageError("--grid needs at least 2 points per axis");
  return g;
}

CaseTag parse_tag(const std::string& text) {
  try {
    return parse_case_tag(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json params_json(const ThomasParams& p) {
  return {{"alpha", p.alpha.str()}, {"beta", p.beta.str()}, {"gamma", p.gamma.str()}};
}

std::string render(const Expr& e, const std::string& format) { return format == "latex" ? e.latex() : e.str(); }

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---- output helpers ----

struct Rows {
  std::vector<std::pair<std::string, std::string>> rows;
};

void emit_rows(std::ostream& out, const Rows& r, const std::string& format) {
  for (const auto& [k, v] : r.rows) {
    if (format == "latex")
      out << k << " & " << v << " \\\\\n";
    else
      out << k << ": " << v << "\n";
  }
}

// ---- commands ----

int cmd_derive(const std::string& params, bool show_prolongation, const std::string& format, std::ostream& out) {
  ThomasParams p = parse_params(params);
  DeterminingSystem sys = determining_equations(p);
  if (format == "json") {
    json j{{"schema", kSchema}, {"command", "derive"}, {"params", params_json(p)}};
    json eqs = json::array();
    for (const auto& e : sys.equations)
      eqs.push_back({{"monomial", monomial_str(e.monomial)}, {"coefficient", e.coefficient.str()}});
    j["equations"] = eqs;
    if (show_prolongation) {
      ProlongedField pf = prolong(symbolic_field());
      j["prolongation"] = {{"phi_x", pf.phi_x.to_expr().str()},   {"phi_y", pf.phi_y.to_expr().str()},
                           {"phi_xx", pf.phi_xx.to_expr().str()}, {"phi_xy", pf.phi_xy.to_expr().str()},
                           {"phi_yy", pf.phi_yy.to_expr().str()}};
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  Rows r;
  for (const auto& e : sys.equations) {
    r.rows.emplace_back(format == "latex" ? monomial_latex(e.monomial) : monomial_str(e.monomial),
                        render(e.coefficient, format));
  }
  if (show_prolongation) {
    ProlongedField pf = prolong(symbolic_field());
    const std::pair<const char*, const JetPolynomial*> items[] = {
        {"phi^x", &pf.phi_x}, {"phi^y", &pf.phi_y}, {"phi^xx", &pf.phi_xx}, {"phi^xy", &pf.phi_xy}, {"phi^yy", &pf.phi_yy}};
    for (const auto& [name, e] : items) r.rows.emplace_back(name, render(e->to_expr(), format));
  }
  emit_rows(out, r, format);
  return kOk;
}

int cmd_tables(const std::string& params, const std::string& which, const std::string& format, std::ostream& out) {
  ThomasParams p = parse_params(params);
  const Expr g = function("f", {"x", "y"});
  const Expr eps = parameter("eps");
  auto element = [&](int i) { return i == 5 ? AlgebraElement::from_g(g) : AlgebraElement::basis(i); };
  auto name = [](int i) { return i == 5 ? std::string("v_g") : "v" + std::to_string(i); };
  json commutators = json::array(), adjoints = json::array();
  Rows rows;
  if (which == "2" || which == "all") {
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        AlgebraElement c = commutator(element(i), element(j), p);
        bool match = equivalent(c, published_commutator(i, j, g, p));
        std::string v = format == "latex" ? c.latex() : c.str();
        commutators.push_back({{"row", name(i)}, {"col", name(j)}, {"value", v}, {"matches_published", match}});
        rows.rows.emplace_back("[" + name(i) + ", " + name(j) + "]", v);
      }
    }
  }
  if (which == "3" || which == "all") {
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        LieSeriesResult r = adjoint_lie_series(i, eps, element(j), p);
        bool match = equivalent(r.closed_form, published_adjoint(i, j, eps, p));
        std::string v = format == "latex" ? r.closed_form.latex() : r.closed_form.str();
        adjoints.push_back({{"row", name(i)}, {"col", name(j)}, {"value", v}, {"matches_published", match}});
        rows.rows.emplace_back("Ad(exp(eps " + name(i) + ")) " + name(j), v);
      }
    }
  }
  if (which != "2" && which != "3" && which != "all") throw UsageError("--table is 2, 3 or all");
  if (format == "json") {
    json j{{"schema", kSchema}, {"command", "tables"}, {"params", params_json(p)}};
    if (!commutators.empty()) j["commutators"] = commutators;
    if (!adjoints.empty()) j["adjoint"] = adjoints;
    out << j.dump(2) << "\n";
  } else {
    emit_rows(out, rows, format);
  }
  return kOk;
}

double word_value(const WordStep& s, const ThomasParams& p) {
  // generator 4 steps store e^{-gamma eps}; report eps itself
  if (s.generator == 4) return -std::log(s.value.to_double()) / p.gamma.value().to_double();
  return s.value.to_double();
}

int cmd_classify(const std::string& vector, const std::string& params, const std::string& format, std::ostream& out) {
  if (vector.empty()) throw UsageError("--vector a1,a2,a3,a4 is required");
  if (params.empty()) throw UsageError("--params alpha,beta,gamma is required");
  auto v = parse_list(vector, 4, "--vector");
  ThomasParams p = parse_params(params);
  CanonicalCase c = classify(Coords{v[0], v[1], v[2], v[3]}, p);
  json word = json::array();
  for (const auto& s : c.word) word.push_back({s.name(), word_value(s, p)});
  json canonical = json::array();
  for (const auto& x : c.canonical) canonical.push_back(x.str());
  if (format == "json") {
    json j{{"schema", kSchema}, {"command", "classify"}, {"tag", to_string(c.tag)}, {"canonical", canonical},
           {"word", word}, {"mirrored", c.mirrored}, {"params", params_json(p)}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  Rows r;
  r.rows.emplace_back("tag", to_string(c.tag));
  r.rows.emplace_back("canonical", canonical.dump());
  r.rows.emplace_back("word", word.dump());
  r.rows.emplace_back("mirrored", c.mirrored ? "true" : "false");
  emit_rows(out, r, format);
  return kOk;
}

int cmd_reduce(const std::string& tag_text, const std::string& params, const std::string& format, std::ostream& out) {
  CaseTag tag = parse_tag(tag_text);
  ThomasParams p = parse_params(params);
  CaseSpec spec = CaseSpec::symbolic(tag, p);
  InvariantPair inv = invariants(spec, p);
  Rows r;
  json j{{"schema", kSchema}, {"command", "reduce"}, {"case", to_string(tag)}, {"params", params_json(p)}};
  r.rows.emplace_back("chi", render(inv.chi, format));
  r.rows.emplace_back("varsigma", render(inv.varsigma, format));
  r.rows.emplace_back("domain", inv.domain);
  if (tag == CaseTag::Case2_4) {
    r.rows.emplace_back("ode", "none");
    r.rows.emplace_back("note", "invariants x, y leave no reduction");
  } else {
    ReducedODE ode = reduced_ode(spec, p);
    ReductionCheck check = verify_reduction(spec, p);
    r.rows.emplace_back("ode", render(ode.equation, format) + " = 0");
    r.rows.emplace_back("kind", to_string(ode.kind));
    r.rows.emplace_back("order", std::to_string(ode.order));
    if (ode.theta_equation) r.rows.emplace_back("theta_ode", render(*ode.theta_equation, format) + " = 0");
    if (!ode.note.empty()) r.rows.emplace_back("note", ode.note);
    r.rows.emplace_back("verified", check.ok ? "true" : "false");
  }
  if (format == "json") {
    for (const auto& [k, v] : r.rows) j[k] = v;
    out << j.dump(2) << "\n";
  } else {
    emit_rows(out, r, format);
  }
  return kOk;
}

json family_descriptor(CaseTag tag, const std::string& params, const std::map<std::string, double>& constants) {
  json d{{"case", to_string(tag)}, {"params", params}, {"constants", constants}};
  d["hash"] = hex(fnv1a(d.dump()));
  return d;
}

void write_csv(const std::string& path, const Solution& s, const GridSpec& g, const NumericParams& p) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << "x,y,u,residual\n" << std::setprecision(17);
  for (int i = 0; i < g.nx; ++i) {
    double x = g.x_min + (g.x_max - g.x_min) * i / (g.nx - 1);
    for (int k = 0; k < g.ny; ++k) {
      double y = g.y_min + (g.y_max - g.y_min) * k / (g.ny - 1);
      if (!s.contains(x, y)) continue;
      f << x << "," << y << "," << s(x, y).v << "," << residual(s, x, y, p) << "\n";
    }
  }
}

int cmd_solve(const std::string& tag_text, const std::string& params, const std::string& constants,
              const std::string& grid, const std::string& csv, const std::string& format, std::ostream& out) {
  CaseTag tag = parse_tag(tag_text);
  NumericParams np = numeric_params(params);
  auto k = parse_constants(constants);
  SolutionFamily fam = make_family(tag, np, k);
  auto all = default_constants(tag);
  for (const auto& [n, v] : fam.constants) all[n] = v;
  json d = family_descriptor(tag, params, fam.has_solution() ? fam.constants : std::map<std::string, double>{});
  json j{{"schema", kSchema}, {"command", "solve"}, {"family", d}, {"note", fam.note},
         {"has_solution", fam.has_solution()}};
  if (fam.closed_form) j["closed_form"] = render(*fam.closed_form, format == "latex" ? "latex" : "text");
  if (!csv.empty()) {
    if (!fam.has_solution()) throw FamilyError(fam.note);
    write_csv(csv, *fam.solution, parse_grid(grid), np);
    j["csv"] = csv;
  }
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    Rows r;
    r.rows.emplace_back("case", to_string(tag));
    r.rows.emplace_back("hash", d["hash"].get<std::string>());
    r.rows.emplace_back("note", fam.note);
    if (fam.closed_form) r.rows.emplace_back("u", render(*fam.closed_form, format));
    emit_rows(out, r, format);
  }
  return kOk;
}

int cmd_verify(const std::string& family_path, std::string tag_text, std::string params, std::string constants,
               const std::string& grid, const std::string& format, std::ostream& out) {
  std::map<std::string, double> k;
  std::string expected_hash;
  if (!family_path.empty()) {
    std::ifstream f(family_path);
    if (!f) throw UsageError("cannot read " + family_path);
    json j;
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad family file: ") + e.what());
    }
    const json& d = j.contains("family") ? j["family"] : j;
    try {
      tag_text = d.at("case").get<std::string>();
      params = d.at("params").get<std::string>();
      k = d.at("constants").get<std::map<std::string, double>>();
      expected_hash = d.value("hash", "");
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad family descriptor: ") + e.what());
    }
  } else {
    k = parse_constants(constants);
  }
  CaseTag tag = parse_tag(tag_text);
  NumericParams np = numeric_params(params);
  SolutionFamily fam = make_family(tag, np, k);
  if (!fam.has_solution()) throw FamilyError(fam.note);
  json d = family_descriptor(tag, params, fam.constants);
  GridReport r = residual_grid(*fam.solution, parse_grid(grid), np);
  json j{{"schema", kSchema},
         {"command", "verify"},
         {"family", d},
         {"max_residual", r.max_residual},
         {"worst_point", r.has_worst ? json(r.worst_point) : json(nullptr)},
         {"points_evaluated", r.points_evaluated},
         {"points_skipped", r.points_skipped}};
  if (!expected_hash.empty()) j["hash_matches"] = expected_hash == d["hash"].get<std::string>();
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    Rows rows;
    std::ostringstream m;
    m << std::setprecision(6) << r.max_residual;
    rows.rows.emplace_back("case", to_string(tag));
    rows.rows.emplace_back("max_residual", m.str());
    rows.rows.emplace_back("points_evaluated", std::to_string(r.points_evaluated));
    rows.rows.emplace_back("points_skipped", std::to_string(r.points_skipped));
    emit_rows(out, rows, format);
  }
  return kOk;
}

int cmd_oracle(const std::string& params, std::uint64_t seed, int count, const std::string& grid,
               const std::string& format, std::ostream& out) {
  NumericParams np = numeric_params(params);
  if (count < 1) throw UsageError("--count must be positive");
  json samples = json::array();
  Rows rows;
  for (const auto& s : oracle_solutions(np, count, seed)) {
    json modes = json::array();
    for (const auto& m : s.modes) modes.push_back({{"c", m.c}, {"lambda", m.lambda}, {"mu", m.mu}});
    GridReport r = residual_grid(s.solution, parse_grid(grid), np);
    samples.push_back({{"modes", modes}, {"max_residual", r.max_residual}});
    std::ostringstream m;
    m << std::setprecision(6) << r.max_residual;
    rows.rows.emplace_back(std::to_string(s.modes.size()) + " modes", m.str());
  }
  if (format == "json") {
    out << json{{"schema", kSchema}, {"command", "oracle"}, {"seed", seed}, {"samples", samples}}.dump(2) << "\n";
  } else {
    emit_rows(out, rows, format);
  }
  return kOk;
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie point symmetries of u_xy + alpha u_x + beta u_y + gamma u_x u_y = 0", "lie-thomas"};
  app.require_subcommand(1);

  std::string format = "json";
  if (const char* env = std::getenv("LIE_THOMAS_FORMAT")) format = env;
  app.add_option("--format", format, "text, latex or json (default from LIE_THOMAS_FORMAT)")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  std::string params, vector, case_tag, constants, grid, csv, family, table = "all";
  bool show_prolongation = false;
  std::uint64_t seed = 1;
  int count = 3;

  auto* derive = app.add_subcommand("derive", "determining equations");
  derive->add_option("--params", params, "alpha,beta,gamma (symbolic when omitted)");
  derive->add_flag("--show-prolongation", show_prolongation, "also print the prolongation coefficients");

  auto* tables = app.add_subcommand("tables", "commutator and adjoint tables");
  tables->add_option("--params", params);
  tables->add_option("--table", table, "2, 3 or all");

  auto* classify_cmd = app.add_subcommand("classify", "canonical representative of a vector a1 v1 + ... + a4 v4");
  classify_cmd->add_option("--vector", vector, "a1,a2,a3,a4")->required();
  classify_cmd->add_option("--params", params, "alpha,beta,gamma")->required();

  auto* reduce = app.add_subcommand("reduce", "invariants and reduced equation of a case");
  reduce->add_option("--case", case_tag)->required();
  reduce->add_option("--params", params);

  auto* solve = app.add_subcommand("solve", "invariant solution family");
  solve->add_option("--case", case_tag)->required();
  solve->add_option("--params", params)->required();
  solve->add_option("--constants", constants, "name=value,...");
  solve->add_option("--grid", grid, "xmin,xmax,ymin,ymax,nx,ny");
  solve->add_option("--csv", csv, "write x,y,u,residual");

  auto* verify = app.add_subcommand("verify", "residual of a family over a grid");
  verify->add_option("--family", family, "descriptor written by solve");
  verify->add_option("--case", case_tag);
  verify->add_option("--params", params);
  verify->add_option("--constants", constants);
  verify->add_option("--grid", grid);

  auto* oracle = app.add_subcommand("oracle", "residuals of random linearizable solutions");
  oracle->add_option("--params", params)->required();
  oracle->add_option("--seed", seed);
  oracle->add_option("--count", count);
  oracle->add_option("--grid", grid);

  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", format)->check(CLI::IsMember({"text", "latex", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*derive) return cmd_derive(params, show_prolongation, format, out);
    if (*tables) return cmd_tables(params, table, format, out);
    if (*classify_cmd) return cmd_classify(vector, params, format, out);
    if (*reduce) return cmd_reduce(case_tag, params, format, out);
    if (*solve) return cmd_solve(case_tag, params, constants, grid, csv, format, out);
    if (*verify) {
      if (family.empty() && (case_tag.empty() || params.empty()))
        throw UsageError("verify needs --family or --case with --params");
      return cmd_verify(family, case_tag, params, constants, grid, format, out);
    }
    if (*oracle) return cmd_oracle(params, seed, count, grid, format, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ClassificationError& e) {
    error_json(err, "classification", e.what());
    return kMath;
  } catch (const ReductionError& e) {
    error_json(err, "reduction", e.what());
    return kMath;
  } catch (const FamilyError& e) {
    error_json(err, "family", e.what());
    return kMath;
  } catch (const DomainError& e) {
    error_json(err, "domain", e.what());
    return kMath;
  } catch (const SymbolicError& e) {
    error_json(err, "symbolic", e.what());
    return kMath;
  } catch (const std::exception& e) {
    error_json(err, "math", e.what());
    return kMath;
  }
  return kUsage;
}

}  // namespace lie_thomas::cli

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tanaka/accept.hpp"
#include "tanaka/catalog.hpp"
#include "tanaka/deform.hpp"
#include "tanaka/freeman.hpp"
#include "tanaka/prolong.hpp"

using namespace tanaka;
using nlohmann::json;

namespace {

// exit codes: 0 verdicts match, 1 mismatch, 2 input error
constexpr int kOk = 0, kMismatch = 1, kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// parse with line/column diagnostics on failure
json parse_checked(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t byte = e.byte;
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << path << ":" << line << ":" << col << ": malformed JSON: " << e.what();
    throw std::invalid_argument(os.str());
  }
}

void emit(const json& j, bool as_json, const std::string& out_path,
          const std::string& human) {
  std::string text = as_json ? j.dump(2) + "\n" : human;
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
  }
}

int cmd_prolong(const std::string& path, int kmax, bool as_json, const std::string& out) {
  std::string text = read_file(path);
  json jin = parse_checked(text, path);
  auto g = liealg_from_json(text);
  SymbolAlgebra sym{g};
  Prolongation pr{sym};
  auto rep = tanaka_prolong(sym, kmax, &pr);
  json j;
  j["dims"] = rep.dims;
  j["total"] = rep.total;
  j["terminated"] = rep.terminated;
  j["basis"] = rep.basis_desc;
  j["genericity_assumptions"] = rep.genericity;
  j["jacobi_pass"] = rep.jacobi_pass;
  std::ostringstream os;
  os << "prolongation of " << path << "\n  dims:";
  for (auto d : rep.dims) os << " " << d;
  os << "\n  total: " << rep.total << (rep.terminated ? " (terminated)" : "") << "\n";
  for (const auto& b : rep.basis_desc) os << "  " << b << "\n";
  for (const auto& gn : rep.genericity) os << "  genericity: " << gn << "\n";
  os << "  prolonged algebra Jacobi: " << (rep.jacobi_pass ? "pass" : "FAIL") << "\n";
  emit(j, as_json, out, os.str());
  // expectations embedded in the fixture
  if (jin.contains("expect")) {
    const auto& e = jin["expect"];
    if (e.contains("prolongation_dims")) {
      std::vector<size_t> want = e["prolongation_dims"].get<std::vector<size_t>>();
      for (size_t k = 0; k < want.size() && k < rep.dims.size(); ++k)
        if (want[k] != rep.dims[k]) return kMismatch;
    }
    if (e.contains("prolongation_total") &&
        e["prolongation_total"].get<size_t>() != rep.total)
      return kMismatch;
  }
  return kOk;
}

int cmd_deform(const std::string& path, bool as_json, const std::string& out,
               const std::string& trace_path) {
  std::string text = read_file(path);
  parse_checked(text, path);
  auto fx = deform_from_json(text);
  auto res = eliminate(fx.system);
  std::string trace = elimination_trace_text(fx.system, res);
  if (!trace_path.empty()) {
    std::ofstream tf(trace_path);
    tf << trace;
  }
  json j;
  j["name"] = fx.name;
  j["verdict"] = res.verdict_str();
  j["unknowns"] = fx.system.unknowns().size();
  j["replay_ok"] = replay_trace(fx.system, res);
  j["genericity_assumptions"] = res.genericity;
  if (res.verdict == EliminationResult::Residual) {
    std::vector<std::string> eqs;
    for (const auto& e : res.residual) eqs.push_back(fx.system.poly_str(e));
    j["residual"] = eqs;
  }
  std::ostringstream os;
  os << fx.name << ": " << res.verdict_str() << " (" << fx.system.unknowns().size()
     << " unknowns, replay " << (j["replay_ok"].get<bool>() ? "ok" : "FAILED") << ")\n";
  if (trace_path.empty()) os << trace;
  emit(j, as_json, out, os.str());
  if (!fx.expect_verdict.empty() && fx.expect_verdict != res.verdict_str()) return kMismatch;
  if (!j["replay_ok"].get<bool>()) return kMismatch;
  return kOk;
}

TubeModel load_tube_arg(const std::string& arg, int variant) {
  TubeVariant v = variant == 2 ? TubeVariant::OSCULATING_RULED : TubeVariant::TANGENT_VARIETY;
  if (arg == "builtin:hyperquadric") return hyperquadric_tube();
  if (arg == "builtin:rnc") {
    auto tab = geom_symbols();
    Curve c;
    for (const char* e : {"1", "t", "t^2", "t^3"}) c.comp.push_back(parse_fnexpr(tab, e));
    c.name = "rnc";
    return build_tube(c, v);
  }
  std::string text = read_file(arg);
  parse_checked(text, arg);
  Curve c = curve_from_json(text, geom_symbols());
  return build_tube(c, v);
}

int cmd_tube(const std::string& arg, int variant, bool as_json, const std::string& out) {
  TubeModel m = load_tube_arg(arg, variant);
  auto ranks = freeman_ranks(m);
  json j;
  j["model"] = m.name.empty() ? arg : m.name;
  j["variant"] = variant;
  std::ostringstream os;
  if (ranks.degenerate) {
    j["degenerate"] = true;
    os << "model " << arg << ": D is not bracket generating (degenerate)\n";
    emit(j, as_json, out, os.str());
    return kOk;
  }
  auto fd = freeman(m);
  j["rkD"] = ranks.rkD;
  j["rkK"] = ranks.rkK;
  j["rkL"] = ranks.rkL;
  j["holomorphically_nondegenerate"] = ranks.holNondeg;
  j["three_nondegenerate"] = ranks.three_nondegenerate();
  j["genericity_loci"] = ranks.loci;
  // kernel frames as Z-frame coefficient rows
  FieldSpan zspan(m.Z);
  auto frame_rows = [&](const std::vector<VField>& fr) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : fr) {
      auto x = zspan.express(f);
      std::vector<std::string> row;
      if (x)
        for (const auto& c : *x) row.push_back(c.str());
      rows.push_back(row);
    }
    return rows;
  };
  j["K10"] = frame_rows(fd.K10);
  j["L10"] = frame_rows(fd.L10);
  if (ranks.three_nondegenerate()) {
    auto inc = check_bracket_inclusions(m);
    json rows = json::array();
    for (const auto& row : inc.rows)
      rows.push_back({{"inclusion", row.label}, {"pass", row.pass}});
    j["bracket_inclusions"] = rows;
    j["bracket_inclusions_pass"] = inc.pass;
    auto ns = normalized_sections(m);
    j["normalized_sections_verified"] = ns.verified;
    j["gauge"] = ns.gauge_note;
  }
  os << "model " << (m.name.empty() ? arg : m.name) << " (variant " << variant << ")\n"
     << "  ranks: rk D10 = " << ranks.rkD << ", rk K10 = " << ranks.rkK
     << ", rk L10 = " << ranks.rkL << "\n"
     << "  holomorphically nondegenerate: " << (ranks.holNondeg ? "yes" : "no") << "\n"
     << "  3-nondegenerate: " << (ranks.three_nondegenerate() ? "yes" : "no") << "\n";
  for (const auto& l : ranks.loci) os << "  genericity: " << l << "\n";
  emit(j, as_json, out, os.str());
  return kOk;
}

int cmd_curve(const std::string& path, bool as_json, const std::string& out) {
  std::string text = read_file(path);
  parse_checked(text, path);
  Curve c = curve_from_json(text, geom_symbols());
  auto w = wronskian4(c);
  auto rep = curve_nondegenerate(c);
  json j;
  j["name"] = c.name;
  j["wronskian"] = w.str();
  j["nondegenerate"] = rep.status == NondegReport::TRUE      ? "true"
                       : rep.status == NondegReport::FALSE   ? "false"
                                                             : "undecided";
  if (!rep.excluded_locus.empty()) j["excluded_locus"] = rep.excluded_locus;
  std::ostringstream os;
  os << c.name << "\n  wronskian: " << w.str() << "\n  nondegenerate: "
     << j["nondegenerate"].get<std::string>() << "\n";
  if (!rep.excluded_locus.empty()) os << "  locus: " << rep.excluded_locus << "\n";
  emit(j, as_json, out, os.str());
  return kOk;
}

int cmd_catalog(bool as_json, const std::string& out) {
  auto rows = catalog();
  json j = json::array();
  std::ostringstream os;
  os << "homogeneous nondegenerate projective curves (12 rows)\n";
  for (const auto& r : rows) {
    bool jn = jordan_nondegenerate(r.generator());
    auto nd = curve_nondegenerate(r.curve());
    bool gc = r.generator_consistent();
    j.push_back({{"segre", r.segre},
                 {"description", r.description},
                 {"param", r.param_kind},
                 {"jordan_nondegenerate", jn},
                 {"wronskian_nondegenerate", nd.status == NondegReport::TRUE},
                 {"generator_consistent", gc}});
    os << "  " << r.segre << ": " << r.description << "\n    jordan: " << (jn ? "ok" : "FAIL")
       << ", wronskian: " << (nd.status == NondegReport::TRUE ? "ok" : "FAIL")
       << ", generator: " << (gc ? "ok" : "FAIL") << "\n";
  }
  emit(j, as_json, out, os.str());
  for (const auto& e : j)
    if (!e["jordan_nondegenerate"].get<bool>() ||
        !e["wronskian_nondegenerate"].get<bool>() || !e["generator_consistent"].get<bool>())
      return kMismatch;
  return kOk;
}

int cmd_verify(const std::string& dir, bool as_json, const std::string& out, unsigned jobs) {
  auto results = run_acceptance(dir, jobs);
  json j = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    j.push_back({{"id", r.id},
                 {"label", r.label},
                 {"pass", r.pass},
                 {"detail", r.detail},
                 {"seconds", r.seconds}});
    char line[512];
    std::snprintf(line, sizeof(line), "[%s] criterion %2d (%6.2fs): %s%s%s\n",
                  r.pass ? "PASS" : "FAIL", r.id, r.seconds, r.label.c_str(),
                  r.detail.empty() ? "" : " -- ", r.detail.c_str());
    os << line;
  }
  os << (all ? "all criteria passed\n" : "SOME CRITERIA FAILED\n");
  emit(j, as_json, out, os.str());
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tanaka-kit: exact Tanaka prolongations, filtered deformations and tube CR geometry"};
  app.require_subcommand(1);

  unsigned jobs = 0;
  if (const char* env = std::getenv("TANAKA_KIT_JOBS")) jobs = (unsigned)std::atoi(env);

  std::string in_path, out_path, trace_path;
  bool as_json = false;
  int kmax = 2, variant = 1;
  std::string fixtures = "fixtures";

  auto* p = app.add_subcommand("prolong", "Tanaka prolongation of a liealg.v1 symbol");
  p->add_option("fixture", in_path, "liealg.v1 JSON file")->required();
  p->add_option("--kmax", kmax, "maximal degree (default 2)");
  p->add_flag("--json", as_json, "machine-readable output");
  p->add_option("-o,--output", out_path, "write the report to a file");

  auto* d = app.add_subcommand("deform", "filtered-deformation obstruction solver");
  d->add_option("fixture", in_path, "deform.v1 JSON file")->required();
  d->add_flag("--json", as_json, "machine-readable output");
  d->add_option("--trace", trace_path, "write the elimination trace to a file");
  d->add_option("-o,--output", out_path, "write the report to a file");

  auto* t = app.add_subcommand("tube", "Freeman analysis of a tube model");
  t->add_option("curve", in_path, "curve.v1 JSON file, builtin:rnc or builtin:hyperquadric")
      ->required();
  t->add_option("--variant", variant, "1 = tangent variety, 2 = osculating ruled");
  t->add_flag("--json", as_json, "machine-readable output");
  t->add_option("-o,--output", out_path, "write the report to a file");

  auto* cu = app.add_subcommand("curve", "wronskian nondegeneracy of a curve");
  cu->add_option("curve", in_path, "curve.v1 JSON file")->required();
  cu->add_flag("--json", as_json, "machine-readable output");
  cu->add_option("-o,--output", out_path, "write the report to a file");

  auto* ca = app.add_subcommand("catalog", "the homogeneous curve table with checks");
  ca->add_flag("--json", as_json, "machine-readable output");
  ca->add_option("-o,--output", out_path, "write the report to a file");

  auto* v = app.add_subcommand("verify-paper", "run the acceptance suite");
  v->add_option("--fixtures", fixtures, "fixture directory (default: fixtures)");
  v->add_flag("--json", as_json, "machine-readable output");
  v->add_option("-o,--output", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (p->parsed()) return cmd_prolong(in_path, kmax, as_json, out_path);
    if (d->parsed()) return cmd_deform(in_path, as_json, out_path, trace_path);
    if (t->parsed()) return cmd_tube(in_path, variant, as_json, out_path);
    if (cu->parsed()) return cmd_curve(in_path, as_json, out_path);
    if (ca->parsed()) return cmd_catalog(as_json, out_path);
    if (v->parsed()) return cmd_verify(fixtures, as_json, out_path, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

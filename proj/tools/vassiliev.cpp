// Command-line front end: evaluate weight systems on diagrams, build the
// named families, run Brauer algebra computations, compute dimension tables,
// and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 input/validation error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vassiliev/brauer.hpp"
#include "vassiliev/dimension.hpp"
#include "vassiliev/families.hpp"
#include "vassiliev/matrix.hpp"
#include "vassiliev/ops.hpp"
#include "vassiliev/verify.hpp"
#include "vassiliev/weight.hpp"

using json = nlohmann::json;
using namespace vassiliev;

namespace {

// ---- diagram JSON format ----
// {"circles": [[names...]...], "vertices": [[a,b,c]...], "edges": [[a,b]...]}
// Names may be integers or strings; they are mapped to internal ids.

Diagram diagram_from_json(const json& j) {
  std::map<std::string, int> ids;
  auto id_of = [&ids](const json& name) {
    std::string key = name.is_string() ? name.get<std::string>() : name.dump();
    auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
    return it->second;
  };
  Diagram d;
  for (const auto& c : j.at("circles")) {
    std::vector<int> legs;
    for (const auto& p : c) legs.push_back(id_of(p));
    d.circles.push_back(std::move(legs));
  }
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"]) {
      if (v.size() != 3) throw std::invalid_argument("vertex needs 3 ports");
      d.vertices.push_back({id_of(v[0]), id_of(v[1]), id_of(v[2])});
    }
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw std::invalid_argument("edge needs 2 endpoints");
    int a = id_of(e[0]), b = id_of(e[1]);
    d.edges[a] = b;
    d.edges[b] = a;
  }
  return d;
}

json diagram_to_json(const Diagram& d) {
  json j;
  j["circles"] = json::array();
  for (const auto& c : d.circles) j["circles"].push_back(c);
  j["vertices"] = json::array();
  for (const auto& v : d.vertices)
    j["vertices"].push_back(std::vector<int>(v.begin(), v.end()));
  j["edges"] = json::array();
  for (const auto& [a, b] : d.edges)
    if (a < b) j["edges"].push_back(std::vector<int>{a, b});
  return j;
}

Diagram read_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  Diagram d = diagram_from_json(j);
  auto bad = validate(d);
  if (!bad.empty()) throw std::invalid_argument(path + ": " + bad.front());
  return d;
}

struct GlobalFlags {
  int max_vertices = 24;
  std::string cache_dir;
  int jobs = 1;
  std::string format = "text";

  EvalOptions eval_options(bool deframed = true) const {
    EvalOptions o;
    o.deframed = deframed;
    o.max_vertices = max_vertices;
    return o;
  }
};

void print_values(const GlobalFlags& g, const std::string& flavor,
                  const DiagramCombo& combo, bool deframed) {
  auto opts = g.eval_options(deframed);
  json out;
  if (flavor == "gl" || flavor == "both") {
    Poly p = evaluate(combo, WeightFlavor::gl, opts);
    if (g.format == "json")
      out["gl"] = p.str();
    else if (flavor == "both")
      std::cout << "gl: " << p.str() << "\n";
    else
      std::cout << p.str() << "\n";
  }
  if (flavor == "so" || flavor == "both") {
    Poly p = evaluate(combo, WeightFlavor::so, opts);
    if (g.format == "json")
      out["so"] = p.str();
    else if (flavor == "both")
      std::cout << "so: " << p.str() << "\n";
    else
      std::cout << p.str() << "\n";
  }
  if (g.format == "json") std::cout << out.dump(2) << "\n";
}

json dim_report_json(const DimReport& r) {
  return json{{"n", r.n},
              {"l", r.l},
              {"dim_H", r.dim_H},
              {"dim_F", r.dim_F},
              {"dim_sum", r.dim_sum},
              {"dim_cap", r.dim_cap},
              {"diagram_count", r.diagram_count}};
}

// Reports are cached keyed by (n, l, version); the cache is purely an
// optimization and is never trusted blindly on schema changes.
constexpr const char* kCacheVersion = "1";

DimReport dims_cached(int n, int l, const GlobalFlags& g, EnumOptions eopts) {
  std::string dir = g.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("VASSILIEV_CACHE")) dir = env;
  std::string path;
  if (!dir.empty())
    path = dir + "/dims-v" + kCacheVersion + "-" + std::to_string(n) + "-" +
           std::to_string(l) + ".json";
  if (!path.empty()) {
    std::ifstream in(path);
    if (in) {
      json j;
      in >> j;
      DimReport r;
      r.n = j.at("n");
      r.l = j.at("l");
      r.dim_H = j.at("dim_H");
      r.dim_F = j.at("dim_F");
      r.dim_sum = j.at("dim_sum");
      r.dim_cap = j.at("dim_cap");
      r.diagram_count = j.at("diagram_count");
      return r;
    }
  }
  DimReport r = dims(n, l, eopts);
  if (!path.empty()) {
    std::ofstream out(path);
    if (out) out << dim_report_json(r).dump(2) << "\n";
  }
  return r;
}

std::string projection_name(Projection p) {
  switch (p) {
    case Projection::gl: return "gl";
    case Projection::so: return "so";
    default: return "both";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight systems of the Homfly and Kauffman polynomials on "
               "trivalent diagrams"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name
  GlobalFlags g;
  app.add_option("--max-vertices", g.max_vertices,
                 "state-sum guard: refuse diagrams with more internal vertices");
  app.add_option("--cache", g.cache_dir,
                 "results cache directory (or env VASSILIEV_CACHE)");
  app.add_option("--jobs", g.jobs, "worker threads (results are deterministic)");
  app.add_option("--format", g.format, "output format: text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // eval
  std::string eval_in, eval_flavor = "both";
  bool eval_framed = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a diagram file");
  eval_cmd->add_option("--in", eval_in, "diagram JSON file")->required();
  eval_cmd->add_option("--flavor", eval_flavor, "gl|so|both")
      ->check(CLI::IsMember({"gl", "so", "both"}));
  eval_cmd->add_flag("--framed", eval_framed, "skip the deframing map");

  // family
  std::string fam_spec, fam_out, fam_eval;
  auto* fam_cmd = app.add_subcommand("family", "build a named diagram");
  fam_cmd->add_option("--spec", fam_spec, "family spec, e.g. omega:4")->required();
  fam_cmd->add_option("--out", fam_out, "write diagram JSON here");
  fam_cmd->add_option("--eval", fam_eval, "evaluate: gl|so|both")
      ->check(CLI::IsMember({"gl", "so", "both"}));

  // brauer
  int br_k = 3;
  std::string br_expr;
  bool br_trace = false;
  auto* br_cmd = app.add_subcommand("brauer", "Brauer algebra computations");
  br_cmd->add_option("--k", br_k, "strand count (named elements: 2 or 3)");
  br_cmd->add_option("--expr", br_expr, "expression, e.g. \"(d-h)^3\"")->required();
  br_cmd->add_flag("--trace", br_trace, "print the trace instead of the element");

  // dims
  int dims_n = 0, dims_l = 1;
  bool dims_force = false;
  auto* dims_cmd = app.add_subcommand("dims", "dimension report for (n,l)");
  dims_cmd->add_option("--n", dims_n, "degree")->required();
  dims_cmd->add_option("--l", dims_l, "circle count")->required();
  dims_cmd->add_flag("--force", dims_force, "override the enumeration guard");

  // rank
  std::string rank_list, rank_proj = "both";
  auto* rank_cmd = app.add_subcommand("rank", "span dimension of a value list");
  rank_cmd->add_option("--list", rank_list, "list spec, e.g. Sigma:7 or M:4,2")
      ->required();
  rank_cmd->add_option("--projection", rank_proj, "gl|so|both")
      ->check(CLI::IsMember({"gl", "so", "both"}));

  // verify
  std::string verify_suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", verify_suite, "all or a suite name");

  // enumerate
  int enum_n = 0, enum_l = 1;
  bool enum_count = false, enum_force = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate chord diagrams");
  enum_cmd->add_option("--n", enum_n, "degree")->required();
  enum_cmd->add_option("--l", enum_l, "circle count")->required();
  enum_cmd->add_flag("--count", enum_count, "print only the count");
  enum_cmd->add_flag("--force", enum_force, "override the enumeration guard");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // non-help parse problems are usage errors
  }

  try {
    if (*eval_cmd) {
      DiagramCombo combo;
      combo.add(Rational(1), read_diagram(eval_in));
      print_values(g, eval_flavor, combo, !eval_framed);
      return 0;
    }
    if (*fam_cmd) {
      DiagramCombo combo = build_combo_spec(fam_spec);
      if (!fam_out.empty()) {
        if (combo.terms.size() != 1)
          throw std::invalid_argument("--out needs a single-diagram spec");
        std::ofstream out(fam_out);
        if (!out) throw std::invalid_argument("cannot write " + fam_out);
        out << diagram_to_json(combo.terms[0].second).dump(2) << "\n";
      }
      if (!fam_eval.empty()) print_values(g, fam_eval, combo, true);
      if (fam_out.empty() && fam_eval.empty())
        std::cout << "built " << fam_spec << ": degree "
                  << combo.terms[0].second.degree() << ", "
                  << combo.terms[0].second.circle_count() << " circle(s)\n";
      return 0;
    }
    if (*br_cmd) {
      BrElement e = br_parse(br_expr, br_k);
      if (br_trace) {
        if (g.format == "json")
          std::cout << json{{"trace", e.trace().str()}}.dump(2) << "\n";
        else
          std::cout << e.trace().str() << "\n";
      } else {
        if (g.format == "json")
          std::cout << json{{"element", e.str()}}.dump(2) << "\n";
        else
          std::cout << e.str() << "\n";
      }
      return 0;
    }
    if (*dims_cmd) {
      EnumOptions eopts;
      eopts.override_guard = dims_force;
      DimReport r = dims_cached(dims_n, dims_l, g, eopts);
      if (g.format == "json") {
        std::cout << dim_report_json(r).dump(2) << "\n";
      } else if (g.format == "csv") {
        std::cout << "n,l,dim_H,dim_F,dim_sum,dim_cap,diagram_count\n"
                  << r.n << "," << r.l << "," << r.dim_H << "," << r.dim_F
                  << "," << r.dim_sum << "," << r.dim_cap << ","
                  << r.diagram_count << "\n";
      } else {
        std::cout << "(n,l) = (" << r.n << "," << r.l << ")  dim_H = " << r.dim_H
                  << "  dim_F = " << r.dim_F << "  dim_sum = " << r.dim_sum
                  << "  dim_cap = " << r.dim_cap << "  ("
                  << r.diagram_count << " diagrams)\n";
      }
      return 0;
    }
    if (*rank_cmd) {
      Projection proj = rank_proj == "gl"   ? Projection::gl
                        : rank_proj == "so" ? Projection::so
                                            : Projection::both;
      RankReport rep = rank_of(rank_list, build_list_spec(rank_list), proj,
                               g.eval_options());
      if (g.format == "json") {
        json j{{"label", rep.label},
               {"projection", projection_name(proj)},
               {"rank", rep.rank},
               {"elements", rep.elements}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << rep.label << " (" << rep.elements.size()
                  << " elements, projection " << projection_name(proj)
                  << "): rank " << rep.rank << "\n";
      }
      return 0;
    }
    if (*verify_cmd) {
      std::vector<CheckResult> results = verify_suite == "all"
                                             ? verify_all()
                                             : verify(verify_suite);
      int failed = 0;
      json jchecks = json::array();
      for (const auto& r : results) {
        if (!r.pass) ++failed;
        if (g.format == "json") {
          jchecks.push_back({{"name", r.name},
                             {"pass", r.pass},
                             {"expected", r.expected},
                             {"actual", r.actual}});
        } else {
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
          if (!r.pass)
            std::cout << " (expected " << r.expected << ", got " << r.actual
                      << ")";
          std::cout << "\n";
        }
      }
      if (g.format == "json") {
        std::cout << json{{"checks", jchecks}, {"failed", failed}}.dump(2)
                  << "\n";
      } else {
        std::cout << (results.size() - failed) << "/" << results.size()
                  << " checks passed\n";
      }
      return failed == 0 ? 0 : 1;
    }
    if (*enum_cmd) {
      EnumOptions eopts;
      eopts.override_guard = enum_force;
      if (enum_count) {
        std::cout << count_chords(enum_n, enum_l, eopts) << "\n";
      } else {
        enumerate_chords(enum_n, enum_l, [](const Diagram& d) {
          std::cout << diagram_to_json(d).dump() << "\n";
        }, eopts);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    if (g.format == "json")
      std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    if (g.format == "json")
      std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

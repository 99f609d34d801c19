// hopfrep command line: ql-data, the algebras A_lambda and their modules.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "hopfrep/exact/errors.hpp"
#include "hopfrep/onedim/onedim.hpp"
#include "report.hpp"

using namespace hopfrep;
using nlohmann::json;

namespace {

enum Exit { ok = 0, semantic = 1, input = 2, limit = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string builtin;
  std::size_t n = 0;
  std::string lambda = "1", Lambda = "0", Gamma = "0";
  std::string datum_path, dot_path, json_path, dump_table;
  std::size_t step_limit = 10000;
};

struct Loaded {
  std::shared_ptr<const QlDatum> datum;
  std::optional<int> catalog_lambda;  // set for the builtin Q3_minus with lambda 0 or 1
  bool q3 = false;
};

GQ scalar(const std::string& s, const char* flag) {
  try {
    return GQ::parse(s);
  } catch (const ParseError& e) {
    throw InputError(std::string(flag) + ": " + e.what());
  }
}

Loaded load(const Config& c) {
  if (!c.builtin.empty() && !c.datum_path.empty()) throw InputError("give either --builtin or --datum, not both");
  Loaded l;
  if (!c.datum_path.empty()) {
    std::ifstream in(c.datum_path);
    if (!in) throw InputError("cannot read " + c.datum_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw InputError("malformed json in " + c.datum_path + ": " + e.what());
    }
    try {
      l.datum = std::make_shared<const QlDatum>(datum_from_json(j));
    } catch (const Error& e) {
      throw InputError(e.what());
    }
    l.q3 = l.datum->nx() == 3 && l.datum->group.order() == 6;
    return l;
  }
  Builtin b;
  try {
    b = parse_builtin(c.builtin.empty() ? "Q3_minus" : c.builtin);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  std::vector<GQ> params;
  std::size_t n = c.n;
  if (b == Builtin::Q3_minus) {
    if (n == 0) n = 3;
    params = {scalar(c.lambda, "--lambda")};
  } else if (b == Builtin::Qn_minus) {
    if (n == 0) n = 4;
    params = {scalar(c.Lambda, "--Lambda"), scalar(c.Gamma, "--Gamma")};
  } else {
    if (n == 0) n = 4;
    params = {scalar(c.lambda, "--lambda")};
  }
  if (b == Builtin::Q3_minus && (params[0] == GQ(0) || params[0] == GQ(1)) && n == 3) {
    l.catalog_lambda = params[0] == GQ(0) ? 0 : 1;
    l.datum = a_datum(*l.catalog_lambda);
  } else {
    try {
      l.datum = std::make_shared<const QlDatum>(build_builtin(b, n, params));
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  l.q3 = b == Builtin::Q3_minus;
  return l;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit_json(const Config& c, const json& j) {
  if (c.json_path.empty()) std::cout << j.dump(2) << "\n";
  else write_file(c.json_path, j.dump(2) + "\n");
}

int require_catalog(const Loaded& l) {
  if (l.catalog_lambda) return *l.catalog_lambda;
  throw InputError("this command needs --builtin Q3_minus with --lambda 0 or 1");
}

AlgebraTable table_for(const Loaded& l, const Config& c) {
  auto t = build_table(l.datum, a3_candidate_basis(*l.datum), c.step_limit);
  if (!c.dump_table.empty()) write_file(c.dump_table, t.to_json().dump(1) + "\n");
  return t;
}

int cmd_validate(const Config& c) {
  auto l = load(c);
  auto rep = validate(*l.datum);
  if (rep.ok()) std::cout << l.datum->name << ": valid ql-datum\n";
  for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
  if (!c.json_path.empty())
    emit_json(c, {{"datum", datum_to_json(*l.datum)}, {"valid", rep.ok()}, {"failures", rep.failures}});
  return rep.ok() ? ok : semantic;
}

int cmd_report(const Config& c) {
  auto l = load(c);
  auto rep = validate(*l.datum);
  json j;
  j["datum"] = l.datum->name;
  j["valid"] = rep.ok();
  if (!rep.ok()) {
    j["failures"] = rep.failures;
    emit_json(c, j);
    return semantic;
  }
  j["one_dimensional"] = tools::onedim_section(l.datum);
  if (!l.q3) {
    j["table"] = "skipped: only the one-dimensional sector is computed for n >= 4";
    emit_json(c, j);
    return ok;
  }
  auto t = table_for(l, c);
  if (l.catalog_lambda) {
    auto full = tools::full_report(*l.catalog_lambda, t);
    for (auto& [k, v] : full.items()) j[k] = v;
    if (!c.dot_path.empty()) {
      auto q = tools::catalog_quiver(*l.catalog_lambda);
      write_file(c.dot_path, quiver_dot(q) + diagram_dot(separation_diagram(q)));
    }
  } else {
    j["algebra"] = tools::algebra_section(t);
    j["catalog"] = "skipped: the module catalog covers lambda in {0,1}";
  }
  emit_json(c, j);
  return ok;
}

int cmd_onedim(const Config& c) {
  auto l = load(c);
  if (!c.json_path.empty()) emit_json(c, tools::onedim_section(l.datum));
  std::cout << tools::onedim_text(l.datum);
  return ok;
}

int cmd_fusion(const Config& c) {
  auto lam = require_catalog(load(c));
  auto p = tools::product_table(lam);
  bool all = true;
  for (const auto& e : p) {
    std::cout << e.left << " x " << e.right << " =";
    for (const auto& s : e.summands) std::cout << " " << s;
    if (!e.expected.empty()) std::cout << (e.matches ? "  ok" : "  MISMATCH, expected " + e.expected);
    std::cout << "\n";
    all = all && e.matches;
  }
  if (!c.json_path.empty()) emit_json(c, tools::products_section(p));
  return all ? ok : semantic;
}

int cmd_ext(const Config& c) {
  auto l = load(c);
  if (!l.catalog_lambda) {
    std::cout << tools::onedim_text(l.datum);
    if (!c.json_path.empty()) emit_json(c, tools::onedim_section(l.datum));
    return ok;
  }
  auto q = tools::catalog_quiver(*l.catalog_lambda);
  std::cout << "# dim Ext^1(S_i, S_j), row i, column j\n";
  for (std::size_t i = 0; i < q.vertices.size(); ++i) {
    std::cout << q.vertices[i] << ":";
    for (auto x : q.arrows[i]) std::cout << " " << x;
    std::cout << "\n";
  }
  if (!c.json_path.empty()) emit_json(c, tools::ext_section(q));
  return ok;
}

int cmd_quiver(const Config& c) {
  auto lam = require_catalog(load(c));
  auto q = tools::catalog_quiver(lam);
  auto v = rep_type_verdict(q);
  std::cout << "# arrows i -> j: dim Ext^1(S_i, S_j)\n";
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    for (std::size_t j = 0; j < q.vertices.size(); ++j)
      if (q.arrows[i][j]) std::cout << q.vertices[i] << " -> " << q.vertices[j] << " x" << q.arrows[i][j] << "\n";
  std::cout << "arrows: " << q.arrow_count() << "\n";
  for (const auto& cl : v.components) std::cout << "component: " << cl.to_string() << "\n";
  std::cout << "verdict: " << v.text << "\n";
  if (!c.dot_path.empty()) write_file(c.dot_path, quiver_dot(q) + diagram_dot(separation_diagram(q)));
  if (!c.json_path.empty()) emit_json(c, tools::quiver_section(q));
  return ok;
}

int cmd_projectives(const Config& c) {
  auto l = load(c);
  auto lam = require_catalog(l);
  auto t = table_for(l, c);
  auto j = tools::projectives_section(lam, t);
  bool all = true;
  for (const auto& p : j["covers"]) {
    std::cout << p["name"].get<std::string>() << " dim " << p["dim"] << " covers " << p["cover_of"].get<std::string>()
              << ": " << (p["certified"].get<bool>() ? "certified" : "NOT certified") << "\n";
    all = all && p["certified"].get<bool>();
  }
  std::cout << "sum dim P(S) dim S = " << j["dimension_sum"] << "\n";
  if (!c.json_path.empty()) emit_json(c, j);
  return all ? ok : semantic;
}

int cmd_catalog(const Config& c, bool lambda_given) {
  std::vector<int> lams{0, 1};
  if (lambda_given) lams = {require_catalog(load(c))};
  json out = json::array();
  for (int lam : lams) {
    std::vector<std::pair<std::string, std::vector<CatalogEntry>>> groups{
        {"simple", simples(lam)}, {"indecomposable3", indecomposables3(lam)}, {"projective", projectives(lam)}};
    if (lam == 1) groups.insert(groups.begin() + 2, {"indecomposable4", indecomposables4()});
    for (const auto& [kind, list] : groups)
      for (const auto& e : list) {
        auto prof = profile_string(restrict_isotypic(e.module));
        std::cout << "A" << lam << "  " << kind << "  " << e.name << "  dim " << e.module.dim() << "  " << prof << "\n";
        auto m = e.module.to_json();
        m["algebra"] = "A" + std::to_string(lam);
        m["kind"] = kind;
        m["profile"] = prof;
        out.push_back(m);
      }
  }
  if (!c.json_path.empty()) emit_json(c, out);
  return ok;
}

int cmd_check_all(const Config& c) {
  auto results = tools::run_acceptance();
  bool all = true;
  json j = json::array();
  for (const auto& r : results) {
    std::cout << tools::format_check(r) << "\n";
    all = all && r.pass;
    j.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"expected", r.expected}, {"computed", r.computed}});
  }
  if (!c.json_path.empty()) emit_json(c, j);
  return all ? ok : semantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of pointed Hopf algebras over S_n"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--builtin", cfg.builtin, "Q3_minus, Qn_minus or Qn_chi");
  app.add_option("--n", cfg.n, "degree of S_n");
  auto* lambda_opt = app.add_option("--lambda", cfg.lambda, "lambda for Q3_minus and Qn_chi");
  app.add_option("--Lambda", cfg.Lambda, "Lambda for Qn_minus");
  app.add_option("--Gamma", cfg.Gamma, "Gamma for Qn_minus");
  app.add_option("--datum", cfg.datum_path, "ql-datum json file");
  app.add_option("--dot", cfg.dot_path, "write quiver and separation diagram DOT here");
  app.add_option("--json", cfg.json_path, "write json output here");
  app.add_option("--step-limit", cfg.step_limit, "rewriting step limit");
  app.add_option("--dump-table", cfg.dump_table, "write the multiplication table json here");

  std::string which;
  for (const char* name : {"validate", "report", "onedim", "fusion", "ext", "quiver", "projectives", "catalog", "check-all"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&which, name] { which = name; });
  }
  app.get_subcommand("catalog")->add_option("action", "only 'list' is supported")->check(CLI::IsMember({"list"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input;
  }

  try {
    if (which == "validate") return cmd_validate(cfg);
    if (which == "report") return cmd_report(cfg);
    if (which == "onedim") return cmd_onedim(cfg);
    if (which == "fusion") return cmd_fusion(cfg);
    if (which == "ext") return cmd_ext(cfg);
    if (which == "quiver") return cmd_quiver(cfg);
    if (which == "projectives") return cmd_projectives(cfg);
    if (which == "catalog") return cmd_catalog(cfg, lambda_opt->count() > 0);
    if (which == "check-all") return cmd_check_all(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const RewriteLimitError& e) {
    std::cerr << "computation limit: " << e.what() << "\n";
    return limit;
  } catch (const NotClosedError& e) {
    std::cerr << "table build failed: " << e.what() << "\n";
    return limit;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return semantic;
  }
  return input;
}

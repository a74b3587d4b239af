// Command-line front end. Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
#include "wsuper/families.hpp"
#include "wsuper/report.hpp"
#include "wsuper/table_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace wsuper;
using nlohmann::ordered_json;

namespace {

struct Config {
  std::string family;
  int m = -1, n = -1;
  std::string table;
  std::string e;
  std::string suite;
  std::string format = "text";
  std::string out;
  int max_deg = 4;
  long prime = 0;
  bool corrupt = false;
};

struct Loaded {
  SuperAlgebra alg;
  std::optional<Vec> e;
  std::optional<AlgebraSpec> spec;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vec parse_vector(const std::string& csv, int dim) {
  std::vector<Scalar> xs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) xs.push_back(parse_scalar(item));
  if (static_cast<int>(xs.size()) != dim)
    throw InputError("--e has " + std::to_string(xs.size()) + " entries, the algebra has dimension " + std::to_string(dim));
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = xs[static_cast<size_t>(i)];
  return v;
}

Loaded load(const Config& cfg) {
  if (cfg.family.empty() == cfg.table.empty()) throw InputError("give exactly one of --family or --table");
  if (!cfg.table.empty()) {
    if (cfg.m >= 0 || cfg.n >= 0) throw InputError("--m/--n only apply to --family");
    const std::string doc = read_file(cfg.table);
    Loaded out{import_table(doc), std::nullopt, std::nullopt};
    if (!cfg.e.empty()) {
      out.e = parse_vector(cfg.e, out.alg.dim());
    } else {
      // exported catalog tables carry their nilpotent element
      const auto j = nlohmann::json::parse(doc);
      if (j.contains("e")) {
        if (!j["e"].is_array() || static_cast<int>(j["e"].size()) != out.alg.dim())
          throw InputError("table: 'e' must be an array of length dim");
        Vec v(out.alg.dim());
        for (int i = 0; i < out.alg.dim(); ++i) v(i) = parse_scalar(j["e"][static_cast<size_t>(i)].get<std::string>());
        out.e = v;
      }
    }
    return out;
  }
  AlgebraSpec spec;
  spec.family = parse_family(cfg.family);
  if (spec.family == Family::psl22) {
    if ((cfg.m >= 0 && cfg.m != 2) || (cfg.n >= 0 && cfg.n != 2)) throw InputError("psl22 takes no --m/--n");
    spec.m = spec.n = 2;
  } else {
    if (cfg.m < 0 || cfg.n < 0) throw InputError("--family " + cfg.family + " needs --m and --n");
    spec.m = cfg.m;
    spec.n = cfg.n;
  }
  Loaded out{build_algebra(spec), std::nullopt, spec};
  out.e = cfg.e.empty() ? catalog_e(spec) : parse_vector(cfg.e, out.alg.dim());
  return out;
}

MinimalSetup setup_of(const Loaded& l) {
  if (!l.e) throw InputError("no nilpotent element: pass --e or a table with an 'e' entry");
  return build_minimal_setup(l.alg, *l.e);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw InputError("cannot write '" + cfg.out + "'");
  f << text;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_info(const Config& cfg) {
  const Loaded l = load(cfg);
  const AlgebraCheck chk = check_algebra(l.alg);
  ordered_json j;
  j["algebra"] = l.alg.name();
  j["dim"] = l.alg.dim();
  j["dim_even"] = l.alg.dim_even();
  j["dim_odd"] = l.alg.dim_odd();
  j["parity"] = l.alg.parities();
  j["table_valid"] = chk.ok();
  if (!chk.ok()) j["first_failure"] = chk.first_failure();
  if (l.e) j["setup"] = setup_json(setup_of(l));
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "algebra: " << l.alg.name() << "\n"
     << "dim " << l.alg.dim() << " (even " << l.alg.dim_even() << ", odd " << l.alg.dim_odd() << ")\n"
     << "table: " << (chk.ok() ? "valid" : "invalid: " + chk.first_failure()) << "\n";
  if (l.e) os << setup_summary(setup_of(l));
  emit(cfg, os.str());
  return 0;
}

int cmd_verify(const Config& cfg) {
  const Loaded l = load(cfg);
  RelationsLab lab(setup_of(l));
  if (cfg.corrupt) lab.corrupt_for_testing();
  const SuiteReport rep = run_suite(lab, l.alg.name(), split_csv(cfg.suite), cfg.max_deg, thread_budget());
  emit(cfg, cfg.format == "json" ? report_json(lab.setup(), rep).dump(2) + "\n" : report_text(lab.setup(), rep));
  return rep.passed() ? 0 : 1;
}

int cmd_c0(const Config& cfg) {
  const Loaded l = load(cfg);
  RelationsLab lab(setup_of(l));
  if (cfg.corrupt) lab.corrupt_for_testing();
  if (lab.setup().ge1.empty()) throw InputError("c0 needs g^e(1) != 0");
  const C0Result& c = lab.c0_result();
  SuiteReport rep;
  rep.algebra = l.alg.name();
  rep.c0 = c;
  rep.relations.push_back(c.relation);
  if (cfg.format == "json") {
    ordered_json j;
    j["algebra"] = l.alg.name();
    j["c0"] = c0_json(lab.setup(), c);
    j["status"] = c.relation.passed ? "pass" : "fail";
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, report_text(lab.setup(), rep));
  }
  return c.relation.passed ? 0 : 1;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Characteristic restrictions for the basic classical families; empty when p is allowed.
std::string prime_restriction(const Loaded& l, long p) {
  if (!l.spec) return "no characteristic restriction is known for an imported table";
  const AlgebraSpec& s = *l.spec;
  if (p <= 2) return "p > 2 is required";
  if (s.family == Family::sl && (s.m - s.n) % p == 0) return "sl(m|n) requires p not dividing m-n";
  if (s.family == Family::psl22) return "the sl(m|n) restriction p not dividing m-n excludes every p when m = n";
  return "";
}

int cmd_kw(const Config& cfg) {
  const Loaded l = load(cfg);
  const MinimalSetup setup = setup_of(l);
  const KwDimensions kw = kw_dimensions(setup);
  ordered_json j;
  j["algebra"] = l.alg.name();
  j["d0"] = kw.d0;
  j["d1"] = kw.d1;
  j["p_exponent"] = kw.exp_p;
  j["two_exponent"] = kw.exp_2;
  j["two_exponent_rule"] = "ceil(d1/2)";
  j["parity_r_equals_parity_d1"] = kw.parity_matches;
  j["d0_even"] = kw.d0_even;
  std::string warning;
  if (cfg.prime) {
    if (!is_prime(cfg.prime)) throw InputError("--prime must be a prime");
    warning = prime_restriction(l, cfg.prime);
    Integer value = 1;
    for (int i = 0; i < kw.exp_p; ++i) value *= cfg.prime;
    for (int i = 0; i < kw.exp_2; ++i) value *= 2;
    j["prime"] = cfg.prime;
    j["value"] = value.str();
    if (!warning.empty()) j["warning"] = warning;
  }
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "algebra: " << l.alg.name() << "\nd0=" << kw.d0 << " d1=" << kw.d1 << "\nbound: p^" << kw.exp_p << " * 2^"
       << kw.exp_2 << " (2-exponent is ceil(d1/2))\n";
    if (cfg.prime) os << "value at p=" << cfg.prime << ": " << j["value"].get<std::string>() << "\n";
    os << "parity(r) = parity(d1): " << (kw.parity_matches ? "yes" : "no") << ", d0 even: " << (kw.d0_even ? "yes" : "no")
       << "\n";
    emit(cfg, os.str());
  }
  return kw.parity_matches && kw.d0_even ? 0 : 1;
}

int cmd_export(const Config& cfg) {
  const Loaded l = load(cfg);
  auto doc = ordered_json::parse(export_table(l.alg));
  if (l.e) {
    ordered_json e = ordered_json::array();
    for (Eigen::Index i = 0; i < l.e->size(); ++i) e.push_back((*l.e)(i).str());
    doc["e"] = e;
  }
  emit(cfg, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal W-superalgebra relation checker"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "gl, sl, psl22 or osp");
    sub->add_option("--m", cfg.m, "even rank parameter");
    sub->add_option("--n", cfg.n, "odd rank parameter");
    sub->add_option("--table", cfg.table, "structure-constant JSON document");
    sub->add_option("--e", cfg.e, "nilpotent element as comma-separated rationals (default: catalog)");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
  };
  auto* info = app.add_subcommand("info", "algebra, table diagnostics and grading data");
  common(info);
  auto* verify = app.add_subcommand("verify", "run the relation suite");
  common(verify);
  verify->add_option("--suite", cfg.suite, "comma-separated relation ids (default: all)");
  verify->add_option("--max-deg", cfg.max_deg, "Kazhdan degree for the PBW check")->check(CLI::Range(2, 12));
  verify->add_flag("--corrupt", cfg.corrupt, "perturb one generator (negative control)");
  auto* c0 = app.add_subcommand("c0", "extract c0 from every g^e(1) pair");
  common(c0);
  c0->add_flag("--corrupt", cfg.corrupt, "perturb one generator (negative control)");
  auto* kw = app.add_subcommand("kw", "Kac-Weisfeiler divisibility exponents");
  common(kw);
  kw->add_option("--prime", cfg.prime, "evaluate the bound at this prime");
  auto* exp = app.add_subcommand("export", "write the structure-constant table");
  common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*info) return cmd_info(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*c0) return cmd_c0(cfg);
    if (*kw) return cmd_kw(cfg);
    if (*exp) return cmd_export(cfg);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

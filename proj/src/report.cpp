#include "wsuper/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <sstream>

namespace wsuper {

using nlohmann::ordered_json;

bool SuiteReport::passed() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationReport& r) { return r.passed; });
}

int thread_budget() {
  const char* env = std::getenv("WSUPER_THREADS");
  if (!env || !*env) return 1;
  try {
    size_t pos = 0;
    const int n = std::stoi(env, &pos);
    if (pos != std::string(env).size() || n < 1) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw InputError(std::string("WSUPER_THREADS must be a positive integer, got '") + env + "'");
  }
}

SuiteReport run_suite(RelationsLab& lab, const std::string& algebra, const std::vector<std::string>& ids, int max_deg,
                      int threads) {
  SuiteReport out;
  out.algebra = algebra;
  std::vector<std::string> todo;
  for (const auto& id : relation_ids())
    if (ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end()) todo.push_back(id);
  for (const auto& id : ids)
    if (std::find(relation_ids().begin(), relation_ids().end(), id) == relation_ids().end())
      throw InputError("unknown relation id '" + id + "'");

  // c0 feeds b_invariance and one_dim_rep, so it is computed once up front and copied into workers
  const bool wants_c0 = std::any_of(todo.begin(), todo.end(), [](const std::string& id) {
    return id == "c0" || id == "b_invariance" || id == "one_dim_rep";
  });
  if (wants_c0 && !lab.setup().ge1.empty()) out.c0 = lab.c0_result();

  std::vector<RelationReport> results(todo.size());
  if (threads <= 1 || todo.size() <= 1) {
    for (size_t k = 0; k < todo.size(); ++k) results[k] = lab.run({todo[k]}, max_deg).front();
  } else {
    // round-robin the ids over workers, each with a private lab (engines are not shareable)
    const size_t nw = std::min(todo.size(), static_cast<size_t>(threads));
    std::vector<std::future<void>> jobs;
    for (size_t w = 0; w < nw; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        RelationsLab mine(lab);
        for (size_t k = w; k < todo.size(); k += nw) results[k] = mine.run({todo[k]}, max_deg).front();
      }));
    for (auto& j : jobs) j.get();
  }
  out.relations = std::move(results);

  for (size_t k = 0; k < lab.setup().ge0.size(); ++k) out.generators.push_back(lab.theta_ge0(k));
  for (size_t k = 0; k < lab.setup().ge1.size(); ++k) out.generators.push_back(lab.theta_ge1(k));
  out.generators.push_back(lab.casimir());
  return out;
}

ordered_json setup_json(const MinimalSetup& setup) {
  const KwDimensions kw = kw_dimensions(setup);
  ordered_json j;
  j["dim"] = setup.dim();
  ordered_json grading = ordered_json::object();
  for (int i = -2; i <= 2; ++i) grading[std::to_string(i)] = setup.grading.dim(i);
  j["grading"] = grading;
  j["s"] = setup.s;
  j["r"] = setup.r;
  j["dim_ge0"] = setup.ge0.size();
  j["dim_ge1"] = setup.ge1.size();
  j["split_pairing"] = setup.split_pairing;
  j["d0"] = kw.d0;
  j["d1"] = kw.d1;
  j["bound"] = {{"p_exponent", kw.exp_p},
                {"two_exponent", kw.exp_2},
                {"two_exponent_rule", "ceil(d1/2)"},
                {"parity_r_equals_parity_d1", kw.parity_matches},
                {"d0_even", kw.d0_even}};
  return j;
}

ordered_json c0_json(const MinimalSetup& setup, const C0Result& c0) {
  ordered_json pairs = ordered_json::array();
  for (const auto& p : c0.pairs) {
    ordered_json e;
    e["i"] = p.i + 1;
    e["j"] = p.j + 1;
    e["w1"] = render_vector(setup.alg, setup.ge1[static_cast<size_t>(p.i)]);
    e["w2"] = render_vector(setup.alg, setup.ge1[static_cast<size_t>(p.j)]);
    e["pairing"] = p.pairing.str();
    e["scalar"] = p.scalar;
    if (p.scalar) e["b"] = p.b.str();
    if (p.c0) e["c0"] = p.c0->str();
    if (p.double_sum) e["double_sum"] = p.double_sum->str();
    pairs.push_back(e);
  }
  ordered_json j;
  j["pairs"] = pairs;
  j["value"] = c0.c0 ? ordered_json(c0.c0->str()) : ordered_json(nullptr);
  j["formula"] = c0.formula ? ordered_json(c0.formula->str()) : ordered_json(nullptr);
  j["consistent"] = c0.consistent;
  j["formula_matches"] = c0.formula_matches;
  j["provenance"] = "computed by this engine";
  return j;
}

ordered_json report_json(const MinimalSetup& setup, const SuiteReport& report) {
  ordered_json j;
  j["algebra"] = report.algebra;
  j["setup"] = setup_json(setup);
  ordered_json gens = ordered_json::array();
  for (const auto& g : report.generators)
    gens.push_back({{"label", g.label}, {"kazhdan_degree", g.kazhdan_degree}, {"value", render(setup.alg, g.value)}});
  j["generators"] = gens;
  ordered_json rels = ordered_json::array();
  for (const auto& r : report.relations) {
    ordered_json e;
    e["id"] = r.id;
    e["status"] = r.passed ? "pass" : "fail";
    if (!r.passed) {
      e["residue"] = render(setup.alg, r.residue);
      e["witness"] = r.witness;
    }
    if (!r.notes.empty()) e["notes"] = r.notes;
    rels.push_back(e);
  }
  j["relations"] = rels;
  j["c0"] = report.c0 ? c0_json(setup, *report.c0) : ordered_json(nullptr);
  j["status"] = report.passed() ? "pass" : "fail";
  return j;
}

std::string report_text(const MinimalSetup& setup, const SuiteReport& report) {
  std::ostringstream os;
  os << "algebra: " << report.algebra << "\n" << setup_summary(setup);
  os << "generators:\n";
  for (const auto& g : report.generators)
    os << "  " << g.label << " (degree " << g.kazhdan_degree << ") = " << render(setup.alg, g.value) << "\n";
  os << "relations:\n";
  for (const auto& r : report.relations) {
    os << "  [" << (r.passed ? "pass" : "FAIL") << "] " << r.id;
    if (r.seconds > 0) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << r.seconds;
      os << " (" << t.str() << " s)";
    }
    os << "\n";
    for (const auto& n : r.notes) os << "         " << n << "\n";
    if (!r.passed) {
      os << "         witness: " << r.witness << "\n";
      os << "         residue: " << render(setup.alg, r.residue) << "\n";
    }
  }
  if (report.c0) {
    const C0Result& c = *report.c0;
    os << "c0: " << (c.c0 ? c.c0->str() : std::string("undetermined")) << (c.consistent ? "" : " (inconsistent)");
    if (c.formula) os << ", closed form " << c.formula->str();
    os << "\n";
    for (const auto& p : c.pairs) {
      if (!p.c0) continue;
      os << "  (w" << p.i + 1 << ",w" << p.j + 1 << ") pairing " << p.pairing.str() << " b " << p.b.str() << " c0 "
         << p.c0->str();
      if (p.double_sum) os << " double sum " << p.double_sum->str();
      os << "\n";
    }
  }
  os << "status: " << (report.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace wsuper

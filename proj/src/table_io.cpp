#include "wsuper/table_io.hpp"

#include <json.hpp>

namespace wsuper {

namespace {

using nlohmann::ordered_json;

std::string big_int_field(const ordered_json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw InputError(where + ": missing '" + key + "'");
  const auto& v = obj.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InputError(where + ": '" + key + "' must be a decimal string");
}

Scalar read_fraction(const ordered_json& obj, const std::string& where) {
  const std::string num = big_int_field(obj, "num", where);
  const std::string den = obj.contains("den") ? big_int_field(obj, "den", where) : std::string("1");
  Integer n, d;
  try {
    n = Integer(num);
    d = Integer(den);
  } catch (const std::exception&) {
    throw InputError(where + ": malformed integer");
  }
  if (d == 0) throw InputError(where + ": zero denominator");
  return Scalar(n, d);
}

int read_index(const ordered_json& obj, const char* key, int dim, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) throw InputError(where + ": missing integer '" + key + "'");
  const int i = obj.at(key).get<int>();
  if (i < 0 || i >= dim) throw InputError(where + ": index '" + key + "' out of range");
  return i;
}

ordered_json fraction(const Scalar& x) {
  ordered_json out;
  out["num"] = numerator(x).str();
  out["den"] = denominator(x).str();
  return out;
}

}  // namespace

std::string export_table(const SuperAlgebra& alg) {
  ordered_json doc;
  doc["name"] = alg.name();
  doc["dim"] = alg.dim();
  doc["parity"] = alg.parities();
  if (alg.has_custom_labels()) doc["labels"] = alg.labels();
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      const SparseVec& v = alg.bracket_basis(i, j);
      if (v.empty()) continue;
      ordered_json entry;
      entry["i"] = i;
      entry["j"] = j;
      ordered_json terms = ordered_json::array();
      for (const auto& [k, c] : v) {
        ordered_json t = fraction(c);
        ordered_json term;
        term["k"] = k;
        term["num"] = t["num"];
        term["den"] = t["den"];
        terms.push_back(term);
      }
      entry["terms"] = terms;
      brackets.push_back(entry);
    }
  doc["brackets"] = brackets;
  ordered_json form = ordered_json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j) {
      if (alg.form()(i, j).is_zero()) continue;
      ordered_json entry;
      entry["i"] = i;
      entry["j"] = j;
      ordered_json t = fraction(alg.form()(i, j));
      entry["num"] = t["num"];
      entry["den"] = t["den"];
      form.push_back(entry);
    }
  doc["form"] = form;
  return doc.dump(2) + "\n";
}

SuperAlgebra import_table(const std::string& document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("table parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("table: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw InputError("table: missing integer 'dim'");
  const int dim = doc["dim"].get<int>();
  if (dim <= 0) throw InputError("table: 'dim' must be positive");
  if (!doc.contains("parity") || !doc["parity"].is_array() || static_cast<int>(doc["parity"].size()) != dim)
    throw InputError("table: 'parity' must be an array of length dim");
  std::vector<int> par;
  for (size_t i = 0; i < doc["parity"].size(); ++i) {
    const auto& p = doc["parity"][i];
    if (!p.is_number_integer()) throw InputError("table: parity[" + std::to_string(i) + "] is not an integer");
    par.push_back(p.get<int>());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || static_cast<int>(doc["labels"].size()) != dim)
      throw InputError("table: 'labels' must be an array of length dim");
    for (const auto& l : doc["labels"]) labels.push_back(l.get<std::string>());
  }
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "imported";
  SuperAlgebra alg(name, par, labels);

  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw InputError("table: 'brackets' must be an array");
    std::vector<bool> seen(static_cast<size_t>(dim * dim), false);
    for (size_t e = 0; e < doc["brackets"].size(); ++e) {
      const auto& entry = doc["brackets"][e];
      const std::string where = "brackets[" + std::to_string(e) + "]";
      const int i = read_index(entry, "i", dim, where), j = read_index(entry, "j", dim, where);
      if (seen[static_cast<size_t>(i * dim + j)]) throw InputError(where + ": duplicate (i,j)");
      seen[static_cast<size_t>(i * dim + j)] = true;
      if (!entry.contains("terms") || !entry["terms"].is_array()) throw InputError(where + ": missing 'terms'");
      Vec v = Vec::Zero(dim);
      for (size_t t = 0; t < entry["terms"].size(); ++t) {
        const std::string w = where + ".terms[" + std::to_string(t) + "]";
        const auto& term = entry["terms"][t];
        v(read_index(term, "k", dim, w)) += read_fraction(term, w);
      }
      alg.set_bracket(i, j, to_sparse(v));
    }
  }
  if (!doc.contains("form")) throw AlgebraError("table validation: missing 'form'");
  if (!doc["form"].is_array()) throw InputError("table: 'form' must be an array");
  Mat g = Mat::Zero(dim, dim);
  for (size_t e = 0; e < doc["form"].size(); ++e) {
    const auto& entry = doc["form"][e];
    const std::string where = "form[" + std::to_string(e) + "]";
    g(read_index(entry, "i", dim, where), read_index(entry, "j", dim, where)) = read_fraction(entry, where);
  }
  alg.set_form(g);
  const AlgebraCheck check = check_algebra(alg);
  if (!check.ok()) throw AlgebraError("table validation: " + check.first_failure());
  return alg;
}

}  // namespace wsuper

#include "nilrep/algebra_io.hpp"

#include "nilrep/errors.hpp"

#include <fstream>
#include <set>

namespace nilrep {
namespace io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error("ParseError", where + ": " + what);
}

size_t get_index(const json& j, const std::string& where, size_t dim) {
  if (!j.is_number_unsigned()) fail(where, "expected a positive integer index");
  size_t v = j.get<size_t>();
  if (v < 1 || v > dim) fail(where, "index " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(dim));
  return v;
}

Rat get_rat(const json& j, const std::string& where) {
  std::string s;
  if (j.is_string()) {
    s = j.get<std::string>();
  } else if (j.is_number_integer()) {
    s = std::to_string(j.get<long long>());
  } else {
    fail(where, "expected a rational string");
  }
  try {
    return rat_from_string(s);
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

} // namespace

AlgebraFile parse_algebra(const json& j) {
  if (!j.is_object()) fail("algebra", "expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
    fail("algebra.dim", "expected a nonnegative integer");
  }
  AlgebraFile af;
  af.dim = j["dim"].get<size_t>();
  af.algebra = LieAlgebra(af.dim);

  if (j.contains("basis")) {
    const json& b = j["basis"];
    if (!b.is_array() || b.size() != af.dim) {
      fail("algebra.basis", "expected an array of " + std::to_string(af.dim) + " labels");
    }
    for (size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) fail("algebra.basis[" + std::to_string(i) + "]", "expected a string");
      af.basis.push_back(b[i].get<std::string>());
    }
  } else {
    for (size_t i = 1; i <= af.dim; ++i) af.basis.push_back("x" + std::to_string(i));
  }

  if (j.contains("brackets")) {
    const json& br = j["brackets"];
    if (!br.is_array()) fail("algebra.brackets", "expected an array");
    std::set<std::pair<size_t, size_t>> seen;
    for (size_t e = 0; e < br.size(); ++e) {
      std::string where = "algebra.brackets[" + std::to_string(e) + "]";
      const json& entry = br[e];
      const json *ji, *jj, *jterms;
      if (entry.is_array() && entry.size() == 3) {
        ji = &entry[0];
        jj = &entry[1];
        jterms = &entry[2];
      } else if (entry.is_object() && entry.contains("i") && entry.contains("j") &&
                 entry.contains("terms")) {
        ji = &entry["i"];
        jj = &entry["j"];
        jterms = &entry["terms"];
      } else {
        fail(where, "expected [i, j, terms] or {\"i\", \"j\", \"terms\"}");
      }
      size_t i = get_index(*ji, where + ".i", af.dim);
      size_t jdx = get_index(*jj, where + ".j", af.dim);
      if (i >= jdx) fail(where, "requires i < j");
      if (!seen.insert({i, jdx}).second) fail(where, "duplicate pair");
      if (!jterms->is_array()) fail(where + ".terms", "expected an array");
      QVec v = zero_vec(af.dim);
      for (size_t t = 0; t < jterms->size(); ++t) {
        std::string twhere = where + ".terms[" + std::to_string(t) + "]";
        const json& term = (*jterms)[t];
        if (!term.is_array() || term.size() != 2) fail(twhere, "expected [k, \"p/q\"]");
        size_t k = get_index(term[0], twhere, af.dim);
        v[k - 1] += get_rat(term[1], twhere);
      }
      if (!is_zero(v)) af.algebra.set_bracket(i - 1, jdx - 1, v);
    }
  }
  return af;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  return parse_algebra(j);
}

json algebra_to_json(const AlgebraFile& af) {
  json out;
  out["dim"] = af.dim;
  out["basis"] = af.basis;
  json brackets = json::array();
  for (const auto& [pair, v] : af.algebra.table()) {
    json terms = json::array();
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) terms.push_back(json::array({k + 1, rat_to_string(v[k])}));
    }
    brackets.push_back(json::array({pair.first + 1, pair.second + 1, terms}));
  }
  out["brackets"] = brackets;
  return out;
}

json mat_to_json(const QMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat mat_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  size_t r = j.size();
  size_t c = 0;
  if (r > 0) {
    if (!j[0].is_array()) fail(where + "[0]", "expected a row array");
    c = j[0].size();
  }
  QMat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    std::string rwhere = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != c) fail(rwhere, "ragged matrix");
    for (size_t k = 0; k < c; ++k) m.at(i, k) = get_rat(j[i][k], rwhere);
  }
  return m;
}

json module_to_json(const AlgebraFile& af, const std::vector<std::string>& basis_names,
                    const Representation& rep) {
  json mod;
  mod["dim"] = rep.degree();
  mod["basis"] = basis_names;
  json mats = json::array();
  for (const auto& m : rep.mats) mats.push_back(mat_to_json(m));
  mod["matrices"] = mats;
  return mod;
}

ModuleDoc parse_module(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("module")) {
    fail("module document", "expected top-level \"algebra\" and \"module\" keys");
  }
  ModuleDoc doc;
  doc.af = parse_algebra(j["algebra"]);
  const json& mod = j["module"];
  if (!mod.is_object()) fail("module", "expected an object");
  if (!mod.contains("dim") || !mod["dim"].is_number_unsigned()) {
    fail("module.dim", "expected a nonnegative integer");
  }
  size_t d = mod["dim"].get<size_t>();
  if (mod.contains("basis")) {
    const json& b = mod["basis"];
    if (!b.is_array() || b.size() != d) {
      fail("module.basis", "expected " + std::to_string(d) + " labels");
    }
    for (const auto& s : b) {
      if (!s.is_string()) fail("module.basis", "expected strings");
      doc.basis_names.push_back(s.get<std::string>());
    }
  }
  if (!mod.contains("matrices") || !mod["matrices"].is_array() ||
      mod["matrices"].size() != doc.af.dim) {
    fail("module.matrices", "expected one matrix per algebra basis element");
  }
  doc.rep.algebra = doc.af.algebra;
  for (size_t i = 0; i < doc.af.dim; ++i) {
    QMat m = mat_from_json(mod["matrices"][i], "module.matrices[" + std::to_string(i) + "]");
    if (m.rows() != d || m.cols() != d) {
      fail("module.matrices[" + std::to_string(i) + "]",
           "expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    doc.rep.mats.push_back(std::move(m));
  }
  return doc;
}

ModuleDoc load_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("ParseError", path + ": " + e.what());
  }
  return parse_module(j);
}

std::string dump_report(const json& j) {
  return j.dump(2) + "\n";
}

} // namespace io
} // namespace nilrep

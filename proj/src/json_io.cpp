#include "skw/json_io.hpp"

#include "skw/errors.hpp"

namespace skw {

namespace {

template <typename T, typename F>
Json matrix_json(const SparseMatrix<T>& m, const char* coeff, F value) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["coeff"] = coeff;
  if (m.prime()) j["prime"] = m.prime();
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(Json::array({e.row, e.col, value(e.value)}));
  j["entries"] = std::move(entries);
  return j;
}

Json tableau_rows(const Tableau& t, const Alphabet& a) {
  Json rows = Json::array();
  for (const auto& row : t.row_labels(a)) rows.push_back(row);
  return rows;
}

Json components_json(const SchurComplex& c) {
  Json comps = Json::array();
  for (std::size_t j = 0; j < c.components.size(); ++j) {
    Json tabs = Json::array();
    for (const auto& t : c.components[j]) tabs.push_back(tableau_rows(t, c.alphabet));
    comps.push_back({{"degree", j}, {"rank", c.components[j].size()}, {"tableaux", std::move(tabs)}});
  }
  return comps;
}

Json header(const SchurComplex& c) {
  Json j;
  j["schema"] = "1";
  j["shape"] = c.shape.to_string();
  j["f"] = c.f;
  j["g"] = c.g;
  j["order"] = c.alphabet.order_name();
  return j;
}

template <typename C>
Json specialized_json(const SchurComplex& c, const C& s) {
  Json j = header(c);
  j["components"] = components_json(c);
  Json diffs = Json::array();
  for (int n = 1; n <= s.top(); ++n) {
    Json d = to_json(s.d(n));
    d["degree"] = n;
    diffs.push_back(std::move(d));
  }
  j["differentials"] = std::move(diffs);
  return j;
}

}  // namespace

Json to_json(const IntSparse& m) {
  return matrix_json(m, "int", [](std::int64_t v) { return Json(v); });
}

Json to_json(const ModSparse& m) {
  return matrix_json(m, "gfp", [](std::uint64_t v) { return Json(v); });
}

Json to_json(const FormSparse& m) {
  return matrix_json(m, "linform", [](const LinearForm& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(Json::array({t.i, t.j, t.c}));
    return terms;
  });
}

IntMatrix int_matrix_from_json(const Json& j) {
  try {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const std::string coeff = j.value("coeff", std::string("int"));
    if (coeff != "int" && coeff != "gfp") throw Error("matrix coeff must be \"int\" or \"gfp\", got \"" + coeff + "\"");
    std::optional<PrimeField> field;
    if (coeff == "gfp") field.emplace(j.at("prime").get<std::uint64_t>());
    IntMatrix m(rows, cols);
    for (const auto& e : j.at("entries")) {
      const int r = e.at(0).get<int>();
      const int c = e.at(1).get<int>();
      if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("matrix entry out of range");
      m(r, c) = field ? field->lift(field->reduce(e.at(2).get<std::int64_t>())) : e.at(2).get<std::int64_t>();
    }
    return m;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed matrix JSON: ") + ex.what());
  }
}

Json to_json(const SchurComplex& c) { return specialized_json(c, c.complex); }

Json to_json(const SchurComplex& c, const IntComplex& specialized) { return specialized_json(c, specialized); }

Json to_json(const SchurComplex& c, const ModComplex& specialized) { return specialized_json(c, specialized); }

}  // namespace skw

#include "troplat/io.hpp"

#include <fstream>

namespace troplat {

namespace {

Json rational_vector_to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

std::vector<Rational> rational_vector_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& c : j) out.push_back(parse_rational(c.get<std::string>()));
  return out;
}

}  // namespace

LatticeMatrix MatrixDocument::to_matrix() const {
  if (r < 1 || n < 1 || static_cast<int>(rows.size()) != r)
    throw Error(errc::bad_document, "matrix document has inconsistent shape");
  LatticeMatrix m(r, n);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw Error(errc::bad_document, "row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < n; ++j) m.at(i, j) = parse_puiseux(rows[i][j]);
  }
  m.check_columns();
  return m;
}

MatrixDocument MatrixDocument::from_matrix(const LatticeMatrix& m, const std::string& label) {
  MatrixDocument doc;
  doc.n = m.cols();
  doc.r = m.rows();
  doc.label = label;
  doc.rows.resize(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) doc.rows[i].push_back(to_string(m.at(i, j)));
  return doc;
}

Json to_json(const MatrixDocument& doc) {
  Json j;
  j["n"] = doc.n;
  j["r"] = doc.r;
  j["rows"] = doc.rows;
  if (!doc.label.empty()) j["label"] = doc.label;
  return j;
}

MatrixDocument matrix_document_from_json(const Json& j) {
  MatrixDocument doc;
  doc.n = j.at("n").get<int>();
  doc.r = j.at("r").get<int>();
  doc.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
  if (j.contains("label")) doc.label = j.at("label").get<std::string>();
  return doc;
}

MatrixDocument load_matrix_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(errc::bad_document, std::string("invalid JSON: ") + e.what());
  }
  return matrix_document_from_json(j);
}

Json entropy_to_json(const EntropyVector& h) {
  Json values = Json::object();
  for (Mask J = 0; J < (Mask{1} << h.n); ++J)
    values[subset_to_string(J, h.n)] = to_string(h.h[J]);
  Json j;
  j["n"] = h.n;
  j["h"] = std::move(values);
  return j;
}

EntropyVector entropy_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<Mask, ExtRational>> values;
  for (const auto& [key, val] : j.at("h").items())
    values.push_back({parse_subset(key, n), parse_ext_rational(val.get<std::string>())});
  return make_entropy(n, values);
}

Json point_to_json(const TropicalPoint& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

TropicalPoint point_from_json(const Json& j) {
  TropicalPoint out;
  for (const auto& c : j) out.push_back(parse_ext_rational(c.get<std::string>()));
  return out;
}

TropicalPoint parse_point(const std::string& text) {
  TropicalPoint out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(parse_ext_rational(text.substr(pos, next - pos)));
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

Json generators_to_json(const GeneratorSet& gens, int n) {
  Json out = Json::object();
  for (const auto& [J, u] : gens) out[subset_to_string(J, n)] = point_to_json(u);
  return out;
}

GeneratorSet generators_from_json(const Json& j, int n) {
  GeneratorSet out;
  for (const auto& [key, val] : j.items()) out[parse_subset(key, n)] = point_from_json(val);
  return out;
}

Json bimatroid_to_json(const BimatroidTable& nu) {
  Json values = Json::object();
  for (const auto& [key, v] : nu.entries) {
    std::string name =
        subset_to_string(key.first, nu.r) + "|" + subset_to_string(key.second, nu.n);
    values[name] = to_string(v);
  }
  Json j;
  j["r"] = nu.r;
  j["n"] = nu.n;
  j["nu"] = std::move(values);
  return j;
}

namespace {

Json hrep_to_json(const HPolyhedron& p) {
  Json eq = Json::array(), ineq = Json::array();
  for (const auto& [a, b] : p.eq)
    eq.push_back(Json{{"a", rational_vector_to_json(a)}, {"b", to_string(b)}});
  for (const auto& [a, b] : p.ineq)
    ineq.push_back(Json{{"a", rational_vector_to_json(a)}, {"b", to_string(b)}});
  return Json{{"eq", std::move(eq)}, {"ineq", std::move(ineq)}};
}

HPolyhedron hrep_from_json(const Json& j, int n) {
  HPolyhedron p;
  p.n = n;
  for (const auto& row : j.at("eq"))
    p.eq.push_back({rational_vector_from_json(row.at("a")),
                    parse_rational(row.at("b").get<std::string>())});
  for (const auto& row : j.at("ineq"))
    p.ineq.push_back({rational_vector_from_json(row.at("a")),
                      parse_rational(row.at("b").get<std::string>())});
  return p;
}

}  // namespace

Json complex_to_json(const Complex& complex, const EntropyVector& h, bool sigma_only,
                     bool with_vrep) {
  Json j;
  j["n"] = complex.n;
  j["h"] = entropy_to_json(h).at("h");
  Json cells = Json::array();
  std::vector<bool> keep(complex.cells.size(), !sigma_only);
  if (sigma_only)
    for (int id : complex.sigma_ids) keep[id] = true;
  for (std::size_t id = 0; id < complex.cells.size(); ++id) {
    if (!keep[id]) continue;
    const Cell& c = complex.cells[id];
    Json cj;
    cj["id"] = id;
    cj["dim"] = c.dim;
    Json active = Json::array();
    for (Mask J : c.key) active.push_back(subset_to_string(J, complex.n));
    cj["active"] = std::move(active);
    cj["label"] = subset_to_string(c.label, complex.n);
    cj["hrep"] = hrep_to_json(c.hrep);
    Json faces = Json::array();
    for (int f : c.face_ids)
      if (keep[f]) faces.push_back(f);
    cj["faces"] = std::move(faces);
    if (with_vrep && complex.n <= 3) {
      VRep v = vrep_for_plot(c);
      Json vj;
      vj["vertices"] = Json::array();
      for (const auto& vert : v.vertices) vj["vertices"].push_back(rational_vector_to_json(vert));
      vj["rays"] = Json::array();
      for (const auto& ray : v.rays) vj["rays"].push_back(rational_vector_to_json(ray));
      vj["lineality"] = Json::array();
      for (const auto& l : v.lineality) vj["lineality"].push_back(rational_vector_to_json(l));
      cj["vrep"] = std::move(vj);
    }
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  j["maximal_ids"] = complex.maximal_ids;
  j["sigma_ids"] = complex.sigma_ids;
  return j;
}

Complex complex_from_json(const Json& j) {
  Complex out;
  out.n = j.at("n").get<int>();
  for (const auto& cj : j.at("cells")) {
    Cell c;
    for (const auto& key : cj.at("active"))
      c.key.push_back(parse_subset(key.get<std::string>(), out.n));
    c.dim = cj.at("dim").get<int>();
    c.label = parse_subset(cj.at("label").get<std::string>(), out.n);
    c.hrep = hrep_from_json(cj.at("hrep"), out.n);
    c.face_ids = cj.at("faces").get<std::vector<int>>();
    out.cells.push_back(std::move(c));
  }
  out.maximal_ids = j.at("maximal_ids").get<std::vector<int>>();
  out.sigma_ids = j.at("sigma_ids").get<std::vector<int>>();
  return out;
}

Json witness_to_json(const Witness& w, int n) {
  Json j;
  Json elem = Json::array();
  for (const auto& p : w.element) elem.push_back(to_string(p));
  Json coeffs = Json::array();
  for (const auto& p : w.coefficients) coeffs.push_back(to_string(p));
  j["element"] = std::move(elem);
  j["coefficients"] = std::move(coeffs);
  j["valuation"] = point_to_json(w.valuation);
  (void)n;
  return j;
}

}  // namespace troplat

#include "nodim/json_io.hpp"

#include <stdexcept>

namespace nodim {

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"pass", r.pass},
                     {"achieved", r.achieved},
                     {"bound", r.bound},
                     {"witness", r.witness},
                     {"diagnostics", r.diagnostics},
                     {"provenance", r.provenance}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("pass").get_to(r.pass);
  j.at("achieved").get_to(r.achieved);
  j.at("bound").get_to(r.bound);
  r.witness = j.value("witness", nlohmann::json());
  r.diagnostics = j.value("diagnostics", nlohmann::json::object());
  r.provenance = j.value("provenance", nlohmann::json::object());
}

void to_json(nlohmann::json& j, const SpaceSpec& s) {
  j = nlohmann::json{{"kind", s.kind == SpaceKind::VectorLp ? "lp" : "schatten"},
                     {"p", s.p},
                     {"d", s.d}};
}

void from_json(const nlohmann::json& j, SpaceSpec& s) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "lp") {
    s = make_lp(j.at("p").get<double>(), j.at("d").get<int>());
  } else if (kind == "schatten") {
    s = make_schatten(j.at("p").get<double>(), j.at("d").get<int>());
  } else {
    throw std::invalid_argument("SpaceSpec: kind must be 'lp' or 'schatten'");
  }
}

nlohmann::json matrix_to_json(const DenseMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols; ++j)
      row.push_back({m.at(i, j).real(), m.at(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j.at(i);
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c) {
      const auto& entry = row.at(c);
      if (entry.is_number()) {
        m.at(i, c) = entry.get<double>();
      } else if (entry.is_array() && entry.size() == 2) {
        m.at(i, c) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
      } else {
        throw std::invalid_argument("matrix: entry must be number or [re, im]");
      }
    }
  }
  return m;
}

nlohmann::json point_to_json(const Point& p) {
  if (const auto* v = std::get_if<std::vector<double>>(&p)) return *v;
  return matrix_to_json(std::get<DenseMatrix>(p));
}

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("point: expected a non-empty array");
  if (j.front().is_number()) return j.get<std::vector<double>>();
  return matrix_from_json(j);
}

void to_json(nlohmann::json& j, const PointCloud& c) {
  nlohmann::json points = nlohmann::json::array();
  for (const Point& p : c.points) points.push_back(point_to_json(p));
  j = nlohmann::json{{"space", c.space}, {"points", std::move(points)}};
  if (!c.weights.empty()) j["weights"] = c.weights;
}

void from_json(const nlohmann::json& j, PointCloud& c) {
  c = PointCloud{};
  j.at("space").get_to(c.space);
  for (const auto& p : j.at("points")) c.points.push_back(point_from_json(p));
  if (j.contains("weights")) j.at("weights").get_to(c.weights);
  validate_cloud(c);
}

void to_json(nlohmann::json& j, const FiniteSignalEnsemble& e) {
  j = nlohmann::json{
      {"n", e.n}, {"N", e.omega_size}, {"mu", e.mu}, {"values", e.values}};
}

void from_json(const nlohmann::json& j, FiniteSignalEnsemble& e) {
  e = FiniteSignalEnsemble{};
  j.at("n").get_to(e.n);
  j.at("N").get_to(e.omega_size);
  j.at("mu").get_to(e.mu);
  j.at("values").get_to(e.values);
  validate_ensemble(e);
}

void to_json(nlohmann::json& j, const Sketch& s) {
  j = nlohmann::json{
      {"atoms", s.sample_atoms}, {"k", s.k}, {"bound", s.derived_bound}};
  j["D"] = s.dimension;
}

void from_json(const nlohmann::json& j, Sketch& s) {
  s = Sketch{};
  j.at("atoms").get_to(s.sample_atoms);
  j.at("k").get_to(s.k);
  j.at("bound").get_to(s.derived_bound);
  s.dimension = j.value("D", 0);
}

void to_json(nlohmann::json& j, const SlabSystem& s) {
  j = nlohmann::json{
      {"a", s.a}, {"b", s.b}, {"R", s.R}, {"r", s.r}, {"k", s.k}};
}

void from_json(const nlohmann::json& j, SlabSystem& s) {
  s = SlabSystem{};
  j.at("a").get_to(s.a);
  j.at("b").get_to(s.b);
  j.at("R").get_to(s.R);
  j.at("r").get_to(s.r);
  j.at("k").get_to(s.k);
  s.d = s.a.empty() ? 0 : static_cast<int>(s.a.front().size());
  validate_system(s);
}

void to_json(nlohmann::json& j, const MeasurementSystem& s) {
  nlohmann::json ops = nlohmann::json::array();
  for (const DenseMatrix& a : s.A) ops.push_back(matrix_to_json(a));
  j = nlohmann::json{
      {"A", std::move(ops)}, {"b", s.b}, {"t", s.t}, {"k", s.k}};
}

void from_json(const nlohmann::json& j, MeasurementSystem& s) {
  s = MeasurementSystem{};
  for (const auto& a : j.at("A")) s.A.push_back(matrix_from_json(a));
  j.at("b").get_to(s.b);
  j.at("t").get_to(s.t);
  j.at("k").get_to(s.k);
  s.d = s.A.empty() ? 0 : s.A.front().rows;
  validate_system(s);
}

void to_json(nlohmann::json& j, const FeasibilityReport& r) {
  j = nlohmann::json{{"subset", r.subset},
                     {"feasible", r.feasible},
                     {"residual", r.residual},
                     {"iterations", r.iterations}};
  if (r.witness) j["witness"] = point_to_json(*r.witness);
}

}  // namespace nodim

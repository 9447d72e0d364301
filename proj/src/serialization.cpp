#include "symplab/serialization.hpp"

#include <sstream>

#include "symplab/errors.hpp"

namespace symplab::io {

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational_from_json", "expected a rational string or an integer");
}

Matrix matrix_from_json(const Json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows) throw ParseError("matrix_from_json", "row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!e[i].is_array() || e[i].size() != cols) throw ParseError("matrix_from_json", "column count mismatch");
      for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(e[i][k]);
    }
    return m;
  } catch (const Json::exception& ex) {
    throw ParseError("matrix_from_json", ex.what());
  }
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector_from_json", "expected an array");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Matrix matrix_from_rows(const Json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix_from_rows", "expected a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ShapeError("matrix_from_rows", "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(rows[i][k]);
  }
  return m;
}

Matrix parse_matrix_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& ex) {
    throw ParseError("parse_matrix_text", ex.what());
  }
  return matrix_from_rows(j);
}

Json model_to_json(const model::ComplexModel& m) {
  Json dims = Json::array(), d = Json::array(), star = Json::array(), labels = Json::array();
  for (int k = 0; k <= m.top_degree; ++k) {
    dims.push_back(m.dim(k));
    d.push_back(matrix_to_json(m.d.block(k)));
    star.push_back(matrix_to_json(m.star_s.block(k)));
    labels.push_back(m.graded_basis[static_cast<std::size_t>(k)]);
  }
  Json out{{"name", m.name}, {"dims", dims}, {"d_blocks", d}, {"star_blocks", star}};
  out["window"] = m.window ? Json(*m.window) : Json(nullptr);
  out["labels"] = labels;
  if (m.inner) {
    Json inner = Json::array();
    for (const auto& g : *m.inner) inner.push_back(matrix_to_json(g));
    out["inner"] = inner;
  }
  return out;
}

model::ModelPtr model_from_json(const Json& j) {
  try {
    auto m = std::make_shared<model::ComplexModel>();
    m->name = j.at("name").get<std::string>();
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    if (dims.empty()) throw ParseError("model_from_json", "dims must be nonempty");
    m->top_degree = static_cast<int>(dims.size()) - 1;
    const int top = m->top_degree;
    for (int k = 0; k <= top; ++k) {
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = j.at("labels").at(static_cast<std::size_t>(k)).get<std::vector<std::string>>();
      } else {
        for (std::size_t i = 0; i < dims[static_cast<std::size_t>(k)]; ++i)
          labels.push_back("e" + std::to_string(k) + "_" + std::to_string(i));
      }
      if (labels.size() != dims[static_cast<std::size_t>(k)]) throw ShapeError("model_from_json", "label count mismatch");
      m->graded_basis.push_back(std::move(labels));
    }
    std::vector<Matrix> d, star;
    for (int k = 0; k <= top; ++k) {
      d.push_back(matrix_from_json(j.at("d_blocks").at(static_cast<std::size_t>(k))));
      star.push_back(matrix_from_json(j.at("star_blocks").at(static_cast<std::size_t>(k))));
      if (d.back().cols() != m->dim(k) || d.back().rows() != m->dim(k + 1) || star.back().cols() != m->dim(k) ||
          star.back().rows() != m->dim(top - k)) {
        throw ShapeError("model_from_json", "block shape does not match dims");
      }
    }
    m->d = model::GradedOperator::shift(1, std::move(d));
    m->star_s = model::GradedOperator::complement(top, std::move(star));
    m->d_lambda = model::assemble_codifferential(top, m->d, m->star_s);
    if (j.contains("window") && !j.at("window").is_null()) {
      auto w = j.at("window").get<std::vector<std::vector<std::size_t>>>();
      if (w.size() != dims.size()) throw ShapeError("model_from_json", "window has wrong degree count");
      for (std::size_t k = 0; k < w.size(); ++k)
        for (auto i : w[k])
          if (i >= dims[k]) throw ShapeError("model_from_json", "window index out of range");
      m->window = std::move(w);
    }
    if (j.contains("inner")) {
      std::vector<Matrix> inner;
      for (const auto& g : j.at("inner")) inner.push_back(matrix_from_json(g));
      if (inner.size() != dims.size()) throw ShapeError("model_from_json", "inner has wrong degree count");
      m->inner = std::move(inner);
    }
    return m;
  } catch (const Json::exception& ex) {
    throw ParseError("model_from_json", ex.what());
  }
}

Json form_to_json(const model::FormVector& v) { return Json{{"degree", v.degree}, {"coords", vector_to_json(v.coords)}}; }

model::FormVector form_from_json(const Json& j, model::ModelPtr m) {
  try {
    return {std::move(m), j.at("degree").get<int>(), vector_from_json(j.at("coords"))};
  } catch (const Json::exception& ex) {
    throw ParseError("form_from_json", ex.what());
  }
}

Json report_to_json(const cohomology::CohomologyReport& r) {
  Json out{{"model", r.model}, {"theory", cohomology::theory_name(r.theory)}, {"dims", r.dims}, {"windowed", r.windowed}};
  if (r.representatives) {
    Json reps = Json::array();
    for (const auto& m : *r.representatives) {
      Json cols = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(vector_to_json(m.column(c)));
      reps.push_back(std::move(cols));
    }
    out["representatives"] = std::move(reps);
  }
  return out;
}

Json hodge_to_json(const cohomology::HodgeReport& h) {
  Json degrees = Json::array();
  for (const auto& d : h.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"dimension", d.dimension},
                           {"kernel_dim", d.kernel_dim},
                           {"cohomology_dim", d.cohomology_dim},
                           {"exact_rank", d.exact_rank},
                           {"coexact_rank", d.coexact_rank},
                           {"matches", d.matches()},
                           {"exhaustive", d.exhaustive()}});
  }
  return Json{{"model", h.model}, {"degrees", std::move(degrees)}, {"all", h.all()}};
}

std::string reports_to_csv(const std::vector<cohomology::CohomologyReport>& reports, const cohomology::HodgeReport* hodge) {
  std::ostringstream out;
  out << "model,theory,degree,dimension,windowed\n";
  for (const auto& r : reports)
    for (std::size_t k = 0; k < r.dims.size(); ++k)
      out << r.model << ',' << cohomology::theory_name(r.theory) << ',' << k << ',' << r.dims[k] << ','
          << (r.windowed ? "true" : "false") << '\n';
  if (hodge)
    for (const auto& d : hodge->degrees)
      out << hodge->model << ",hodgeKernel," << d.degree << ',' << d.kernel_dim << ",false\n";
  return out.str();
}

}  // namespace symplab::io

#include "qsteer/state_io.hpp"

#include <fstream>
#include <json.hpp>

namespace qsteer {

BipartiteState read_state(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("dimA") || !doc.contains("dimB") ||
      !doc.contains("re")) {
    throw ParseError("state document needs dimA, dimB, re (and optionally im)");
  }
  int dim_a = 0;
  int dim_b = 0;
  ComplexMatrix m;
  try {
    dim_a = doc.at("dimA").get<int>();
    dim_b = doc.at("dimB").get<int>();
    if (dim_a < 1 || dim_b < 1) {
      throw ParseError("dimensions must be positive");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
    const auto& re = doc.at("re");
    if (!re.is_array() || static_cast<Eigen::Index>(re.size()) != n) {
      throw ParseError("re must be a " + std::to_string(n) + "-row matrix");
    }
    const bool has_im = doc.contains("im");
    m.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = re.at(static_cast<size_t>(i));
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw ParseError("re rows must have length " + std::to_string(n));
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        double im_val = 0.0;
        if (has_im) {
          im_val = doc.at("im").at(static_cast<size_t>(i)).at(static_cast<size_t>(j))
                       .get<double>();
        }
        m(i, j) = Complex(row.at(static_cast<size_t>(j)).get<double>(), im_val);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return make_bipartite(dim_a, dim_b, m);
}

BipartiteState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return read_state(in);
}

void write_state(std::ostream& out, const BipartiteState& state) {
  nlohmann::ordered_json doc;
  doc["dimA"] = state.dim_a;
  doc["dimB"] = state.dim_b;
  auto re = nlohmann::ordered_json::array();
  auto im = nlohmann::ordered_json::array();
  const ComplexMatrix& m = state.joint.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto re_row = nlohmann::ordered_json::array();
    auto im_row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  out << doc.dump(2) << '\n';
}

}  // namespace qsteer

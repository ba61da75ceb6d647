#include "wcg/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace wcg {

GeneratorSet conjugate(const RepMatrix& j, const GeneratorSet& gens) {
  const RepMatrix j_inv = inverse_exact(j);
  GeneratorSet out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back((j * g * j_inv).eval());
  return out;
}

std::string canonical_key(const RepMatrix& m) {
  std::string key = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      key += ';';
      key += m(i, j).to_string();
    }
  return key;
}

std::size_t matrix_hash(const RepMatrix& m) {
  std::size_t h = static_cast<std::size_t>(m.rows());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) h ^= m(i, j).hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t position_hash(const Position& p) {
  std::size_t h = static_cast<std::size_t>(p.size());
  for (Index i = 0; i < p.size(); ++i) h ^= p(i).hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string format_matrix(const RepMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  std::size_t k = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    os << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[k++];
      os << (j ? "  " : " ") << std::string(width - c.size(), ' ') << c;
    }
    os << " ]\n";
  }
  return os.str();
}

nlohmann::json matrix_to_json(const RepMatrix& m) {
  auto rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

RepMatrix matrix_from_json(const nlohmann::json& j) {
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j.at(0).size()) : 0;
  RepMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (static_cast<Index>(j.at(r).size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Index c = 0; c < cols; ++c) m(r, c) = parse_scalar(j.at(r).at(c).get<std::string>());
  }
  return m;
}

nlohmann::json scalar_to_json(const Cyclotomic& x) {
  return {{"exact", x.to_string()}, {"decimal", x.to_decimal(6)}};
}

nlohmann::json position_to_json(const Position& p) {
  auto out = nlohmann::json::array();
  for (Index i = 0; i < p.size(); ++i) out.push_back(scalar_to_json(p(i)));
  return out;
}

std::string format_position(const Position& p) {
  std::string s = "(";
  for (Index i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p(i).to_string();
  }
  return s + ")";
}

}  // namespace wcg

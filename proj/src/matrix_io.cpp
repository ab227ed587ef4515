#include "densilex/matrix_io.hpp"

#include <charconv>

#include "densilex/util.hpp"

namespace densilex {

std::string format_text_matrix(const TextMatrix& m) {
  std::string out = m.tag + " v1 " + std::to_string(m.dim) + "\n";
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out.push_back(' ');
      out += format_double(row[j]);
    }
    out.push_back('\n');
  }
  return out;
}

TextMatrix parse_text_matrix(std::string_view bytes) {
  auto lines = split(bytes, '\n');
  if (lines.empty()) throw ParseError("empty matrix file", 1);
  auto header = split_whitespace(lines[0]);
  if (header.size() != 3 || header[1] != "v1") {
    throw ParseError("matrix header must be '<tag> v1 <dim>'", 1);
  }
  TextMatrix m;
  m.tag = std::string(header[0]);
  auto [ptr, ec] = std::from_chars(header[2].data(), header[2].data() + header[2].size(), m.dim);
  if (ec != std::errc() || ptr != header[2].data() + header[2].size() || m.dim == 0) {
    throw ParseError("bad matrix dimension", 1);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = split_whitespace(lines[i]);
    if (tok.empty()) continue;
    std::vector<double> row;
    row.reserve(tok.size());
    for (auto t : tok) row.push_back(parse_double(t, i + 1));
    m.rows.push_back(std::move(row));
  }
  return m;
}

std::string format_transform(const OrthogonalTransform& t) {
  TextMatrix m;
  m.tag = std::string(kTransformTag);
  m.dim = t.dim();
  const auto& q = t.matrix();
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(q.cols()));
    for (Eigen::Index j = 0; j < q.cols(); ++j) row[static_cast<std::size_t>(j)] = q(i, j);
    m.rows.push_back(std::move(row));
  }
  return format_text_matrix(m);
}

OrthogonalTransform parse_transform(std::string_view bytes) {
  TextMatrix m = parse_text_matrix(bytes);
  if (m.tag != kTransformTag) {
    throw ParseError("expected a '" + std::string(kTransformTag) + "' file, got '" + m.tag + "'", 1);
  }
  if (m.rows.size() != m.dim) {
    throw ParseError("expected " + std::to_string(m.dim) + " rows, found " +
                         std::to_string(m.rows.size()), 0);
  }
  const auto n = static_cast<Eigen::Index>(m.dim);
  Eigen::MatrixXd q(n, n);
  for (std::size_t i = 0; i < m.dim; ++i) {
    if (m.rows[i].size() != m.dim) {
      throw ParseError("row " + std::to_string(i) + " must have " +
                           std::to_string(m.dim) + " values", i + 2);
    }
    for (std::size_t j = 0; j < m.dim; ++j) {
      q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m.rows[i][j];
    }
  }
  return OrthogonalTransform(std::move(q));
}

std::string format_pca_axis(const PcaAxis& pca) {
  TextMatrix m;
  m.tag = std::string(kPcaTag);
  m.dim = static_cast<std::size_t>(pca.axis.size());
  m.rows.emplace_back(pca.axis.data(), pca.axis.data() + pca.axis.size());
  m.rows.emplace_back(pca.mean.data(), pca.mean.data() + pca.mean.size());
  m.rows.push_back({pca.explained_variance});
  return format_text_matrix(m);
}

PcaAxis parse_pca_axis(std::string_view bytes) {
  TextMatrix m = parse_text_matrix(bytes);
  if (m.tag != kPcaTag) {
    throw ParseError("expected a '" + std::string(kPcaTag) + "' file, got '" + m.tag + "'", 1);
  }
  if (m.rows.size() != 3 || m.rows[0].size() != m.dim || m.rows[1].size() != m.dim ||
      m.rows[2].size() != 1) {
    throw ParseError("pca-axis file needs axis, mean and variance rows", 0);
  }
  PcaAxis pca;
  pca.axis = Eigen::Map<const Eigen::VectorXd>(m.rows[0].data(), static_cast<Eigen::Index>(m.dim));
  pca.mean = Eigen::Map<const Eigen::VectorXd>(m.rows[1].data(), static_cast<Eigen::Index>(m.dim));
  pca.explained_variance = m.rows[2][0];
  return pca;
}

}  // namespace densilex

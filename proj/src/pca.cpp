#include "densilex/pca.hpp"

#include "densilex/util.hpp"

namespace densilex {

PcaAxis fit_pca1(const EmbeddingTable& table) {
  if (table.size() < 2) throw InvalidArgument("pca: need at least 2 vectors");
  const RowMatrix& x = table.vectors();
  PcaAxis pca;
  pca.mean = x.colwise().mean().transpose();
  Eigen::MatrixXd centered = x.rowwise() - pca.mean.transpose();
  if (centered.cwiseAbs().maxCoeff() == 0.0) {
    throw TrainingError("pca: all vectors are identical, no principal axis");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const double sigma = svd.singularValues()[0];
  pca.axis = svd.matrixV().col(0).normalized();
  pca.explained_variance = sigma * sigma / static_cast<double>(table.size() - 1);

  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < pca.axis.size(); ++i) {
    if (std::abs(pca.axis[i]) > std::abs(pca.axis[lead])) lead = i;
  }
  if (pca.axis[lead] < 0) pca.axis = -pca.axis;
  return pca;
}

double pca_score(const PcaAxis& pca, const EmbeddingTable& table,
                 std::string_view word) {
  if (static_cast<std::size_t>(pca.axis.size()) != table.dim()) {
    throw InvalidArgument("pca_score: dimension mismatch");
  }
  const auto e = table.lookup(word);
  double s = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const auto k = static_cast<Eigen::Index>(j);
    s += pca.axis[k] * (e[j] - pca.mean[k]);
  }
  return s;
}

}  // namespace densilex

#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "densilex/embedding.hpp"

namespace densilex {

// First principal component of an embedding table.
struct PcaAxis {
  Eigen::VectorXd mean;
  Eigen::VectorXd axis;  // unit length, largest-magnitude entry positive
  double explained_variance = 0.0;
};

// Top right-singular vector of the mean-centered vectors;
// explained_variance = sigma_1^2 / (n - 1). Throws InvalidArgument with
// fewer than 2 rows and TrainingError when all rows are identical.
PcaAxis fit_pca1(const EmbeddingTable& table);

// axis . (e_word - mean). Throws NotFoundError.
double pca_score(const PcaAxis& pca, const EmbeddingTable& table,
                 std::string_view word);

}  // namespace densilex

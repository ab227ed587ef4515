#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "densilex/densifier.hpp"
#include "densilex/pca.hpp"

namespace densilex {

// Text matrix container shared by the densifier transform and the PCA
// axis:
//
//   <tag> v1 <dim>
//   <row of space-separated numbers>
//   ...
//
// "densifier-q": dim rows of dim numbers, row 0 is the sentiment axis.
// "pca-axis":    axis row (dim), mean row (dim), explained variance (1).
struct TextMatrix {
  std::string tag;
  std::size_t dim = 0;
  std::vector<std::vector<double>> rows;
};

inline constexpr std::string_view kTransformTag = "densifier-q";
inline constexpr std::string_view kPcaTag = "pca-axis";

std::string format_text_matrix(const TextMatrix& m);
TextMatrix parse_text_matrix(std::string_view bytes);

std::string format_transform(const OrthogonalTransform& t);
// Throws ParseError on a wrong tag or row shape.
OrthogonalTransform parse_transform(std::string_view bytes);

std::string format_pca_axis(const PcaAxis& pca);
PcaAxis parse_pca_axis(std::string_view bytes);

}  // namespace densilex

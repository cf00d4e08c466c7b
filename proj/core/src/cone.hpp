// Double description: extreme rays of {y : a_k . y >= 0 for all k}.
#pragma once

#include "okounkov/rational.hpp"

namespace okounkov::detail {

struct ConeGenerators {
  RatMat lineality;  // basis of the lineality space
  RatMat rays;       // extreme rays modulo lineality, primitive integer vectors
};

ConeGenerators extreme_rays(const RatMat& constraints, std::size_t dim);

}  // namespace okounkov::detail

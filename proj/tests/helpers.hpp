#pragma once

#include <srmk/gf.hpp>
#include <srmk/matrix.hpp>

#include "oracle.hpp"

namespace testing_support {

// Requires a prime base field and the polynomial basis: codes then agree.
inline oracle::PrimeExt oracle_of(const srmk::FieldTower& F) {
  const auto& m = F.params().ext_modulus;
  return oracle::PrimeExt{F.q(), F.m(), std::vector<std::uint32_t>(m.begin(), m.end())};
}

inline oracle::Mat to_oracle(const srmk::MatrixExt& M) {
  oracle::Mat out(M.rows(), std::vector<std::uint64_t>(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out[i][j] = M(i, j);
  return out;
}

}  // namespace testing_support

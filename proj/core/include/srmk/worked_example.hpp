#pragma once

// The small F_5 < F_25 instance used as a regression fixture by the CLI `example`
// command and the tests. All ext-field entries are stored as powers of the
// primitive root alpha of x^2 + 4x + 2.

#include <cstddef>
#include <vector>

#include "srmk/code.hpp"
#include "srmk/matrix.hpp"
#include "srmk/sumrank.hpp"

namespace srmk::example {

struct WorkedExample {
  TowerPtr tower;
  LengthPartition partition{std::vector<std::size_t>{1}};
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t s = 0;
  std::vector<std::size_t> profile;

  MatrixExt G, H;
  MatrixExt C, E, Y;
  MatrixExt S;        // H Y^T
  MatrixExt P;        // a transform with P S = [I; 0] (not the RREF transform)
  MatrixExt PH;       // P H
  MatrixExt H_sub;    // last row of P H
  MatrixExt A_t;      // A^T, t x s
  std::vector<MatrixBase> B_blocks;
  MatrixBase B;

  InterleavedCode code() const;
};

const WorkedExample& worked_example();

/// Matrix over `tower` from alpha exponents; negative entries stand for 0.
MatrixExt from_exponents(const TowerPtr& tower, std::size_t rows, std::size_t cols, const std::vector<int>& exps);

}  // namespace srmk::example

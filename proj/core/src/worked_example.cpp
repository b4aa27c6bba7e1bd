#include "srmk/worked_example.hpp"

#include "srmk/linalg.hpp"

namespace srmk::example {

namespace {

constexpr int Z = -1;

WorkedExample build() {
  WorkedExample ex;
  ex.tower = make_tower(5, 2, {2, 4, 1});
  ex.partition = LengthPartition({2, 2, 2});
  ex.k = 2;
  ex.d = 5;
  ex.s = 3;
  ex.profile = {1, 2, 0};
  const auto& F = ex.tower;

  ex.G = from_exponents(F, 2, 6, {4, 7, 21, 4, 3, 5,  //
                                  20, 11, 10, 21, 17, 3});
  ex.H = from_exponents(F, 4, 6, {0, Z, Z, Z, 8, 19,  //
                                  Z, 0, Z, Z, 5, 12,  //
                                  Z, Z, 0, Z, 17, 1,  //
                                  Z, Z, Z, 0, 22, 18});
  ex.C = from_exponents(F, 3, 6, {20, 22, 0, 6, 11, 10,  //
                                  23, 7, 4, Z, 17, 9,    //
                                  15, 0, 22, 12, 22, 10});
  ex.E = from_exponents(F, 3, 6, {19, 1, 6, 9, Z, Z,    //
                                  17, 23, 10, 7, Z, Z,  //
                                  2, 8, 15, 6, Z, Z});
  ex.Y = from_exponents(F, 3, 6, {17, 8, 18, 16, 11, 10,  //
                                  11, 3, 22, 7, 17, 9,    //
                                  7, 4, 23, 0, 22, 10});
  ex.S = from_exponents(F, 4, 3, {19, 17, 2,  //
                                  1, 23, 8,   //
                                  6, 10, 15,  //
                                  9, 7, 6});
  ex.P = from_exponents(F, 4, 4, {Z, 2, 6, 8,    //
                                  Z, 4, 20, 15,  //
                                  Z, 23, Z, 3,   //
                                  0, 6, Z, Z});
  ex.PH = from_exponents(F, 4, 6, {Z, 2, 6, 8, 13, 7,     //
                                   Z, 4, 20, 15, 22, 16,  //
                                   Z, 23, Z, 3, 11, 0,    //
                                   0, 6, Z, Z, 18, 16});
  ex.H_sub = ex.PH.row_range(3, 1);
  ex.A_t = from_exponents(F, 3, 3, {19, 17, 2,  //
                                    6, 10, 15,  //
                                    9, 7, 6});
  const auto base = F->base_ptr();
  ex.B_blocks = {MatrixBase(base, {{1, 2}}), MatrixBase(base, {{1, 0}, {0, 1}}), MatrixBase(base, 0, 2)};
  ex.B = block_diag<BaseField>(ex.B_blocks, base);
  return ex;
}

}  // namespace

MatrixExt from_exponents(const TowerPtr& tower, std::size_t rows, std::size_t cols, const std::vector<int>& exps) {
  if (exps.size() != rows * cols) throw StructuralError("from_exponents: wrong entry count");
  MatrixExt M(tower, rows, cols);
  const auto a = tower->alpha();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const int e = exps[i * cols + j];
      M(i, j) = e < 0 ? FieldTower::zero() : tower->pow(a, static_cast<std::uint64_t>(e));
    }
  return M;
}

InterleavedCode WorkedExample::code() const { return InterleavedCode{LinearCode(tower, partition, H, G, d), s}; }

const WorkedExample& worked_example() {
  static const WorkedExample ex = build();
  return ex;
}

}  // namespace srmk::example

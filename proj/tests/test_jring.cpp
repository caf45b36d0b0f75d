#include "cellkit/analysis.hpp"
#include "cellkit/jring.hpp"

#include "doctest.h"

using namespace cellkit;

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat matmul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat matrix_of(const JRing& J, const std::vector<int>& cell, const JElement& e) {
  std::size_t n = cell.size();
  Mat m(n, std::vector<long long>(n, 0));
  for (auto& [w, c] : e) {
    Mat t = J.cell_jmodule(cell, w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] += c * t[i][j];
  }
  return m;
}

}  // namespace

TEST_SUITE("jring") {

TEST_CASE("structural identities") {
  for (auto sys : {build_system("B", 2, {1, 2}), build_system("B", 3, {1}), build_system("I2", 5, {1}),
                   build_system("A", 3, {1})}) {
    auto A = analyze(sys);
    const JRing& J = *A->jring;
    INFO(sys.name());
    CHECK(J.check_identity().ok());
    CHECK(J.check_blocks().ok());
    CHECK(J.check_tau().ok());
    CHECK(J.check_cell_units().ok());
    CHECK(J.check_associativity().ok());
  }
}

TEST_CASE("identity element and trace form on B2 with unequal weights") {
  auto A = analyze(build_system("B", 2, {1, 2}));
  const JRing& J = *A->jring;
  int N = J.size();
  JElement one = J.identity();
  for (int x = 0; x < N; ++x) {
    CHECK(J.multiply(one, JRing::basis(x)) == JRing::basis(x));
    CHECK(J.multiply(JRing::basis(x), one) == JRing::basis(x));
    for (int y = 0; y < N; ++y) {
      long long t = J.tau(J.multiply(x, y));
      CHECK(t == (A->G().multiply(x, y) == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("cell modules are representations of J") {
  auto A = analyze(build_system("B", 3, {2, 1, 1}));
  const JRing& J = *A->jring;
  Sampler S(3);
  for (auto& cell : A->C().partition(Side::Left).cells) {
    for (int i = 0; i < 10; ++i) {
      int x = S.below(J.size()), y = S.below(J.size());
      Mat lhs = matrix_of(J, cell, J.multiply(x, y));
      Mat rhs = matmul(J.cell_jmodule(cell, x), J.cell_jmodule(cell, y));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("phi determinant has unit form") {
  auto A = analyze(build_system("B", 2, {2, 1}));
  PhiDeterminant d = A->jring->phi_determinant();
  CHECK(d.checked);
  CHECK(d.block_triangular);
  CHECK(d.unit_form);
}

}  // TEST_SUITE

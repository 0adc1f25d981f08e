#include <doctest.h>

#include "qlogic/matrix.hpp"
#include "test_helpers.hpp"

using namespace qlogic;

namespace {

Matrix half_ones() {
  Matrix m(2, 2);
  const GaussianRational h(Rational(1, 2));
  m.at(0, 0) = h; m.at(0, 1) = h; m.at(1, 0) = h; m.at(1, 1) = h;
  return m;
}

Matrix diag(long a, long b) {
  Matrix m(2, 2);
  m.at(0, 0) = GaussianRational(a);
  m.at(1, 1) = GaussianRational(b);
  return m;
}

}  // namespace

TEST_CASE("matmul identities and projector products") {
  testing::Gen gen(3);
  const Matrix a = gen.matrix(3, 3);
  CHECK(matmul(Matrix::identity(3), a) == a);

  const Matrix px = half_ones();  // projector onto span{(1,1)}
  CHECK(matmul(px, px) == px);    // idempotent

  CHECK(matmul(diag(1, 0), diag(0, 1)).is_zero());

  CHECK_THROWS_AS(matmul(Matrix(2, 3), Matrix(2, 3)), ShapeError);
}

TEST_CASE("rref on known matrices") {
  SUBCASE("dependent rows collapse") {
    Matrix m(2, 2);
    m.at(0, 1) = GaussianRational(1L);
    m.at(1, 1) = GaussianRational(2L);
    const RrefResult r = rref(m);
    CHECK(r.reduced.rows() == 1);
    CHECK(r.pivots == std::vector<std::size_t>{1});
    CHECK(r.reduced.at(0, 1) == GaussianRational::one());
  }
  SUBCASE("identity is already reduced") {
    const RrefResult r = rref(Matrix::identity(4));
    CHECK(r.reduced == Matrix::identity(4));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("rank-1 all-ones") {
    Matrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(i, j) = GaussianRational::one();
    const RrefResult r = rref(m);
    CHECK(r.reduced.rows() == 1);
    CHECK(r.reduced.at(0, 0) == GaussianRational::one());
    CHECK(r.reduced.at(0, 1) == GaussianRational::one());
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }
}

TEST_CASE("rref is an idempotent canonicalization") {
  testing::Gen gen(5);
  for (int k = 0; k < 60; ++k) {
    const Matrix m = gen.matrix(1 + gen.index(4), 1 + gen.index(4));
    const Matrix r = rref(m).reduced;
    if (r.rows() == 0) continue;
    CHECK(rref(r).reduced == r);
  }
}

TEST_CASE("kernel basis on known matrices") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());

  const auto k1 = kernel_basis(diag(1, 0));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0].is_zero());
  CHECK(!k1[0][1].is_zero());

  Matrix px(2, 2);
  const GaussianRational h(Rational(1, 2));
  px.at(0, 0) = h; px.at(0, 1) = h; px.at(1, 0) = h; px.at(1, 1) = h;
  const auto k2 = kernel_basis(px);
  REQUIRE(k2.size() == 1);
  CHECK(is_zero_vector(matvec(px, k2[0])));
  CHECK(k2[0][0] == -k2[0][1]);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  testing::Gen gen(9);
  for (int k = 0; k < 60; ++k) {
    const Matrix m = gen.matrix(1 + gen.index(4), 1 + gen.index(4));
    const auto basis = kernel_basis(m);
    CHECK(rank(m) + basis.size() == m.cols());
    for (const Vector& v : basis) CHECK(is_zero_vector(matvec(m, v)));
  }
}

TEST_CASE("gram_inverse on known bases") {
  Matrix e1(1, 2);
  e1.at(0, 0) = GaussianRational::one();
  CHECK(gram_inverse(e1) == Matrix::identity(1));

  Matrix ones(1, 2);
  ones.at(0, 0) = GaussianRational::one();
  ones.at(0, 1) = GaussianRational::one();
  CHECK(gram_inverse(ones).at(0, 0) == GaussianRational(Rational(1, 2)));

  Matrix complex_row(1, 2);
  complex_row.at(0, 0) = GaussianRational::one();
  complex_row.at(0, 1) = GaussianRational::i();
  CHECK(gram_inverse(complex_row).at(0, 0) == GaussianRational(Rational(1, 2)));

  Matrix dependent(2, 2);
  dependent.at(0, 0) = GaussianRational::one();
  dependent.at(1, 0) = GaussianRational(2L);
  CHECK_THROWS_AS(gram_inverse(dependent), DomainError);
}

TEST_CASE("gram identity B B^H (B B^H)^-1 = I on random independent rows") {
  testing::Gen gen(13);
  int done = 0;
  while (done < 40) {
    const std::size_t n = 2 + gen.index(3);
    const std::size_t k = 1 + gen.index(n);
    const Matrix b = rref(gen.matrix(k, n)).reduced;  // independent rows by construction
    if (b.rows() == 0) continue;
    const Matrix g = matmul(b, b.conjugate_transpose());
    CHECK(matmul(g, gram_inverse(b)) == Matrix::identity(b.rows()));
    ++done;
  }
}

TEST_CASE("conjugate transpose is an involution") {
  testing::Gen gen(17);
  const Matrix m = gen.matrix(3, 4);
  CHECK(m.conjugate_transpose().conjugate_transpose() == m);
}

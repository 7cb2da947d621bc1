#include <plesken/matrix.hpp>
#include <plesken/plesken_lie.hpp>

#include <gtest/gtest.h>

using namespace plesken;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<long>> entries) {
  std::vector<Vector> vs;
  std::size_t cols = 0;
  for (const auto& r : entries) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    vs.push_back(std::move(v));
  }
  return Matrix::from_rows(vs, cols);
}

Scalar random_scalar(SampleSource& rng) {
  long den = rng.next(1, 5);
  return Scalar(mpq_class(rng.next(-9, 9), den), mpq_class(rng.next(-9, 9), rng.next(1, 5)));
}

Matrix random_matrix(SampleSource& rng, std::size_t r, std::size_t c, bool sparse) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!sparse || rng.next(0, 2) == 0) m(i, j) = random_scalar(rng);
  return m;
}

}  // namespace

TEST(Scalar, CanonicalRationals) {
  Scalar a = Scalar::rational(6, -4);
  EXPECT_EQ(a.re().get_num(), -3);
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_EQ(a, Scalar::rational(-3, 2));
  EXPECT_THROW(Scalar::rational(1, 0), std::invalid_argument);
}

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("-1/2"), Scalar::rational(-1, 2));
  EXPECT_EQ(Scalar::parse("2/4"), Scalar::rational(1, 2));
  EXPECT_EQ(Scalar::parse("1/2+3/4i"), Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  EXPECT_EQ(Scalar::parse("1-i"), Scalar(mpq_class(1), mpq_class(-1)));
  EXPECT_EQ(Scalar::parse("i"), Scalar::imaginary_unit());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::imaginary_unit());
  EXPECT_EQ(Scalar::parse("5i"), Scalar(mpq_class(0), mpq_class(5)));
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1+", "i1", "1.5", "--1"})
    EXPECT_THROW(Scalar::parse(bad), std::invalid_argument) << bad;

  EXPECT_EQ(Scalar(0).str(), "0");
  EXPECT_EQ(Scalar::rational(-3, 2).str(), "-3/2");
  EXPECT_EQ(Scalar(mpq_class(1, 2), mpq_class(-3)).str(), "1/2-3i");
  EXPECT_EQ(Scalar::imaginary_unit().str(), "0+1i");
  SampleSource rng(7);
  for (int k = 0; k < 200; ++k) {
    Scalar x = random_scalar(rng);
    EXPECT_EQ(Scalar::parse(x.str()), x);
  }
}

TEST(Scalar, BigValuesStayExact) {
  Scalar x(1);
  for (int k = 0; k < 200; ++k) x *= Scalar(10);
  Scalar y = x + Scalar::rational(1, 3);
  EXPECT_EQ(y - x, Scalar::rational(1, 3));
  EXPECT_EQ((y - Scalar::rational(1, 3)) / x, Scalar(1));
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  SampleSource rng(42);
  for (int k = 0; k < 300; ++k) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
  EXPECT_THROW(Scalar(0).inverse(), std::domain_error);
  Scalar i = Scalar::imaginary_unit();
  EXPECT_EQ(i * i, Scalar(-1));
}

TEST(Rref, SpecExamples) {
  auto id = rref(Matrix::identity(2));
  EXPECT_EQ(id.matrix, Matrix::identity(2));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));

  auto dep = rref(rows({{1, 2}, {2, 4}}));
  EXPECT_EQ(dep.matrix, rows({{1, 2}, {0, 0}}));
  EXPECT_EQ(dep.pivots, (std::vector<std::size_t>{0}));

  auto perm = rref(rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(perm.matrix, Matrix::identity(2));
}

TEST(Rank, SpecExamples) {
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
  // 1x1 Gram matrices [delta].
  Matrix g(1, 1);
  g(0, 0) = 3;
  EXPECT_EQ(rank(g), 1u);
  g(0, 0) = 0;
  EXPECT_EQ(rank(g), 0u);
}

TEST(Kernel, SpecExamples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(3)).empty());
  auto k = kernel_basis(Matrix(2, 2));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], unit_vector(2, 0));
  EXPECT_EQ(k[1], unit_vector(2, 1));
  auto line = kernel_basis(rows({{1, 1}}));
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(line[0], (Vector{Scalar(1), Scalar(-1)}));
}

TEST(Solve, SpecExamples) {
  auto e1 = solve(Matrix::identity(2), unit_vector(2, 0));
  ASSERT_TRUE(e1);
  EXPECT_EQ(*e1, unit_vector(2, 0));
  auto half = solve(rows({{2}}), Vector{Scalar(1)});
  ASSERT_TRUE(half);
  EXPECT_EQ((*half)[0], Scalar::rational(1, 2));
  EXPECT_FALSE(solve(rows({{1, 0}, {0, 0}}), Vector{Scalar(0), Scalar(1)}));
}

TEST(Linalg, RankNullityIdempotenceAndSolveOnRandomMatrices) {
  SampleSource rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = static_cast<std::size_t>(rng.next(1, 6));
    std::size_t c = static_cast<std::size_t>(rng.next(1, 6));
    Matrix m = random_matrix(rng, r, c, trial % 2 == 0);
    auto kernel = kernel_basis(m);
    EXPECT_EQ(rank(m) + kernel.size(), c);
    for (const auto& v : kernel) EXPECT_TRUE(is_zero(m * v));
    auto e = rref(m);
    EXPECT_EQ(rref(e.matrix).matrix, e.matrix);
    // Row space preserved: each original row lies in the span of the rref rows.
    std::vector<Vector> rref_rows, orig_rows;
    for (std::size_t i = 0; i < r; ++i) {
      rref_rows.push_back(e.matrix.row_vector(i));
      orig_rows.push_back(m.row_vector(i));
    }
    EXPECT_EQ(Subspace::span(rref_rows, c), Subspace::span(orig_rows, c));

    Vector x(c);
    for (auto& v : x) v = random_scalar(rng);
    Vector rhs = m * x;
    auto sol = solve(m, rhs);
    ASSERT_TRUE(sol);
    EXPECT_EQ(m * *sol, rhs);
  }
}

TEST(Subspace, CanonicalEquality) {
  std::vector<Vector> a{{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
  std::vector<Vector> b{{Scalar(1), Scalar(2), Scalar(1)}, {Scalar(2), Scalar(1), Scalar(-1)}};
  EXPECT_EQ(Subspace::span(a, 3), Subspace::span(b, 3));
  Subspace s = Subspace::span(a, 3);
  EXPECT_TRUE(s.contains(Vector{Scalar(1), Scalar(0), Scalar(-1)}));
  EXPECT_FALSE(s.contains(Vector{Scalar(1), Scalar(0), Scalar(0)}));
  auto c = s.coordinates(Vector{Scalar(2), Scalar(3), Scalar(1)});
  ASSERT_TRUE(c);
  Vector back(3);
  for (std::size_t k = 0; k < s.dim(); ++k) back = back + (*c)[k] * s.basis()[k];
  EXPECT_EQ(back, (Vector{Scalar(2), Scalar(3), Scalar(1)}));
}

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace plesken;

namespace {

std::vector<std::size_t> sizes_of(const CellDatum& cd) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < cd.cells(); ++l) out.push_back(cd.size(l));
  return out;
}

std::size_t lambda_index(const CellDatum& cd, const std::string& label) {
  auto it = std::find(cd.lambdas.begin(), cd.lambdas.end(), label);
  EXPECT_NE(it, cd.lambdas.end()) << label;
  return static_cast<std::size_t>(it - cd.lambdas.begin());
}

/// Expected TL cell size for l through strands: C(n,k) - C(n,k-1) with k = (n-l)/2 cups.
std::size_t tl_cell_size(int n, int l) {
  std::size_t k = static_cast<std::size_t>((n - l) / 2);
  return oracle::binomial(static_cast<std::size_t>(n), k) -
         (k == 0 ? 0 : oracle::binomial(static_cast<std::size_t>(n), k - 1));
}

Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t s) {
  Matrix m(n, n);
  m(r, s) = 1;
  return m;
}

}  // namespace

TEST(CellDatum, PlanarRookSizesAndBijection) {
  auto cd = cell_datum_planar_rook(3);
  EXPECT_EQ(sizes_of(cd), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(cd.total(), 20u);
  std::vector<std::size_t> all;
  for (const auto& b : cd.basis) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(all[k], k);

  auto one = cell_datum_planar_rook(1);
  EXPECT_EQ(sizes_of(one), (std::vector<std::size_t>{1, 1}));
  auto pr1 = planar_rook(1);
  EXPECT_TRUE(validate_cell_datum(pr1.algebra, pr1.involution, one).ok);
}

TEST(CellDatum, PlanarRookSizesAreBinomials) {
  for (int n = 1; n <= 5; ++n) {
    auto cd = cell_datum_planar_rook(n);
    for (int l = 0; l <= n; ++l)
      EXPECT_EQ(cd.size(static_cast<std::size_t>(l)), oracle::binomial(static_cast<std::size_t>(n), static_cast<std::size_t>(l)));
    EXPECT_EQ(cd.total(), oracle::binomial(2 * static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
  }
}

TEST(CellDatum, TemperleyLiebSizes) {
  auto cd4 = cell_datum_temperley_lieb(4);
  EXPECT_EQ(cd4.size(lambda_index(cd4, "4")), 1u);
  EXPECT_EQ(cd4.size(lambda_index(cd4, "2")), 3u);
  EXPECT_EQ(cd4.size(lambda_index(cd4, "0")), 2u);
  EXPECT_EQ(cd4.total(), 14u);
  auto cd2 = cell_datum_temperley_lieb(2);
  EXPECT_EQ(cd2.size(lambda_index(cd2, "2")), 1u);
  EXPECT_EQ(cd2.size(lambda_index(cd2, "0")), 1u);
  for (int n = 1; n <= 6; ++n) {
    auto cd = cell_datum_temperley_lieb(n);
    std::size_t total = 0;
    for (int l = n % 2; l <= n; l += 2) {
      std::size_t d = cd.size(lambda_index(cd, std::to_string(l)));
      EXPECT_EQ(d, tl_cell_size(n, l)) << n << " " << l;
      total += d * d;
    }
    EXPECT_EQ(total, oracle::catalan(static_cast<std::size_t>(n)));
  }
}

TEST(ValidateCellDatum, BuiltDataPass) {
  auto pr = planar_rook(3);
  EXPECT_TRUE(validate_cell_datum(pr.algebra, pr.involution, cell_datum_planar_rook(3)).ok);
  for (int delta : {0, 3}) {
    auto tl = temperley_lieb(4, Scalar(delta));
    auto v = validate_cell_datum(tl.algebra, tl.involution, cell_datum_temperley_lieb(4));
    EXPECT_TRUE(v.ok) << v.clause << ": " << v.witness;
  }
  auto m = matrix_algebra(3, MatrixInvolution::transpose);
  EXPECT_TRUE(validate_cell_datum(m.algebra, m.involution, cell_datum_matrix(3)).ok);
}

TEST(ValidateCellDatum, ReversedOrderBreaksTriangularity) {
  auto pr = planar_rook(2);
  auto cd = cell_datum_planar_rook(2);
  for (auto& [mu, l] : cd.order) std::swap(mu, l);
  auto v = validate_cell_datum(pr.algebra, pr.involution, cd);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.clause, "C3");
  EXPECT_FALSE(v.witness.empty());
}

TEST(ValidateCellDatum, BrokenBijectionInvolutionAndOrder) {
  auto pr = planar_rook(2);
  auto cd = cell_datum_planar_rook(2);
  auto dup = cd;
  dup.basis[1][0] = dup.basis[1][1];
  EXPECT_EQ(validate_cell_datum(pr.algebra, pr.involution, dup).clause, "C1");

  auto swapped = cd;
  std::swap(swapped.basis[1][0], swapped.basis[1][1]);  // C_{1,1} now a non-symmetric diagram
  EXPECT_EQ(validate_cell_datum(pr.algebra, pr.involution, swapped).clause, "C2");

  auto reflexive = cd;
  reflexive.order.emplace_back(0, 0);
  EXPECT_EQ(validate_cell_datum(pr.algebra, pr.involution, reflexive).clause, "C1");

  auto intransitive = cd;
  intransitive.order = {{0, 1}, {1, 2}};
  EXPECT_EQ(validate_cell_datum(pr.algebra, pr.involution, intransitive).clause, "C1");

  auto short_datum = cd;
  short_datum.basis.pop_back();
  EXPECT_EQ(validate_cell_datum(pr.algebra, pr.involution, short_datum).clause, "C1");
}

TEST(ValidateCellDatum, EmptyIndexSetIsAccepted) {
  auto pr = planar_rook(2);
  auto cd = cell_datum_planar_rook(2);
  cd.lambdas.push_back("empty");
  cd.index_sets.emplace_back();
  cd.basis.emplace_back();
  cd.order = detail::chain_order(cd.lambdas.size());
  EXPECT_TRUE(validate_cell_datum(pr.algebra, pr.involution, cd).ok);
  auto verdict = is_semisimple(pr.algebra, cd);
  EXPECT_TRUE(verdict.semisimple);
  auto d = predicted_decomposition(cd, verdict);
  EXPECT_EQ(d.sizes(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(verify_theorem(pr.algebra, pr.involution, cd).certified);
}

TEST(CellModule, MatrixDatumIsTheNaturalModule) {
  auto m = matrix_algebra(3, MatrixInvolution::transpose);
  auto w = cell_module(m.algebra, cell_datum_matrix(3), 0);
  ASSERT_EQ(w.dim(), 3u);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) EXPECT_EQ(w.action[r * 3 + s], unit_matrix(3, r, s));
}

TEST(CellModule, IdentityAndModuleAxioms) {
  auto pr = planar_rook(3);
  auto cd = cell_datum_planar_rook(3);
  auto w = cell_module(pr.algebra, cd, 1);
  EXPECT_EQ(w.dim(), 3u);
  EXPECT_TRUE(w.rho(pr.algebra.unit()).is_identity());
  EXPECT_FALSE(check_module_axioms(pr.algebra, w));

  auto tl = temperley_lieb(4, Scalar(3));
  auto tcd = cell_datum_temperley_lieb(4);
  auto w2 = cell_module(tl.algebra, tcd, lambda_index(tcd, "2"));
  EXPECT_EQ(w2.dim(), 3u);
  // Independent multiplicativity check on all basis pairs.
  for (std::size_t x = 0; x < tl.algebra.dim(); ++x)
    for (std::size_t y = 0; y < tl.algebra.dim(); ++y) {
      Vector xy = multiply(tl.algebra, tl.algebra.basis_vector(x), tl.algebra.basis_vector(y));
      EXPECT_EQ(w2.rho(xy), w2.action[x] * w2.action[y]);
    }
}

TEST(CellModule, DetectsBrokenAction) {
  auto pr = planar_rook(2);
  auto w = cell_module(pr.algebra, cell_datum_planar_rook(2), 1);
  auto unit = std::find(pr.algebra.unit().begin(), pr.algebra.unit().end(), Scalar(1)) - pr.algebra.unit().begin();
  w.action[static_cast<std::size_t>(unit)] = Scalar(2) * w.action[static_cast<std::size_t>(unit)];
  EXPECT_TRUE(check_module_axioms(pr.algebra, w));
}

TEST(GramMatrix, TemperleyLiebTwoCupIsDelta) {
  for (int delta : {0, 1, 3}) {
    auto tl = temperley_lieb(2, Scalar(delta));
    auto cd = cell_datum_temperley_lieb(2);
    auto g = gram_matrix(tl.algebra, cd, lambda_index(cd, "0"));
    ASSERT_EQ(g.gram.rows(), 1u);
    EXPECT_EQ(g.gram(0, 0), Scalar(delta));
  }
}

TEST(GramMatrix, PlanarRookAndMatrixAreIdentity) {
  for (int n = 1; n <= 4; ++n) {
    auto pr = planar_rook(n);
    auto cd = cell_datum_planar_rook(n);
    for (std::size_t l = 0; l < cd.cells(); ++l) EXPECT_TRUE(gram_matrix(pr.algebra, cd, l).gram.is_identity());
  }
  auto m = matrix_algebra(3, MatrixInvolution::transpose);
  EXPECT_TRUE(gram_matrix(m.algebra, cell_datum_matrix(3), 0).gram.is_identity());
}

TEST(GramMatrix, TemperleyLiebFourOrdinaryPairing) {
  // One-cup half diagrams pair to delta when the cups coincide, 1 when they
  // are adjacent and 0 when disjoint.
  auto tl = temperley_lieb(4, Scalar(3));
  auto cd = cell_datum_temperley_lieb(4);
  auto g = gram_matrix(tl.algebra, cd, lambda_index(cd, "2")).gram;
  ASSERT_EQ(g.rows(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(g(k, k), Scalar(3));
  std::vector<Scalar> off{g(0, 1), g(0, 2), g(1, 2)};
  EXPECT_EQ(std::count(off.begin(), off.end(), Scalar(1)), 2);
  EXPECT_EQ(std::count(off.begin(), off.end(), Scalar(0)), 1);
  EXPECT_TRUE(g.is_symmetric());
  EXPECT_EQ(rank(g), 3u);
}

TEST(Semisimplicity, Verdicts) {
  auto pr = planar_rook(3);
  EXPECT_TRUE(is_semisimple(pr.algebra, cell_datum_planar_rook(3)).semisimple);
  auto tl3 = temperley_lieb(4, Scalar(3));
  EXPECT_TRUE(is_semisimple(tl3.algebra, cell_datum_temperley_lieb(4)).semisimple);
  auto tl0 = temperley_lieb(4, Scalar(0));
  auto v = is_semisimple(tl0.algebra, cell_datum_temperley_lieb(4));
  EXPECT_FALSE(v.semisimple);
  bool degenerate = false;
  for (const auto& c : v.cells) degenerate = degenerate || c.rank < c.size;
  EXPECT_TRUE(degenerate);
  EXPECT_THROW(predicted_decomposition(cell_datum_temperley_lieb(4), v), std::domain_error);
}

TEST(Semisimplicity, PlanarRookAtEveryScale) {
  for (int n = 1; n <= 5; ++n) {
    auto pr = planar_rook(n);
    EXPECT_TRUE(is_semisimple(pr.algebra, cell_datum_planar_rook(n)).semisimple) << n;
  }
}

TEST(PredictedDecomposition, Examples) {
  auto pr = planar_rook(3);
  auto cd = cell_datum_planar_rook(3);
  auto d = predicted_decomposition(cd, is_semisimple(pr.algebra, cd));
  EXPECT_EQ(d.sizes(), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(d.plesken_dim, 6u);

  auto tl = temperley_lieb(4, Scalar(3));
  auto tcd = cell_datum_temperley_lieb(4);
  auto td = predicted_decomposition(tcd, is_semisimple(tl.algebra, tcd));
  auto sizes = td.sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(td.plesken_dim, 4u);

  auto m = matrix_algebra(3, MatrixInvolution::transpose);
  auto mcd = cell_datum_matrix(3);
  auto md = predicted_decomposition(mcd, is_semisimple(m.algebra, mcd));
  EXPECT_EQ(md.sizes(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(md.plesken_dim, 3u);
}

TEST(VerifyTheorem, Certificates) {
  auto pr = planar_rook(3);
  auto c = verify_theorem(pr.algebra, pr.involution, cell_datum_planar_rook(3));
  EXPECT_TRUE(c.certified) << c.failed_check << " " << c.witness;
  EXPECT_EQ(c.plesken_dim, 6u);
  EXPECT_EQ(c.predicted_dim, 6u);
  EXPECT_EQ(c.representation_rank, 20u);

  auto tl = temperley_lieb(4, Scalar(3));
  auto t = verify_theorem(tl.algebra, tl.involution, cell_datum_temperley_lieb(4));
  EXPECT_TRUE(t.certified) << t.failed_check << " " << t.witness;
  EXPECT_EQ(t.plesken_dim, 4u);
}

TEST(VerifyTheorem, NonSemisimpleRefutedAtInjectivity) {
  auto tl = temperley_lieb(4, Scalar(0));
  auto t = verify_theorem(tl.algebra, tl.involution, cell_datum_temperley_lieb(4));
  EXPECT_FALSE(t.certified);
  EXPECT_EQ(t.failed_check, "a");
  EXPECT_FALSE(t.representation_injective);
  EXPECT_LT(t.representation_rank, 14u);
  EXPECT_TRUE(t.form_skew);
  EXPECT_TRUE(t.dimension_match);
  EXPECT_EQ(t.plesken_dim, 4u);
}

TEST(GramProperties, HoldWithOrWithoutSemisimplicity) {
  for (int delta : {0, 3}) {
    auto tl = temperley_lieb(4, Scalar(delta));
    auto cd = cell_datum_temperley_lieb(4);
    for (std::size_t l = 0; l < cd.cells(); ++l) {
      auto failure = check_gram_properties(tl.algebra, tl.involution, cd, l);
      EXPECT_FALSE(failure) << *failure;
    }
  }
  auto pr = planar_rook(3);
  auto cd = cell_datum_planar_rook(3);
  for (std::size_t l = 0; l < cd.cells(); ++l) EXPECT_FALSE(check_gram_properties(pr.algebra, pr.involution, cd, l));
}

TEST(Transport, BracketsReproduceTheBlockModel) {
  auto pr = planar_rook(3);
  auto t = transport_to_model(pr.algebra, pr.involution, cell_datum_planar_rook(3));
  EXPECT_TRUE(t.homomorphism);
  EXPECT_TRUE(t.identity_grams);
  EXPECT_TRUE(t.model_match);
  auto m = matrix_algebra(3, MatrixInvolution::transpose);
  auto tm = transport_to_model(m.algebra, m.involution, cell_datum_matrix(3));
  EXPECT_TRUE(tm.model_match);
  // TL at delta=3 has non-identity Grams, so only the homomorphism part applies.
  auto tl = temperley_lieb(4, Scalar(3));
  auto tt = transport_to_model(tl.algebra, tl.involution, cell_datum_temperley_lieb(4));
  EXPECT_TRUE(tt.homomorphism);
  EXPECT_FALSE(tt.identity_grams);
}

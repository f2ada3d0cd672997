#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "conlap/families.hpp"
#include "conlap/fixtures.hpp"
#include "conlap/incidence.hpp"
#include "conlap/linalg.hpp"
#include "support.hpp"

using namespace conlap;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  }
  return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  }
  return m;
}

Inertia numeric_inertia(const IntMatrix& m) {
  Inertia in;
  for (double v : numeric_spectrum(m)) {
    if (std::abs(v) < 1e-9) {
      ++in.zero;
    } else if (v > 0) {
      ++in.positive;
    } else {
      ++in.negative;
    }
  }
  return in;
}

const IntMatrix kEdgeL = connection_matrix(generate_complex({{"1", "2"}}));
const IntMatrix kPathL{{1, 1, 1, 1, 0}, {1, 1, 0, 1, 1}, {1, 0, 1, 0, 0}, {1, 1, 0, 1, 0}, {0, 1, 0, 0, 1}};

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(kEdgeL), -1);
  EXPECT_EQ(determinant(kPathL), 1);
  EXPECT_EQ(determinant(IntMatrix::identity(5)), 1);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_THROW((void)determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, MatchesLeibnizOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const IntMatrix m = random_matrix(rng, n, -4, 4);
    EXPECT_EQ(determinant(m), oracle::leibniz(support::to_long(m)));
    EXPECT_EQ(determinant(m), oracle::det(support::to_rational(m)));
    EXPECT_EQ(permutation_expansion_determinant(m), determinant(m));
  }
}

TEST(Determinant, SingularAndNeedsPivot) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
}

TEST(Inverse, EdgeInPrintedOrder) {
  const IntMatrix g = inverse_unimodular(kEdgeL);
  // printed order (1,2), (1), (2)
  EXPECT_EQ(g.permuted({2, 0, 1}), (IntMatrix{{-1, 1, 1}, {1, 0, -1}, {1, -1, 0}}));
}

TEST(Inverse, TriangleBoundaryPrinted) {
  const IntMatrix g = inverse_unimodular(connection_matrix(cycle_complex(3)));
  const IntMatrix printed{{-1, -1, -1, 1, 1, 0}, {-1, -1, -1, 1, 0, 1}, {-1, -1, -1, 0, 1, 1},
                          {1, 1, 0, -1, 0, 0},    {1, 0, 1, 0, -1, 0},   {0, 1, 1, 0, 0, -1}};
  EXPECT_EQ(g, printed);
  EXPECT_EQ(g.sum(), 0);
}

TEST(Inverse, IdentityAndErrors) {
  EXPECT_EQ(inverse_unimodular(IntMatrix::identity(4)), IntMatrix::identity(4));
  EXPECT_THROW((void)inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
  EXPECT_THROW((void)inverse_unimodular(IntMatrix{{1, 1}, {1, 1}}), std::domain_error);
  EXPECT_THROW((void)inverse_unimodular(IntMatrix(2, 1)), std::invalid_argument);
}

TEST(Inverse, MatchesRationalOracleOnPool) {
  for (const auto& nc : named_complexes()) {
    if (nc.complex.size() > 30) continue;
    const IntMatrix l = connection_matrix(nc.complex);
    const IntMatrix g = inverse_unimodular(l);
    EXPECT_EQ(l * g, IntMatrix::identity(l.rows()));
    EXPECT_EQ(g * l, IntMatrix::identity(l.rows()));
    EXPECT_EQ(g, support::to_int(oracle::inverse(support::to_rational(l)))) << nc.name;
  }
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(kEdgeL), (Inertia{2, 1, 0}));
  EXPECT_EQ(inertia(connection_matrix(cycle_complex(3))), (Inertia{3, 3, 0}));
  EXPECT_EQ(inertia(IntMatrix::identity(7)), (Inertia{7, 0, 0}));
  EXPECT_EQ(inertia(IntMatrix{{0, 1}, {1, 0}}), (Inertia{1, 1, 0}));
  EXPECT_THROW((void)inertia(IntMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW((void)inertia(IntMatrix{{1, 1}, {1, 1}}), std::domain_error);
}

TEST(Inertia, CharacteristicPolynomialPath) {
  EXPECT_EQ(characteristic_polynomial(IntMatrix{{2, 1}, {1, 2}}), (IntPolynomial{3, -4, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix(0, 0)), IntPolynomial{1});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_symmetric(rng, 2 + static_cast<std::size_t>(trial % 6), -3, 3);
    if (determinant(m) == 0) continue;
    const Inertia by_poly = inertia_from_characteristic_polynomial(characteristic_polynomial(m));
    EXPECT_EQ(by_poly, numeric_inertia(m));
    EXPECT_EQ(inertia(m), by_poly);
    Inertia fast;
    if (inertia_by_pivoted_minors(m, fast)) {
      EXPECT_EQ(fast, by_poly);
    }
  }
}

TEST(Inertia, AgreesWithNumericSignsOnPool) {
  for (const auto& nc : random_complex_pool(9, 20)) {
    const IntMatrix l = connection_matrix(nc.complex);
    EXPECT_EQ(inertia(l), numeric_inertia(l)) << nc.name;
  }
}

TEST(Tensor, IdentityAndDeterminantRule) {
  const IntMatrix one{{1}};
  EXPECT_EQ(tensor_product(kPathL, one), kPathL);
  EXPECT_EQ(tensor_product(one, kPathL), kPathL);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const std::size_t k = 1 + static_cast<std::size_t>((trial / 3) % 3);
    const IntMatrix a = random_matrix(rng, n, -2, 2);
    const IntMatrix b = random_matrix(rng, k, -2, 2);
    mpz_class da = determinant(a);
    mpz_class db = determinant(b);
    mpz_class pa;
    mpz_class pb;
    mpz_pow_ui(pa.get_mpz_t(), da.get_mpz_t(), k);
    mpz_pow_ui(pb.get_mpz_t(), db.get_mpz_t(), n);
    EXPECT_EQ(determinant(tensor_product(a, b)), pa * pb);
  }
}

TEST(Tensor, SpectrumIsPairwiseProducts) {
  const auto sa = numeric_spectrum(kEdgeL);
  const auto sb = numeric_spectrum(kPathL);
  std::vector<double> products;
  for (double x : sa) {
    for (double y : sb) products.push_back(x * y);
  }
  std::sort(products.begin(), products.end());
  const auto st = numeric_spectrum(tensor_product(kEdgeL, kPathL));
  ASSERT_EQ(st.size(), products.size());
  for (std::size_t i = 0; i < st.size(); ++i) EXPECT_NEAR(st[i], products[i], 1e-6);
}

TEST(DirectSum, Rules) {
  EXPECT_EQ(direct_sum(kPathL, IntMatrix(0, 0)), kPathL);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, -3, 3);
    const IntMatrix b = random_matrix(rng, 3, -3, 3);
    EXPECT_EQ(determinant(direct_sum(a, b)), determinant(a) * determinant(b));
  }
  const IntMatrix la = connection_matrix(cycle_complex(3));
  const Inertia ia = inertia(la);
  const Inertia ib = inertia(kPathL);
  EXPECT_EQ(inertia(direct_sum(la, kPathL)), (Inertia{ia.positive + ib.positive, ia.negative + ib.negative, 0}));
}

TEST(Permanent, CompleteGraphSequences) {
  const long with[] = {1, 2, 6, 24, 120, 720};
  const long without[] = {0, 1, 2, 9, 44, 265};
  for (int n = 1; n <= 6; ++n) {
    IntMatrix k(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < k.rows(); ++i) {
      for (std::size_t j = 0; j < k.cols(); ++j) k(i, j) = i == j ? 0 : 1;
    }
    EXPECT_EQ(permanent(k + IntMatrix::identity(k.rows())), with[n - 1]);
    EXPECT_EQ(permanent(k), without[n - 1]);
  }
  EXPECT_EQ(permanent(IntMatrix::identity(9)), 1);
  EXPECT_EQ(permanent(IntMatrix(0, 0)), 1);
}

TEST(Permanent, MatchesOracleAndGuard) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + static_cast<std::size_t>(trial % 7), -2, 3);
    EXPECT_EQ(permanent(m), oracle::permanent(support::to_long(m)));
  }
  EXPECT_THROW((void)permanent(IntMatrix::identity(kPermanentGuard + 1)), GuardExceeded);
  EXPECT_THROW((void)permutation_expansion_determinant(IntMatrix::identity(kPermutationGuard + 1)),
               GuardExceeded);
}

TEST(Fredholm, Examples) {
  EXPECT_EQ(fredholm_path_oracle(connection_adjacency(generate_complex({{"1", "2"}}))), -1);
  EXPECT_EQ(fredholm_path_oracle(IntMatrix(4, 4)), 1);
  EXPECT_EQ(fredholm_path_oracle(connection_adjacency(cycle_complex(3))), -1);
  EXPECT_THROW((void)fredholm_path_oracle(IntMatrix(10, 10)), GuardExceeded);
}

TEST(Spectrum, Examples) {
  const auto s = numeric_spectrum(kEdgeL);
  ASSERT_EQ(s.size(), 3U);
  EXPECT_NEAR(s[0], 1 - std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(s[1], 1, 1e-9);
  EXPECT_NEAR(s[2], 1 + std::sqrt(2.0), 1e-9);
  for (double v : numeric_spectrum(IntMatrix::identity(4))) EXPECT_NEAR(v, 1, 1e-12);
  const auto h = numeric_spectrum(kPathL);
  const std::vector<double> expected = {(1 - std::sqrt(5.0)) / 2, (3 - std::sqrt(13.0)) / 2, 1,
                                        (1 + std::sqrt(5.0)) / 2, (3 + std::sqrt(13.0)) / 2};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(h[i], expected[i], 1e-9);
}

TEST(Text, RoundTripAndErrors) {
  const IntMatrix m{{1, -2}, {30000000000L, 0}};
  EXPECT_EQ(m.to_text(), "2 2\n1 -2\n30000000000 0\n");
  EXPECT_EQ(IntMatrix::from_text(m.to_text()), m);
  EXPECT_THROW((void)IntMatrix::from_text("2 2\n1 2\n3\n"), std::invalid_argument);
  EXPECT_THROW((void)IntMatrix::from_text("x"), std::invalid_argument);
  EXPECT_THROW((void)IntMatrix::from_text("1 1\n1 2\n"), std::invalid_argument);
}

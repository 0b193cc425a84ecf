#include <gtest/gtest.h>

#include "support.hpp"

using namespace hypersing;
using hs_test::Gen;

namespace {

RatMatrix diag_of(const std::vector<Rat>& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

TEST(Lagrange, DiagonalInputIsUntouched) {
  const RatMatrix a{{2, 0, 0}, {0, -1, 0}, {0, 0, 3}};
  const auto d = lagrange_diagonalize(a);
  EXPECT_EQ(d.transform, RatMatrix::identity(3));
  EXPECT_EQ(d.diagonal, (std::vector<Rat>{2, -1, 3}));
}

TEST(Lagrange, HyperbolicFallback) {
  const RatMatrix a{{0, Rat(-1, 2), 0}, {Rat(-1, 2), 0, 0}, {0, 0, 1}};
  const auto d = lagrange_diagonalize(a);
  EXPECT_EQ(d.transform.transpose() * a * d.transform, diag_of(d.diagonal));
  EXPECT_EQ(d.rank(), 3u);
}

TEST(Lagrange, RankDeficient) {
  const RatMatrix a{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}};
  EXPECT_EQ(lagrange_diagonalize(a).rank(), 1u);
  EXPECT_THROW(lagrange_diagonalize(RatMatrix{{0, 1}, {0, 0}}), PreconditionError);
}

TEST(LagrangeProperty, RandomSymmetricMatrices) {
  Gen gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 5));
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const Rat v = gen.integer(0, 3) == 0 ? Rat(0) : gen.rational(5);
        a(i, j) = a(j, i) = (i == j && gen.coin()) ? Rat(0) : v;
      }
    const auto d = lagrange_diagonalize(a);
    EXPECT_EQ(d.transform.transpose() * a * d.transform, diag_of(d.diagonal));
    EXPECT_EQ(rank(d.transform), n);
    EXPECT_EQ(d.rank(), rank(a));
  }
}

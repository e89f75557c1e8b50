/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <gtest/gtest.h>

#include "cppforge/construct.hpp"
#include "cppforge/error.hpp"
#include "cppforge/fieldext.hpp"
#include "cppforge/linalg.hpp"
#include "cppforge/rng.hpp"

using namespace cppforge;

TEST(BasisPair, DualBasis) {
  for (auto [p, m, d] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 1, 1}, {2, 1, 2}, {2, 1, 4}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}, {7, 1, 2}, {2, 2, 3}}) {
    const BasisPair b(Field::make(p, m), d);
    const auto& ext = b.extension();
    ASSERT_EQ(b.dim(), d);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j)
        EXPECT_EQ(ext.trace(b.big()->mul(b.alpha()[i], b.beta()[j])), i == j ? 1u : 0u)
            << p << "^" << m << " d=" << d;
  }
  const BasisPair one(Field::make(3, 1), 1);
  EXPECT_EQ(one.alpha(), (std::vector<Elem>{1}));
  EXPECT_EQ(one.beta(), (std::vector<Elem>{1}));
}

TEST(BasisPair, DependentAlphaRejected) {
  try {
    BasisPair(Field::make(2, 1), 2, std::vector<Elem>{1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DependentBasis);
  }
}

TEST(BasisPair, RoundTrip) {
  for (auto [p, m, d] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
           {2, 1, 6}, {2, 2, 3}, {3, 1, 4}, {2, 1, 12}, {5, 1, 3}, {2, 3, 2}}) {
    const BasisPair b(Field::make(p, m), d);
    const auto& big = *b.big();
    EXPECT_EQ(b.encode(0), std::vector<Elem>(d, 0));
    for (unsigned i = 0; i < d; ++i) {
      std::vector<Elem> e(d, 0);
      e[i] = 1;
      EXPECT_EQ(b.decode(e), b.alpha()[i]);
    }
    for (Elem x = 0; x < big.order(); ++x) ASSERT_EQ(b.decode(b.encode(x)), x);
  }
}

TEST(BasisPair, CustomAlpha) {
  // 3, 5, 7 are independent bit vectors
  const BasisPair std3(Field::make(2, 1), 3);
  const BasisPair b(Field::make(2, 1), 3, std::vector<Elem>{3, 5, 7});
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(b.decode(b.encode(x)), x);
  EXPECT_NE(b.beta(), std3.beta());
}

TEST(Univariate, Examples) {
  const BasisPair b(Field::make(2, 1), 3);
  const auto id = PermTable::identity(Field::make(2, 1), 3);
  const Poly u = to_univariate(b, id);
  EXPECT_EQ(u, Poly::monomial(b.big(), 1, 1));
  std::vector<Index> zero(8, 0);
  EXPECT_TRUE(to_univariate(b, PermTable(Field::make(2, 1), 3, zero)).is_zero());

  const auto f4 = Field::make(2, 2);
  const BasisPair b4(f4, 2);
  const auto s = sigma_from_matrix(Mat::from_ints(f4, {{0, 1}, {-1, -1}}));
  const Poly v = to_univariate(b4, s);
  EXPECT_TRUE(is_linearized(v));
  for (std::size_t k = 0; k < v.coeffs().size(); ++k)
    if (v.coeff(k)) {
      EXPECT_TRUE(k == 1 || k == 4) << k;
    }
}

TEST(Univariate, ReproducesTables) {
  Rng rng(4);
  for (auto [p, m, d] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{2, 1, 4}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    const auto f = Field::make(p, m);
    const BasisPair b(f, d);
    std::vector<Index> t = PermTable::identity(f, d).table();
    rng.shuffle(std::span<Index>(t));
    const PermTable s(f, d, t);
    const Poly u = to_univariate(b, s);
    const VectorSpace vs(f, d);
    for (Index x = 0; x < vs.size(); ++x) {
      const auto cx = vs.coords(x);
      const auto cy = vs.coords(s(x));
      ASSERT_EQ(eval(u, b.decode(cx)), b.decode(cy));
    }
    const auto lin = sigma_from_matrix(random_invertible(f, d, rng));
    EXPECT_TRUE(is_linearized(to_univariate(b, lin)));
  }
}

TEST(Univariate, SizeCap) {
  const auto f = Field::make(2, 1);
  try {
    to_univariate(BasisPair(f, 13), PermTable::identity(f, 13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}

TEST(Univariate, LinearizedPredicate) {
  const auto f = Field::make(3, 2);
  EXPECT_TRUE(is_linearized(parse_poly("t^9+2*t^3+t", f)));
  EXPECT_FALSE(is_linearized(parse_poly("t^2", f)));
  EXPECT_FALSE(is_linearized(parse_poly("t+1", f)));
  EXPECT_TRUE(is_linearized(Poly::zero(f)));
}

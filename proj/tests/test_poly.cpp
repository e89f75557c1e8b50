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

#include <numeric>

#include "cppforge/error.hpp"
#include "cppforge/poly.hpp"
#include "oracle.hpp"

using namespace cppforge;

namespace {

Poly P(const FieldPtr& f, std::string_view s) { return parse_poly(s, f); }

// phi by counting, not by the library's factorization
std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

}  // namespace

TEST(Poly, ArithmeticExamples) {
  const auto f2 = Field::make(2, 1);
  EXPECT_EQ(P(f2, "t^3+t^2+1") * P(f2, "t^3+t+1"), P(f2, "t^6+t^5+t^4+t^3+t^2+t+1"));
  const auto f = P(f2, "t^2+1");
  EXPECT_EQ(gcd(P(f2, "t^3+t^2+t+1"), Poly::zero(f2)), P(f2, "t^3+t^2+t+1"));
  EXPECT_EQ(gcd(P(f2, "t^2+t+1"), P(f2, "t^3+t+1")), Poly::constant(f2, 1));
  const auto f7 = Field::make(7, 1);
  EXPECT_EQ(gcd(scale(P(f7, "t^2-1"), 3), Poly::zero(f7)), P(f7, "t^2-1"));
  EXPECT_EQ(eval(P(f2, "t^2+t+1"), 0), 1u);
  EXPECT_EQ(eval(P(f7, "t^2+t+1"), f7->from_int(-1)), 1u);
  EXPECT_EQ(eval(Poly::zero(f7), 3), 0u);
  EXPECT_TRUE(f.is_monic());
}

TEST(Poly, DivmodMatchesOracle) {
  const auto f = Field::make(3, 2);
  const oracle::Field o(3, 2, f->modulus());
  std::uint64_t s = 7;
  auto next = [&] { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int it = 0; it < 300; ++it) {
    std::vector<Elem> a(1 + next() % 9), b(1 + next() % 5);
    for (auto& x : a) x = static_cast<Elem>((next() >> 33) % 9);
    for (auto& x : b) x = static_cast<Elem>((next() >> 33) % 9);
    b.back() = 1 + static_cast<Elem>((next() >> 33) % 8);
    const Poly A(f, a), B(f, b);
    auto [qq, rr] = divmod(A, B);
    EXPECT_EQ(qq * B + rr, A);
    EXPECT_TRUE(rr.is_zero() || *rr.degree() < *B.degree());
    EXPECT_EQ((A * B).coeffs(), oracle::pmul(o, A.coeffs(), B.coeffs()));
    EXPECT_EQ(rr.coeffs(), oracle::prem(o, A.coeffs(), B.coeffs()));
  }
}

TEST(Poly, CyclotomicExamples) {
  for (unsigned q : {2u, 4u, 5u, 7u, 8u}) {
    const auto f = Field::of_order(q);
    EXPECT_EQ(cyclotomic(3, f), P(f, "t^2+t+1")) << q;
    EXPECT_EQ(cyclotomic(1, f), P(f, "t-1"));
  }
  for (unsigned q : {5u, 7u, 25u}) {
    const auto f = Field::of_order(q);
    EXPECT_EQ(cyclotomic(6, f), P(f, "t^2-t+1"));
  }
  EXPECT_EQ(to_pretty(cyclotomic(6, Field::make(7, 1))), "t^2-t+1");
  try {
    cyclotomic(6, Field::make(3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicDividesN);
  }
}

TEST(Poly, CyclotomicProductIdentity) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    const oracle::Field o(f->characteristic(), f->degree(), f->modulus());
    for (unsigned n = 1; n <= 30; ++n) {
      if (n % f->characteristic() == 0) continue;
      oracle::Vec prod{1};
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) prod = oracle::pmul(o, prod, cyclotomic(d, f).coeffs());
      EXPECT_EQ(prod, oracle::x_n_minus_1(o, n)) << "q=" << q << " n=" << n;
      EXPECT_EQ(*cyclotomic(n, f).degree(), phi(n));
      EXPECT_EQ(euler_phi(n), phi(n));
    }
  }
}

TEST(Poly, CyclotomicCoprimeToShorterPowers) {
  // Q_n and t^l - 1 are coprime for proper divisors l of n
  for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
    const auto f = Field::of_order(q);
    for (unsigned n = 2; n <= 30; ++n) {
      if (n % f->characteristic() == 0) continue;
      for (unsigned l = 1; l < n; ++l)
        if (n % l == 0) {
          EXPECT_EQ(*gcd(cyclotomic(n, f), Poly::x_pow_minus_one(f, l)).degree(), 0u);
        }
    }
  }
}

TEST(Poly, DividesExamples) {
  const auto f2 = Field::make(2, 1);
  const auto f7 = Field::make(7, 1);
  EXPECT_TRUE(divides(P(f7, "t^2+t+1"), Poly::x_pow_minus_one(f7, 3)));
  EXPECT_TRUE(divides(P(f2, "t^2+t+1"), pow(P(f2, "t+1"), 3) - Poly::constant(f2, 1)));
  // char 2 trap: t - 1 = t + 1 and t^2 + 1 = (t + 1)^2
  EXPECT_TRUE(divides(P(f2, "t-1"), P(f2, "t^2+1")));
  EXPECT_FALSE(divides(P(f7, "t-1"), P(f7, "t^2+1")));
}

TEST(Poly, FactorExamples) {
  const auto f2 = Field::make(2, 1);
  const auto f7 = Field::make(7, 1);
  EXPECT_EQ(irreducible_factors(cyclotomic(7, f2)), (std::vector<Poly>{P(f2, "t^3+t+1"), P(f2, "t^3+t^2+1")}));
  EXPECT_EQ(irreducible_factors(P(f2, "t^2+t+1")), (std::vector<Poly>{P(f2, "t^2+t+1")}));
  // degree first, then index: t+1 (index 8) before t-1 (index 13)
  EXPECT_EQ(irreducible_factors(P(f7, "t^2-1")), (std::vector<Poly>{P(f7, "t+1"), P(f7, "t-1")}));
  EXPECT_EQ(irreducible_factors(P(f2, "t^2+1")), (std::vector<Poly>{P(f2, "t+1"), P(f2, "t+1")}));
}

TEST(Poly, FactorizationCrossCheck) {
  // Every factor is irreducible by naive trial division and the product is f.
  const auto f = Field::make(3, 1);
  std::uint64_t s = 99;
  auto next = [&] { return (s = s * 6364136223846793005ULL + 1442695040888963407ULL) >> 33; };
  for (int it = 0; it < 200; ++it) {
    std::vector<Elem> c(2 + next() % 8);
    for (auto& x : c) x = static_cast<Elem>(next() % 3);
    c.back() = 1;
    const Poly g(f, c);
    Poly prod = Poly::constant(f, 1);
    for (const auto& h : irreducible_factors(g)) {
      EXPECT_TRUE(oracle::irreducible_prime(h.coeffs(), 3)) << to_string(h);
      EXPECT_TRUE(is_irreducible(h));
      prod = prod * h;
    }
    EXPECT_EQ(prod, g);
    EXPECT_EQ(is_irreducible(g), oracle::irreducible_prime(g.coeffs(), 3)) << to_string(g);
  }
}

TEST(Poly, DivisorsAndOrders) {
  const auto f2 = Field::make(2, 1);
  const auto xs = Poly::x_pow_minus_one(f2, 7);
  EXPECT_EQ(monic_divisors(xs).size(), 8u);
  for (const auto& d : monic_divisors(xs)) EXPECT_TRUE(divides(d, xs));
  EXPECT_EQ(order_of_t(P(f2, "t^2+t+1")), 3u);
  EXPECT_EQ(order_of_t(P(f2, "t^3+t+1")), 7u);
  EXPECT_FALSE(order_of_t(P(f2, "t^2+t")).has_value());
  // (t+1)^3 - 1 = t^3 + t^2 + t over F_2 and t^2+t+1 divides it
  EXPECT_EQ(order_of_t_plus_one(P(f2, "t^2+t+1")), 3u);
  EXPECT_FALSE(order_of_t_plus_one(P(f2, "t+1")).has_value());
  EXPECT_EQ(divisors(12), (std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12}));
}

TEST(Poly, ShiftAndPowmod) {
  const auto f = Field::make(5, 1);
  const auto h = P(f, "t^3+2*t+4");
  for (Elem c = 0; c < 5; ++c)
    for (Elem x = 0; x < 5; ++x) EXPECT_EQ(eval(shift(h, c), x), eval(h, f->add(x, c)));
  const auto m = P(f, "t^2+2");
  EXPECT_EQ(powmod(P(f, "t"), 13, m), pow(P(f, "t"), 13) % m);
}

TEST(Poly, ParseAndRender) {
  const auto f7 = Field::make(7, 1);
  const auto g = P(f7, "t^2-t+1");
  EXPECT_EQ(g.coeffs(), (std::vector<Elem>{1, 6, 1}));
  EXPECT_EQ(P(f7, to_string(g)), g);
  EXPECT_EQ(P(f7, "x^2 + 6x + 1"), g);
  EXPECT_EQ(to_string(Poly::zero(f7)), "0");
  const auto f4 = Field::make(2, 2);
  const auto h = P(f4, "t^2+2*t+1");
  EXPECT_EQ(P(f4, to_pretty(h)), h);
  EXPECT_THROW(P(f7, "t^^2"), Error);
}

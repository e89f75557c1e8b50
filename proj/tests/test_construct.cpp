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
#include "cppforge/linalg.hpp"
#include "oracle.hpp"

using namespace cppforge;

namespace {

Poly P(const FieldPtr& f, std::string_view s) { return parse_poly(s, f); }

oracle::Table raw(const PermTable& f) { return {f.table().begin(), f.table().end()}; }

NamedParams at(unsigned q) {
  NamedParams p;
  p.field = Field::of_order(q);
  return p;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::UnknownClaim;
}

}  // namespace

TEST(SigmaFromMatrix, Examples) {
  const auto f2 = Field::make(2, 1);
  EXPECT_TRUE(is_identity(sigma_from_matrix(Mat::identity(f2, 3))));
  const auto s = sigma_from_matrix(companion(cyclotomic(3, f2)));
  EXPECT_TRUE(s.bijective());
  EXPECT_TRUE(is_r_regular(s, 3));
  EXPECT_FALSE(sigma_from_matrix(Mat::from_ints(f2, {{1, 1}, {1, 1}})).bijective());
}

TEST(SigmaFromMatrix, MatchesOracle) {
  Rng rng(1);
  for (unsigned q : {2u, 3u, 4u, 9u}) {
    const auto f = Field::of_order(q);
    const oracle::Field o(f->characteristic(), f->degree(), f->modulus());
    for (int it = 0; it < 10; ++it) {
      Mat M(f, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) M(i, j) = static_cast<Elem>(rng.below(q));
      oracle::Mat om;
      for (const auto& row : M.rows()) om.emplace_back(row.begin(), row.end());
      EXPECT_EQ(raw(sigma_from_matrix(M)), oracle::table_of(o, om));
    }
  }
}

TEST(TauToTable, Examples) {
  const auto f4 = Field::make(2, 2);
  EXPECT_TRUE(is_identity(tau_to_table(TauSpec::identity(), f4, 2)));
  const std::vector<Elem> frob{0, 1, 3, 2};  // x -> x^2
  // every PP of F_4 fixing 0 is F_2-linear, so this one moves 0
  const std::vector<Elem> a1{1, 0, 2, 3};
  ASSERT_TRUE(is_pp_table(f4, a1));
  ASSERT_FALSE(is_additive_table(f4, a1));
  ASSERT_TRUE(is_additive_table(f4, frob));
  const auto t = tau_to_table(TauSpec::coordinate_wise({a1, {0, 1, 2, 3}}), f4, 2);
  EXPECT_TRUE(t.bijective());
  EXPECT_FALSE(is_additive(t));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = tau_to_table(random_additive_pp(f4, 2, seed), f4, 2);
    EXPECT_TRUE(a.bijective());
    EXPECT_TRUE(oracle::additive(raw(a), 2));
  }
  EXPECT_EQ(kind_of([&] { tau_to_table(TauSpec::coordinate_wise({{0, 0, 1, 2}, {0, 1, 2, 3}}), f4, 2); }),
            ErrorKind::InvalidSpec);
  EXPECT_EQ(kind_of([&] { tau_to_table(TauSpec::coordinate_wise({a1}), f4, 2); }), ErrorKind::InvalidSpec);
}

TEST(RandomAdditivePp, Contract) {
  const auto f = Field::make(3, 1);
  EXPECT_EQ(random_additive_pp(f, 3, 77), random_additive_pp(f, 3, 77));
  EXPECT_EQ(random_additive_pp(Field::make(2, 1), 1, 5).linear, Mat::identity(Field::make(2, 1), 1));
  for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(is_additive(tau_to_table(random_additive_pp(f, 3, s), f, 3)));
}

TEST(RandomPp, Kinds) {
  Rng rng(9);
  for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    for (int it = 0; it < 10; ++it) {
      EXPECT_TRUE(is_pp_table(f, random_pp(f, PpKind::Any, rng)));
      const auto na = random_pp(f, PpKind::NonAdditive, rng);
      EXPECT_TRUE(is_pp_table(f, na));
      EXPECT_FALSE(is_additive_table(f, na));
      const auto ad = random_pp(f, PpKind::Additive, rng);
      EXPECT_TRUE(is_additive_table(f, ad));
      if (f->characteristic() != 2) {
        const auto od = random_pp(f, PpKind::Odd, rng);
        EXPECT_TRUE(is_odd_table(f, od));
      }
    }
    const auto a = random_pp(f, PpKind::Any, rng);
    const auto ai = invert_table(a);
    for (Elem x = 0; x < q; ++x) EXPECT_EQ(ai[a[x]], x);
  }
}

TEST(PickH, Examples) {
  const auto f2 = Field::make(2, 1);
  EXPECT_EQ(pick_h(7, f2, HStrategy::IrreducibleFactor), P(f2, "t^3+t+1"));
  EXPECT_EQ(pick_h(3, f2, HStrategy::FullCyclotomic), P(f2, "t^2+t+1"));
  const auto q9 = pick_h(9, f2, HStrategy::Quotient);
  EXPECT_EQ(*q9.degree(), 8u);
  EXPECT_EQ(q9 * P(f2, "t-1"), Poly::x_pow_minus_one(f2, 9));
  const auto f5 = Field::make(5, 1);
  const auto w = pick_h(4, f5, HStrategy::ReducibleWitness);
  EXPECT_NE(eval(w, f5->from_int(-1)), 0u);
  EXPECT_EQ(kind_of([&] { pick_h(6, Field::make(3, 1), HStrategy::FullCyclotomic); }),
            ErrorKind::CharacteristicDividesR);
}

TEST(Build, Validation) {
  const auto f = Field::make(2, 1);
  ConstructionSpec s;
  s.field = f;
  s.r = 3;
  s.h = P(f, "t^2+t+1");
  s.M = companion(s.h);
  EXPECT_EQ(build(s), sigma_from_matrix(s.M));
  s.mode = Mode::Sandwich;
  s.tau2 = TauSpec::identity();
  EXPECT_EQ(build(s), sigma_from_matrix(s.M));
  s.tau2.reset();
  EXPECT_EQ(kind_of([&] { build(s); }), ErrorKind::InvalidSpec);
  s.mode = Mode::Conjugation;
  s.M = Mat::identity(f, 2);
  EXPECT_EQ(kind_of([&] { build(s); }), ErrorKind::InvalidSpec);
  s.M = Mat::identity(f, 3);
  EXPECT_EQ(kind_of([&] { build(s); }), ErrorKind::DimMismatch);
  s.M = Mat::identity(Field::make(3, 1), 2);
  EXPECT_EQ(kind_of([&] { build(s); }), ErrorKind::CtxMismatch);
}

TEST(Build, ConjugationPreservesCycles) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    for (const char* id : {"thm3.2", "thm3.3"})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        NamedParams p = at(q);
        p.h = P(f, q == 2 ? "t^3+t+1" : "t^2+t+1");
        if (q == 3) p.h = P(f, "t^2+1");
        p.seed = seed;
        p.matrix = seed % 2 ? MatrixChoice::RandomConjugate : MatrixChoice::Companion;
        const auto spec = named_construction(id, p);
        EXPECT_EQ(cycle_structure(build(spec)), cycle_structure(sigma_from_matrix(spec.M)));
      }
  }
}

TEST(Build, AdditiveTauCommutesWithPlusIdentity) {
  // additive tau: sigma + e = tau (sigma_M + e) tau^-1
  for (unsigned q : {2u, 3u, 4u}) {
    const auto f = Field::of_order(q);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      NamedParams p = at(q);
      p.h = P(f, "t^3+t+1");
      p.seed = seed;
      auto spec = named_construction("thm3.2", p);
      const auto lhs = add_pointwise(build(spec), PermTable::identity(f, 3));
      spec.M = spec.M + Mat::identity(f, 3);
      spec.h = char_poly(spec.M);
      EXPECT_EQ(lhs, build(spec)) << q << " " << seed;
    }
  }
}

TEST(Named, Prop41Instances) {
  const auto f4 = Field::make(2, 2);
  for (const auto& a1 : std::vector<std::vector<Elem>>{{0, 2, 1, 3}, {1, 0, 3, 2}, {3, 2, 0, 1}}) {
    NamedParams p = at(4);
    p.m = 2;
    p.a1 = a1;
    p.a2 = std::vector<Elem>{0, 1, 2, 3};
    const auto s = build(named_construction("p4.1.3", p));
    EXPECT_TRUE(is_cpp(s));
    EXPECT_TRUE(is_r_regular(s, 3));
    EXPECT_EQ(cycle_structure(s).fixed_points, 1u);
  }
  EXPECT_EQ(kind_of([] { named_construction("p4.1.3", at(3)); }), ErrorKind::HypothesisViolated);
  try {
    named_construction("p4.1.3", at(3));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("p != 3"), std::string::npos);
  }
}

TEST(Named, Prop42Instance) {
  NamedParams p = at(5);
  p.m = 2;
  const auto s = build(named_construction("p4.2.3", p));
  EXPECT_TRUE(is_cpp(s));
  EXPECT_TRUE(is_r_regular(s, 4));
}

TEST(Named, P43P45P410Examples) {
  const auto s3 = build(named_construction("p4.3", at(2)));
  EXPECT_EQ(s3.size(), 16u);
  EXPECT_TRUE(is_cpp(s3));
  EXPECT_TRUE(is_r_regular(s3, 5));
  const auto s5 = build(named_construction("p4.5", at(2)));
  EXPECT_EQ(s5.size(), 64u);
  EXPECT_TRUE(is_cpp(s5));
  EXPECT_TRUE(is_r_regular(s5, 7));
  NamedParams p = at(2);
  p.r = 9;
  const auto s10 = build(named_construction("p4.10", p));
  EXPECT_TRUE(is_cpp(s10));
  EXPECT_TRUE(is_identity(npower(s10, 9)));
  EXPECT_FALSE(is_r_regular(s10, 9));
  EXPECT_TRUE(cycle_structure(s10).cycles.count(3));
}

TEST(Named, SevenRegular) {
  for (const char* id : {"p4.6", "p4.7", "p4.8.1", "p4.8.2", "p4.9.1", "p4.9.2"}) {
    for (unsigned q : {2u, 4u}) {
      const auto s = build(named_construction(id, at(q)));
      EXPECT_TRUE(is_cpp(s)) << id << " q=" << q;
      EXPECT_TRUE(is_r_regular(s, 7)) << id << " q=" << q;
      EXPECT_EQ(cycle_structure(s).fixed_points, 1u);
    }
  }
}

TEST(Named, IdsAndFamilies) {
  const auto& ids = construction_ids();
  for (const char* id : {"thm3.1", "p3.1", "p3.9", "p4.1.3", "p4.1.3-mirror", "p4.4.2", "p4.10"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_EQ(construction_family("p4.10.3"), "p4.10");
  EXPECT_EQ(construction_family("p4.1.3"), "p4.1.3");
  EXPECT_EQ(kind_of([] { named_construction("p9.9", at(2)); }), ErrorKind::UnknownClaim);
}

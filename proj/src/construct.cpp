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

#include "cppforge/construct.hpp"

#include <algorithm>
#include <numeric>

#include "cppforge/error.hpp"

namespace cppforge {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorKind::HypothesisViolated, what); }

void require(bool ok, const std::string& what) {
  if (!ok) violated(what);
}

// Fills an F_p-linear table from the images of the prime basis p^k. Every
// index x > 0 is (x - p^k) + p^k with k its lowest nonzero base-p digit.
std::vector<Index> linear_fill(const VectorSpace& vs, const std::vector<Index>& images) {
  const Index p = vs.field()->characteristic();
  std::vector<Index> t(vs.size(), 0);
  for (Index x = 1; x < vs.size(); ++x) {
    Index pk = 1;
    std::size_t k = 0;
    while ((x / pk) % p == 0) {
      pk *= p;
      ++k;
    }
    t[x] = vs.add(t[x - pk], images[k]);
  }
  return t;
}

Poly from_desc(const FieldPtr& f, std::vector<std::int64_t> desc) {
  std::reverse(desc.begin(), desc.end());
  return Poly::from_ints(f, desc);
}

}  // namespace

TauSpec TauSpec::coordinate_wise(std::vector<std::vector<Elem>> maps) {
  TauSpec t;
  t.kind = Kind::CoordinateWise;
  t.maps = std::move(maps);
  return t;
}

TauSpec TauSpec::additive_linear(Mat m) {
  TauSpec t;
  t.kind = Kind::AdditiveLinear;
  t.linear = std::move(m);
  return t;
}

bool TauSpec::operator==(const TauSpec& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Identity: return true;
    case Kind::CoordinateWise: return maps == other.maps;
    case Kind::AdditiveLinear: return linear == other.linear;
  }
  return false;
}

bool ConstructionSpec::operator==(const ConstructionSpec& o) const {
  return claim == o.claim && *field == *o.field && r == o.r && h == o.h && M == o.M && tau1 == o.tau1 &&
         tau2 == o.tau2 && mode == o.mode;
}

PermTable sigma_from_matrix(const Mat& M) {
  const VectorSpace vs(M.field(), static_cast<unsigned>(M.dim()));
  const auto& f = *M.field();
  const unsigned m = f.degree();
  std::vector<Index> images;
  std::vector<Elem> v(M.dim());
  // Prime basis vector p^k is the field element p^(k mod m) in coordinate k / m.
  for (unsigned k = 0; k < vs.prime_dim(); ++k) {
    const std::size_t col = k / m;
    Elem g = 1;
    for (unsigned j = 0; j < k % m; ++j) g *= f.characteristic();
    for (std::size_t i = 0; i < M.dim(); ++i) v[i] = f.mul(M(i, col), g);
    images.push_back(vs.index(v));
  }
  return PermTable(M.field(), static_cast<unsigned>(M.dim()), linear_fill(vs, images));
}

PermTable tau_to_table(const TauSpec& spec, const FieldPtr& field, unsigned d) {
  switch (spec.kind) {
    case TauSpec::Kind::Identity:
      return PermTable::identity(field, d);
    case TauSpec::Kind::CoordinateWise: {
      if (spec.maps.size() != d) throw Error(ErrorKind::InvalidSpec, "coordinate-wise tau needs d maps");
      for (const auto& a : spec.maps) {
        if (!is_pp_table(field, a)) throw Error(ErrorKind::InvalidSpec, "coordinate map is not a PP of F_q");
      }
      return PermTable::from_fn(field, d, [&](std::span<const Elem> in, std::span<Elem> out) {
        for (unsigned i = 0; i < d; ++i) out[i] = spec.maps[i][in[i]];
      });
    }
    case TauSpec::Kind::AdditiveLinear: {
      const Mat& L = spec.linear;
      const VectorSpace vs(field, d);
      if (!L.field() || L.field()->degree() != 1 || L.field()->characteristic() != field->characteristic() ||
          L.dim() != vs.prime_dim()) {
        throw Error(ErrorKind::InvalidSpec, "additive tau needs an (m d) x (m d) matrix over F_p");
      }
      if (det(L) == 0) throw Error(ErrorKind::InvalidSpec, "additive tau matrix is singular");
      std::vector<Index> images;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        Index x = 0;
        Index pk = 1;
        for (std::size_t i = 0; i < L.dim(); ++i) {
          x += L(i, k) * pk;
          pk *= field->characteristic();
        }
        images.push_back(x);
      }
      return PermTable(field, d, linear_fill(vs, images));
    }
  }
  throw Error(ErrorKind::InvalidSpec, "unknown tau kind");
}

PermTable build(const ConstructionSpec& spec) {
  if (!spec.field || !spec.M.field() || !(*spec.field == *spec.M.field())) {
    throw Error(ErrorKind::CtxMismatch, "matrix is not over the construction field");
  }
  const unsigned d = spec.dim();
  if (spec.h.degree() != std::optional<std::size_t>(d)) {
    throw Error(ErrorKind::DimMismatch, "deg h must equal the matrix dimension");
  }
  if (!(char_poly(spec.M) == spec.h)) {
    throw Error(ErrorKind::InvalidSpec, "M does not have characteristic polynomial h");
  }
  if ((spec.mode == Mode::Sandwich) != spec.tau2.has_value()) {
    throw Error(ErrorKind::InvalidSpec, "tau2 is stored exactly in sandwich mode");
  }
  const PermTable sigma = sigma_from_matrix(spec.M);
  const PermTable t1 = tau_to_table(spec.tau1, spec.field, d);
  const PermTable t2 = spec.mode == Mode::Conjugation ? invert(t1) : tau_to_table(*spec.tau2, spec.field, d);
  return compose(t1, compose(sigma, t2));
}

Poly pick_h(std::uint32_t r, const FieldPtr& field, HStrategy strategy, const std::optional<Poly>& explicit_h) {
  if (r == 0 || r % field->characteristic() == 0) {
    throw Error(ErrorKind::CharacteristicDividesR, "r = " + std::to_string(r) + " is not prime to p");
  }
  switch (strategy) {
    case HStrategy::FullCyclotomic:
      return cyclotomic(r, field);
    case HStrategy::IrreducibleFactor: {
      if (r == 1) return cyclotomic(1, field);
      return irreducible_factors(cyclotomic(r, field)).front();
    }
    case HStrategy::Quotient:
      return exact_div(Poly::x_pow_minus_one(field, r), Poly::from_ints(field, {-1, 1}));
    case HStrategy::ReducibleWitness: {
      const Poly lin = Poly::from_ints(field, {r % 2 == 1 ? -1 : 1, 1});
      return exact_div(Poly::x_pow_minus_one(field, r), lin);
    }
    case HStrategy::Explicit:
      if (!explicit_h) throw Error(ErrorKind::InvalidSpec, "explicit strategy needs h");
      if (!explicit_h->is_monic()) throw Error(ErrorKind::NotMonic, "h must be monic");
      return *explicit_h;
  }
  throw Error(ErrorKind::InvalidSpec, "unknown strategy");
}

TauSpec random_additive_pp(const FieldPtr& field, unsigned d, std::uint64_t seed) {
  Rng rng(seed);
  const FieldPtr fp = Field::make(field->characteristic(), 1);
  return TauSpec::additive_linear(random_invertible(fp, std::size_t{field->degree()} * d, rng));
}

bool is_pp_table(const FieldPtr& field, const std::vector<Elem>& a) {
  if (a.size() != field->order()) return false;
  std::vector<char> seen(a.size(), 0);
  for (Elem y : a) {
    if (y >= a.size() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool is_additive_table(const FieldPtr& field, const std::vector<Elem>& a) {
  const auto& f = *field;
  for (Elem x = 0; x < f.order(); ++x)
    for (Elem y = 0; y < f.order(); ++y)
      if (a[f.add(x, y)] != f.add(a[x], a[y])) return false;
  return true;
}

bool is_odd_table(const FieldPtr& field, const std::vector<Elem>& a) {
  const auto& f = *field;
  for (Elem x = 0; x < f.order(); ++x)
    if (a[f.neg(x)] != f.neg(a[x])) return false;
  return true;
}

std::vector<Elem> invert_table(const std::vector<Elem>& a) {
  std::vector<Elem> inv(a.size());
  for (Elem x = 0; x < a.size(); ++x) inv[a[x]] = x;
  return inv;
}

std::vector<Elem> random_pp(const FieldPtr& field, PpKind kind, Rng& rng) {
  const auto& f = *field;
  std::vector<Elem> a(f.order());
  std::iota(a.begin(), a.end(), Elem{0});
  switch (kind) {
    case PpKind::Any:
      rng.shuffle(std::span<Elem>(a));
      return a;
    case PpKind::NonAdditive:
      // x + 1 is never additive, so the loop ends quickly for every q.
      do {
        std::iota(a.begin(), a.end(), Elem{0});
        rng.shuffle(std::span<Elem>(a));
      } while (is_additive_table(field, a));
      return a;
    case PpKind::Additive: {
      const FieldPtr fp = Field::make(f.characteristic(), 1);
      const Mat L = random_invertible(fp, f.degree(), rng);
      for (Elem x = 0; x < f.order(); ++x) {
        const auto dig = f.digits(x);
        const auto img = apply(L, std::span<const Elem>(dig.data(), dig.size()));
        a[x] = f.from_digits(std::vector<std::uint32_t>(img.begin(), img.end()));
      }
      return a;
    }
    case PpKind::Odd: {
      if (f.characteristic() == 2) return random_pp(field, PpKind::Any, rng);
      // Pair x with -x; permute the pair representatives and pick signs.
      std::vector<Elem> reps;
      for (Elem x = 1; x < f.order(); ++x)
        if (x < f.neg(x)) reps.push_back(x);
      std::vector<Elem> img = reps;
      rng.shuffle(std::span<Elem>(img));
      a[0] = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const Elem y = rng.below(2) ? img[i] : f.neg(img[i]);
        a[reps[i]] = y;
        a[f.neg(reps[i])] = f.neg(y);
      }
      return a;
    }
  }
  return a;
}

namespace {

const std::vector<std::string> kConstructions = {
    "thm3.1", "thm3.2", "thm3.3", "p3.1",   "p3.2",   "p3.3",   "p3.4",   "p3.5",
    "p3.6",   "p3.7",   "p3.8",   "p3.9",   "p4.1.1", "p4.1.2", "p4.1.3", "p4.1.3-mirror",
    "p4.1.4", "p4.2.1", "p4.2.2", "p4.2.3", "p4.3",   "p4.4.1", "p4.4.2", "p4.4.3",
    "p4.5",   "p4.6",   "p4.7",   "p4.8.1", "p4.8.2", "p4.9.1", "p4.9.2", "p4.10",
};

struct Ctx {
  const NamedParams& params;
  FieldPtr field;
  Rng rng;

  std::uint32_t p() const { return field->characteristic(); }

  std::vector<Elem> identity_map() const {
    std::vector<Elem> e(field->order());
    std::iota(e.begin(), e.end(), Elem{0});
    return e;
  }

  // Given map if present (validated), otherwise a seeded draw of the kind.
  std::vector<Elem> pp(const std::optional<std::vector<Elem>>& given, PpKind kind, const char* name) {
    if (given) {
      require(is_pp_table(field, *given), std::string(name) + " is not a PP of F_q");
      if (kind == PpKind::Additive) require(is_additive_table(field, *given), std::string(name) + " must be additive");
      if (kind == PpKind::Odd) require(is_odd_table(field, *given), std::string(name) + " must satisfy a(-x) = -a(x)");
      return *given;
    }
    return random_pp(field, kind, rng);
  }

  // a_i fixed to the identity by the statement.
  std::vector<Elem> forced_identity(const std::optional<std::vector<Elem>>& given, const char* name) {
    if (given) require(*given == identity_map(), std::string(name) + " must be the identity");
    return identity_map();
  }

  Elem free_entry() {
    const Elem m = params.m.value_or(1);
    require(field->contains(m) && m != 0, "m must lie in F_q^*");
    return m;
  }

  Mat matrix_for(const Poly& h) {
    const Mat c = companion(h);
    if (params.matrix == MatrixChoice::Companion) return c;
    return random_similar(c, rng);
  }

  Mat mat(const std::vector<std::vector<Elem>>& rows) const { return Mat::from_rows(field, rows); }

  Elem el(std::int64_t k) const { return field->from_int(k); }

  std::uint32_t need_r() const {
    if (!params.r) throw Error(ErrorKind::InvalidSpec, "this construction needs r");
    return *params.r;
  }

  Poly need_h() const {
    if (!params.h) throw Error(ErrorKind::InvalidSpec, "this construction needs h");
    require(params.h->is_monic() && params.h->degree().value_or(0) > 0, "h must be monic of positive degree");
    require(*params.h->field() == *field, "h must have coefficients in F_q");
    return *params.h;
  }

  // tau = (a_1(x_1), ..., a_d(x_d)) with the listed positions filled.
  static TauSpec coords(std::size_t d, const std::vector<Elem>& identity,
                        std::vector<std::pair<std::size_t, std::vector<Elem>>> at) {
    std::vector<std::vector<Elem>> maps(d, identity);
    for (auto& [i, a] : at) maps[i] = std::move(a);
    return TauSpec::coordinate_wise(std::move(maps));
  }
};

ConstructionSpec two_by_two(Ctx& c, const std::string& id, std::uint32_t r, const Poly& h, Mat M,
                            std::vector<Elem> a1, std::vector<Elem> a2) {
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.r = r;
  s.h = h;
  s.M = std::move(M);
  s.tau1 = TauSpec::coordinate_wise({std::move(a1), std::move(a2)});
  return s;
}

ConstructionSpec family_4_1_to_4_4(Ctx& c, const std::string& id) {
  const auto& prm = c.params;
  const auto p = c.p();
  if (id.rfind("p4.1", 0) == 0) {
    require(p != 3, "p != 3");
    const Poly h = cyclotomic(3, c.field);
    if (id == "p4.1.1" || id == "p4.1.2") {
      if (id == "p4.1.2") require(p == 2, "p = 2");
      auto a1 = c.pp(prm.a1, PpKind::Additive, "a1");
      auto a2 = c.pp(prm.a2, PpKind::Additive, "a2");
      return two_by_two(c, id, 3, h, c.matrix_for(h), std::move(a1), std::move(a2));
    }
    if (id == "p4.1.3" || id == "p4.1.3-mirror") {
      const Elem m = c.free_entry();
      const auto& f = *c.field;
      Mat M = c.mat({{0, m}, {f.neg(f.inv(m)), c.el(-1)}});
      if (id == "p4.1.3") {
        auto a1 = c.pp(prm.a1, PpKind::NonAdditive, "a1");
        return two_by_two(c, id, 3, h, std::move(M), std::move(a1), c.forced_identity(prm.a2, "a2"));
      }
      auto a1 = c.forced_identity(prm.a1, "a1");
      auto a2 = c.pp(prm.a2, PpKind::NonAdditive, "a2");
      return two_by_two(c, id, 3, h, std::move(M), std::move(a1), std::move(a2));
    }
    // p4.1.4
    auto a1 = c.pp(prm.a1, PpKind::NonAdditive, "a1");
    Mat M = c.mat({{c.el(-1), 1}, {c.el(-1), 0}});
    return two_by_two(c, id, 3, h, std::move(M), std::move(a1), c.forced_identity(prm.a2, "a2"));
  }
  if (id.rfind("p4.2", 0) == 0) {
    require(p != 2, "p != 2");
    const Poly h = cyclotomic(4, c.field);
    if (id == "p4.2.1") {
      auto a1 = c.pp(prm.a1, PpKind::Additive, "a1");
      auto a2 = c.pp(prm.a2, PpKind::Additive, "a2");
      return two_by_two(c, id, 4, h, c.matrix_for(h), std::move(a1), std::move(a2));
    }
    if (id == "p4.2.2") {
      auto a = c.pp(prm.a1, PpKind::Odd, "a");
      if (prm.a2) require(*prm.a2 == a, "a1 = a2");
      return two_by_two(c, id, 4, h, companion(h), a, a);
    }
    const Elem m = c.free_entry();
    const auto& f = *c.field;
    auto a1 = c.pp(prm.a1, PpKind::NonAdditive, "a1");
    Mat M = c.mat({{c.el(-1), m}, {f.neg(f.mul(c.el(2), f.inv(m))), 1}});
    return two_by_two(c, id, 4, h, std::move(M), std::move(a1), c.forced_identity(prm.a2, "a2"));
  }
  // p4.4.*
  require(p != 2 && p != 3, "p != 2, 3");
  const Poly h = cyclotomic(6, c.field);
  if (id == "p4.4.1") {
    auto a1 = c.pp(prm.a1, PpKind::Additive, "a1");
    auto a2 = c.pp(prm.a2, PpKind::Additive, "a2");
    return two_by_two(c, id, 6, h, c.matrix_for(h), std::move(a1), std::move(a2));
  }
  auto a1 = c.pp(prm.a1, PpKind::NonAdditive, "a1");
  auto a2 = c.forced_identity(prm.a2, "a2");
  if (id == "p4.4.2") return two_by_two(c, id, 6, h, companion(h), std::move(a1), std::move(a2));
  const Elem m = c.free_entry();
  const auto& f = *c.field;
  Mat M = c.mat({{c.el(-1), m}, {f.neg(f.mul(c.el(3), f.inv(m))), 2 % p}});
  return two_by_two(c, id, 6, h, std::move(M), std::move(a1), std::move(a2));
}

// tau = (a(x_1), x_2, ..., x_d) conjugation with the companion of Q_r.
ConstructionSpec single_coordinate(Ctx& c, const std::string& id, std::uint32_t r) {
  require(c.p() != r, "p != " + std::to_string(r));
  const Poly h = cyclotomic(r, c.field);
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.r = r;
  s.h = h;
  s.M = companion(h);
  auto a = c.pp(c.params.a1, PpKind::NonAdditive, "a");
  s.tau1 = Ctx::coords(r - 1, c.identity_map(), {{0, std::move(a)}});
  return s;
}

ConstructionSpec seven_regular(Ctx& c, const std::string& id) {
  require(c.p() == 2, "p = 2");
  // h = t^3 + t^2 + 1 for 4.6 / 4.8, t^3 + t + 1 for 4.7 / 4.9.
  const bool first = id == "p4.6" || id.rfind("p4.8", 0) == 0;
  const Poly h = first ? from_desc(c.field, {1, 1, 0, 1}) : from_desc(c.field, {1, 0, 1, 1});
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.r = 7;
  s.h = h;
  if (id == "p4.6" || id == "p4.7") {
    s.M = c.matrix_for(h);
    s.tau1 = random_additive_pp(c.field, 3, c.rng.next());
    return s;
  }
  if (id == "p4.8.1" || id == "p4.9.1") {
    s.M = companion(h);
  } else if (id == "p4.8.2") {
    s.M = c.mat({{0, 1, 1}, {1, 0, 0}, {1, 0, 1}});
  } else {
    s.M = c.mat({{1, 1, 1}, {1, 0, 0}, {1, 0, 1}});
  }
  auto a1 = c.pp(c.params.a1, PpKind::NonAdditive, "a1");
  std::vector<Elem> a2;
  if (c.params.a2) {
    a2 = c.pp(c.params.a2, PpKind::Any, "a2");
  } else if (c.params.pair == PairMode::Inverse) {
    a2 = invert_table(a1);
  } else {
    a2 = random_pp(c.field, PpKind::NonAdditive, c.rng);
  }
  s.mode = Mode::Sandwich;
  s.tau1 = Ctx::coords(3, c.identity_map(), {{1, std::move(a1)}});
  s.tau2 = Ctx::coords(3, c.identity_map(), {{1, std::move(a2)}});
  return s;
}

ConstructionSpec odd_r(Ctx& c, const std::string& id) {
  const std::uint32_t r = c.need_r();
  require(r >= 3 && r % 2 == 1, "r odd and r >= 3");
  require(std::gcd(r, c.p()) == 1, "gcd(r, p) = 1");
  const Poly h = pick_h(r, c.field, HStrategy::Quotient);
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.r = r;
  s.h = h;
  s.M = companion(h);
  auto a1 = c.pp(c.params.a1, PpKind::NonAdditive, "a1");
  std::vector<Elem> a2;
  if (c.params.a2) {
    a2 = c.pp(c.params.a2, PpKind::Any, "a2");
  } else if (c.params.pair == PairMode::Inverse) {
    a2 = invert_table(a1);
  } else {
    a2 = random_pp(c.field, PpKind::NonAdditive, c.rng);
  }
  s.mode = Mode::Sandwich;
  s.tau1 = Ctx::coords(r - 1, c.identity_map(), {{0, std::move(a1)}});
  s.tau2 = Ctx::coords(r - 1, c.identity_map(), {{0, std::move(a2)}});
  return s;
}

// tau of the requested flavour on all d coordinates.
TauSpec any_tau(Ctx& c, char flavour, unsigned d) {
  if (flavour == 'l') return TauSpec::identity();
  if (flavour == 'a') return random_additive_pp(c.field, d, c.rng.next());
  std::vector<std::vector<Elem>> maps;
  for (unsigned i = 0; i < d; ++i) maps.push_back(random_pp(c.field, PpKind::NonAdditive, c.rng));
  return TauSpec::coordinate_wise(std::move(maps));
}

ConstructionSpec theorem(Ctx& c, const std::string& id) {
  const Poly h = c.need_h();
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.h = h;
  s.M = c.matrix_for(h);
  if (id == "thm3.1") return s;
  const char flavour = id == "thm3.2" ? 'a' : 'g';
  const unsigned d = static_cast<unsigned>(*h.degree());
  s.tau1 = any_tau(c, flavour, d);
  if (c.params.pair == PairMode::Independent) {
    s.mode = Mode::Sandwich;
    s.tau2 = any_tau(c, flavour, d);
  }
  return s;
}

ConstructionSpec section_three(Ctx& c, const std::string& id) {
  const std::uint32_t r = c.need_r();
  const int n = id.back() - '0';  // 1..9
  const int kind = (n - 1) % 3;   // 0 prime, 1 regular composite, 2 non-regular composite
  const char flavour = n <= 3 ? 'l' : n <= 6 ? 'a' : 'g';
  require(r > 1 && std::gcd(r, c.p()) == 1, "gcd(r, p) = 1");
  if (kind == 0) {
    require(r % 2 == 1 && is_prime(r), "r is an odd prime");
  } else {
    require(r >= 4 && !is_prime(r), "r is composite");
  }
  const HStrategy def = kind == 0 ? HStrategy::IrreducibleFactor
                        : kind == 1 ? HStrategy::IrreducibleFactor
                                    : HStrategy::ReducibleWitness;
  Poly h = c.params.h ? c.need_h() : pick_h(r, c.field, def);
  require(h.degree().value_or(0) > 0, "deg h > 0");
  const Poly xr = Poly::x_pow_minus_one(c.field, r);
  const Poly qr = cyclotomic(r, c.field);
  if (kind == 0) {
    require(divides(h, xr), "h | t^r - 1");
    require(!(h == Poly::from_ints(c.field, {-1, 1})), "h != t - 1");
  } else if (kind == 1) {
    require(divides(h, qr), "h | Q_r");
  } else {
    require(divides(h, xr), "h | t^r - 1");
    require(!is_irreducible(h), "h is reducible");
    require(gcd(h, exact_div(xr, qr)).degree().value_or(0) > 0, "gcd(h, (t^r - 1)/Q_r) != 1");
    require(eval(h, c.field->from_int(-1)) != 0, "h(-1) != 0");
    require(c.params.matrix == MatrixChoice::Companion, "M is the companion matrix of h");
  }
  ConstructionSpec s;
  s.claim = id;
  s.field = c.field;
  s.r = r;
  s.M = c.matrix_for(h);
  s.h = std::move(h);
  s.tau1 = any_tau(c, flavour, s.dim());
  return s;
}

}  // namespace

const std::vector<std::string>& construction_ids() { return kConstructions; }

std::string construction_family(std::string_view id) {
  const std::string s(id);
  if (std::find(kConstructions.begin(), kConstructions.end(), s) != kConstructions.end()) return s;
  for (const char* fam : {"thm3.1", "thm3.2", "thm3.3"}) {
    const std::string f(fam);
    if (s.size() == f.size() + 2 && s.rfind(f + ".", 0) == 0 && s.back() >= '1' && s.back() <= '4') {
      if (f == "thm3.3" && s.back() > '2') break;
      return f;
    }
  }
  if (s == "p4.10.1" || s == "p4.10.2" || s == "p4.10.3") return "p4.10";
  throw Error(ErrorKind::UnknownClaim, "unknown claim '" + s + "'");
}

ConstructionSpec named_construction(std::string_view id, const NamedParams& params) {
  const std::string fam = construction_family(id);
  if (!params.field) throw Error(ErrorKind::InvalidSpec, "construction needs a field");
  Ctx c{params, params.field, Rng(params.seed)};
  if (fam.rfind("thm", 0) == 0) return theorem(c, fam);
  if (fam.rfind("p3.", 0) == 0) return section_three(c, fam);
  if (fam == "p4.3") return single_coordinate(c, fam, 5);
  if (fam == "p4.5") return single_coordinate(c, fam, 7);
  if (fam == "p4.10") return odd_r(c, fam);
  if (fam == "p4.6" || fam == "p4.7" || fam.rfind("p4.8", 0) == 0 || fam.rfind("p4.9", 0) == 0) {
    return seven_regular(c, fam);
  }
  return family_4_1_to_4_4(c, fam);
}

}  // namespace cppforge

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

#include "cppforge/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cppforge/error.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

namespace {

// Tables are built for fields up to this order.
constexpr std::uint64_t kTableOrder = std::uint64_t{1} << 16;
constexpr std::uint64_t kAddTableOrder = 256;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t m) {
  auto prime = Field::make(p, 1);
  const std::uint64_t lo = ipow(p, m);
  for (std::uint64_t v = lo; v < 2 * lo; ++v) {
    std::vector<Elem> c(m + 1);
    std::uint64_t x = v;
    for (std::uint32_t k = 0; k <= m; ++k) {
      c[k] = static_cast<Elem>(x % p);
      x /= p;
    }
    if (c[0] == 0) continue;  // divisible by t
    if (is_irreducible(Poly(prime, c))) return {c.begin(), c.end()};
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto fs = prime_factors(q);
  if (fs.size() != 1) return std::nullopt;
  std::uint32_t m = 0;
  while (q > 1) {
    q /= fs[0];
    ++m;
  }
  return std::make_pair(static_cast<std::uint32_t>(fs[0]), m);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  // Fields are immutable, so equal requests share one instance.
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::optional<std::vector<std::uint32_t>>>;
  static std::mutex mu;
  static std::map<Key, FieldPtr> cache;
  Key key{p, m, modulus};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  FieldPtr made = make_uncached(p, m, std::move(modulus));
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(made)).first->second;
}

FieldPtr Field::make_uncached(std::uint32_t p, std::uint32_t m,
                              std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  if (ipow(p, m) > kMaxOrder) {
    throw Error(ErrorKind::SizeCap, "field order " + std::to_string(p) + "^" +
                                        std::to_string(m) + " exceeds the supported maximum");
  }
  if (m == 1) {
    if (modulus && !modulus->empty()) {
      // A degree-1 modulus t - c is accepted but carries no information.
      if (modulus->size() != 2) {
        throw Error(ErrorKind::DegreeMismatch, "modulus degree differs from m");
      }
      if ((*modulus)[1] % p != 1) throw Error(ErrorKind::NotMonic, "modulus must be monic");
    }
    return std::make_shared<const Field>(Private{}, p, 1, std::vector<std::uint32_t>{}, true);
  }
  auto canonical = canonical_modulus(p, m);
  if (!modulus) {
    return std::make_shared<const Field>(Private{}, p, m, std::move(canonical), true);
  }
  auto mod = *modulus;
  if (mod.size() != m + 1) {
    throw Error(ErrorKind::DegreeMismatch, "modulus has " + std::to_string(mod.size()) +
                                               " coefficients, expected " + std::to_string(m + 1));
  }
  for (auto& c : mod) c %= p;
  if (mod.back() != 1) throw Error(ErrorKind::NotMonic, "modulus must be monic");
  auto prime = make(p, 1);
  if (!is_irreducible(Poly(prime, {mod.begin(), mod.end()}))) {
    throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  }
  const bool is_canonical = mod == canonical;
  return std::make_shared<const Field>(Private{}, p, m, std::move(mod), is_canonical);
}

FieldPtr Field::of_order(std::uint64_t q) {
  auto pm = prime_power(q);
  if (!pm) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make(pm->first, pm->second);
}

FieldPtr Field::parse(std::string_view spec) {
  std::string_view head = spec;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    head = spec.substr(0, slash);
    std::string_view rest = spec.substr(slash + 1);
    std::vector<std::uint32_t> coeffs;
    while (true) {
      auto comma = rest.find(',');
      coeffs.push_back(parse_uint(rest.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    modulus = std::move(coeffs);
  }
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret), "characteristic");
    m = parse_uint(head.substr(caret + 1), "degree");
  } else {
    p = parse_uint(head, "characteristic");
  }
  return make(p, m, std::move(modulus));
}

Field::Field(Private, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
             bool canonical)
    : p_(p),
      m_(m),
      q_(static_cast<std::uint32_t>(ipow(p, m))),
      modulus_(std::move(modulus)),
      canonical_(canonical) {
  build_tables();
}

std::string Field::spec() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(m_);
  if (!canonical_) {
    s += '/';
    for (std::size_t k = 0; k < modulus_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(modulus_[k]);
    }
  }
  return s;
}

Elem Field::from_int(std::int64_t k) const noexcept {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(m_);
  for (std::uint32_t k = 0; k < m_; ++k) {
    d[k] = a % p_;
    a /= p_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& digits) const {
  Elem a = 0;
  for (std::size_t k = digits.size(); k-- > 0;) a = a * p_ + digits[k] % p_;
  return a;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> v(q_);
  for (Elem i = 0; i < q_; ++i) v[i] = i;
  return v;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem r = 0;
  Elem place = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_.empty()) return add_[std::size_t{a} * q_ + b];
  return add_digits(a, b);
}

Elem Field::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (!neg_.empty()) return neg_[a];
  Elem r = 0;
  Elem place = 1;
  for (std::uint32_t k = 0; k < m_; ++k) {
    Elem d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return r;
}

Elem Field::mul_schoolbook(Elem a, Elem b) const {
  if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  }
  for (auto& c : prod) c %= p_;
  // Reduce with t^m = -(c_0 + ... + c_{m-1} t^{m-1}).
  for (std::size_t k = prod.size(); k-- > m_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (std::uint32_t j = 0; j < m_; ++j) {
      const std::uint64_t sub = lead * modulus_[j] % p_;
      prod[k - m_ + j] = (prod[k - m_ + j] + p_ - sub) % p_;
    }
  }
  Elem r = 0;
  for (std::uint32_t k = m_; k-- > 0;) r = r * p_ + static_cast<Elem>(prod[k]);
  return r;
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  if (m_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  return mul_schoolbook(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!log_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

Elem Field::pow(Elem a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t e = (std::uint64_t{log_[a]} * (static_cast<std::uint64_t>(n) % (q_ - 1))) %
                            (q_ - 1);
    return exp_[e];
  }
  Elem r = 1;
  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

void Field::build_tables() {
  // Primitive element: smallest index whose order is exactly q - 1.
  const std::uint64_t n = q_ - 1;
  const auto fs = prime_factors(n);
  auto slow_pow = [this](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_schoolbook(r, a);
      a = mul_schoolbook(a, a);
      e >>= 1;
    }
    return r;
  };
  primitive_ = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto f : fs) {
        if (slow_pow(g, n / f) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }
  if (q_ <= kTableOrder) {
    log_.assign(q_, 0);
    exp_.assign(2 * n + 1, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_schoolbook(x, primitive_);
    }
    if (x != 1) throw std::logic_error("primitive element has wrong order");
    for (std::uint64_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];
    if (p_ != 2 && m_ > 1) {
      neg_.resize(q_);
      for (Elem a = 0; a < q_; ++a) {
        Elem r = 0;
        Elem place = 1;
        Elem t = a;
        for (std::uint32_t k = 0; k < m_; ++k) {
          Elem d = t % p_;
          r += (d == 0 ? 0 : p_ - d) * place;
          place *= p_;
          t /= p_;
        }
        neg_[a] = r;
      }
    }
  }
  if (p_ != 2 && m_ > 1 && q_ <= kAddTableOrder) {
    add_.resize(std::size_t{q_} * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
    }
  }
}

// ---------------------------------------------------------------------------

FieldExtension::FieldExtension(FieldPtr sub, std::uint32_t d) : sub_(std::move(sub)), d_(d) {
  if (d_ == 0) throw Error(ErrorKind::DegreeMismatch, "relative degree must be >= 1");
  big_ = Field::make(sub_->characteristic(), sub_->degree() * d_);
  init();
}

FieldExtension::FieldExtension(FieldPtr sub, FieldPtr big) : sub_(std::move(sub)), big_(std::move(big)) {
  if (sub_->characteristic() != big_->characteristic() || big_->degree() % sub_->degree() != 0) {
    throw Error(ErrorKind::NotASubfieldRelation,
                "F_" + std::to_string(sub_->order()) + " is not a subfield of F_" +
                    std::to_string(big_->order()));
  }
  d_ = big_->degree() / sub_->degree();
  init();
}

void FieldExtension::init() {
  const std::uint32_t q = sub_->order();
  const std::uint32_t p = sub_->characteristic();
  // Image of the subfield generator.
  Elem rho = 0;
  if (sub_->degree() > 1) {
    const auto& mod = sub_->modulus();
    bool found = false;
    for (Elem x = 0; x < big_->order() && !found; ++x) {
      Elem acc = 0;
      for (std::size_t k = mod.size(); k-- > 0;) acc = big_->add(big_->mul(acc, x), mod[k]);
      if (acc == 0) {
        rho = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subfield modulus has no root in the extension");
  }
  embed_.resize(q);
  for (Elem a = 0; a < q; ++a) {
    if (sub_->degree() == 1) {
      embed_[a] = a;  // prime subfield indices coincide
      continue;
    }
    auto dg = sub_->digits(a);
    Elem acc = 0;
    for (std::size_t k = dg.size(); k-- > 0;) acc = big_->add(big_->mul(acc, rho), dg[k]);
    embed_[a] = acc;
  }
  restrict_.assign(big_->order(), -1);
  for (Elem a = 0; a < q; ++a) {
    if (restrict_[embed_[a]] != -1) throw std::logic_error("subfield embedding is not injective");
    restrict_[embed_[a]] = a;
  }
  (void)p;
}

Elem FieldExtension::restrict(Elem big_elem) const {
  if (big_elem >= restrict_.size() || restrict_[big_elem] < 0) {
    throw Error(ErrorKind::NotASubfieldRelation,
                "element " + std::to_string(big_elem) + " is not in the subfield");
  }
  return static_cast<Elem>(restrict_[big_elem]);
}

bool FieldExtension::in_subfield(Elem big_elem) const {
  return big_elem < restrict_.size() && restrict_[big_elem] >= 0;
}

Elem FieldExtension::trace(Elem x) const {
  const std::int64_t q = sub_->order();
  Elem acc = 0;
  Elem term = x;
  for (std::uint32_t i = 0; i < d_; ++i) {
    acc = big_->add(acc, term);
    term = big_->pow(term, q);
  }
  return restrict(acc);
}

}  // namespace cppforge

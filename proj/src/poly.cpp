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

#include "cppforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "cppforge/error.hpp"

namespace cppforge {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field() || !(*a.field() == *b.field())) {
    throw Error(ErrorKind::CtxMismatch, "polynomials over different fields");
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  }
  return false;
}

// Candidates beyond this many are outside the intended working range.
constexpr std::uint64_t kTrialLimit = std::uint64_t{1} << 22;

std::uint64_t checked_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kTrialLimit) return kTrialLimit + 1;
    r *= b;
  }
  return r;
}

Poly monic_candidate(const FieldPtr& field, std::size_t k, std::uint64_t v) {
  std::vector<Elem> c(k + 1);
  const std::uint64_t q = field->order();
  for (std::size_t i = 0; i < k; ++i) {
    c[i] = static_cast<Elem>(v % q);
    v /= q;
  }
  c[k] = 1;
  return Poly(field, std::move(c));
}

// Splits g, a product of distinct monic irreducibles of degree k, by trial
// division over monic candidates of degree k in index order.
std::vector<Poly> equal_degree_split(Poly g, std::size_t k) {
  if (*g.degree() == k) return {g};
  const auto& field = g.field();
  const std::uint64_t count = checked_pow(field->order(), k);
  if (count > kTrialLimit) {
    throw Error(ErrorKind::SizeCap, "equal-degree split needs too many trial divisors");
  }
  std::vector<Poly> out;
  for (std::uint64_t v = 0; v < count && *g.degree() > 0; ++v) {
    Poly cand = monic_candidate(field, k, v);
    auto [quo, rem] = divmod(g, cand);
    if (rem.is_zero()) {
      out.push_back(cand);
      g = quo;
    }
  }
  if (*g.degree() != 0) throw std::logic_error("equal-degree split left a cofactor");
  return out;
}

std::optional<std::uint64_t> multiplicative_order(const Poly& f, const Poly& base) {
  if (f.is_zero()) return std::nullopt;
  if (*f.degree() == 0) return 1;
  if (!(*gcd(base, f).degree() == 0)) return std::nullopt;
  const Poly one = Poly::constant(f.field(), 1);
  const std::uint64_t bound = checked_pow(f.field()->order(), *f.degree());
  Poly cur = base % f;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (cur == one) return n;
    cur = (cur * base) % f;
  }
  throw std::logic_error("unit has no finite order");
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw Error(ErrorKind::CtxMismatch, "polynomial without a field");
  for (Elem c : c_) {
    if (!field_->contains(c)) {
      throw Error(ErrorKind::InvalidSpec, "coefficient " + std::to_string(c) + " outside F_" +
                                              std::to_string(field_->order()));
    }
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(FieldPtr field, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::x_pow_minus_one(FieldPtr field, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  v[0] = field->sub(v[0], 1);
  if (n == 0) v[0] = 0;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field->from_int(c));
  return Poly(std::move(field), std::move(v));
}

std::uint64_t Poly::index() const {
  std::uint64_t v = 0;
  for (std::size_t k = c_.size(); k-- > 0;) v = v * field_->order() + c_[k];
  return v;
}

bool Poly::operator==(const Poly& other) const {
  if (c_ != other.c_) return false;
  if (field_ == other.field_) return true;
  if (!field_ || !other.field_) return false;
  return *field_ == *other.field_;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& f = *a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.add(a.coeff(k), b.coeff(k));
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a) {
  const auto& f = *a.field();
  std::vector<Elem> c(a.coeffs());
  for (auto& x : c) x = f.neg(x);
  return Poly(a.field(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& f = *a.field();
  std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.sub(a.coeff(k), b.coeff(k));
  return Poly(a.field(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  const auto& f = *a.field();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(x[i], y[j]));
  }
  return Poly(a.field(), std::move(c));
}

Poly scale(const Poly& a, Elem s) {
  const auto& f = *a.field();
  std::vector<Elem> c(a.coeffs());
  for (auto& x : c) x = f.mul(x, s);
  return Poly(a.field(), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto& f = *a.field();
  std::vector<Elem> r(a.coeffs());
  const std::size_t db = *b.degree();
  if (r.size() <= db) return {Poly::zero(a.field()), a};
  std::vector<Elem> q(r.size() - db, 0);
  const Elem lead_inv = f.inv(b.leading());
  for (std::size_t k = r.size(); k-- > db;) {
    const Elem c = f.mul(r[k], lead_inv);
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k - db + j] = f.sub(r[k - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division: " + to_string(a) + " / " + to_string(b));
  return q;
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a, a.field()->inv(a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b);
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e > 0) {
    if (e & 1) result = (result * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return result;
}

Poly pow(const Poly& base, std::uint64_t e) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

Elem eval(const Poly& f, Elem x) {
  const auto& F = *f.field();
  if (!F.contains(x)) throw Error(ErrorKind::CtxMismatch, "evaluation point outside the field");
  Elem acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[k]);
  return acc;
}

Poly shift(const Poly& f, Elem c) {
  const Poly lin(f.field(), {c, 1});
  Poly acc = Poly::zero(f.field());
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    acc = acc * lin + Poly::constant(f.field(), f.coeffs()[k]);
  }
  return acc;
}

bool divides(const Poly& a, const Poly& b) {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "divisibility by the zero polynomial");
  return (b % a).is_zero();
}

Poly cyclotomic(std::uint32_t n, const FieldPtr& field) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "cyclotomic index must be positive");
  if (n % field->characteristic() == 0) {
    throw Error(ErrorKind::CharacteristicDividesN,
                "characteristic " + std::to_string(field->characteristic()) + " divides " +
                    std::to_string(n));
  }
  std::map<std::uint32_t, Poly> memo;
  for (std::uint32_t d : divisors(n)) {
    Poly acc = Poly::x_pow_minus_one(field, d);
    for (const auto& [e, qe] : memo) {
      if (d % e == 0) acc = exact_div(acc, qe);
    }
    memo.emplace(d, std::move(acc));
  }
  return memo.at(n);
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || *f.degree() == 0) return false;
  const std::size_t n = *f.degree();
  if (n == 1) return true;
  const auto& field = f.field();
  if (n <= 4) {
    // Exhaustive: no monic divisor of degree 1..n/2.
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      const std::uint64_t count = checked_pow(field->order(), k);
      if (count > kTrialLimit) break;
      for (std::uint64_t v = 0; v < count; ++v) {
        if ((f % monic_candidate(field, k, v)).is_zero()) return false;
      }
      if (k == n / 2) return true;
    }
  }
  // Distinct-degree test: gcd(f, t^{q^k} - t) = 1 for k <= n/2.
  const Poly t = Poly::monomial(field, 1, 1);
  Poly xk = t % f;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    xk = powmod(xk, field->order(), f);
    if (*gcd(f, xk - t).degree() > 0) return false;
  }
  return true;
}

std::vector<Poly> irreducible_factors(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidSpec, "cannot factor the zero polynomial");
  const auto& field = f.field();
  Poly rest = monic(f);
  std::vector<Poly> out;
  const Poly t = Poly::monomial(field, 1, 1);
  Poly xk = Poly::zero(field);
  for (std::size_t k = 1; *rest.degree() > 0; ++k) {
    if (*rest.degree() < 2 * k) {
      out.push_back(rest);
      break;
    }
    xk = k == 1 ? powmod(t, field->order(), rest) : powmod(xk % rest, field->order(), rest);
    Poly g = gcd(rest, xk - t);
    if (*g.degree() == 0) continue;
    for (const Poly& factor : equal_degree_split(g, k)) {
      while (true) {
        auto [quo, rem] = divmod(rest, factor);
        if (!rem.is_zero()) break;
        out.push_back(factor);
        rest = quo;
      }
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Poly> monic_divisors(const Poly& f) {
  auto factors = irreducible_factors(f);
  std::vector<std::pair<Poly, int>> grouped;
  for (auto& p : factors) {
    if (!grouped.empty() && grouped.back().first == p) {
      ++grouped.back().second;
    } else {
      grouped.emplace_back(p, 1);
    }
  }
  std::vector<Poly> out{Poly::constant(f.field(), 1)};
  for (const auto& [p, mult] : grouped) {
    std::vector<Poly> next;
    for (const auto& d : out) {
      Poly acc = d;
      next.push_back(acc);
      for (int i = 0; i < mult; ++i) {
        acc = acc * p;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::optional<std::uint64_t> order_of_t(const Poly& f) {
  return multiplicative_order(f, Poly::monomial(f.field(), 1, 1));
}

std::optional<std::uint64_t> order_of_t_plus_one(const Poly& f) {
  return multiplicative_order(f, Poly(f.field(), {1, 1}));
}

std::string to_pretty(const Poly& f) {
  if (f.is_zero()) return "0";
  const auto& fld = *f.field();
  const bool prime = fld.degree() == 1;
  std::string s;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    Elem c = f.coeffs()[k];
    if (c == 0) continue;
    bool minus = false;
    if (prime && fld.characteristic() > 2 && c > fld.characteristic() / 2) {
      minus = true;
      c = fld.characteristic() - c;
    }
    if (minus) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const std::string coef = prime ? std::to_string(c) : "{" + std::to_string(c) + "}";
    if (k == 0) {
      s += coef;
      continue;
    }
    if (c != 1) s += coef + "*";
    s += 't';
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const Elem c = f.coeffs()[k];
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += 't';
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

Poly parse_poly(std::string_view text, const FieldPtr& field) {
  std::string src;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  }
  if (src.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos) + " in '" +
                                            std::string(text) + "'");
  };
  auto read_number = [&]() -> std::uint64_t {
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) {
      throw fail("expected a number");
    }
    std::uint64_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(src[pos] - '0');
      if (v > (std::uint64_t{1} << 40)) throw fail("number too large");
      ++pos;
    }
    return v;
  };
  auto is_var = [&](std::size_t i) { return i < src.size() && (src[i] == 't' || src[i] == 'x'); };

  std::map<std::uint64_t, Elem> terms;
  bool first = true;
  while (pos < src.size()) {
    bool negative = false;
    if (src[pos] == '+' || src[pos] == '-') {
      negative = src[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    Elem coeff = 1;
    std::uint64_t exponent = 0;
    if (!is_var(pos)) {
      // {k} is the braced index form to_pretty writes
      const bool braced = src[pos] == '{';
      if (braced) ++pos;
      const std::uint64_t c = read_number();
      if (braced) {
        if (pos >= src.size() || src[pos] != '}') throw fail("expected '}'");
        ++pos;
      }
      if (c >= field->order()) throw fail("coefficient outside the field");
      coeff = static_cast<Elem>(c);
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        if (!is_var(pos)) throw fail("expected variable after '*'");
      }
    }
    if (is_var(pos)) {
      ++pos;
      exponent = 1;
      if (pos < src.size() && src[pos] == '^') {
        ++pos;
        exponent = read_number();
      }
    }
    if (exponent > (1u << 20)) throw fail("exponent too large");
    if (negative) coeff = field->neg(coeff);
    auto& slot = terms[exponent];
    slot = field->add(slot, coeff);
  }
  std::vector<Elem> c(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
  for (const auto& [e, v] : terms) c[e] = v;
  return Poly(field, std::move(c));
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace cppforge

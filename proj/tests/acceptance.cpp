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


// Acceptance suite. One PASS/FAIL line per criterion, with the runtime
// limit attached where there is one. Exit status is nonzero if any line
// fails. Usage: cppforge_acceptance <path-to-cppforge-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "cppforge/construct.hpp"
#include "cppforge/error.hpp"
#include "cppforge/fieldext.hpp"
#include "cppforge/linalg.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/verify.hpp"
#include "oracle.hpp"

using namespace cppforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

oracle::Field oracle_of(const FieldPtr& f, bool fast = true) {
  oracle::Field o(f->characteristic(), f->degree(), f->modulus());
  if (fast) o.tabulate();
  return o;
}

oracle::Table raw(const PermTable& f) { return {f.table().begin(), f.table().end()}; }

oracle::Mat to_oracle(const Mat& m) {
  oracle::Mat out;
  for (const auto& row : m.rows()) out.emplace_back(row.begin(), row.end());
  return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// ---- 1 -------------------------------------------------------------------

Outcome cyclotomic_identity() {
  Outcome out;
  std::size_t checked = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    const auto o = oracle_of(f);
    for (unsigned n = 1; n <= 30; ++n) {
      if (n % f->characteristic() == 0) continue;
      oracle::Vec prod{1};
      for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) prod = oracle::pmul(o, prod, cyclotomic(d, f).coeffs());
      std::uint64_t phi = 0;
      for (unsigned k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
      const auto deg = cyclotomic(n, f).degree().value_or(0);
      if (prod != oracle::x_n_minus_1(o, n) || deg != phi) {
        out.ok = false;
        out.detail += " q=" + std::to_string(q) + ",n=" + std::to_string(n);
      }
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " (q, n) pairs";
  return out;
}

// ---- 2 -------------------------------------------------------------------

Outcome cayley_hamilton() {
  Outcome out;
  Rng rng(42);
  std::size_t checked = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    const auto o = oracle_of(f);
    for (std::size_t d = 1; d <= 6; ++d)
      for (int it = 0; it < 200; ++it) {
        Mat M(f, d);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) M(i, j) = static_cast<Elem>(rng.below(q));
        const Poly h = char_poly(M);
        const bool ok = h.degree() == d && h.is_monic() && oracle::mzero(oracle::meval(o, h.coeffs(), to_oracle(M)));
        if (!ok) {
          out.ok = false;
          out.detail = "counterexample at q=" + std::to_string(q) + " d=" + std::to_string(d);
        }
        ++checked;
      }
  }
  if (out.ok) out.detail = std::to_string(checked) + " matrices";
  return out;
}

// ---- 3 -------------------------------------------------------------------

// Smallest n >= 1 with (base)^n = 1 mod h, computed naively; 0 if none.
std::uint64_t naive_order(const oracle::Field& o, const oracle::Vec& h, const oracle::Vec& base, std::uint64_t bound) {
  oracle::Vec x = oracle::prem(o, base, h);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (x == oracle::Vec{1}) return n;
    x = oracle::prem(o, oracle::pmul(o, x, base), h);
  }
  return 0;
}

Outcome theorem_quartet() {
  Outcome out;
  std::size_t instances = 0, premises = 0, bad = 0;
  Rng rng(42);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    const auto o = oracle_of(f);
    const oracle::U minus_one = o.neg(1);
    for (unsigned d = 2; d <= 4; ++d) {
      const std::uint64_t size = ipow(q, d);
      for (std::uint64_t low = 0; low < ipow(q, d); ++low) {
        oracle::Vec hc(d + 1);
        std::uint64_t x = low;
        for (unsigned k = 0; k < d; ++k) {
          hc[k] = static_cast<oracle::U>(x % q);
          x /= q;
        }
        hc[d] = 1;
        const Poly h(f, std::vector<Elem>(hc.begin(), hc.end()));
        const Mat C = companion(h);
        for (const Mat& M : {C, random_similar(C, rng)}) {
          ++instances;
          auto fail = [&](const std::string& what) {
            ++bad;
            if (out.detail.size() < 400) out.detail += " [" + what + " q=" + std::to_string(q) + " h=" + to_string(h) + "]";
          };
          if (char_poly(M) != h || !oracle::mzero(oracle::meval(o, hc, to_oracle(M)))) fail("P_M != h");
          const PermTable s = sigma_from_matrix(M);
          if (raw(s) != oracle::table_of(o, to_oracle(M))) fail("table");
          // 1: h(0) != 0 => bijective
          if (hc[0] != 0) {
            ++premises;
            if (!s.bijective() || !oracle::bijective(raw(s))) fail("thm3.1.1");
            // 2: h | t^n - 1 => sigma^n = e
            const auto n = naive_order(o, hc, {0, 1}, size);
            ++premises;
            if (n == 0 || !is_identity(npower(s, static_cast<std::int64_t>(n))) ||
                !oracle::is_identity(oracle::power(raw(s), n)))
              fail("thm3.1.2");
          }
          // 3: h(-1) != 0 => sigma + e bijective
          if (oracle::peval(o, hc, minus_one) != 0) {
            ++premises;
            const PermTable se = add_pointwise(s, PermTable::identity(f, d));
            if (!se.bijective() || !oracle::bijective(oracle::plus_identity(raw(s), f->characteristic())))
              fail("thm3.1.3");
            // 4: h | (t+1)^m - 1 => (sigma + e)^m = e
            const auto m = naive_order(o, hc, {1, 1}, size);
            ++premises;
            if (m == 0 || !is_identity(npower(se, static_cast<std::int64_t>(m)))) fail("thm3.1.4");
          }
        }
      }
    }
  }
  out.ok = bad == 0;
  out.detail = std::to_string(instances) + " instances, " + std::to_string(premises) + " premises, " +
               std::to_string(bad) + " counterexamples" + out.detail;
  return out;
}

// ---- 4 -------------------------------------------------------------------

Outcome regular_composite() {
  Outcome out;
  std::size_t checked = 0;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = Field::of_order(q);
    const auto o = oracle_of(f);
    for (unsigned r : {4u, 6u, 8u, 9u, 10u}) {
      if (std::gcd(r, f->characteristic()) != 1) continue;
      std::set<std::vector<Elem>> seen;
      for (const Poly& h : irreducible_factors(cyclotomic(r, f))) {
        if (!seen.insert(h.coeffs()).second) continue;
        const unsigned d = static_cast<unsigned>(*h.degree());
        const std::uint64_t size = ipow(q, d);
        if (size > (1u << 16)) continue;
        for (const char* claim : {"p3.2", "p3.5", "p3.8"}) {
          NamedParams p;
          p.field = f;
          p.r = r;
          p.h = h;
          p.seed = mix_seed(42, std::string(claim) + to_string(h) + std::to_string(q));
          const PermTable s = build(named_construction(claim, p));
          const auto t = raw(s);
          std::string why;
          if (!oracle::bijective(t)) why = "not a permutation";
          const bool want_cpp = std::string(claim) != "p3.8";
          if (why.empty() && want_cpp && !oracle::bijective(oracle::plus_identity(t, f->characteristic())))
            why = "not complete";
          if (why.empty()) {
            oracle::Census expect;
            expect.fixed = 1;
            expect.cycles[r] = (size - 1) / r;
            if (oracle::census(t) != expect) why = "census";
            if (!is_r_regular(s, r)) why = "is_r_regular disagrees";
          }
          if (!why.empty()) {
            out.ok = false;
            out.detail += std::string(" [") + claim + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
                          " h=" + to_string(h) + ": " + why + "]";
          }
          ++checked;
        }
      }
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " instances, census (q^d-1)/r r-cycles + 1 fixed";
  return out;
}

// ---- 5 -------------------------------------------------------------------

bool qualifies(const Poly& h, unsigned r) {
  const FieldPtr& f = h.field();
  const Poly xr = Poly::x_pow_minus_one(f, r);
  return h.degree().value_or(0) > 0 && divides(h, xr) && !is_irreducible(h) &&
         gcd(h, exact_div(xr, cyclotomic(r, f))).degree().value_or(0) > 0 && eval(h, f->from_int(-1)) != 0;
}

Outcome non_regular() {
  Outcome out;
  std::vector<std::string> found;
  for (auto [r, q] : std::vector<std::pair<unsigned, unsigned>>{{9, 2}, {15, 2}, {4, 5}, {9, 5}}) {
    const auto f = Field::of_order(q);
    const Poly xr = Poly::x_pow_minus_one(f, r);
    // (t^r - 1)/(t - 1) first, then every other qualifying divisor
    std::vector<Poly> cands;
    const Poly quot = exact_div(xr, parse_poly("t-1", f));
    if (qualifies(quot, r)) cands.push_back(quot);
    for (const Poly& h : monic_divisors(xr))
      if (!(h == quot) && qualifies(h, r) && ipow(q, static_cast<unsigned>(*h.degree())) <= (1u << 20))
        cands.push_back(h);
    for (const char* claim : {"p3.3", "p3.6", "p3.9"}) {
      const bool want_cpp = std::string(claim) != "p3.9";
      bool witnessed = false;
      for (const Poly& h : cands) {
        NamedParams p;
        p.field = f;
        p.r = r;
        p.h = h;
        p.seed = mix_seed(42, std::string(claim) + to_string(h));
        const auto t = raw(build(named_construction(claim, p)));
        if (!oracle::bijective(t)) continue;
        if (want_cpp && !oracle::bijective(oracle::plus_identity(t, f->characteristic()))) continue;
        if (!oracle::is_identity(oracle::power(t, r))) continue;
        for (const auto& [len, count] : oracle::census(t).cycles)
          if (len > 1 && len < r && r % len == 0 && count > 0) {
            witnessed = true;
            found.push_back(std::string(claim) + "@" + std::to_string(r) + "/F" + std::to_string(q) + ":len" +
                            std::to_string(len));
            break;
          }
        if (witnessed) break;
      }
      if (!witnessed) {
        out.ok = false;
        out.detail += std::string(" [no short cycle: ") + claim + " r=" + std::to_string(r) + " q=" +
                      std::to_string(q) + ", " + std::to_string(cands.size()) + " qualifying h tried]";
      }
    }
  }
  if (out.ok) out.detail = std::to_string(found.size()) + " witnesses";
  return out;
}

// ---- 6 -------------------------------------------------------------------

Outcome p4_sweep() {
  Outcome out;
  const std::map<std::string, std::set<std::string>> want = {
      {"p4.1", {"2^1", "2^2", "7^1"}}, {"p4.2", {"3^1", "5^1"}}, {"p4.3", {"2^1", "3^1"}},
      {"p4.4", {"5^1", "7^1"}},        {"p4.5", {"2^1", "3^1"}}, {"p4.6", {"2^1", "2^2"}},
      {"p4.7", {"2^1", "2^2"}},        {"p4.8", {"2^1", "2^2"}}, {"p4.9", {"2^1", "2^2"}}};
  std::map<std::string, std::set<std::string>> seen;
  std::set<std::pair<std::uint32_t, std::string>> tens;
  std::size_t pass = 0, skipped = 0;
  std::map<std::string, std::size_t> fails;
  VerifyOptions quick;
  for (const auto& claim : match_claims("p4")) {
    std::size_t claim_pass = 0;
    for (const auto& rep : verify(claim, quick)) {
      const std::string field = rep.params["field"].get<std::string>();
      const std::string fam = claim.substr(0, claim.find('.', 3));
      seen[fam].insert(field);
      if (fam == "p4.10") tens.insert({rep.params["r"].get<std::uint32_t>(), field});
      if (rep.verdict == Verdict::HypothesisSkipped) {
        ++skipped;
        continue;
      }
      if (rep.verdict == Verdict::Fail) {
        ++fails[claim];
        continue;
      }
      // independent look at the instance that passed
      const auto p = params_from_json(rep.params);
      const auto t = raw(build(named_construction(claim, p)));
      const unsigned ch = p.field->characteristic();
      if (!oracle::bijective(t)) {
        ++fails[claim + "(oracle: not a permutation)"];
        continue;
      }
      if (ch == 2 && oracle::bijective(oracle::plus_identity(t, 2)) && oracle::census(t).fixed != 1) {
        ++fails[claim + "(oracle: fixed points)"];
        continue;
      }
      ++pass;
      ++claim_pass;
    }
    if (claim_pass == 0 && !fails.count(claim)) fails[claim + "(no passing point)"] = 1;
  }
  for (const auto& [fam, fields] : want)
    if (seen[fam] != fields) fails[fam + "(grid fields)"] = 1;
  const std::set<std::pair<std::uint32_t, std::string>> want10 = {{3, "2^1"}, {5, "2^1"}, {9, "2^1"}, {5, "2^2"}};
  if (tens != want10) fails["p4.10(grid points)"] = 1;
  out.ok = fails.empty();
  out.detail = std::to_string(pass) + " pass, " + std::to_string(skipped) + " hypothesis-skipped";
  for (const auto& [claim, n] : fails) out.detail += ", " + claim + " fails " + std::to_string(n);
  return out;
}

// ---- 7 -------------------------------------------------------------------

bool power_of(std::size_t k, unsigned p) {
  if (k == 0) return false;
  while (k % p == 0) k /= p;
  return k == 1;
}

Outcome univariate_export() {
  Outcome out;
  std::size_t checked = 0, additive = 0;
  VerifyOptions quick;
  for (const auto& claim : match_claims("all")) {
    for (const auto& rep : verify(claim, quick)) {
      if (rep.verdict == Verdict::HypothesisSkipped) continue;
      const auto p = params_from_json(rep.params);
      const auto spec = named_construction(claim, p);
      const PermTable s = build(spec);
      if (s.size() > kUnivariateCap) continue;
      const BasisPair basis(p.field, s.dim());
      const Poly u = to_univariate(basis, s);
      const VectorSpace vs(p.field, s.dim());
      bool ok = true;
      for (Index x = 0; x < s.size() && ok; ++x) ok = eval(u, basis.decode(vs.coords(x))) == basis.decode(vs.coords(s(x)));
      const unsigned ch = p.field->characteristic();
      if (oracle::additive(raw(s), ch)) {
        ++additive;
        for (std::size_t k = 0; k < u.coeffs().size() && ok; ++k) ok = u.coeff(k) == 0 || power_of(k, ch);
        ok = ok && is_linearized(u);
      }
      if (!ok) {
        out.ok = false;
        if (out.detail.size() < 400) out.detail += " [" + claim + " " + rep.params.dump() + "]";
      }
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " tables, " + std::to_string(additive) + " additive";
  return out;
}

// ---- 8 -------------------------------------------------------------------

Outcome mutation_sensitivity() {
  Outcome out;
  std::size_t mutants = 0, caught = 0, instances = 0;
  VerifyOptions quick;
  for (const auto& rep : verify("p4.3", quick)) {
    if (rep.verdict != Verdict::Pass) continue;
    ++instances;
    const PermTable clean = build(named_construction("p4.3", params_from_json(rep.params)));
    const unsigned ch = clean.field()->characteristic();
    for (Index e = 0; e < clean.size(); ++e)
      for (Index v = 0; v < clean.size(); ++v) {
        if (clean(e) == v) continue;
        ++mutants;
        const auto r = verify_point("p4.3", rep.params, Mutation{e, v});
        oracle::Table t = raw(clean);
        t[e] = v;
        bool oracle_fail = !oracle::bijective(t) || !oracle::bijective(oracle::plus_identity(t, ch));
        if (!oracle_fail) {
          const auto c = oracle::census(t);
          oracle_fail = c.cycles.size() != 1 || !c.cycles.count(5);
        }
        if (r.verdict == Verdict::Fail && r.witness && oracle_fail) ++caught;
      }
  }
  out.ok = instances > 0 && caught == mutants;
  out.detail = std::to_string(caught) + "/" + std::to_string(mutants) + " single-entry mutants caught over " +
               std::to_string(instances) + " instances";
  return out;
}

// ---- 9 -------------------------------------------------------------------

std::string capture(const std::string& cmd) {
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return text;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), n);
  pclose(pipe);
  return text;
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) return {false, "no cli path given"};
  const std::string cmd = "'" + cli + "' verify all --profile quick --seed 42";
  const std::string a = capture(cmd);
  const std::string b = capture(cmd);
  const auto lines = std::count(a.begin(), a.end(), '\n');
  out.ok = !a.empty() && a == b;
  out.detail = std::to_string(lines) + " lines, " + std::to_string(a.size()) + " bytes" + (a == b ? ", identical" : ", differ");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "cyclotomic identity", 1, cyclotomic_identity},
      {2, "Cayley-Hamilton", 5, cayley_hamilton},
      {3, "linear quartet thm3.1", 60, theorem_quartet},
      {4, "regular composite p3.2/p3.5/p3.8", 0, regular_composite},
      {5, "non-regular witness p3.3/p3.6/p3.9", 0, non_regular},
      {6, "p4.* quick sweep", 120, p4_sweep},
      {7, "univariate export", 60, univariate_export},
      {8, "mutation sensitivity p4.3", 0, mutation_sensitivity},
      {9, "determinism", 0, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << c.id << " " << c.name << ": " << o.detail << " (" << secs << " s";
    if (c.limit > 0) {
      line << ", limit " << c.limit << " s";
      if (secs >= c.limit) {
        ok = false;
        line << ", over limit";
      }
    }
    line << ")";
    std::cout << (ok ? "PASS " : "FAIL ") << line.str() << std::endl;
    failed += !ok;
  }
  std::cout << (failed ? "FAIL " : "PASS ") << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size()
            << " criteria" << std::endl;
  return failed ? 1 : 0;
}

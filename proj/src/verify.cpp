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

#include "cppforge/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "cppforge/error.hpp"

namespace cppforge {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisSkipped: return "hypothesis-skipped";
  }
  return "fail";
}

std::string_view to_string(Profile p) noexcept { return p == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(std::string_view s) {
  if (s == "quick") return Profile::Quick;
  if (s == "full") return Profile::Full;
  throw Error(ErrorKind::InvalidSpec, "profile is quick or full");
}

std::uint64_t default_cap(Profile p) noexcept {
  return p == Profile::Quick ? std::uint64_t{1} << 12 : std::uint64_t{1} << 20;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["claim"] = r.claim;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) j["witness"] = *r.witness;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.millis) j["ms"] = *r.millis;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    r.params = j.at("params");
    const auto v = j.at("verdict").get<std::string>();
    if (v == "pass") {
      r.verdict = Verdict::Pass;
    } else if (v == "fail") {
      r.verdict = Verdict::Fail;
    } else if (v == "hypothesis-skipped") {
      r.verdict = Verdict::HypothesisSkipped;
    } else {
      throw Error(ErrorKind::ParseError, "unknown verdict '" + v + "'");
    }
    if (j.contains("witness")) r.witness = j["witness"];
    r.detail = j.value("detail", std::string());
    if (j.contains("ms")) r.millis = j["ms"].get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report: ") + e.what());
  }
}

namespace {

// Claim-level hypothesis not met by an otherwise valid instance.
struct Skip {
  std::string why;
};

struct Instance {
  ConstructionSpec spec;
  PermTable sigma;
  PermTable sigma_m;
  PermTable t1;
  PermTable t2;

  std::uint32_t p() const { return spec.field->characteristic(); }
  bool tau_pair_inverse() const { return is_identity(compose(t1, t2)); }
  PermTable e() const { return PermTable::identity(spec.field, spec.dim()); }
};

Json cycle_json(const VectorSpace& vs, const char* kind, const std::string& map, const std::vector<Index>& cyc) {
  Json j;
  j["kind"] = kind;
  j["map"] = map;
  j["length"] = cyc.size();
  Json pts = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(cyc.size(), 16); ++i) pts.push_back(vs.coords(cyc[i]));
  j["points"] = pts;
  return j;
}

Json census_json(const CycleStructure& c) {
  Json j = to_json(c);
  j.erase("schema");
  return j;
}

// Runs checks in order and keeps the first failure with its witness.
class Checker {
 public:
  explicit Checker(const Instance& in) : in_(in), vs_(in.sigma.space()) {}

  bool failed() const { return failed_; }
  Json witness;
  std::string detail;

  bool bijective(const PermTable& f, const std::string& name) {
    if (failed_) return false;
    if (f.bijective()) return true;
    const auto c = find_collision(f);
    Json w;
    w["kind"] = "collision";
    w["map"] = name;
    w["x"] = vs_.coords(c->first);
    w["y"] = vs_.coords(c->second);
    w["image"] = vs_.coords(f(c->first));
    return fail(std::move(w), name + " is not a permutation");
  }

  bool cpp(const PermTable& f, const std::string& name) {
    return bijective(f, name) && bijective(add_pointwise(f, in_.e()), name + "+e");
  }

  bool regular(const PermTable& f, std::uint64_t r, const std::string& name) {
    if (!bijective(f, name)) return false;
    const auto c = find_cycle(f, [r](std::uint64_t len) { return len >= 2 && len != r; });
    if (!c) return true;
    return fail(cycle_json(vs_, "cycle", name, *c),
                name + " has a cycle of length " + std::to_string(c->size()) + ", not " + std::to_string(r));
  }

  bool n_cycle(const PermTable& f, std::uint64_t n, const std::string& name) {
    if (!bijective(f, name)) return false;
    const PermTable g = npower(f, static_cast<std::int64_t>(n));
    for (Index x = 0; x < g.size(); ++x) {
      if (g(x) != x) {
        Json w;
        w["kind"] = "npower";
        w["map"] = name;
        w["n"] = n;
        w["x"] = vs_.coords(x);
        w["image"] = vs_.coords(g(x));
        return fail(std::move(w), name + "^" + std::to_string(n) + " is not the identity");
      }
    }
    return true;
  }

  // A CPP in characteristic 2 fixes exactly one point.
  bool lone_fixed_point(const PermTable& f, const std::string& name) {
    if (failed_ || in_.p() != 2) return !failed_;
    std::vector<Index> fixed;
    for (Index x = 0; x < f.size(); ++x)
      if (f(x) == x) fixed.push_back(x);
    if (fixed.size() == 1) return true;
    Json w;
    w["kind"] = "fixed-points";
    w["map"] = name;
    w["count"] = fixed.size();
    Json pts = Json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(fixed.size(), 4); ++i) pts.push_back(vs_.coords(fixed[i]));
    w["points"] = pts;
    return fail(std::move(w), name + " has " + std::to_string(fixed.size()) + " fixed points");
  }

  bool regular_cpp(const PermTable& f, std::uint64_t r, const std::string& name) {
    return cpp(f, name) && regular(f, r, name) && lone_fixed_point(f, name);
  }

  // Zero fixed, every other vector on an r-cycle.
  bool census(const PermTable& f, std::uint64_t r, const std::string& name) {
    if (!bijective(f, name)) return false;
    CycleStructure want;
    want.fixed_points = 1;
    if (f.size() > 1) want.cycles[r] = (f.size() - 1) / r;
    const CycleStructure got = cycle_structure(f);
    if (got == want && (f.size() - 1) % r == 0) return true;
    Json w;
    w["kind"] = "census";
    w["map"] = name;
    w["expected"] = census_json(want);
    w["actual"] = census_json(got);
    return fail(std::move(w), name + " census differs from one fixed point plus r-cycles");
  }

  // Negative claims: a cycle whose length is a proper divisor l >= 2 of r.
  bool short_cycle(const PermTable& f, std::uint64_t r, const std::string& name) {
    if (!bijective(f, name)) return false;
    const auto c = find_cycle(f, [r](std::uint64_t len) { return len >= 2 && len < r && r % len == 0; });
    if (c) {
      evidence = cycle_json(vs_, "short-cycle", name, *c);
      return true;
    }
    Json w;
    w["kind"] = "census";
    w["map"] = name;
    w["actual"] = census_json(cycle_structure(f));
    return fail(std::move(w), "no cycle of length l with 2 <= l < r and l | r: " + name + " is r-regular");
  }

  bool same(const PermTable& a, const PermTable& b, const std::string& name) {
    if (failed_) return false;
    for (Index x = 0; x < a.size(); ++x) {
      if (a(x) != b(x)) {
        Json w;
        w["kind"] = "mismatch";
        w["map"] = name;
        w["x"] = vs_.coords(x);
        w["left"] = vs_.coords(a(x));
        w["right"] = vs_.coords(b(x));
        return fail(std::move(w), name + " differs at one input");
      }
    }
    return true;
  }

  std::optional<Json> evidence;

 private:
  bool fail(Json w, std::string why) {
    failed_ = true;
    witness = std::move(w);
    detail = std::move(why);
    return false;
  }

  const Instance& in_;
  VectorSpace vs_;
  bool failed_ = false;
};

using CheckFn = std::function<void(const Instance&, Checker&)>;

// Grid assembly ------------------------------------------------------------

struct GridBuilder {
  const VerifyOptions& opts;
  std::uint64_t cap;
  std::vector<NamedParams> out;

  bool full() const { return opts.profile == Profile::Full; }
  unsigned samples() const { return full() ? 3 : 2; }

  std::vector<FieldPtr> fields(std::vector<std::uint64_t> quick, std::vector<std::uint64_t> more) const {
    std::vector<std::uint64_t> qs = opts.axes.q;
    if (qs.empty()) {
      qs = std::move(quick);
      if (full()) qs.insert(qs.end(), more.begin(), more.end());
    }
    std::vector<FieldPtr> fs;
    for (auto q : qs) fs.push_back(Field::of_order(q));
    return fs;
  }

  std::vector<std::pair<std::uint32_t, FieldPtr>> pairs(std::vector<std::pair<std::uint32_t, std::uint64_t>> quick,
                                                        std::vector<std::pair<std::uint32_t, std::uint64_t>> more) const {
    auto all = std::move(quick);
    if (full()) all.insert(all.end(), more.begin(), more.end());
    std::vector<std::pair<std::uint32_t, FieldPtr>> res;
    if (opts.axes.q.empty() && opts.axes.r.empty()) {
      for (auto [r, q] : all) res.emplace_back(r, Field::of_order(q));
      return res;
    }
    std::vector<std::uint32_t> rs = opts.axes.r;
    std::vector<std::uint64_t> qs = opts.axes.q;
    for (auto [r, q] : all) {
      if (opts.axes.r.empty() && std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
      if (opts.axes.q.empty() && std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
    for (auto r : rs)
      for (auto q : qs) res.emplace_back(r, Field::of_order(q));
    return res;
  }

  void add(NamedParams p, unsigned d) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < d && size <= cap; ++i) size *= p.field->order();
    if (size <= cap) out.push_back(std::move(p));
  }

  static NamedParams base(const FieldPtr& f) {
    NamedParams p;
    p.field = f;
    return p;
  }
};

std::vector<Poly> all_monic(const FieldPtr& f, unsigned deg) {
  std::vector<Poly> res;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= f->order();
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<Elem> c(deg + 1);
    std::uint64_t x = v;
    for (unsigned i = 0; i < deg; ++i) {
      c[i] = static_cast<Elem>(x % f->order());
      x /= f->order();
    }
    c[deg] = 1;
    res.emplace_back(f, std::move(c));
  }
  return res;
}

// Quadratic claims 4.1, 4.2, 4.4 and their variants.
void grid_two_by_two(GridBuilder& g, const std::string& id, std::vector<std::uint64_t> quick,
                     std::vector<std::uint64_t> more) {
  const bool any_matrix = id == "p4.1.1" || id == "p4.1.2" || id == "p4.2.1" || id == "p4.4.1";
  const bool free_m = id == "p4.1.3" || id == "p4.1.3-mirror" || id == "p4.2.3" || id == "p4.4.3";
  for (const auto& f : g.fields(std::move(quick), std::move(more))) {
    if (free_m) {
      for (Elem m = 1; m < f->order(); ++m) {
        auto p = GridBuilder::base(f);
        p.m = m;
        g.add(p, 2);
      }
      continue;
    }
    for (unsigned s = 0; s < g.samples(); ++s) {
      auto p = GridBuilder::base(f);
      if (any_matrix && s % 2 == 1) p.matrix = MatrixChoice::RandomConjugate;
      g.add(p, 2);
    }
  }
}

void grid_theorem(GridBuilder& g, bool linear) {
  const std::vector<std::uint64_t> quick = linear ? std::vector<std::uint64_t>{2, 3, 4, 5}
                                                  : std::vector<std::uint64_t>{2, 3};
  const std::vector<std::uint64_t> more = linear ? std::vector<std::uint64_t>{}
                                                 : std::vector<std::uint64_t>{4, 5};
  for (const auto& f : g.fields(quick, more)) {
    if (!g.opts.axes.h.empty()) {
      for (const auto& text : g.opts.axes.h) {
        auto p = GridBuilder::base(f);
        p.h = parse_poly(text, f);
        const unsigned deg = static_cast<unsigned>(p.h->degree().value_or(0));
        for (PairMode pm : {PairMode::Inverse, PairMode::Independent}) {
          p.pair = pm;
          g.add(p, deg);
          if (linear) break;
        }
      }
      continue;
    }
    std::vector<unsigned> degs = {2};
    if (g.full() || f->order() == 2) degs.push_back(3);
    std::size_t i = 0;
    for (unsigned deg : degs) {
      for (const auto& h : all_monic(f, deg)) {
        auto p = GridBuilder::base(f);
        p.h = h;
        if (linear) {
          p.matrix = i++ % 2 ? MatrixChoice::RandomConjugate : MatrixChoice::Companion;
          g.add(p, deg);
          if (g.full() && p.matrix == MatrixChoice::Companion) {
            p.matrix = MatrixChoice::RandomConjugate;
            g.add(p, deg);
          }
          continue;
        }
        for (PairMode pm : {PairMode::Inverse, PairMode::Independent}) {
          p.pair = pm;
          g.add(p, deg);
        }
      }
    }
  }
}

// One point per monic divisor of `target` except those rejected.
void grid_divisors(GridBuilder& g, std::uint32_t r, const FieldPtr& f, const Poly& target,
                   const std::function<bool(const Poly&)>& keep) {
  if (!g.opts.axes.h.empty()) {
    for (const auto& text : g.opts.axes.h) {
      auto p = GridBuilder::base(f);
      p.r = r;
      p.h = parse_poly(text, f);
      g.add(p, static_cast<unsigned>(p.h->degree().value_or(0)));
    }
    return;
  }
  std::size_t i = 0;
  for (const auto& h : monic_divisors(target)) {
    if (h.degree().value_or(0) == 0 || !keep(h)) continue;
    auto p = GridBuilder::base(f);
    p.r = r;
    p.h = h;
    p.matrix = i++ % 2 ? MatrixChoice::RandomConjugate : MatrixChoice::Companion;
    g.add(p, static_cast<unsigned>(*h.degree()));
  }
}

void grid_section_three(GridBuilder& g, const std::string& id) {
  const int n = id.back() - '0';
  const int kind = (n - 1) % 3;
  if (kind == 0) {
    // CPP conclusions need h(-1) != 0, which the odd-prime argument takes for
    // granted; in characteristic 2 the factor t + 1 = t - 1 breaks it, so the
    // CPP claims stay on divisors without it.
    const bool cpp_claim = n != 7;
    for (auto [r, f] : g.pairs({{3, 2}, {5, 2}, {7, 2}, {3, 4}, {5, 4}, {3, 7}}, {{11, 2}, {7, 4}, {5, 9}, {13, 3}})) {
      if (r % f->characteristic() == 0 || r < 2) {
        auto p = GridBuilder::base(f);
        p.r = r;
        g.add(p, 0);
        continue;
      }
      const Poly lin = Poly::from_ints(f, {-1, 1});
      grid_divisors(g, r, f, Poly::x_pow_minus_one(f, r), [&](const Poly& h) {
        if (h == lin) return false;
        return !cpp_claim || eval(h, f->from_int(-1)) != 0;
      });
    }
    return;
  }
  if (kind == 1) {
    for (auto [r, f] : g.pairs({{4, 3}, {4, 5}, {6, 5}, {8, 3}, {9, 2}, {10, 3}, {6, 7}},
                               {{15, 2}, {12, 5}, {9, 4}, {21, 2}})) {
      if (r % f->characteristic() == 0) {
        auto p = GridBuilder::base(f);
        p.r = r;
        g.add(p, 0);
        continue;
      }
      grid_divisors(g, r, f, cyclotomic(r, f), [](const Poly&) { return true; });
    }
    return;
  }
  for (auto [r, f] : g.pairs({{9, 2}, {6, 5}, {8, 3}}, {{15, 2}, {10, 3}, {9, 5}})) {
    auto p = GridBuilder::base(f);
    p.r = r;
    unsigned d = 0;
    if (!g.opts.axes.h.empty()) {
      for (const auto& text : g.opts.axes.h) {
        p.h = parse_poly(text, f);
        g.add(p, static_cast<unsigned>(p.h->degree().value_or(0)));
      }
      continue;
    }
    if (r % f->characteristic() != 0) {
      p.h = pick_h(r, f, HStrategy::ReducibleWitness);
      d = static_cast<unsigned>(*p.h->degree());
    }
    g.add(p, d);
  }
}

void grid_for(GridBuilder& g, const std::string& id) {
  const std::string fam = construction_family(id);
  if (fam.rfind("thm", 0) == 0) return grid_theorem(g, fam == "thm3.1");
  if (fam.rfind("p3.", 0) == 0) return grid_section_three(g, fam);
  if (fam.rfind("p4.1.", 0) == 0) return grid_two_by_two(g, fam, {2, 4, 7}, {3, 5, 8, 16});
  if (fam.rfind("p4.2.", 0) == 0) return grid_two_by_two(g, fam, {3, 5}, {7, 9, 11, 13});
  if (fam.rfind("p4.4.", 0) == 0) return grid_two_by_two(g, fam, {5, 7}, {11, 13, 25});
  if (fam == "p4.3" || fam == "p4.5") {
    const unsigned d = fam == "p4.3" ? 4 : 6;
    for (const auto& f : g.fields({2, 3}, {4, 7, 8}))
      for (unsigned s = 0; s < g.samples(); ++s) g.add(GridBuilder::base(f), d);
    return;
  }
  if (fam == "p4.6" || fam == "p4.7") {
    for (const auto& f : g.fields({2, 4}, {8, 16}))
      for (unsigned s = 0; s < g.samples(); ++s) {
        auto p = GridBuilder::base(f);
        if (s % 2 == 1) p.matrix = MatrixChoice::RandomConjugate;
        g.add(p, 3);
      }
    return;
  }
  if (fam.rfind("p4.8", 0) == 0 || fam.rfind("p4.9", 0) == 0) {
    for (const auto& f : g.fields({2, 4}, {8, 16}))
      for (PairMode pm : {PairMode::Inverse, PairMode::Independent}) {
        auto p = GridBuilder::base(f);
        p.pair = pm;
        g.add(p, 3);
      }
    return;
  }
  // p4.10.*
  const bool any_pair = id == "p4.10.1";
  for (auto [r, f] : g.pairs({{3, 2}, {5, 2}, {9, 2}, {5, 4}},
                             {{7, 2}, {11, 2}, {15, 2}, {3, 4}, {7, 4}, {9, 4}, {3, 5}, {9, 5}, {5, 3}, {7, 3}})) {
    for (PairMode pm : {PairMode::Inverse, PairMode::Independent}) {
      if (pm == PairMode::Independent && !any_pair) continue;
      auto p = GridBuilder::base(f);
      p.r = r;
      p.pair = pm;
      g.add(p, r > 0 ? r - 1 : 0);
    }
  }
}

// Claim table ----------------------------------------------------------------

struct ClaimDef {
  ClaimInfo info;
  CheckFn check;
};

void need(bool ok, const std::string& why) {
  if (!ok) throw Skip{why};
}

std::uint64_t need_order(const std::optional<std::uint64_t>& n, const std::string& why) {
  need(n.has_value(), why);
  return *n;
}

CheckFn regular_cpp(std::uint64_t r, bool plus_e_too = false, bool plus_e_if_char2 = false) {
  return [=](const Instance& in, Checker& c) {
    c.regular_cpp(in.sigma, r, "sigma");
    if (plus_e_too || (plus_e_if_char2 && in.p() == 2)) {
      c.regular_cpp(add_pointwise(in.sigma, in.e()), r, "sigma+e");
    }
  };
}

std::vector<ClaimDef> make_claims() {
  std::vector<ClaimDef> v;
  auto add = [&](std::string id, std::string statement, CheckFn fn, bool exploratory = false) {
    ClaimInfo info{id, construction_family(id), std::move(statement), exploratory};
    v.push_back({std::move(info), std::move(fn)});
  };

  add("thm3.1.1", "h(0) != 0 makes sigma_M a permutation",
      [](const Instance& in, Checker& c) {
        need(in.spec.h.coeff(0) != 0, "h(0) != 0");
        c.bijective(in.sigma, "sigma");
      });
  add("thm3.1.2", "h | t^n - 1 makes sigma_M an n-cycle permutation",
      [](const Instance& in, Checker& c) {
        c.n_cycle(in.sigma, need_order(order_of_t(in.spec.h), "h | t^n - 1 for some n"), "sigma");
      });
  add("thm3.1.3", "h(-1) != 0 makes sigma_M + e a permutation",
      [](const Instance& in, Checker& c) {
        need(eval(in.spec.h, in.spec.field->from_int(-1)) != 0, "h(-1) != 0");
        c.bijective(add_pointwise(in.sigma, in.e()), "sigma+e");
      });
  add("thm3.1.4", "h | (t+1)^m - 1 makes sigma_M + e an m-cycle permutation",
      [](const Instance& in, Checker& c) {
        const auto m = need_order(order_of_t_plus_one(in.spec.h), "h | (t+1)^m - 1 for some m");
        c.n_cycle(add_pointwise(in.sigma, in.e()), m, "sigma+e");
      });

  add("thm3.2.1", "additive tau1, tau2 and h(0) != 0: sigma is a permutation",
      [](const Instance& in, Checker& c) {
        need(in.spec.h.coeff(0) != 0, "h(0) != 0");
        c.bijective(in.sigma, "sigma");
      });
  add("thm3.2.2", "additive tau1 o tau2 = e and h | t^n - 1: sigma is an n-cycle permutation",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "tau1 o tau2 = e");
        c.n_cycle(in.sigma, need_order(order_of_t(in.spec.h), "h | t^n - 1 for some n"), "sigma");
      });
  add("thm3.2.3", "additive tau1 o tau2 = e and h(-1) != 0: sigma + e is a permutation conjugate to sigma_M + e",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "tau1 o tau2 = e");
        need(eval(in.spec.h, in.spec.field->from_int(-1)) != 0, "h(-1) != 0");
        const PermTable plus = add_pointwise(in.sigma, in.e());
        if (!c.bijective(plus, "sigma+e")) return;
        const PermTable conj = compose(in.t1, compose(add_pointwise(in.sigma_m, in.e()), in.t2));
        c.same(plus, conj, "sigma+e vs tau1 o (sigma_M+e) o tau1^-1");
      });
  add("thm3.2.4", "additive tau1 o tau2 = e and h | (t+1)^m - 1: sigma + e is an m-cycle permutation",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "tau1 o tau2 = e");
        const auto m = need_order(order_of_t_plus_one(in.spec.h), "h | (t+1)^m - 1 for some m");
        c.n_cycle(add_pointwise(in.sigma, in.e()), m, "sigma+e");
      });
  add("thm3.3.1", "any PPs tau1, tau2 and h(0) != 0: sigma is a permutation",
      [](const Instance& in, Checker& c) {
        need(in.spec.h.coeff(0) != 0, "h(0) != 0");
        c.bijective(in.sigma, "sigma");
      });
  add("thm3.3.2", "any PPs with tau1 o tau2 = e and h | t^n - 1: sigma is an n-cycle permutation",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "tau1 o tau2 = e");
        c.n_cycle(in.sigma, need_order(order_of_t(in.spec.h), "h | t^n - 1 for some n"), "sigma");
      });

  const auto prime_r = [](bool cpp) {
    return [cpp](const Instance& in, Checker& c) {
      if (cpp) {
        c.regular_cpp(in.sigma, in.spec.r, "sigma");
      } else {
        c.regular(in.sigma, in.spec.r, "sigma");
      }
    };
  };
  const auto composite_regular = [](bool cpp) {
    return [cpp](const Instance& in, Checker& c) {
      if (cpp) c.cpp(in.sigma, "sigma");
      c.regular(in.sigma, in.spec.r, "sigma");
      c.census(in.sigma, in.spec.r, "sigma");
      if (cpp) c.lone_fixed_point(in.sigma, "sigma");
    };
  };
  const auto composite_irregular = [](bool cpp) {
    return [cpp](const Instance& in, Checker& c) {
      if (cpp) c.cpp(in.sigma, "sigma");
      c.n_cycle(in.sigma, in.spec.r, "sigma");
      c.short_cycle(in.sigma, in.spec.r, "sigma");
    };
  };
  add("p3.1", "odd prime r, h | t^r - 1, h != t - 1: sigma_M is an r-regular CPP", prime_r(true));
  add("p3.2", "composite r, h | Q_r: sigma_M is an r-regular CPP", composite_regular(true));
  add("p3.3", "composite r, reducible h | t^r - 1 sharing a factor with (t^r - 1)/Q_r, h(-1) != 0: "
              "companion sigma_M is an r-cycle CPP with a shorter cycle",
      composite_irregular(true));
  add("p3.4", "as p3.1, conjugated by an additive PP", prime_r(true));
  add("p3.5", "as p3.2, conjugated by an additive PP", composite_regular(true));
  add("p3.6", "as p3.3, conjugated by an additive PP", composite_irregular(true));
  add("p3.7", "as p3.1, conjugated by any PP: r-regular PP", prime_r(false));
  add("p3.8", "as p3.2, conjugated by any PP: r-regular PP", composite_regular(false));
  add("p3.9", "as p3.3, conjugated by any PP: r-cycle PP with a shorter cycle", composite_irregular(false));

  add("p4.1.1", "h = t^2+t+1, additive a1, a2: 3-regular CPP on F_q^2", regular_cpp(3));
  add("p4.1.2", "as p4.1.1 with p = 2: sigma + e is a 3-regular CPP too", regular_cpp(3, true));
  add("p4.1.3", "M = [[0, m], [-1/m, -1]], a2 = e: 3-regular CPP; for p = 2 also sigma + e",
      regular_cpp(3, false, true));
  add("p4.1.3-mirror", "as p4.1.3 with a1 = e and a2 arbitrary", regular_cpp(3, false, true), true);
  add("p4.1.4", "M = [[-1, 1], [-1, 0]], a2 = e: 3-regular CPP", regular_cpp(3));
  add("p4.2.1", "h = t^2+1, additive a1, a2: 4-regular CPP", regular_cpp(4));
  add("p4.2.2", "M = companion(t^2+1), a1 = a2 = a odd: 4-regular CPP", regular_cpp(4));
  add("p4.2.3", "M = [[-1, m], [-2/m, 1]], a2 = e: 4-regular CPP", regular_cpp(4));
  add("p4.3", "companion of t^4+t^3+t^2+t+1, tau = (a(x1), x2, x3, x4): 5-regular CPP", regular_cpp(5));
  add("p4.4.1", "h = t^2-t+1, additive a1, a2: 6-regular CPP", regular_cpp(6));
  add("p4.4.2", "M = companion(t^2-t+1), a2 = e: 6-regular CPP", regular_cpp(6));
  add("p4.4.3", "M = [[-1, m], [-3/m, 2]], a2 = e: 6-regular CPP", regular_cpp(6));
  add("p4.5", "companion of (t^7-1)/(t-1), tau = (a(x1), x2, ..., x6): 7-regular CPP", regular_cpp(7));
  add("p4.6", "p = 2, P_M = t^3+t^2+1, additive tau: sigma and sigma + e are 7-regular CPPs", regular_cpp(7, true));
  add("p4.7", "p = 2, P_M = t^3+t+1, additive tau: sigma and sigma + e are 7-regular CPPs", regular_cpp(7, true));
  const auto sandwich7 = [](const Instance& in, Checker& c) {
    if (!c.cpp(in.sigma, "sigma") || !c.lone_fixed_point(in.sigma, "sigma")) return;
    if (in.tau_pair_inverse()) c.regular(in.sigma, 7, "sigma");
  };
  add("p4.8.1", "p = 2, companion of t^3+t^2+1, tau at x2: CPP; 7-regular when a1 o a2 = e", sandwich7);
  add("p4.8.2", "p = 2, M = [[0,1,1],[1,0,0],[1,0,1]], tau at x2: CPP; 7-regular when a1 o a2 = e", sandwich7);
  add("p4.9.1", "p = 2, companion of t^3+t+1, tau at x2: CPP; 7-regular when a1 o a2 = e", sandwich7);
  add("p4.9.2", "p = 2, M = [[1,1,1],[1,0,0],[1,0,1]], tau at x2: CPP; 7-regular when a1 o a2 = e", sandwich7);
  add("p4.10.1", "odd r, companion of (t^r-1)/(t-1), tau at x1: CPP",
      [](const Instance& in, Checker& c) {
        c.cpp(in.sigma, "sigma");
        c.lone_fixed_point(in.sigma, "sigma");
      });
  add("p4.10.2", "as p4.10.1 with a1 o a2 = e and r prime: r-regular CPP",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "a1 o a2 = e");
        need(is_prime(in.spec.r), "r is prime");
        c.regular_cpp(in.sigma, in.spec.r, "sigma");
      });
  add("p4.10.3", "as p4.10.1 with a1 o a2 = e and r composite: CPP, not r-regular",
      [](const Instance& in, Checker& c) {
        need(in.tau_pair_inverse(), "a1 o a2 = e");
        need(!is_prime(in.spec.r), "r is composite");
        c.cpp(in.sigma, "sigma");
        c.lone_fixed_point(in.sigma, "sigma");
        c.n_cycle(in.sigma, in.spec.r, "sigma");
        c.short_cycle(in.sigma, in.spec.r, "sigma");
      });
  return v;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = make_claims();
  return defs;
}

const ClaimDef& find_def(std::string_view id) {
  for (const auto& d : registry())
    if (d.info.id == id) return d;
  throw Error(ErrorKind::UnknownClaim, "unknown claim '" + std::string(id) + "'");
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& d : registry()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

const ClaimInfo& claim_info(std::string_view id) { return find_def(id).info; }

std::vector<std::string> match_claims(std::string_view pattern) {
  std::vector<std::string> ids;
  for (const auto& d : registry()) {
    const auto& id = d.info.id;
    const bool exact = id == pattern;
    const bool prefix = !d.info.exploratory && id.size() > pattern.size() && id.compare(0, pattern.size(), pattern) == 0 &&
                        id[pattern.size()] == '.';
    const bool all = pattern == "all" && !d.info.exploratory;
    if (exact || prefix || all) ids.push_back(id);
  }
  if (ids.empty()) throw Error(ErrorKind::UnknownClaim, "unknown claim '" + std::string(pattern) + "'");
  return ids;
}

std::vector<Json> grid(std::string_view claim, const VerifyOptions& opts) {
  const std::string id(find_def(claim).info.id);
  GridBuilder g{opts, opts.cap.value_or(default_cap(opts.profile)), {}};
  grid_for(g, id);
  std::vector<Json> points;
  for (std::size_t i = 0; i < g.out.size(); ++i) {
    NamedParams p = g.out[i];
    p.seed = mix_seed(opts.seed, id + "#" + std::to_string(i));
    points.push_back(to_json(p));
  }
  return points;
}

VerificationReport verify_point(std::string_view claim, const Json& params, const std::optional<Mutation>& mutation) {
  const ClaimDef& def = find_def(claim);
  VerificationReport rep;
  rep.claim = def.info.id;
  rep.params = params;
  const NamedParams np = params_from_json(params);
  ConstructionSpec spec;
  try {
    spec = named_construction(def.info.id, np);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisViolated) throw;
    rep.verdict = Verdict::HypothesisSkipped;
    rep.detail = e.what();
    return rep;
  }
  const unsigned d = spec.dim();
  PermTable sigma = build(spec);
  if (mutation) {
    if (mutation->entry >= sigma.size() || mutation->value >= sigma.size()) {
      throw Error(ErrorKind::InvalidSpec, "mutation outside the table");
    }
    auto t = sigma.table();
    t[mutation->entry] = mutation->value;
    sigma = PermTable(spec.field, d, std::move(t));
  }
  PermTable t1 = tau_to_table(spec.tau1, spec.field, d);
  PermTable t2 = spec.mode == Mode::Conjugation ? invert(t1) : tau_to_table(*spec.tau2, spec.field, d);
  Instance in{std::move(spec), std::move(sigma), PermTable(), std::move(t1), std::move(t2)};
  in.sigma_m = sigma_from_matrix(in.spec.M);

  Checker c(in);
  try {
    def.check(in, c);
  } catch (const Skip& s) {
    rep.verdict = Verdict::HypothesisSkipped;
    rep.detail = "HypothesisViolated: " + s.why;
    return rep;
  }
  if (c.failed()) {
    rep.verdict = Verdict::Fail;
    rep.witness = c.witness;
    rep.detail = c.detail;
  } else {
    rep.verdict = Verdict::Pass;
    rep.witness = c.evidence;
  }
  return rep;
}

std::vector<VerificationReport> verify(std::string_view pattern, const VerifyOptions& opts) {
  struct Job {
    std::string claim;
    Json params;
  };
  std::vector<Job> jobs;
  for (const auto& id : match_claims(pattern))
    for (auto& p : grid(id, opts)) jobs.push_back({id, std::move(p)});

  std::vector<VerificationReport> out(jobs.size());
  auto run = [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    out[i] = verify_point(jobs[i].claim, jobs[i].params);
    if (opts.timing) {
      out[i].millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
    return out;
  }
  // Each slot is written by exactly one worker, so the merged order is the
  // job order whatever the scheduling.
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
        try {
          run(i);
        } catch (...) {
          std::lock_guard lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::HypothesisSkipped: ++s.skipped; break;
    }
  }
  return s;
}

Json traceability() {
  Json rows = Json::array();
  VerifyOptions quick;
  for (const auto& d : registry()) {
    Json row;
    row["claim"] = d.info.id;
    row["construction"] = d.info.family;
    row["statement"] = d.info.statement;
    row["exploratory"] = d.info.exploratory;
    row["quick_points"] = grid(d.info.id, quick).size();
    row["test"] = "verify " + d.info.id + " --profile quick";
    rows.push_back(std::move(row));
  }
  Json j;
  j["schema"] = kSchema;
  j["claims"] = rows;
  return j;
}

Json explore_general_matrix(std::uint32_t r, std::uint64_t q, unsigned samples, std::uint64_t seed) {
  const FieldPtr f = Field::of_order(q);
  const Poly h = cyclotomic(r, f);
  const unsigned d = static_cast<unsigned>(*h.degree());
  std::size_t cpp = 0;
  std::size_t regular = 0;
  std::size_t both = 0;
  Rng rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    ConstructionSpec spec;
    spec.claim = "explore";
    spec.field = f;
    spec.r = r;
    spec.h = h;
    spec.M = random_similar(companion(h), rng);
    std::vector<Elem> e(f->order());
    for (Elem x = 0; x < f->order(); ++x) e[x] = x;
    std::vector<std::vector<Elem>> maps(d, e);
    maps[0] = random_pp(f, PpKind::NonAdditive, rng);
    spec.tau1 = TauSpec::coordinate_wise(std::move(maps));
    const PermTable sigma = build(spec);
    const bool c = is_cpp(sigma);
    const bool reg = is_r_regular(sigma, r);
    cpp += c;
    regular += reg;
    both += c && reg;
  }
  Json j;
  j["schema"] = kSchema;
  j["sweep"] = "general-matrix";
  j["r"] = r;
  j["field"] = f->spec();
  j["d"] = d;
  j["samples"] = samples;
  j["seed"] = seed;
  j["cpp"] = cpp;
  j["regular"] = regular;
  j["regular_cpp"] = both;
  return j;
}

}  // namespace cppforge

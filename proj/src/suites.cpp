#include "pervpn/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pervpn/functors.hpp"
#include "pervpn/tables.hpp"

namespace pervpn {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

int SuiteResult::count(Status s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [s](const CheckRow& r) { return r.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"homtables", "extalgebra", "strings", "cy",
                                              "serre",     "census",     "structural", "plumbing"};
  return names;
}

int default_workers() {
  const char* env = std::getenv("PERVPN_WORKERS");
  if (!env) return 1;
  try {
    return std::max(1, std::stoi(env));
  } catch (const std::exception&) {
    return 1;
  }
}

namespace {

struct Case {
  std::string check;
  std::string item;
  std::function<std::vector<CheckRow>()> run;
};

std::vector<CheckRow> run_cases(const std::vector<Case>& cases, int workers) {
  std::vector<std::vector<CheckRow>> out(cases.size());
  auto one = [&](std::size_t i) {
    try {
      out[i] = cases[i].run();
    } catch (const std::exception& e) {
      CheckRow r;
      r.check = cases[i].check;
      r.item = cases[i].item;
      r.status = Status::fail;
      r.detail = std::string("exception: ") + e.what();
      out[i] = {r};
    }
  };
  if (workers <= 1 || cases.size() < 2) {
    for (std::size_t i = 0; i < cases.size(); ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int w = std::min<int>(workers, static_cast<int>(cases.size()));
    for (int t = 0; t < w; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) one(i);
      });
    for (auto& th : pool) th.join();
  }
  std::vector<CheckRow> rows;
  for (auto& v : out) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

CheckRow make_row(std::string check, std::string item, bool ok, nlohmann::json expected, nlohmann::json computed,
                  std::string detail = {}) {
  CheckRow r;
  r.check = std::move(check);
  r.item = std::move(item);
  r.status = ok ? Status::pass : Status::fail;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  r.detail = std::move(detail);
  return r;
}

std::string arrow(const ObjectTag& x, const ObjectTag& y) { return x.str() + "->" + y.str(); }

Status from_iso(IsoStatus s) {
  switch (s) {
    case IsoStatus::certified:
      return Status::pass;
    case IsoStatus::refuted:
      return Status::fail;
    default:
      return Status::inconclusive;
  }
}

ObjectTag dual_tag(const ObjectTag& t) {
  switch (t.kind) {
    case ObjectTag::Kind::Delta:
      return nabla(t.a);
    case ObjectTag::Kind::Nabla:
      return delta(t.a);
    case ObjectTag::Kind::P:
      return inj(t.a);
    case ObjectTag::Kind::I:
      return proj(t.a);
    case ObjectTag::Kind::ZPlus:
      return zminus(t.a, t.b);
    case ObjectTag::Kind::ZMinus:
      return zplus(t.a, t.b);
    default:
      return t;
  }
}

bool is_string(const ObjectTag& t) {
  return t.kind == ObjectTag::Kind::ZPlus || t.kind == ObjectTag::Kind::ZMinus;
}

SuiteResult finish(std::string name, const Session& s, std::vector<CheckRow> rows,
                   std::chrono::steady_clock::time_point t0) {
  SuiteResult out;
  out.name = std::move(name);
  out.n = s.n();
  out.rows = std::move(rows);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// Certifies a ~ b, re-verifying any certificate independently.
CheckRow iso_row(std::string check, std::string item, const ProjComplex& a, const ProjComplex& b, std::uint64_t seed) {
  auto iso = complexes_iso(a, b, seed);
  CheckRow r;
  r.check = std::move(check);
  r.item = std::move(item);
  r.status = from_iso(iso.status);
  if (iso.certificate && !verify_certificate(*iso.certificate)) {
    r.status = Status::fail;
    iso.reason += "; certificate failed re-verification";
  }
  r.expected = "isomorphic";
  r.computed = {{"status", to_string(iso.status)}, {"left", a.summary()}, {"right", b.summary()}};
  r.detail = iso.reason;
  r.seed = iso.seed;
  return r;
}

}  // namespace

// ------------------------------------------------------------------ homtables

SuiteResult suite_homtables(const Session& s, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  std::vector<Case> cases;
  auto add = [&](const std::string& check, ObjectTag x, ObjectTag y, std::function<int(int)> f) {
    cases.push_back({check, arrow(x, y), [&s, n, check, x, y, f] {
                       std::vector<int> exp;
                       for (int r = 0; r <= 2 * n; ++r) exp.push_back(f(r));
                       auto got = s.ext_dims(x, y);
                       return std::vector<CheckRow>{make_row(check, arrow(x, y), got == exp, exp, got)};
                     }});
  };
  namespace E = expected;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l) {
      add("hom.simple_simple", ic(k), ic(l), [=](int r) { return E::simple_simple(k, l, r); });
      add("hom.standard_simple", delta(k), ic(l), [=](int r) { return E::standard_simple(k, l, r); });
      add("hom.standard_simple", ic(l), nabla(k), [=](int r) { return E::standard_simple(k, l, r); });
      add("hom.standard_standard", delta(k), delta(l), [=](int r) { return E::standard_standard(k, l, r); });
      add("hom.standard_standard", nabla(l), nabla(k), [=](int r) { return E::standard_standard(k, l, r); });
      add("hom.simple_standard", ic(l), delta(k), [=](int r) { return E::simple_standard(l, k, r); });
      add("hom.simple_standard", nabla(k), ic(l), [=](int r) { return E::simple_standard(l, k, r); });
      if (k < n) add("hom.simple_projective", ic(l), proj(k), [=](int r) { return E::simple_projective(l, k, r); });
    }
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b) {
      add("hom.string_bottom_simple", zplus(a, b), ic(b), [=](int r) { return E::string_bottom(a, b, r); });
      add("hom.string_bottom_simple", ic(b), zminus(a, b), [=](int r) { return E::string_bottom(a, b, r); });
      add("hom.string_top_simple", zplus(a, b), ic(a), [=](int r) { return E::string_top(a, b, r); });
      add("hom.string_top_simple", ic(a), zminus(a, b), [=](int r) { return E::string_top(a, b, r); });
      for (int i = 1; a + i <= n; ++i)
        add("hom.string_top_simple_shift", zplus(a, b), ic(a + i),
            [=](int r) { return E::string_top_shift(a, b, i, r); });
      add("hom.simple_string", ic(b), zplus(a, b), [=](int r) { return E::simple_string(a, b, r); });
      add("hom.simple_string", zminus(a, b), ic(b), [=](int r) { return E::simple_string(a, b, r); });
      for (int i = 0; 2 * i < a - b; ++i) {
        add("hom.standard_string", delta(a - 2 * i), zplus(a, b), [=](int r) { return E::standard_string(i, r); });
        add("hom.standard_string", zminus(a, b), nabla(a - 2 * i), [=](int r) { return E::standard_string(i, r); });
      }
      add("hom.string_standard", zplus(a, b), delta(a), [=](int r) { return E::string_standard(a, b, r); });
      add("hom.string_standard", nabla(a), zminus(a, b), [=](int r) { return E::string_standard(a, b, r); });
      for (int i = 0; 2 * i <= a - b; ++i) {
        add("hom.string_string", zplus(a - 2 * i, b), zplus(a, b), [=](int r) { return E::string_string(a, b, i, r); });
        add("hom.string_string", zminus(a, b), zminus(a - 2 * i, b),
            [=](int r) { return E::string_string(a, b, i, r); });
      }
    }
  return finish("homtables", s, run_cases(cases, workers), t0);
}

// ----------------------------------------------------------------- extalgebra

SuiteResult suite_extalgebra(const Session& s, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  auto en = build_En(n);
  std::vector<Case> cases;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l)
      cases.push_back({"extalg.graded_dims", arrow(ic(k), ic(l)), [&s, en, n, k, l] {
                         std::vector<int> exp;
                         for (int r = 0; r <= 2 * n; ++r) exp.push_back(static_cast<int>(en->slice(l, k, r).size()));
                         auto got = s.ext_dims(ic(k), ic(l));
                         return std::vector<CheckRow>{
                             make_row("extalg.graded_dims", arrow(ic(k), ic(l)), got == exp, exp, got)};
                       }});
  // degree-1 class IC_u -> IC_v[1]
  auto eps = [&s](int u, int v) {
    auto b = ext_basis(s.ext_space(ic(u), ic(v)), 1);
    if (b.size() != 1) throw std::logic_error("degree-1 Ext between neighbours is not 1-dimensional");
    return b.front();
  };
  auto loop = [&s, eps](int k, int via) {
    return yoneda_compose(s.ext_space(ic(k), ic(k)), eps(via, k), eps(k, via));
  };
  cases.push_back({"extalg.loop_at_zero_vanishes", "IC0", [loop] {
                     auto c = loop(0, 1);
                     return std::vector<CheckRow>{
                         make_row("extalg.loop_at_zero_vanishes", "IC0->IC1->IC0", c.is_zero(), "zero",
                                  c.is_zero() ? "zero" : "nonzero")};
                   }});
  for (int k = 1; k <= n; ++k)
    cases.push_back({"extalg.loops_nonzero", "IC" + std::to_string(k), [loop, k, n] {
                       std::vector<CheckRow> rows;
                       std::vector<int> vias{k - 1};
                       if (k < n) vias.push_back(k + 1);
                       for (int via : vias) {
                         auto c = loop(k, via);
                         const std::string item = "IC" + std::to_string(k) + "->IC" + std::to_string(via) + "->IC" +
                                                  std::to_string(k);
                         rows.push_back(make_row("extalg.loops_nonzero", item, !c.is_zero(), "nonzero",
                                                 c.is_zero() ? "zero" : "nonzero"));
                       }
                       return rows;
                     }});
  // every basis path of E_n maps to a nonzero Yoneda product of degree-1 classes
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= n; ++l)
      cases.push_back({"extalg.paths_nonzero", arrow(ic(k), ic(l)), [&s, en, eps, k, l, n] {
                         std::vector<CheckRow> rows;
                         for (int r = 1; r <= 2 * n; ++r)
                           for (int m : en->slice(l, k, r)) {
                             const auto& mono = en->basis(m);
                             std::optional<ExtClass> acc;
                             int at = k;
                             for (int a : mono.arrows) {
                               const int to = en->quiver().arrows[a].target;
                               ExtClass e = eps(at, to);
                               acc = acc ? yoneda_compose(s.ext_space(ic(k), ic(to)), e, *acc) : e;
                               at = to;
                             }
                             const bool nz = !acc->is_zero();
                             rows.push_back(make_row("extalg.paths_nonzero", en->word(m), nz, "nonzero",
                                                     nz ? "nonzero" : "zero"));
                           }
                         return rows;
                       }});
  return finish("extalgebra", s, run_cases(cases, workers), t0);
}

// -------------------------------------------------------------------- strings

SuiteResult suite_strings(const Session& s, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  std::vector<Case> cases;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= a; ++b)
      for (auto tag : {zplus(a, b), zminus(a, b)})
        cases.push_back({"strings.plike", tag.str(), [&s, tag, a, b, n] {
                           const int k = expected::plike_degree(a, b);
                           auto prof = graded_end_ring_profile(s.complex(tag), 2 * n);
                           const bool ok = prof.pattern && prof.k == k && prof.max_power == k && prof.p_like;
                           nlohmann::json got{{"dims", prof.dims}, {"k", prof.k}, {"max_power", prof.max_power}};
                           nlohmann::json exp{{"k", k}, {"max_power", k}};
                           return std::vector<CheckRow>{make_row("strings.plike", tag.str(), ok, exp, got)};
                         }});
  return finish("strings", s, run_cases(cases, workers), t0);
}

// ------------------------------------------------------------------------- cy

SuiteResult suite_cy(const Session& s, int workers, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  std::vector<Case> cases;
  for (auto tag : s.census())
    cases.push_back({"cy.classification", tag.str(), [&s, tag, n, seed] {
                       std::vector<int> exp;
                       if (tag == zplus(n, n)) exp = {2 * n};
                       if (tag.kind == ObjectTag::Kind::P) exp = {0};
                       auto m = s.complex(tag);
                       auto dims = s.ext_dims(tag, tag);
                       std::vector<int> got;
                       std::vector<CheckRow> rows;
                       bool inconclusive = false;
                       nlohmann::json routes = nlohmann::json::object();
                       for (int d = 0; d <= 2 * n; ++d) {
                         if (dims[d] == 0) continue;
                         auto c = cy_check(m, d, seed);
                         routes[std::to_string(d)] = std::string(c.route) + ":" + to_string(c.status);
                         if (c.status == CyStatus::yes) got.push_back(d);
                         if (c.status == CyStatus::inconclusive) inconclusive = true;
                         if (c.route == "pairing") {
                           // the Serre route must agree whenever the pairing applies
                           auto iso = complexes_iso(serre(*m), minimal_perfect(shift(*m, d)), seed);
                           const bool agree = (iso.status == IsoStatus::certified) == (c.status == CyStatus::yes) &&
                                              iso.status != IsoStatus::inconclusive;
                           rows.push_back(make_row("cy.routes_agree", tag.str() + " d=" + std::to_string(d), agree,
                                                   to_string(c.status), to_string(iso.status)));
                         }
                       }
                       CheckRow row = make_row("cy.classification", tag.str(), got == exp, exp, got);
                       row.detail = routes.dump();
                       if (inconclusive && row.status == Status::fail) row.status = Status::inconclusive;
                       row.seed = seed;
                       rows.insert(rows.begin(), row);
                       return rows;
                     }});
  return finish("cy", s, run_cases(cases, workers), t0);
}

// ---------------------------------------------------------------------- serre

SuiteResult suite_serre(const Session& s, int workers, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  auto ctx = std::make_shared<const PTwistContext>(PTwistContext::for_top_simple(s.algebra()));
  std::vector<Case> cases;
  for (auto tag : s.census())
    cases.push_back({"serre.twist_equals_inverse_serre", tag.str(), [&s, ctx, tag, seed] {
                       auto x = s.complex(tag);
                       auto tw = p_twist(*ctx, x);
                       auto is = inverse_serre(*x);
                       std::vector<CheckRow> rows{
                           iso_row("serre.twist_equals_inverse_serre", tag.str(), tw, is, seed),
                           iso_row("serre.roundtrip", tag.str(), serre(is), *x, seed)};
                       return rows;
                     }});
  cases.push_back({"serre.twist_top_simple", "IC" + std::to_string(n), [&s, ctx, n, seed] {
                     auto e = s.complex(ic(n));
                     return std::vector<CheckRow>{iso_row("serre.twist_top_simple", "IC" + std::to_string(n),
                                                          p_twist(*ctx, e), shift(*e, -2 * n), seed)};
                   }});
  for (int k = 0; k <= n; ++k) {
    cases.push_back({"serre.twist_injective", "I" + std::to_string(k), [&s, ctx, k, seed] {
                       return std::vector<CheckRow>{iso_row("serre.twist_injective", "I" + std::to_string(k),
                                                            p_twist(*ctx, s.complex(inj(k))),
                                                            stalk(s.algebra(), {k}, 0), seed)};
                     }});
    cases.push_back({"serre.nakayama_on_projectives", "P" + std::to_string(k), [&s, k, seed] {
                       return std::vector<CheckRow>{iso_row("serre.nakayama_on_projectives", "P" + std::to_string(k),
                                                            serre(stalk(s.algebra(), {k}, 0)), *s.complex(inj(k)),
                                                            seed)};
                     }});
    cases.push_back({"serre.t_exact_on_simples", "IC" + std::to_string(k), [&s, ctx, k] {
                       auto tw = p_twist(*ctx, s.complex(ic(k)));
                       auto h = homology_dims(tw);
                       std::vector<int> degrees;
                       for (std::size_t i = 0; i < h.size(); ++i)
                         for (int dm : h[i])
                           if (dm > 0) {
                             degrees.push_back(tw.lo + static_cast<int>(i));
                             break;
                           }
                       const bool ok = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d >= 0; });
                       return std::vector<CheckRow>{make_row("serre.t_exact_on_simples", "IC" + std::to_string(k), ok,
                                                             "homology in degrees >= 0", degrees)};
                     }});
  }
  return finish("serre", s, run_cases(cases, workers), t0);
}

// --------------------------------------------------------------------- census

SuiteResult suite_census(const Session& s, int workers, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  const auto named = s.named_objects();
  const auto canon = s.census();
  std::vector<CheckRow> rows;

  // indecomposability of every named object
  std::vector<Case> cases;
  for (auto tag : named)
    cases.push_back({"census.indecomposable", tag.str(), [&s, tag] {
                       const bool ok = is_indecomposable(*s.module(tag));
                       return std::vector<CheckRow>{
                           make_row("census.indecomposable", tag.str(), ok, true, ok)};
                     }});
  // End* profiles of the canonical list
  std::vector<EndRingProfile> profiles(canon.size());
  std::vector<CyStatus> cy0(canon.size(), CyStatus::no), cy2(canon.size(), CyStatus::no);
  for (std::size_t i = 0; i < canon.size(); ++i)
    cases.push_back({"census.profile", canon[i].str(), [&, i] {
                       profiles[i] = graded_end_ring_profile(s.complex(canon[i]), 2 * n);
                       cy0[i] = cy_check(s.complex(canon[i]), 0, seed).status;
                       if (profiles[i].pattern && profiles[i].k == 1) cy2[i] = cy_check(s.complex(canon[i]), 2, seed).status;
                       return std::vector<CheckRow>{};
                     }});
  rows = run_cases(cases, workers);

  // isomorphism classes among the named objects
  std::vector<std::vector<ObjectTag>> classes;
  bool unknown = false;
  for (auto tag : named) {
    const auto& m = *s.module(tag);
    bool placed = false;
    for (auto& cls : classes) {
      const auto& rep = *s.module(cls.front());
      if (rep.dims() != m.dims()) continue;
      Tri t = isomorphic(rep, m, seed);
      if (t == Tri::unknown) unknown = true;
      if (t == Tri::yes) {
        cls.push_back(tag);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({tag});
  }
  const int expect_count = n + (n + 1) * (n + 1);
  nlohmann::json cls_json = nlohmann::json::array();
  for (const auto& cls : classes) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& t : cls) c.push_back(t.str());
    cls_json.push_back(c);
  }
  CheckRow count_row = make_row("census.class_count", "named objects", static_cast<int>(classes.size()) == expect_count,
                                expect_count, static_cast<int>(classes.size()));
  count_row.detail = cls_json.dump();
  if (unknown && count_row.status == Status::fail) count_row.status = Status::inconclusive;
  rows.push_back(count_row);

  auto class_of = [&](const ObjectTag& t) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (std::find(classes[i].begin(), classes[i].end(), t) != classes[i].end()) return static_cast<int>(i);
    return -1;
  };
  // identifications forced by the definitions
  std::vector<std::pair<ObjectTag, ObjectTag>> same;
  for (int a = 0; a <= n; ++a) {
    same.push_back({zplus(a, a), ic(a)});
    same.push_back({zminus(a, a), ic(a)});
    if (a >= 1) {
      same.push_back({zplus(a, a - 1), delta(a)});
      same.push_back({zminus(a, a - 1), nabla(a)});
    }
    if (a < n) same.push_back({proj(a), inj(a)});
  }
  same.push_back({delta(n), proj(n)});
  same.push_back({nabla(n), inj(n)});
  same.push_back({delta(0), ic(0)});
  same.push_back({nabla(0), ic(0)});
  for (const auto& [x, y] : same) {
    const bool ok = class_of(x) == class_of(y);
    rows.push_back(make_row("census.identifications", x.str() + "=" + y.str(), ok, true, ok));
  }
  // the canonical list hits every class exactly once
  {
    std::vector<int> hits(classes.size(), 0);
    for (const auto& t : canon) ++hits[class_of(t)];
    const bool ok = canon.size() == classes.size() && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    rows.push_back(make_row("census.canonical_list", "P_k, Z+(a,b), Z-(a,b)", ok, static_cast<int>(classes.size()),
                            static_cast<int>(canon.size())));
  }
  // P-like or 0-spherical; exceptional and 2-spherelike sets
  std::set<std::string> exceptional, exp_exceptional, spherelike2, exp_spherelike2, spherical2, exp_spherical2;
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const auto& tag = canon[i];
    const auto& p = profiles[i];
    const bool plike = p.pattern && p.p_like;
    const bool zero_spherelike = !p.dims.empty() && p.dims[0] == 2 &&
                                 std::all_of(p.dims.begin() + 1, p.dims.end(), [](int d) { return d == 0; });
    const bool zero_spherical = zero_spherelike && cy0[i] == CyStatus::yes;
    std::string kind = plike ? "P^" + std::to_string(p.k) + "-like" : (zero_spherical ? "0-spherical" : "neither");
    rows.push_back(make_row("census.plike_or_spherical", tag.str(), plike || zero_spherical, "P-like or 0-spherical",
                            kind));
    if (plike && p.k == 0) exceptional.insert(tag.str());
    if (plike && p.k == 1) spherelike2.insert(tag.str());
    if (plike && p.k == 1 && cy2[i] == CyStatus::yes) spherical2.insert(tag.str());
    const int c = class_of(tag);
    bool std_or_costd = false;
    for (int k = 0; k <= n; ++k) std_or_costd = std_or_costd || c == class_of(delta(k)) || c == class_of(nabla(k));
    if (std_or_costd) exp_exceptional.insert(tag.str());
    if (is_string(tag)) {
      const int a = tag.a, b = tag.b;
      if (a - b == 3 || (a == 2 && b == 0) || (a == 1 && b == 1)) exp_spherelike2.insert(tag.str());
      if (n == 1 && a == 1 && b == 1) exp_spherical2.insert(tag.str());
    }
  }
  rows.push_back(make_row("census.exceptional", "standards and costandards", exceptional == exp_exceptional,
                          exp_exceptional, exceptional));
  rows.push_back(make_row("census.two_spherelike", "strings", spherelike2 == exp_spherelike2, exp_spherelike2,
                          spherelike2));
  rows.push_back(make_row("census.two_spherical", "strings", spherical2 == exp_spherical2, exp_spherical2, spherical2));
  return finish("census", s, std::move(rows), t0);
}

// ----------------------------------------------------------------- structural

SuiteResult suite_structural(const Session& s, int workers, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  const int n = s.n();
  const auto canon = s.census();
  std::vector<Case> cases;

  for (auto tag : s.named_objects())
    cases.push_back({"struct.resolution", tag.str(), [&s, tag] {
                       std::vector<CheckRow> rows;
                       auto res = s.resolution(tag);
                       const auto& c = *res->complex;
                       c.validate();
                       rows.push_back(make_row("struct.d_squared", tag.str(), true, "d^2=0", "d^2=0"));
                       const auto& m = *s.module(tag);
                       auto h = homology_dims(c);
                       std::vector<std::vector<int>> exp(h.size(), std::vector<int>(m.dims().size(), 0));
                       if (!h.empty()) exp[0 - c.lo] = m.dims();
                       rows.push_back(make_row("struct.resolution_exact", tag.str(), h == exp, exp, h));
                       rows.push_back(make_row("struct.resolution_minimal", tag.str(), is_minimal(c), true,
                                               is_minimal(c)));
                       Tri t = isomorphic(dual(dual(m)), m, 1);
                       CheckRow d = make_row("struct.duality_involution", tag.str(), t == Tri::yes, "yes", to_string(t));
                       if (t == Tri::unknown) d.status = Status::inconclusive;
                       rows.push_back(d);
                       ObjectTag dt = dual_tag(tag);
                       Tri u = isomorphic(dual(m), *s.module(dt), 1);
                       CheckRow e = make_row("struct.duality_on_named", tag.str() + "->" + dt.str(), u == Tri::yes, "yes",
                                             to_string(u));
                       if (u == Tri::unknown) e.status = Status::inconclusive;
                       rows.push_back(e);
                       return rows;
                     }});
  for (auto x : canon)
    cases.push_back({"struct.complexes", x.str(), [&s, x] {
                       std::vector<CheckRow> rows;
                       auto c = s.complex(x);
                       auto sx = serre(*c);
                       auto isx = inverse_serre(*c);
                       sx.validate();
                       isx.validate();
                       auto cid = cone(identity_map(c));
                       auto h = homology_dims(cid);
                       const bool acyclic = std::all_of(h.begin(), h.end(), [](const std::vector<int>& v) {
                         return std::all_of(v.begin(), v.end(), [](int d) { return d == 0; });
                       });
                       const bool vanishes = minimal_perfect(cid).is_zero();
                       rows.push_back(make_row("struct.d_squared", "S,S^-1 of " + x.str(), true, "d^2=0", "d^2=0"));
                       rows.push_back(make_row("struct.cone_identity", x.str(), acyclic && vanishes, "acyclic, minimal 0",
                                               std::string(acyclic ? "acyclic" : "not acyclic") +
                                                   (vanishes ? ", minimal 0" : ", minimal nonzero")));
                       return rows;
                     }});
  for (auto x : canon)
    cases.push_back({"struct.ext_duality", x.str(), [&s, x, canon] {
                       std::vector<CheckRow> rows;
                       for (auto y : canon) {
                         auto a = s.ext_dims(x, y);
                         auto b = s.ext_dims(dual_tag(y), dual_tag(x));
                         rows.push_back(make_row("struct.ext_duality", arrow(x, y), a == b, a, b));
                       }
                       return rows;
                     }});
  if (n <= 2) {
    // Yoneda associativity on basis triples between simples, with inner
    // composites replaced by the chosen class representatives.
    for (int k = 0; k <= n; ++k)
      cases.push_back({"struct.yoneda_associativity", "from IC" + std::to_string(k), [&s, k, n] {
                         int checked = 0, bad = 0;
                         for (int l = 0; l <= n; ++l)
                           for (int m = 0; m <= n; ++m)
                             for (int p = 0; p <= n; ++p) {
                               auto s_kl = s.ext_space(ic(k), ic(l));
                               auto s_lm = s.ext_space(ic(l), ic(m));
                               auto s_mp = s.ext_space(ic(m), ic(p));
                               auto s_km = s.ext_space(ic(k), ic(m));
                               auto s_lp = s.ext_space(ic(l), ic(p));
                               auto s_kp = s.ext_space(ic(k), ic(p));
                               for (int r = 0; r <= 2 * n; ++r)
                                 for (int q = 0; r + q <= 2 * n; ++q)
                                   for (int u = 0; r + q + u <= 2 * n; ++u)
                                     for (const auto& f : ext_basis(s_kl, r))
                                       for (const auto& g : ext_basis(s_lm, q))
                                         for (const auto& h : ext_basis(s_mp, u)) {
                                           auto gf = yoneda_compose(s_km, g, f);
                                           auto gf_rep = ext_class(s_km, r + q, gf.coords());
                                           auto hg = yoneda_compose(s_lp, h, g);
                                           auto hg_rep = ext_class(s_lp, q + u, hg.coords());
                                           auto left = yoneda_compose(s_kp, h, gf_rep);
                                           auto right = yoneda_compose(s_kp, hg_rep, f);
                                           ++checked;
                                           if (left.coords() != right.coords()) ++bad;
                                         }
                             }
                         return std::vector<CheckRow>{make_row("struct.yoneda_associativity",
                                                               "from IC" + std::to_string(k), bad == 0, 0, bad,
                                                               std::to_string(checked) + " triples")};
                       }});
    for (auto x : canon)
      cases.push_back({"struct.serre_duality", x.str(), [&s, x, canon] {
                         std::vector<CheckRow> rows;
                         for (auto y : canon) {
                           auto c = serre_duality_check(s.complex(x), s.complex(y));
                           CheckRow r = make_row("struct.serre_duality", arrow(x, y), c.ok, c.lhs, c.rhs);
                           r.detail = "r from " + std::to_string(c.rlo);
                           rows.push_back(r);
                         }
                         return rows;
                       }});
  }
  (void)seed;
  return finish("structural", s, run_cases(cases, workers), t0);
}

// ------------------------------------------------------------------- plumbing

SuiteResult suite_plumbing(std::uint64_t seed, int count, int max_dim) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(0, max_dim), entry(-5, 5);
  std::map<std::string, int> failures;
  const std::vector<std::string> props{"rref_idempotent", "rank_is_pivot_count", "rank_nullity", "kernel_annihilated",
                                       "kernel_independent", "solve_round_trip", "solve_absent_iff_inconsistent"};
  for (const auto& p : props) failures[p] = 0;
  for (int it = 0; it < count; ++it) {
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(entry(rng));
    auto rr = rref(m);
    if (rref(rr.reduced).reduced != rr.reduced) ++failures["rref_idempotent"];
    const std::size_t rk = rank(m);
    if (rk != rr.pivots.size()) ++failures["rank_is_pivot_count"];
    Matrix k = kernel_basis(m);
    if (rk + k.cols() != c) ++failures["rank_nullity"];
    if (k.cols() > 0 && !(m * k).is_zero()) ++failures["kernel_annihilated"];
    if (rank(k) != k.cols()) ++failures["kernel_independent"];
    std::vector<Scalar> x0(c);
    for (auto& v : x0) v = Scalar(entry(rng));
    auto b = matvec(m, x0).col(0);
    if (r == 0) b.clear();
    auto sol = solve(m, b);
    if (!sol || matvec(m, *sol).col(0) != b) {
      if (r > 0) ++failures["solve_round_trip"];
    }
    std::vector<Scalar> b2(r);
    for (auto& v : b2) v = Scalar(entry(rng));
    auto sol2 = solve(m, b2);
    const bool consistent = r == 0 || rank(hstack(m, Matrix::column(b2))) == rk;
    if (sol2.has_value() != consistent || (sol2 && r > 0 && matvec(m, *sol2).col(0) != b2))
      ++failures["solve_absent_iff_inconsistent"];
  }
  SuiteResult out;
  out.name = "plumbing";
  for (const auto& p : props)
    out.rows.push_back(make_row("linalg." + p, std::to_string(count) + " random matrices", failures[p] == 0, 0,
                                failures[p]));
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ------------------------------------------------------------------------ run

SuiteResult run_suite(const std::string& name, const Session& s, const RunConfig& cfg) {
  if (name == "homtables") return suite_homtables(s, cfg.workers);
  if (name == "extalgebra") return suite_extalgebra(s, cfg.workers);
  if (name == "strings") return suite_strings(s, cfg.workers);
  if (name == "cy") return suite_cy(s, cfg.workers, cfg.seed);
  if (name == "serre") return suite_serre(s, cfg.workers, cfg.seed);
  if (name == "census") return suite_census(s, cfg.workers, cfg.seed);
  if (name == "structural") return suite_structural(s, cfg.workers, cfg.seed);
  if (name == "plumbing") {
    auto r = suite_plumbing(cfg.seed);
    r.n = s.n();
    return r;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

bool Report::ok() const {
  for (const auto& s : suites) {
    if (s.count(Status::fail) > 0) return false;
    if (!config.allow_inconclusive && s.count(Status::inconclusive) > 0) return false;
  }
  return true;
}

Report run(const RunConfig& cfg) {
  FieldScope field(cfg.prime);
  Report rep;
  rep.config = cfg;
  Session s(cfg.n);
  for (const auto& name : cfg.suites) {
    try {
      rep.suites.push_back(run_suite(name, s, cfg));
    } catch (const std::exception& e) {
      SuiteResult r;
      r.name = name;
      r.n = cfg.n;
      r.rows.push_back(make_row("suite.setup", name, false, "ran", "exception", e.what()));
      rep.suites.push_back(std::move(r));
    }
  }
  return rep;
}

// --------------------------------------------------------------------- output

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["schema_version"] = report_schema_version;
  j["tool"] = "pervpn";
  j["config"] = {{"n", r.config.n},
                 {"field", r.config.prime == 0 ? "rationals" : "prime " + std::to_string(r.config.prime)},
                 {"suites", r.config.suites},
                 {"seed", r.config.seed},
                 {"allow_inconclusive", r.config.allow_inconclusive}};
  j["advisory"] = r.advisory();
  if (r.advisory()) j["advisory_note"] = "positive characteristic; expected values assume characteristic 0";
  j["ok"] = r.ok();
  j["suites"] = nlohmann::json::array();
  for (const auto& s : r.suites) {
    nlohmann::json sj{{"name", s.name},
                      {"n", s.n},
                      {"passed", s.count(Status::pass)},
                      {"failed", s.count(Status::fail)},
                      {"inconclusive", s.count(Status::inconclusive)}};
    if (r.config.timings) sj["seconds"] = s.seconds;
    sj["rows"] = nlohmann::json::array();
    for (const auto& row : s.rows) {
      nlohmann::json rj{{"check", row.check},
                        {"item", row.item},
                        {"status", to_string(row.status)},
                        {"expected", row.expected},
                        {"computed", row.computed}};
      if (!row.detail.empty()) rj["detail"] = row.detail;
      if (row.seed != 0) rj["seed"] = row.seed;
      sj["rows"].push_back(rj);
    }
    j["suites"].push_back(sj);
  }
  return j;
}

namespace {

std::string compact(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Rows whose values are per-degree vectors become tables: one line per r, one
// column per item.
bool render_degree_table(std::ostringstream& os, const SuiteResult& s, const std::string& check) {
  std::vector<const CheckRow*> rows;
  for (const auto& r : s.rows)
    if (r.check == check) rows.push_back(&r);
  if (rows.empty()) return false;
  for (const auto* r : rows)
    if (!r->computed.is_array() || !r->expected.is_array() || r->computed.size() != r->expected.size() ||
        (!r->computed.empty() && !r->computed[0].is_number()))
      return false;
  os << "# " << s.name << "\t" << check << "\n" << "r";
  for (const auto* r : rows) os << "\t" << r->item;
  os << "\n";
  const std::size_t len = rows.front()->computed.size();
  for (std::size_t d = 0; d < len; ++d) {
    os << d;
    for (const auto* r : rows) {
      os << "\t";
      if (d < r->computed.size()) {
        os << r->computed[d].dump();
        if (r->computed[d] != r->expected[d]) os << "!" << r->expected[d].dump();
      }
    }
    os << "\n";
  }
  os << "\n";
  return true;
}

}  // namespace

std::string render(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  if (format == "tsv") {
    for (const auto& s : r.suites) {
      std::vector<std::string> checks;
      for (const auto& row : s.rows)
        if (std::find(checks.begin(), checks.end(), row.check) == checks.end()) checks.push_back(row.check);
      std::vector<std::string> rest;
      for (const auto& c : checks)
        if (!render_degree_table(os, s, c)) rest.push_back(c);
      if (rest.empty()) continue;
      os << "# " << s.name << "\n" << "check\titem\tstatus\texpected\tcomputed\n";
      for (const auto& row : s.rows)
        if (std::find(rest.begin(), rest.end(), row.check) != rest.end())
          os << row.check << "\t" << row.item << "\t" << to_string(row.status) << "\t" << compact(row.expected)
             << "\t" << compact(row.computed) << "\n";
      os << "\n";
    }
    return os.str();
  }
  if (format != "text") throw std::invalid_argument("unknown format: " + format);
  os << "pervpn report  n=" << r.config.n
     << "  field=" << (r.config.prime == 0 ? std::string("rationals") : "F_" + std::to_string(r.config.prime))
     << "  seed=" << r.config.seed << "\n";
  if (r.advisory()) os << "ADVISORY: positive characteristic; expected values assume characteristic 0\n";
  for (const auto& s : r.suites) {
    os << "\n[" << s.name << "] pass " << s.count(Status::pass) << "  fail " << s.count(Status::fail)
       << "  inconclusive " << s.count(Status::inconclusive);
    if (r.config.timings) os << "  (" << s.seconds << " s)";
    os << "\n";
    std::map<std::string, std::pair<int, int>> per_check;
    for (const auto& row : s.rows) {
      auto& pc = per_check[row.check];
      ++pc.second;
      if (row.status == Status::pass) ++pc.first;
    }
    for (const auto& [c, pc] : per_check) os << "  " << c << ": " << pc.first << "/" << pc.second << "\n";
    for (const auto& row : s.rows)
      if (row.status != Status::pass)
        os << "  " << to_string(row.status) << " " << row.check << " " << row.item << "  expected "
           << compact(row.expected) << "  computed " << compact(row.computed)
           << (row.detail.empty() ? "" : "  (" + row.detail + ")") << "\n";
  }
  os << "\n" << (r.ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace pervpn

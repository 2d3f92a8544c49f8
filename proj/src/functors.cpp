#include "pervpn/functors.hpp"

#include <map>
#include <stdexcept>

namespace pervpn {

namespace {

int top_vertex(const ProjComplex& x) { return x.alg->num_vertices() - 1; }

}  // namespace

ProjComplex serre(const ProjComplex& x) {
  if (x.is_zero()) return zero_complex(x.alg);
  auto rep = proj_replacement(realize_injective(x), 2 * top_vertex(x) + 2);
  return minimal_perfect(*rep.complex);
}

ProjComplex inverse_serre(const ProjComplex& x) {
  if (x.is_zero()) return zero_complex(x.alg);
  auto rep = proj_replacement(realize_injective(dualdata(x)), 2 * top_vertex(x) + 2);
  return minimal_perfect(dualdata(*rep.complex));
}

std::vector<int> hom_dims(const std::shared_ptr<const ProjComplex>& x, const std::shared_ptr<const ProjComplex>& y,
                          int rlo, int rhi) {
  GradedHom h(x, realize(*y), rlo, rhi, false);
  std::vector<int> out;
  for (int r = rlo; r <= rhi; ++r) out.push_back(h.cohomology_dim(r));
  return out;
}

DualityCheck serre_duality_check(const std::shared_ptr<const ProjComplex>& x,
                                 const std::shared_ptr<const ProjComplex>& y) {
  auto sx = std::make_shared<const ProjComplex>(serre(*x));
  auto [l1, h1] = hom_range(*x, *y);
  auto [l2, h2] = hom_range(*y, *sx);
  DualityCheck out;
  out.rlo = std::min(l1, -h2);
  const int rhi = std::max(h1, -l2);
  out.lhs = hom_dims(x, y, out.rlo, rhi);
  auto raw = hom_dims(y, sx, -rhi, -out.rlo);
  out.rhs.assign(raw.rbegin(), raw.rend());
  out.ok = out.lhs == out.rhs;
  return out;
}

const char* to_string(CyStatus s) {
  switch (s) {
    case CyStatus::yes:
      return "yes";
    case CyStatus::no:
      return "no";
    case CyStatus::inconclusive:
      return "inconclusive";
    default:
      return "not_applicable";
  }
}

CyResult cy_pairing(const std::shared_ptr<const ProjComplex>& m, int d) {
  CyResult res;
  res.route = "pairing";
  auto end = hom_complex(m, m, d, d, true);
  if (end->cohomology_dim(d) != 1) {
    res.status = CyStatus::not_applicable;
    res.detail = "dim Hom(M,M[" + std::to_string(d) + "]) = " + std::to_string(end->cohomology_dim(d));
    return res;
  }
  const auto& alg = m->alg;
  for (int k = 0; k < alg->num_vertices(); ++k) {
    auto pk = std::make_shared<const ProjComplex>(stalk(alg, {k}, 0));
    auto [lo1, hi1] = hom_range(*pk, *m);
    auto [lo2, hi2] = hom_range(*m, *pk);
    const int rlo = std::min(lo1, d - hi2), rhi = std::max(hi1, d - lo2);
    auto to_m = hom_complex(pk, m, rlo, rhi, true);
    auto from_m = hom_complex(m, pk, d - rhi, d - rlo, true);
    for (int r = rlo; r <= rhi; ++r) {
      auto g = ext_basis(to_m, r);
      auto f = ext_basis(from_m, d - r);
      if (g.size() != f.size()) {
        res.status = CyStatus::no;
        res.detail = "P" + std::to_string(k) + ", r=" + std::to_string(r) + ": dims " + std::to_string(g.size()) +
                     " vs " + std::to_string(f.size());
        return res;
      }
      if (g.empty()) continue;
      Matrix gram(g.size(), f.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
          gram(i, j) = end->class_coords(d, end->coords(compose(g[i].rep, f[j].rep)))[0];
      if (determinant(gram).is_zero()) {
        res.status = CyStatus::no;
        res.detail = "P" + std::to_string(k) + ", r=" + std::to_string(r) + ": degenerate pairing";
        return res;
      }
    }
  }
  res.status = CyStatus::yes;
  return res;
}

CyResult cy_check(const std::shared_ptr<const ProjComplex>& m, int d, std::uint64_t seed) {
  CyResult res = cy_pairing(m, d);
  if (res.status != CyStatus::not_applicable) return res;
  const std::string why = res.detail;
  res.route = "serre";
  auto iso = complexes_iso(serre(*m), minimal_perfect(shift(*m, d)), seed);
  switch (iso.status) {
    case IsoStatus::certified:
      res.status = CyStatus::yes;
      break;
    case IsoStatus::refuted:
      res.status = CyStatus::no;
      break;
    default:
      res.status = CyStatus::inconclusive;
  }
  res.detail = why + "; " + iso.reason;
  return res;
}

// ------------------------------------------------------------------ P-twist

PTwistContext::PTwistContext(std::shared_ptr<const ProjComplex> e, ChainMap t, int k)
    : e_(std::move(e)), t_(std::move(t)), k_(k) {
  if (t_.degree != 2 || !is_closed(t_)) throw std::invalid_argument("t must be a closed map of degree 2");
}

PTwistContext PTwistContext::for_top_simple(const AlgebraPtr& alg) {
  const int n = alg->num_vertices() - 1;
  auto res = minimal_proj_resolution(simple(alg, n), 2 * n);
  auto h = hom_complex(res.complex, res.complex, 0, 2 * n, true);
  if (h->cohomology_dim(2) != 1) throw std::runtime_error("degree-2 endomorphisms of the top simple are not 1-dimensional");
  ChainMap t = ext_basis(h, 2).front().rep;
  ChainMap power = t;
  for (int m = 2; m <= n; ++m) power = compose(power, t);
  if (h->is_coboundary(2 * n, h->coords(power))) throw std::runtime_error("t^n vanishes; t is not a generator");
  return PTwistContext(res.complex, std::move(t), n);
}

namespace {

struct Coordinate {
  int src_degree;
  int summand;
  std::size_t local;
};

}  // namespace

ProjComplex p_twist(const PTwistContext& ctx, const std::shared_ptr<const ProjComplex>& x, PTwistTrace* trace) {
  const auto& E = *ctx.e();
  const auto& alg = *E.alg;
  if (x->is_zero()) return zero_complex(E.alg);
  auto [lo, hi] = hom_range(E, *x);
  auto v = hom_complex(ctx.e(), x, lo - 2, hi + 2, false);

  CochainComplex vc;
  vc.lo = lo;
  for (int r = lo; r <= hi; ++r) vc.dims.push_back(v->dim(r));
  for (int r = lo; r < hi; ++r) vc.diffs.push_back(v->complex().diff(r));
  int total = 0;
  for (int dm : vc.dims) total += dm;
  if (trace) trace->hom_dim = total;
  if (total == 0) {
    ProjComplex out = *x;
    out.trim();
    return minimal_perfect(out);
  }

  TensorResult tr = tensor_ghom(vc, E);
  const TensorLayout& lay = tr.layout;
  auto tp = std::make_shared<const ProjComplex>(tr.complex);
  const ProjComplex& T = *tp;
  if (trace) trace->tensor_summands = T.total_summands();

  std::map<int, Matrix> tstar;
  for (int r = lo; r <= hi; ++r) tstar.emplace(r, v->precompose(ctx.t(), r));

  // Psi = t* (x) 1 - 1 (x) t, degree 2
  ChainMap psi = zero_map(tp, tp, 2);
  for (int d = T.lo; d <= T.hi(); ++d) {
    auto& blk = psi.blocks[d - T.lo];
    for (const auto& b : lay.blocks[d - lay.lo]) {
      const auto& es = E.term(b.j);
      const Matrix& ts = tstar.at(b.i);
      const AlgMatrix tb = ctx.t().block(b.j);
      const auto& es2 = E.term(b.j + 2);
      for (int xi = 0; xi < b.nx; ++xi)
        for (int s = 0; s < b.ns; ++s) {
          const std::size_t col = b.offset + static_cast<std::size_t>(xi) * b.ns + s;
          for (int x2 = 0; x2 < vc.dim(b.i + 2); ++x2)
            if (!ts(x2, xi).is_zero())
              blk(lay.index(d + 2, b.i + 2, x2, b.j, s), col) += AlgElem::basis(alg.idempotent(es[s]), ts(x2, xi));
          for (std::size_t s2 = 0; s2 < es2.size(); ++s2)
            if (!tb(s2, s).is_zero()) blk(lay.index(d + 2, b.i, xi, b.j + 2, static_cast<int>(s2)), col) -= tb(s2, s);
        }
    }
  }

  // evaluation T -> X
  std::map<int, std::vector<Coordinate>> coord_of;
  for (int r = lo; r <= hi; ++r) {
    std::vector<Coordinate> c(v->dim(r));
    for (const auto& b : v->layout(r))
      for (int q = 0; q < b.dim; ++q) c[b.offset + q] = {b.src_degree, b.summand, static_cast<std::size_t>(q)};
    coord_of.emplace(r, std::move(c));
  }
  ChainMap ev = zero_map(tp, x, 0);
  for (int d = T.lo; d <= T.hi(); ++d) {
    auto& blk = ev.blocks[d - T.lo];
    const auto& xt = x->term(d);
    for (const auto& b : lay.blocks[d - lay.lo]) {
      const auto& es = E.term(b.j);
      const auto& coords = coord_of.at(b.i);
      for (int xi = 0; xi < b.nx; ++xi) {
        const Coordinate& c = coords[xi];
        if (c.src_degree != b.j) continue;
        const int k = es[c.summand];
        std::size_t q = c.local;
        for (std::size_t t = 0; t < xt.size(); ++t) {
          const auto& sl = alg.slice(k, xt[t]);
          if (q < sl.size()) {
            blk(t, b.offset + static_cast<std::size_t>(xi) * b.ns + c.summand) = AlgElem::basis(sl[q]);
            break;
          }
          q -= sl.size();
        }
      }
    }
  }
  if (!is_closed(ev) || !is_closed(psi)) throw std::logic_error("evaluation or Psi is not a chain map");
  if (!compose(ev, psi).is_zero()) throw std::logic_error("evaluation does not kill Psi");

  auto shifted = std::make_shared<const ProjComplex>(shift(T, -2));
  ChainMap psi0{shifted, tp, 0, psi.blocks};
  auto c1 = std::make_shared<const ProjComplex>(cone(psi0));

  // ev on the second summand of the cone, zero on the first
  ChainMap evbar = zero_map(c1, x, 0);
  for (int d = c1->lo; d <= c1->hi(); ++d) {
    const std::size_t a = T.term(d - 1).size();
    const AlgMatrix e = ev.block(d);
    auto& blk = evbar.blocks[d - c1->lo];
    for (std::size_t r = 0; r < e.rows(); ++r)
      for (std::size_t c = 0; c < e.cols(); ++c) blk(r, a + c) = e(r, c);
  }
  ProjComplex c2 = cone(evbar);
  if (trace) trace->cone_summands = c2.total_summands();
  return minimal_perfect(c2);
}

}  // namespace pervpn

#include "pervpn/homalg.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace pervpn {

Matrix CochainComplex::diff(int d) const {
  if (d >= lo && d < hi()) return diffs[d - lo];
  return Matrix(dim(d + 1), dim(d));
}

// ---------------------------------------------------------------- GradedHom

GradedHom::GradedHom(std::shared_ptr<const ProjComplex> p, ModuleComplex x, int rlo, int rhi, bool with_bases)
    : p_(std::move(p)), x_(std::move(x)), rlo_(rlo), rhi_(rhi), lo_(rlo - 1), with_bases_(with_bases) {
  if (rhi < rlo) throw std::invalid_argument("empty degree window");
  const ProjComplex& P = *p_;
  c_.lo = lo_;
  for (int r = lo_; r <= rhi_ + 1; ++r) {
    std::vector<Block> lay;
    std::vector<std::vector<std::size_t>> offs;
    std::size_t off = 0;
    for (int i = P.lo; i <= P.hi(); ++i) {
      std::vector<std::size_t> per;
      const auto& t = P.term(i);
      for (std::size_t s = 0; s < t.size(); ++s) {
        int d = x_.term(i + r).dim(t[s]);
        lay.push_back({i, static_cast<int>(s), off, d});
        per.push_back(off);
        off += d;
      }
      offs.push_back(std::move(per));
    }
    layouts_.push_back(std::move(lay));
    block_offsets_.push_back(std::move(offs));
    c_.dims.push_back(static_cast<int>(off));
  }
  for (int r = lo_; r <= rhi_; ++r) {
    Matrix delta(c_.dim(r + 1), c_.dim(r));
    const Scalar sign = (r % 2 == 0) ? Scalar(-1) : Scalar(1);  // -(-1)^r
    for (const auto& b : layout(r)) {
      if (b.dim == 0) continue;
      const int k = P.term(b.src_degree)[b.summand];
      const int xd = b.src_degree + r;
      delta.add_block(offset(r + 1, b.src_degree, b.summand), b.offset, x_.diff(xd, k));
      if (b.src_degree - 1 < P.lo) continue;
      const AlgMatrix dp = P.diff(b.src_degree - 1);
      const auto& prev = P.term(b.src_degree - 1);
      for (std::size_t s2 = 0; s2 < prev.size(); ++s2) {
        const AlgElem& e = dp(b.summand, s2);
        if (e.is_zero()) continue;
        Matrix a = x_.term(xd).act(e, k, prev[s2]);
        delta.add_block(offset(r + 1, b.src_degree - 1, static_cast<int>(s2)), b.offset, a, sign);
      }
    }
    c_.diffs.push_back(std::move(delta));
  }
  for (int r = lo_; r <= rhi_; ++r) ranks_.push_back(static_cast<int>(rank(c_.diffs[r - lo_])));
  if (with_bases_) {
    for (int r = rlo_; r <= rhi_; ++r) {
      CohomologyBasis cb;
      Matrix z = kernel_basis(c_.diff(r));
      cb.boundaries = column_space(c_.diff(r - 1));
      cb.reps = z.select_cols(extend_basis(cb.boundaries, z));
      bases_.push_back(std::move(cb));
    }
  }
}

int GradedHom::cohomology_dim(int r) const {
  if (r < rlo_ || r > rhi_) throw std::out_of_range("degree outside the computed window");
  return c_.dim(r) - ranks_[r - lo_] - ranks_[r - 1 - lo_];
}

const CohomologyBasis& GradedHom::cohomology(int r) const {
  if (!with_bases_) throw std::logic_error("hom complex built without cohomology bases");
  if (r < rlo_ || r > rhi_) throw std::out_of_range("degree outside the computed window");
  return bases_[r - rlo_];
}

const std::vector<GradedHom::Block>& GradedHom::layout(int r) const {
  if (r < lo_ || r > rhi_ + 1) throw std::out_of_range("degree outside the stored window");
  return layouts_[r - lo_];
}

std::size_t GradedHom::offset(int r, int src_degree, int summand) const {
  if (r < lo_ || r > rhi_ + 1) throw std::out_of_range("degree outside the stored window");
  return block_offsets_[r - lo_][src_degree - p_->lo][summand];
}

bool GradedHom::is_cocycle(int r, const std::vector<Scalar>& v) const {
  return matvec(c_.diff(r), v).is_zero();
}

bool GradedHom::is_coboundary(int r, const std::vector<Scalar>& v) const {
  const auto& b = cohomology(r).boundaries;
  if (b.cols() == 0) return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  return solve(b, v).has_value();
}

std::vector<Scalar> GradedHom::class_coords(int r, const std::vector<Scalar>& v) const {
  const auto& cb = cohomology(r);
  auto sol = solve(hstack(cb.boundaries, cb.reps), v);
  if (!sol) throw std::invalid_argument("vector is not a cocycle");
  return std::vector<Scalar>(sol->begin() + cb.boundaries.cols(), sol->end());
}

ChainMap GradedHom::to_chain_map(int r, const std::vector<Scalar>& v) const {
  if (!target_proj) throw std::logic_error("target is not a complex of projectives");
  const auto& alg = *p_->alg;
  const ProjComplex& Q = *target_proj;
  ChainMap f = zero_map(p_, target_proj, r);
  for (const auto& b : layout(r)) {
    const int k = p_->term(b.src_degree)[b.summand];
    const auto& tv = Q.term(b.src_degree + r);
    std::size_t off = b.offset;
    auto& blk = f.blocks[b.src_degree - p_->lo];
    for (std::size_t t = 0; t < tv.size(); ++t) {
      blk(t, b.summand) = alg.from_slice_coords(v, off, k, tv[t]);
      off += alg.slice(k, tv[t]).size();
    }
  }
  return f;
}

std::vector<Scalar> GradedHom::coords(const ChainMap& f) const {
  if (!target_proj) throw std::logic_error("target is not a complex of projectives");
  const auto& alg = *p_->alg;
  const ProjComplex& Q = *target_proj;
  const int r = f.degree;
  std::vector<Scalar> v(c_.dim(r));
  for (const auto& b : layout(r)) {
    const int k = p_->term(b.src_degree)[b.summand];
    const auto& tv = Q.term(b.src_degree + r);
    std::size_t off = b.offset;
    AlgMatrix blk = f.block(b.src_degree);
    for (std::size_t t = 0; t < tv.size(); ++t) {
      auto c = alg.slice_coords(blk(t, b.summand), k, tv[t]);
      for (std::size_t j = 0; j < c.size(); ++j) v[off + j] = c[j];
      off += c.size();
    }
  }
  return v;
}

Matrix GradedHom::precompose(const ChainMap& t, int r) const {
  const int e = t.degree;
  const ProjComplex& P = *p_;
  Matrix out(c_.dim(r + e), c_.dim(r));
  for (const auto& b : layout(r)) {
    if (b.dim == 0) continue;
    const int k = P.term(b.src_degree)[b.summand];
    const int i2 = b.src_degree - e;
    if (i2 < P.lo || i2 > P.hi()) continue;
    const AlgMatrix blk = t.block(i2);
    const auto& src = P.term(i2);
    for (std::size_t s2 = 0; s2 < src.size(); ++s2) {
      const AlgElem& x = blk(b.summand, s2);
      if (x.is_zero()) continue;
      out.add_block(offset(r + e, i2, static_cast<int>(s2)), b.offset,
                    x_.term(b.src_degree + r).act(x, k, src[s2]));
    }
  }
  return out;
}

std::shared_ptr<const GradedHom> hom_complex(std::shared_ptr<const ProjComplex> p, const ModuleComplex& x, int rlo,
                                             int rhi, bool with_bases) {
  return std::make_shared<const GradedHom>(std::move(p), x, rlo, rhi, with_bases);
}

std::shared_ptr<const GradedHom> hom_complex(std::shared_ptr<const ProjComplex> p, std::shared_ptr<const ProjComplex> q,
                                             int rlo, int rhi, bool with_bases) {
  auto h = std::make_shared<GradedHom>(std::move(p), realize(*q), rlo, rhi, with_bases);
  h->target_proj = std::move(q);
  return h;
}

std::pair<int, int> hom_range(const ProjComplex& p, const ProjComplex& q) {
  if (p.is_zero() || q.is_zero()) return {0, 0};
  return {q.lo - p.hi(), q.hi() - p.lo};
}

// ------------------------------------------------------------- replacement

namespace {

struct Level {
  std::vector<int> verts;
  std::vector<std::vector<Scalar>> gens;
  AlgMatrix d;  // to the next degree
  Module realized;
  std::vector<Matrix> d_real;
};

Matrix generator_map(const Module& y, const Level& lvl, int v) {
  const auto& alg = *y.algebra();
  std::size_t cols = 0;
  for (int k : lvl.verts) cols += alg.slice(v, k).size();
  Matrix m(y.dim(v), cols);
  std::size_t c = 0;
  for (std::size_t t = 0; t < lvl.verts.size(); ++t) {
    Matrix g = Matrix::column(lvl.gens[t]);
    for (int mono : alg.slice(v, lvl.verts[t])) m.set_block(0, c++, y.monomial_action(mono) * g);
  }
  return m;
}

}  // namespace

Replacement proj_replacement(const ModuleComplex& y, int max_below) {
  const AlgebraPtr& alg = y.alg;
  const int V = alg->num_vertices();
  Replacement out;
  if (y.terms.empty()) {
    out.complex = std::make_shared<const ProjComplex>(zero_complex(alg));
    return out;
  }
  std::map<int, Level> levels;
  const Module zero = Module::zero(alg);
  for (int i = y.hi();; --i) {
    if (i < y.lo - max_below - 1)
      throw std::runtime_error("projective replacement does not stop within the degree bound");
    const Module& yi = y.term(i);
    const Level* nxt = levels.count(i + 1) ? &levels.at(i + 1) : nullptr;
    const Module& pn = nxt ? nxt->realized : zero;
    const Module& ynext = y.term(i + 1);
    const Level* nn = levels.count(i + 2) ? &levels.at(i + 2) : nullptr;
    const Module& pnn = nn ? nn->realized : zero;
    Module w = direct_sum(yi, pn);
    Module u = direct_sum(ynext, pnn);
    std::vector<Matrix> maps;
    for (int v = 0; v < V; ++v) {
      Matrix m(u.dim(v), w.dim(v));
      m.set_block(0, 0, y.diff(i, v));
      if (nxt) {
        m.add_block(0, yi.dim(v), generator_map(ynext, *nxt, v), Scalar(-1));
        if (nn) m.set_block(ynext.dim(v), yi.dim(v), nxt->d_real[v]);
      }
      maps.push_back(std::move(m));
    }
    auto z = kernel(Morphism{w, u, std::move(maps)});
    if (i < y.lo && z.module.is_zero()) break;
    auto cover = projective_cover(z.module);
    Level lvl;
    lvl.verts = cover.vertices;
    lvl.d = AlgMatrix(nxt ? nxt->verts.size() : 0, lvl.verts.size());
    for (std::size_t j = 0; j < lvl.verts.size(); ++j) {
      const int k = lvl.verts[j];
      auto wv = matvec(z.inclusion.maps[k], cover.generators[j]).col(0);
      lvl.gens.emplace_back(wv.begin(), wv.begin() + yi.dim(k));
      if (!nxt) continue;
      std::vector<Scalar> p(wv.begin() + yi.dim(k), wv.end());
      std::size_t off = 0;
      for (std::size_t t = 0; t < nxt->verts.size(); ++t) {
        lvl.d(t, j) = alg->from_slice_coords(p, off, k, nxt->verts[t]);
        off += alg->slice(k, nxt->verts[t]).size();
      }
    }
    lvl.realized = projective_sum(alg, lvl.verts);
    for (int v = 0; v < V; ++v)
      lvl.d_real.push_back(nxt ? realized_map(*alg, lvl.d, lvl.verts, nxt->verts, v)
                               : Matrix(0, lvl.realized.dim(v)));
    levels.emplace(i, std::move(lvl));
  }
  // Drop empty levels at both ends.
  while (!levels.empty() && levels.begin()->second.verts.empty()) levels.erase(levels.begin());
  while (!levels.empty() && std::prev(levels.end())->second.verts.empty()) levels.erase(std::prev(levels.end()));
  ProjComplex c;
  c.alg = alg;
  if (!levels.empty()) {
    c.lo = levels.begin()->first;
    for (auto& [deg, lvl] : levels) {
      c.terms.push_back(lvl.verts);
      out.generators.push_back(lvl.gens);
      if (deg > c.lo) {
        // The differential into this degree lives on the level below.
        c.diffs.push_back(levels.at(deg - 1).d);
      }
    }
  }
  c.validate();
  out.complex = std::make_shared<const ProjComplex>(std::move(c));
  return out;
}

Replacement minimal_proj_resolution(const Module& m, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("maxdeg must be non-negative");
  return proj_replacement(stalk(m), maxdeg);
}

std::vector<int> ext_dims(const Module& m, const Module& n, int rmax) {
  const int gd = 2 * (m.algebra()->num_vertices() - 1);
  auto res = minimal_proj_resolution(m, gd);
  GradedHom h(res.complex, stalk(n), 0, rmax, false);
  std::vector<int> out;
  for (int r = 0; r <= rmax; ++r) out.push_back(h.cohomology_dim(r));
  return out;
}

// -------------------------------------------------------------- minimality

namespace {

AlgElem corner_inverse(const PathAlgebra& alg, const AlgElem& x, int k) {
  Matrix m = alg.left_mult_matrix(x, k, k, k);
  auto e = alg.slice_coords(AlgElem::basis(alg.idempotent(k)), k, k);
  auto sol = solve(m, e);
  if (!sol) throw std::logic_error("corner element is not invertible");
  return alg.from_slice_coords(*sol, 0, k, k);
}

bool invertible_entry(const PathAlgebra& alg, const AlgElem& x, int k) {
  return !x.coeff(alg.idempotent(k)).is_zero();
}

}  // namespace

bool is_minimal(const ProjComplex& c) {
  const auto& alg = *c.alg;
  for (int d = c.lo; d < c.hi(); ++d) {
    const AlgMatrix m = c.diff(d);
    const auto& src = c.term(d);
    const auto& tgt = c.term(d + 1);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t s = 0; s < src.size(); ++s)
        if (src[s] == tgt[r] && invertible_entry(alg, m(r, s), src[s])) return false;
  }
  return true;
}

ProjComplex minimal_perfect(const ProjComplex& input) {
  const auto& alg = *input.alg;
  if (input.is_zero()) return zero_complex(input.alg);
  const int n = static_cast<int>(input.terms.size());
  std::vector<std::vector<int>> terms = input.terms;
  std::vector<AlgMatrix> diffs = input.diffs;
  std::vector<std::vector<char>> alive;
  for (const auto& t : terms) alive.emplace_back(t.size(), 1);

  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      AlgMatrix& d = diffs[i];
      const auto& src = terms[i];
      const auto& tgt = terms[i + 1];
      for (std::size_t c = 0; c < src.size(); ++c) {
        if (!alive[i][c]) continue;
        for (std::size_t r = 0; r < tgt.size(); ++r) {
          if (!alive[i + 1][r] || src[c] != tgt[r] || !invertible_entry(alg, d(r, c), src[c])) continue;
          const AlgElem xinv = corner_inverse(alg, d(r, c), src[c]);
          std::vector<std::pair<std::size_t, AlgElem>> beta;  // row r, other columns
          std::vector<std::pair<std::size_t, AlgElem>> gamma;  // column c, other rows
          for (std::size_t c2 = 0; c2 < src.size(); ++c2)
            if (c2 != c && alive[i][c2] && !d(r, c2).is_zero()) beta.emplace_back(c2, alg.mul(d(r, c2), xinv));
          for (std::size_t r2 = 0; r2 < tgt.size(); ++r2)
            if (r2 != r && alive[i + 1][r2] && !d(r2, c).is_zero()) gamma.emplace_back(r2, d(r2, c));
          for (const auto& [c2, bx] : beta)
            for (const auto& [r2, g] : gamma) d(r2, c2) -= alg.mul(bx, g);
          alive[i][c] = 0;
          alive[i + 1][r] = 0;
          progress = true;
          break;
        }
      }
    }
  }
  ProjComplex out;
  out.alg = input.alg;
  out.lo = input.lo;
  std::vector<std::vector<std::size_t>> keep(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> t;
    for (std::size_t s = 0; s < terms[i].size(); ++s)
      if (alive[i][s]) {
        keep[i].push_back(s);
        t.push_back(terms[i][s]);
      }
    out.terms.push_back(std::move(t));
  }
  for (int i = 0; i + 1 < n; ++i) {
    AlgMatrix m(keep[i + 1].size(), keep[i].size());
    for (std::size_t r = 0; r < keep[i + 1].size(); ++r)
      for (std::size_t c = 0; c < keep[i].size(); ++c) m(r, c) = diffs[i](keep[i + 1][r], keep[i][c]);
    out.diffs.push_back(std::move(m));
  }
  out.trim();
  out.validate();
  return out;
}

// ------------------------------------------------------------ isomorphisms

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::certified:
      return "certified";
    case IsoStatus::refuted:
      return "refuted";
    default:
      return "inconclusive";
  }
}

namespace {

// e_k coefficients of f^d between the vertex-k summands.
Matrix top_matrix(const ChainMap& f, int d, int k) {
  const auto& alg = *f.source->alg;
  const auto& src = f.source->term(d);
  const auto& tgt = f.target->term(d + f.degree);
  std::vector<std::size_t> rs, cs;
  for (std::size_t i = 0; i < tgt.size(); ++i)
    if (tgt[i] == k) rs.push_back(i);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i] == k) cs.push_back(i);
  AlgMatrix blk = f.block(d);
  Matrix m(rs.size(), cs.size());
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (std::size_t c = 0; c < cs.size(); ++c) m(r, c) = blk(rs[r], cs[c]).coeff(alg.idempotent(k));
  return m;
}

bool tops_invertible(const ChainMap& f) {
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (src.is_zero() && tgt.is_zero()) return true;
  const int lo = std::min(src.is_zero() ? tgt.lo : src.lo, tgt.is_zero() ? src.lo : tgt.lo);
  const int hi = std::max(src.is_zero() ? tgt.hi() : src.hi(), tgt.is_zero() ? src.hi() : tgt.hi());
  for (int d = lo; d <= hi; ++d)
    for (int k = 0; k < src.alg->num_vertices(); ++k) {
      Matrix m = top_matrix(f, d, k);
      if (m.rows() != m.cols()) return false;
      if (m.rows() > 0 && determinant(m).is_zero()) return false;
    }
  return true;
}

}  // namespace

bool verify_certificate(const ChainMap& f) {
  if (f.degree != 0) return false;
  return is_closed(f) && tops_invertible(f);
}

IsoResult complexes_iso(const ProjComplex& c_in, const ProjComplex& d_in, std::uint64_t seed, int max_rounds) {
  IsoResult res;
  res.seed = seed;
  // invariants and the top-component test are only valid for minimal complexes
  ProjComplex c = is_minimal(c_in) ? c_in : minimal_perfect(c_in);
  ProjComplex d = is_minimal(d_in) ? d_in : minimal_perfect(d_in);
  c.trim();
  d.trim();
  auto cp = std::make_shared<const ProjComplex>(c);
  auto dp = std::make_shared<const ProjComplex>(d);
  if (c.is_zero() && d.is_zero()) {
    res.status = IsoStatus::certified;
    res.reason = "both complexes are zero";
    res.certificate = zero_map(cp, dp, 0);
    return res;
  }
  if (c.is_zero() != d.is_zero() || c.lo != d.lo || c.hi() != d.hi() || c.multiplicities() != d.multiplicities()) {
    res.status = IsoStatus::refuted;
    res.reason = "termwise multiplicities differ: " + c.summary() + " vs " + d.summary();
    return res;
  }
  if (homology_dims(c) != homology_dims(d)) {
    res.status = IsoStatus::refuted;
    res.reason = "homology dimensions differ";
    return res;
  }
  auto h = hom_complex(cp, dp, 0, 0, true);
  const auto& cb = h->cohomology(0);
  Matrix z = hstack(cb.boundaries, cb.reps);
  if (z.cols() == 0) {
    res.status = IsoStatus::refuted;
    res.reason = "no degree-0 chain maps";
    return res;
  }
  for (int round = 0; round < max_rounds; ++round) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(round));
    for (int t = 0; t < 4; ++t) {
      ++res.attempts;
      std::vector<Scalar> coeff(z.cols());
      for (auto& s : coeff) s = Scalar(static_cast<long long>(rng() % 201) - 100);
      ChainMap f = h->to_chain_map(0, matvec(z, coeff).col(0));
      if (!tops_invertible(f)) continue;
      if (!verify_certificate(f)) throw std::logic_error("certificate failed independent verification");
      res.status = IsoStatus::certified;
      res.seed = seed + static_cast<std::uint64_t>(round);
      res.reason = "invertible chain map found";
      res.certificate = std::move(f);
      return res;
    }
  }
  res.status = IsoStatus::inconclusive;
  res.reason = "no invertible chain map among random samples";
  return res;
}

// ------------------------------------------------------------------ tensor

std::size_t TensorLayout::index(int d, int i, int x, int j, int s) const {
  for (const auto& b : blocks.at(d - lo))
    if (b.i == i && b.j == j) return b.offset + static_cast<std::size_t>(x) * b.ns + s;
  throw std::out_of_range("tensor block not found");
}

TensorResult tensor_ghom(const CochainComplex& v, const ProjComplex& p) {
  const auto& alg = *p.alg;
  TensorResult out;
  out.complex.alg = p.alg;
  if (p.is_zero() || v.dims.empty()) return out;
  const int lo = v.lo + p.lo, hi = v.hi() + p.hi();
  out.complex.lo = lo;
  out.layout.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    std::vector<TensorLayout::Block> blocks;
    std::vector<int> term;
    for (int i = v.lo; i <= v.hi(); ++i) {
      const int j = d - i;
      const auto& pt = p.term(j);
      if (v.dim(i) == 0 || pt.empty()) continue;
      blocks.push_back({i, j, term.size(), v.dim(i), static_cast<int>(pt.size())});
      for (int x = 0; x < v.dim(i); ++x) term.insert(term.end(), pt.begin(), pt.end());
    }
    out.layout.blocks.push_back(std::move(blocks));
    out.complex.terms.push_back(std::move(term));
  }
  for (int d = lo; d < hi; ++d) {
    AlgMatrix m(out.complex.term(d + 1).size(), out.complex.term(d).size());
    for (const auto& b : out.layout.blocks[d - lo]) {
      const Matrix dv = v.diff(b.i);
      const AlgMatrix dp = p.diff(b.j);
      const auto& pt = p.term(b.j);
      const Scalar sign = (b.i % 2 == 0) ? Scalar(1) : Scalar(-1);
      for (int x = 0; x < b.nx; ++x)
        for (int s = 0; s < b.ns; ++s) {
          const std::size_t col = b.offset + static_cast<std::size_t>(x) * b.ns + s;
          if (v.dim(b.i + 1) > 0)
            for (int x2 = 0; x2 < v.dim(b.i + 1); ++x2)
              if (!dv(x2, x).is_zero())
                m(out.layout.index(d + 1, b.i + 1, x2, b.j, s), col) += AlgElem::basis(alg.idempotent(pt[s]), dv(x2, x));
          const auto& pn = p.term(b.j + 1);
          for (std::size_t t = 0; t < pn.size(); ++t)
            if (!dp(t, s).is_zero())
              m(out.layout.index(d + 1, b.i, x, b.j + 1, static_cast<int>(t)), col) += dp(t, s) * sign;
        }
    }
    out.complex.diffs.push_back(std::move(m));
  }
  out.complex.validate();
  return out;
}

// ------------------------------------------------------------------ Yoneda

bool ExtClass::is_zero() const { return space->is_coboundary(rep.degree, space->coords(rep)); }

std::vector<Scalar> ExtClass::coords() const { return space->class_coords(rep.degree, space->coords(rep)); }

ExtClass ext_class(std::shared_ptr<const GradedHom> space, int r, const std::vector<Scalar>& coords) {
  const auto& reps = space->cohomology(r).reps;
  std::vector<Scalar> v(reps.rows());
  if (reps.cols() > 0) v = matvec(reps, coords).col(0);
  ChainMap f = space->to_chain_map(r, v);
  return ExtClass{std::move(space), std::move(f)};
}

std::vector<ExtClass> ext_basis(std::shared_ptr<const GradedHom> space, int r) {
  std::vector<ExtClass> out;
  const auto& reps = space->cohomology(r).reps;
  for (std::size_t i = 0; i < reps.cols(); ++i) out.push_back(ExtClass{space, space->to_chain_map(r, reps.col(i))});
  return out;
}

ExtClass yoneda_compose(std::shared_ptr<const GradedHom> space, const ExtClass& g, const ExtClass& f) {
  if (f.rep.target.get() != g.rep.source.get() && f.rep.target->to_json() != g.rep.source->to_json())
    throw std::invalid_argument("classes are not composable");
  ChainMap h = compose(g.rep, f.rep);
  h.source = space->source_ptr();
  h.target = space->target_proj;
  return ExtClass{std::move(space), std::move(h)};
}

ChainMap lift_to_resolution(const GradedHom& to_res, const Replacement& res_n, const GradedHom& to_module, int r,
                            const std::vector<Scalar>& f) {
  const ProjComplex& P = to_res.source();
  const ProjComplex& Q = *res_n.complex;
  const Module& n = to_module.target().term(0);
  const auto& alg = *P.alg;
  // augmentation realize(Q^0) -> N on the vertex slices
  Matrix eps(to_module.dim(r), to_res.dim(r));
  for (const auto& b : to_res.layout(r)) {
    if (b.src_degree + r != 0 || b.dim == 0) continue;
    const int k = P.term(b.src_degree)[b.summand];
    Matrix col_map(n.dim(k), b.dim);
    std::size_t c = 0;
    const auto& q0 = Q.term(0);
    for (std::size_t t = 0; t < q0.size(); ++t) {
      Matrix g = Matrix::column(res_n.generators[0 - Q.lo][t]);
      for (int mono : alg.slice(k, q0[t])) col_map.set_block(0, c++, n.monomial_action(mono) * g);
    }
    eps.set_block(to_module.offset(r, b.src_degree, b.summand), b.offset, col_map);
  }
  const auto& cr = to_res.cohomology(r);
  Matrix z = hstack(cr.boundaries, cr.reps);
  Matrix sys = hstack(eps * z, to_module.cohomology(r).boundaries);
  auto sol = solve(sys, f);
  if (!sol) throw std::logic_error("lift through the augmentation failed");
  std::vector<Scalar> c(sol->begin(), sol->begin() + z.cols());
  return to_res.to_chain_map(r, z.cols() ? matvec(z, c).col(0) : std::vector<Scalar>(to_res.dim(r)));
}

// ------------------------------------------------------------ end profile

EndRingProfile graded_end_ring_profile(std::shared_ptr<const ProjComplex> p, int rmax) {
  EndRingProfile prof;
  auto h = hom_complex(p, p, 0, rmax, true);
  for (int r = 0; r <= rmax; ++r) prof.dims.push_back(h->cohomology_dim(r));
  if (prof.dims.empty() || prof.dims[0] != 1) return prof;
  int k = 0;
  while (2 * (k + 1) <= rmax && prof.dims[2 * (k + 1)] == 1) ++k;
  for (int r = 0; r <= rmax; ++r)
    if (prof.dims[r] != ((r % 2 == 0 && r <= 2 * k) ? 1 : 0)) return prof;
  prof.pattern = true;
  prof.k = k;
  prof.max_power = 0;
  if (k > 0) {
    const ExtClass t = ext_basis(h, 2).front();
    ChainMap cur = t.rep;
    for (int m = 1; m <= k; ++m) {
      if (m > 1) cur = compose(cur, t.rep);
      if (h->is_coboundary(2 * m, h->coords(cur))) break;
      prof.max_power = m;
    }
  }
  prof.p_like = prof.max_power == k;
  return prof;
}

}  // namespace pervpn

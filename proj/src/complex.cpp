#include "pervpn/complex.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace pervpn {

namespace {

const std::vector<int> kNoSummands;

std::vector<std::size_t> offsets_at(const PathAlgebra& alg, const std::vector<int>& verts, int v, bool injective) {
  std::vector<std::size_t> off(verts.size() + 1, 0);
  for (std::size_t s = 0; s < verts.size(); ++s)
    off[s + 1] = off[s] + (injective ? alg.slice(verts[s], v).size() : alg.slice(v, verts[s]).size());
  return off;
}

bool in_slice(const PathAlgebra& alg, const AlgElem& x, int target, int source) {
  for (const auto& [i, c] : x.terms())
    if (alg.basis(i).target != target || alg.basis(i).source != source) return false;
  return true;
}

}  // namespace

bool AlgMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const AlgElem& e) { return e.is_zero(); });
}

AlgMatrix& AlgMatrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

AlgMatrix& AlgMatrix::operator+=(const AlgMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("algebra matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

AlgMatrix compose(const PathAlgebra& alg, const AlgMatrix& second, const AlgMatrix& first) {
  if (second.cols() != first.rows()) throw std::invalid_argument("algebra matrix compose size mismatch");
  AlgMatrix out(second.rows(), first.cols());
  for (std::size_t m = 0; m < first.rows(); ++m)
    for (std::size_t c = 0; c < first.cols(); ++c) {
      const AlgElem& x = first(m, c);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < second.rows(); ++r) {
        const AlgElem& z = second(r, m);
        if (!z.is_zero()) out(r, c) += alg.mul(x, z);
      }
    }
  return out;
}

bool ProjComplex::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.empty(); });
}

const std::vector<int>& ProjComplex::term(int d) const {
  if (d < lo || d > hi()) return kNoSummands;
  return terms[d - lo];
}

AlgMatrix ProjComplex::diff(int d) const {
  if (d >= lo && d < hi()) return diffs[d - lo];
  return AlgMatrix(term(d + 1).size(), term(d).size());
}

int ProjComplex::total_summands() const {
  int s = 0;
  for (const auto& t : terms) s += static_cast<int>(t.size());
  return s;
}

std::vector<std::vector<int>> ProjComplex::multiplicities() const {
  std::vector<std::vector<int>> out;
  for (const auto& t : terms) {
    std::vector<int> m(alg->num_vertices(), 0);
    for (int k : t) ++m[k];
    out.push_back(std::move(m));
  }
  return out;
}

void ProjComplex::validate() const {
  const std::size_t expect = terms.empty() ? 0 : terms.size() - 1;
  if (diffs.size() != expect) throw std::logic_error("complex: wrong number of differentials");
  for (const auto& t : terms)
    for (int k : t)
      if (k < 0 || k >= alg->num_vertices()) throw std::logic_error("complex: vertex out of range");
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    const auto& d = diffs[i];
    const auto& src = terms[i];
    const auto& tgt = terms[i + 1];
    if (d.rows() != tgt.size() || d.cols() != src.size()) throw std::logic_error("complex: differential shape");
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (!in_slice(*alg, d(r, c), src[c], tgt[r])) throw std::logic_error("complex: entry outside its slice");
  }
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
    if (!compose(*alg, diffs[i + 1], diffs[i]).is_zero())
      throw std::logic_error("complex: d^2 != 0 at degree " + std::to_string(lo + static_cast<int>(i)));
}

void ProjComplex::trim() {
  std::size_t first = 0;
  while (first < terms.size() && terms[first].empty()) ++first;
  if (first == terms.size()) {
    terms.clear();
    diffs.clear();
    lo = 0;
    return;
  }
  std::size_t last = terms.size() - 1;
  while (terms[last].empty()) --last;
  std::vector<std::vector<int>> t(terms.begin() + first, terms.begin() + last + 1);
  std::vector<AlgMatrix> d(diffs.begin() + first, diffs.begin() + last);
  terms = std::move(t);
  diffs = std::move(d);
  lo += static_cast<int>(first);
}

nlohmann::json ProjComplex::to_json() const {
  using nlohmann::json;
  json j;
  j["lo"] = lo;
  j["terms"] = terms;
  json ds = json::array();
  for (const auto& d : diffs) {
    json rows = json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) {
        json entry = json::array();
        for (const auto& [i, coef] : d(r, c).terms()) entry.push_back({alg->word(i), coef.str()});
        row.push_back(entry);
      }
      rows.push_back(row);
    }
    ds.push_back(rows);
  }
  j["diffs"] = ds;
  return j;
}

ProjComplex ProjComplex::from_json(AlgebraPtr alg, const nlohmann::json& j) {
  ProjComplex c;
  c.alg = alg;
  c.lo = j.at("lo").get<int>();
  c.terms = j.at("terms").get<std::vector<std::vector<int>>>();
  for (std::size_t i = 0; i + 1 < c.terms.size(); ++i) {
    const auto& rows = j.at("diffs").at(i);
    AlgMatrix d(c.terms[i + 1].size(), c.terms[i].size());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t col = 0; col < d.cols(); ++col)
        for (const auto& t : rows.at(r).at(col)) {
          const auto word = t.at(0).get<std::string>();
          int idx = -1;
          for (int b = 0; b < alg->dim(); ++b)
            if (alg->word(b) == word) idx = b;
          if (idx < 0) throw std::invalid_argument("unknown basis word " + word);
          d(r, col) += AlgElem::basis(idx, Scalar::parse(t.at(1).get<std::string>()));
        }
    c.diffs.push_back(std::move(d));
  }
  c.validate();
  return c;
}

std::string ProjComplex::summary() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  for (int d = lo; d <= hi(); ++d) {
    if (d > lo) os << " -> ";
    os << "[" << d << ":";
    auto t = term(d);
    std::sort(t.begin(), t.end());
    if (t.empty()) os << " 0";
    for (int k : t) os << " P" << k;
    os << "]";
  }
  return os.str();
}

ProjComplex zero_complex(AlgebraPtr alg) {
  ProjComplex c;
  c.alg = std::move(alg);
  return c;
}

ProjComplex stalk(AlgebraPtr alg, const std::vector<int>& vertices, int degree) {
  ProjComplex c;
  c.alg = std::move(alg);
  c.lo = degree;
  c.terms.push_back(vertices);
  c.trim();
  return c;
}

ProjComplex shift(const ProjComplex& c, int m) {
  ProjComplex s = c;
  s.lo = c.lo - m;
  if (m % 2 != 0)
    for (auto& d : s.diffs) d *= Scalar(-1);
  return s;
}

ProjComplex direct_sum(const ProjComplex& c, const ProjComplex& d) {
  if (c.is_zero()) return d;
  if (d.is_zero()) return c;
  ProjComplex s;
  s.alg = c.alg;
  s.lo = std::min(c.lo, d.lo);
  const int hi = std::max(c.hi(), d.hi());
  for (int deg = s.lo; deg <= hi; ++deg) {
    auto t = c.term(deg);
    const auto& u = d.term(deg);
    t.insert(t.end(), u.begin(), u.end());
    s.terms.push_back(std::move(t));
  }
  for (int deg = s.lo; deg < hi; ++deg) {
    AlgMatrix m(s.term(deg + 1).size(), s.term(deg).size());
    AlgMatrix a = c.diff(deg), b = d.diff(deg);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t col = 0; col < a.cols(); ++col) m(r, col) = a(r, col);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col) m(a.rows() + r, a.cols() + col) = b(r, col);
    s.diffs.push_back(std::move(m));
  }
  return s;
}

AlgMatrix ChainMap::block(int d) const {
  if (d >= source->lo && d <= source->hi()) return blocks[d - source->lo];
  return AlgMatrix(target->term(d + degree).size(), source->term(d).size());
}

bool ChainMap::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const AlgMatrix& m) { return m.is_zero(); });
}

ChainMap zero_map(std::shared_ptr<const ProjComplex> c, std::shared_ptr<const ProjComplex> d, int degree) {
  ChainMap f{c, d, degree, {}};
  for (int deg = c->lo; deg <= c->hi(); ++deg) f.blocks.emplace_back(d->term(deg + degree).size(), c->term(deg).size());
  return f;
}

ChainMap identity_map(std::shared_ptr<const ProjComplex> c) {
  ChainMap f = zero_map(c, c, 0);
  for (int deg = c->lo; deg <= c->hi(); ++deg) {
    auto& b = f.blocks[deg - c->lo];
    const auto& t = c->term(deg);
    for (std::size_t s = 0; s < t.size(); ++s) b(s, s) = AlgElem::basis(c->alg->idempotent(t[s]));
  }
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  const auto& alg = *f.source->alg;
  ChainMap h = zero_map(f.source, g.target, f.degree + g.degree);
  for (int deg = f.source->lo; deg <= f.source->hi(); ++deg)
    h.blocks[deg - f.source->lo] = compose(alg, g.block(deg + f.degree), f.block(deg));
  return h;
}

ChainMap boundary(const ChainMap& f) {
  const auto& alg = *f.source->alg;
  const auto& c = *f.source;
  const auto& d = *f.target;
  ChainMap out = zero_map(f.source, f.target, f.degree + 1);
  const Scalar sign = (f.degree % 2 == 0) ? Scalar(-1) : Scalar(1);
  for (int deg = c.lo; deg <= c.hi(); ++deg) {
    AlgMatrix a = compose(alg, d.diff(deg + f.degree), f.block(deg));
    AlgMatrix b = compose(alg, f.block(deg + 1), c.diff(deg));
    b *= sign;
    a += b;
    out.blocks[deg - c.lo] = std::move(a);
  }
  return out;
}

bool is_closed(const ChainMap& f) { return boundary(f).is_zero(); }

ProjComplex cone(const ChainMap& f) {
  if (f.degree != 0) throw std::invalid_argument("cone needs a degree-0 chain map");
  const auto& A = *f.source;
  const auto& B = *f.target;
  ProjComplex c;
  c.alg = A.alg;
  if (A.is_zero() && B.is_zero()) return c;
  int lo = B.is_zero() ? A.lo - 1 : (A.is_zero() ? B.lo : std::min(A.lo - 1, B.lo));
  int hi = B.is_zero() ? A.hi() - 1 : (A.is_zero() ? B.hi() : std::max(A.hi() - 1, B.hi()));
  c.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    auto t = A.term(d + 1);
    const auto& u = B.term(d);
    t.insert(t.end(), u.begin(), u.end());
    c.terms.push_back(std::move(t));
  }
  for (int d = lo; d < hi; ++d) {
    const std::size_t a0 = A.term(d + 1).size(), b0 = B.term(d).size();
    const std::size_t a1 = A.term(d + 2).size(), b1 = B.term(d + 1).size();
    AlgMatrix m(a1 + b1, a0 + b0);
    AlgMatrix da = A.diff(d + 1), db = B.diff(d), fb = f.block(d + 1);
    for (std::size_t r = 0; r < a1; ++r)
      for (std::size_t col = 0; col < a0; ++col) m(r, col) = -da(r, col);
    for (std::size_t r = 0; r < b1; ++r) {
      for (std::size_t col = 0; col < a0; ++col) m(a1 + r, col) = fb(r, col);
      for (std::size_t col = 0; col < b0; ++col) m(a1 + r, a0 + col) = db(r, col);
    }
    c.diffs.push_back(std::move(m));
  }
  c.validate();
  return c;
}

const Module& ModuleComplex::term(int d) const {
  static thread_local std::deque<std::pair<AlgebraPtr, Module>> zeros;
  if (d >= lo && d <= hi()) return terms[d - lo];
  for (const auto& [a, m] : zeros)
    if (a == alg) return m;
  zeros.emplace_back(alg, Module::zero(alg));
  return zeros.back().second;
}

Matrix ModuleComplex::diff(int d, int v) const {
  if (d >= lo && d < hi()) return diffs[d - lo][v];
  return Matrix(term(d + 1).dim(v), term(d).dim(v));
}

void ModuleComplex::validate() const {
  for (int d = lo; d < hi(); ++d) {
    if (!is_morphism(term(d), term(d + 1), diffs[d - lo])) throw std::logic_error("module complex: not a morphism");
    if (d + 1 < hi())
      for (int v = 0; v < alg->num_vertices(); ++v)
        if (!(diff(d + 1, v) * diff(d, v)).is_zero()) throw std::logic_error("module complex: d^2 != 0");
  }
}

ModuleComplex stalk(const Module& m, int degree) {
  ModuleComplex c;
  c.alg = m.algebra();
  c.lo = degree;
  c.terms.push_back(m);
  return c;
}

Module projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices) {
  const int V = alg->num_vertices();
  std::vector<int> dims(V, 0);
  for (int v = 0; v < V; ++v)
    for (int k : vertices) dims[v] += static_cast<int>(alg->slice(v, k).size());
  std::vector<Matrix> act;
  const auto& arrows = alg->quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int u = arrows[a].source, v = arrows[a].target;
    Matrix m(dims[v], dims[u]);
    std::size_t r0 = 0, c0 = 0;
    const AlgElem x = AlgElem::basis(alg->arrow_basis(static_cast<int>(a)));
    for (int k : vertices) {
      m.set_block(r0, c0, alg->left_mult_matrix(x, v, u, k));
      r0 += alg->slice(v, k).size();
      c0 += alg->slice(u, k).size();
    }
    act.push_back(std::move(m));
  }
  return Module(alg, std::move(dims), std::move(act));
}

Module injective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices) {
  std::vector<Module> parts;
  std::vector<std::optional<Module>> cache(alg->num_vertices());
  for (int k : vertices) {
    if (!cache[k]) cache[k] = injective(alg, k);
    parts.push_back(*cache[k]);
  }
  if (parts.empty()) return Module::zero(alg);
  return direct_sum(parts);
}

Matrix realized_map(const PathAlgebra& alg, const AlgMatrix& m, const std::vector<int>& src,
                    const std::vector<int>& tgt, int v) {
  auto co = offsets_at(alg, src, v, false);
  auto ro = offsets_at(alg, tgt, v, false);
  Matrix out(ro.back(), co.back());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& cols = alg.slice(v, src[c]);
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      const AlgElem& x = m(r, c);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, coef] : x.terms())
          for (const auto& [p, d] : alg.mul_basis(cols[j], i)) out(ro[r] + alg.slice_pos(p), co[c] + j) += coef * d;
    }
  }
  return out;
}

Matrix realized_injective_map(const PathAlgebra& alg, const AlgMatrix& m, const std::vector<int>& src,
                              const std::vector<int>& tgt, int v) {
  auto co = offsets_at(alg, src, v, true);
  auto ro = offsets_at(alg, tgt, v, true);
  Matrix out(ro.back(), co.back());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      const AlgElem& x = m(r, c);
      if (x.is_zero()) continue;
      const auto& rows = alg.slice(tgt[r], v);
      for (std::size_t j = 0; j < rows.size(); ++j)
        for (const auto& [i, coef] : x.terms())
          for (const auto& [p, d] : alg.mul_basis(i, rows[j])) out(ro[r] + j, co[c] + alg.slice_pos(p)) += coef * d;
    }
  return out;
}

namespace {

ModuleComplex realize_impl(const ProjComplex& c, bool inj) {
  ModuleComplex out;
  out.alg = c.alg;
  out.lo = c.lo;
  for (const auto& t : c.terms) out.terms.push_back(inj ? injective_sum(c.alg, t) : projective_sum(c.alg, t));
  for (std::size_t i = 0; i < c.diffs.size(); ++i) {
    std::vector<Matrix> per;
    for (int v = 0; v < c.alg->num_vertices(); ++v)
      per.push_back(inj ? realized_injective_map(*c.alg, c.diffs[i], c.terms[i], c.terms[i + 1], v)
                        : realized_map(*c.alg, c.diffs[i], c.terms[i], c.terms[i + 1], v));
    out.diffs.push_back(std::move(per));
  }
  return out;
}

}  // namespace

ModuleComplex realize(const ProjComplex& c) { return realize_impl(c, false); }
ModuleComplex realize_injective(const ProjComplex& c) { return realize_impl(c, true); }

ProjComplex dualdata(const ProjComplex& c) {
  ProjComplex d;
  d.alg = c.alg;
  if (c.is_zero()) return d;
  d.lo = -c.hi();
  d.terms.assign(c.terms.rbegin(), c.terms.rend());
  for (int j = 0; j + 1 < static_cast<int>(d.terms.size()); ++j) {
    const int e = -(d.lo + j) - 1;  // old differential degree
    const AlgMatrix& old = c.diffs[e - c.lo];
    AlgMatrix m(old.cols(), old.rows());
    for (std::size_t r = 0; r < old.rows(); ++r)
      for (std::size_t col = 0; col < old.cols(); ++col) m(col, r) = c.alg->sigma(old(r, col));
    d.diffs.push_back(std::move(m));
  }
  return d;
}

std::vector<std::vector<int>> homology_dims(const ProjComplex& c) {
  std::vector<std::vector<int>> out;
  const int V = c.alg->num_vertices();
  for (int d = c.lo; d <= c.hi(); ++d) {
    std::vector<int> h(V, 0);
    for (int v = 0; v < V; ++v) {
      int dim = 0;
      for (int k : c.term(d)) dim += static_cast<int>(c.alg->slice(v, k).size());
      int r_out = static_cast<int>(rank(realized_map(*c.alg, c.diff(d), c.term(d), c.term(d + 1), v)));
      int r_in = static_cast<int>(rank(realized_map(*c.alg, c.diff(d - 1), c.term(d - 1), c.term(d), v)));
      h[v] = dim - r_out - r_in;
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::vector<int>> homology_dims(const ModuleComplex& c) {
  std::vector<std::vector<int>> out;
  const int V = c.alg->num_vertices();
  for (int d = c.lo; d <= c.hi(); ++d) {
    std::vector<int> h(V, 0);
    for (int v = 0; v < V; ++v)
      h[v] = c.term(d).dim(v) - static_cast<int>(rank(c.diff(d, v))) - static_cast<int>(rank(c.diff(d - 1, v)));
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace pervpn

#include "pervpn/module.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pervpn {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Matrix to_matrix(const nlohmann::json& rows, std::size_t nr, std::size_t nc) {
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = Scalar::parse(rows.at(r).at(c).get<std::string>());
  return m;
}

nlohmann::json matrix_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

// Splits an ambient space of dimension n along the subspace spanned by the
// (independent) columns of sub.
struct Split {
  Matrix comp;  // complement basis (columns)
  Matrix left;  // left inverse of sub, vanishing on comp
  Matrix proj;  // coordinates along comp, vanishing on sub
};

Split split(const Matrix& sub, std::size_t n) {
  Matrix id = Matrix::identity(n);
  Matrix s = sub.rows() == n ? sub : Matrix(n, 0);
  auto idx = extend_basis(s, id);
  Matrix comp = id.select_cols(idx);
  Matrix full = hstack(s, comp);
  auto inv = inverse(full);
  if (!inv) throw std::logic_error("subspace basis is not independent");
  Split out;
  out.comp = std::move(comp);
  out.left = inv->block(0, 0, s.cols(), n);
  out.proj = inv->block(s.cols(), 0, n - s.cols(), n);
  return out;
}

std::uint64_t next_random(std::mt19937_64& rng, int lo, int hi) {
  return static_cast<std::uint64_t>(lo) + rng() % static_cast<std::uint64_t>(hi - lo + 1);
}

Scalar random_scalar(std::mt19937_64& rng, int bound) {
  return Scalar(static_cast<long long>(next_random(rng, 0, 2 * bound)) - bound);
}

std::vector<Matrix> combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs) {
  std::vector<Matrix> out = basis.front().maps;
  for (auto& m : out) m *= Scalar();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v].add_block(0, 0, basis[i].maps[v], coeffs[i]);
  }
  return out;
}

bool all_invertible(const std::vector<Matrix>& maps) {
  for (const auto& m : maps) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() > 0 && determinant(m).is_zero()) return false;
  }
  return true;
}

// ---- rational eigenvalues ----

using Poly = std::vector<Scalar>;  // low degree first

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Monic polynomial annihilating v under x, from the Krylov sequence.
Poly krylov_poly(const Matrix& x, const std::vector<Scalar>& v) {
  std::vector<std::vector<Scalar>> seq{v};
  Matrix cols = Matrix::column(v);
  while (true) {
    std::vector<Scalar> next = matvec(x, seq.back()).col(0);
    auto sol = solve(cols, next);
    if (sol) {
      Poly p(sol->size() + 1);
      for (std::size_t i = 0; i < sol->size(); ++i) p[i] = -(*sol)[i];
      p.back() = Scalar(1);
      return p;
    }
    seq.push_back(next);
    cols = hstack(cols, Matrix::column(next));
  }
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0 || n > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Scalar> rational_roots(Poly p) {
  std::vector<Scalar> roots;
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  if (p.size() <= 1) return roots;
  const std::uint64_t ch = field_characteristic();
  if (ch != 0) {
    const std::uint64_t limit = std::min<std::uint64_t>(ch, 100000);
    for (std::uint64_t t = 0; t < limit; ++t)
      if (eval(p, Scalar(static_cast<long long>(t))).is_zero()) roots.emplace_back(static_cast<long long>(t));
    return roots;
  }
  if (p.front().is_zero()) {
    roots.emplace_back(0);
    while (p.size() > 1 && p.front().is_zero()) p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, c.denominator());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(c.numerator() * (l / c.denominator()));
  auto ps = divisors(ints.front());
  auto qs = divisors(ints.back());
  for (const auto& num : ps)
    for (const auto& den : qs)
      for (int sgn : {1, -1}) {
        Scalar cand(mpq_class(num * sgn, den));
        if (!eval(p, cand).is_zero()) continue;
        if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  return roots;
}

Matrix power(const Matrix& x, int e) {
  Matrix r = Matrix::identity(x.rows());
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

struct FittingSplit {
  std::vector<Matrix> kernel_part;
  std::vector<Matrix> image_part;
};

// Fitting decomposition along some x - lambda that is neither nilpotent nor
// invertible, if x provides one.
std::optional<FittingSplit> try_fitting(const Module& m, const std::vector<Matrix>& x, std::mt19937_64& rng) {
  const int V = static_cast<int>(x.size());
  std::vector<Scalar> eig;
  for (int v = 0; v < V; ++v) {
    if (x[v].rows() == 0) continue;
    std::vector<Scalar> vec(x[v].rows());
    for (auto& s : vec) s = random_scalar(rng, 9);
    bool nz = std::any_of(vec.begin(), vec.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (!nz) vec[0] = Scalar(1);
    for (auto& r : rational_roots(krylov_poly(x[v], vec)))
      if (std::find(eig.begin(), eig.end(), r) == eig.end()) eig.push_back(r);
  }
  int N = 0;
  for (int v = 0; v < V; ++v) N = std::max(N, m.dim(v));
  for (const auto& lam : eig) {
    FittingSplit fs;
    bool nonnil = false, sing = false;
    for (int v = 0; v < V; ++v) {
      Matrix y = x[v] - Matrix::identity(x[v].rows()) * lam;
      Matrix yn = power(y, N);
      fs.kernel_part.push_back(kernel_basis(yn));
      fs.image_part.push_back(column_space(yn));
      if (fs.kernel_part.back().cols() > 0) sing = true;
      if (fs.image_part.back().cols() > 0) nonnil = true;
    }
    if (nonnil && sing) return fs;
  }
  return std::nullopt;
}

std::size_t trace_form_rank(const std::vector<Morphism>& e) {
  const std::size_t d = e.size();
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Scalar t;
      for (std::size_t v = 0; v < e[i].maps.size(); ++v) {
        const Matrix& a = e[i].maps[v];
        const Matrix& b = e[j].maps[v];
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero() && !b(c, r).is_zero()) t += a(r, c) * b(c, r);
      }
      g(i, j) = t;
      g(j, i) = t;
    }
  return rank(g);
}

std::optional<FittingSplit> find_split(const Module& m, const std::vector<Morphism>& e, std::uint64_t seed,
                                       int random_tries) {
  std::mt19937_64 rng(seed);
  for (const auto& f : e)
    if (auto s = try_fitting(m, f.maps, rng)) return s;
  for (std::size_t i = 0; i < e.size() && i < 12; ++i)
    for (std::size_t j = i + 1; j < e.size() && j < 12; ++j) {
      std::vector<Matrix> x = e[i].maps;
      for (std::size_t v = 0; v < x.size(); ++v) x[v] += e[j].maps[v];
      if (auto s = try_fitting(m, x, rng)) return s;
    }
  for (int t = 0; t < random_tries; ++t) {
    std::vector<Scalar> c(e.size());
    for (auto& s : c) s = random_scalar(rng, 5);
    if (auto s = try_fitting(m, combine(e, c), rng)) return s;
  }
  return std::nullopt;
}

}  // namespace

Module::Module(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> action)
    : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
  require(alg_ != nullptr, "module needs an algebra");
  const auto& q = alg_->quiver();
  require(static_cast<int>(dims_.size()) == q.vertices, "dimension vector length mismatch");
  require(action_.size() == q.arrows.size(), "arrow action count mismatch");
  for (int d : dims_) require(d >= 0, "negative dimension");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    require(action_[a].rows() == static_cast<std::size_t>(dims_[ar.target]) &&
                action_[a].cols() == static_cast<std::size_t>(dims_[ar.source]),
            "arrow matrix has wrong shape");
  }
  for (const auto& rel : alg_->relations()) {
    const auto& first = q.arrows[rel.terms[0].arrows[0]];
    const auto& last = q.arrows[rel.terms[0].arrows[1]];
    Matrix sum(dims_[last.target], dims_[first.source]);
    for (const auto& t : rel.terms) sum.add_block(0, 0, action_[t.arrows[1]] * action_[t.arrows[0]], t.coeff);
    if (!sum.is_zero()) throw std::invalid_argument("module violates a relation");
  }
  mono_.reserve(alg_->dim());
  for (int i = 0; i < alg_->dim(); ++i) {
    const Monomial& m = alg_->basis(i);
    Matrix cur = Matrix::identity(dims_[m.source]);
    for (int a : m.arrows) cur = action_[a] * cur;
    mono_.push_back(std::move(cur));
  }
}

Module Module::zero(AlgebraPtr alg) {
  const auto& q = alg->quiver();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) act.emplace_back(0, 0);
  return Module(alg, std::vector<int>(q.vertices, 0), std::move(act));
}

int Module::total_dim() const {
  int s = 0;
  for (int d : dims_) s += d;
  return s;
}

Matrix Module::act(const AlgElem& x, int from, int to) const {
  Matrix out(dims_[to], dims_[from]);
  for (const auto& [i, c] : x.terms()) {
    const Monomial& m = alg_->basis(i);
    if (m.source != from || m.target != to) throw std::invalid_argument("algebra element outside e_to A e_from");
    out.add_block(0, 0, mono_[i], c);
  }
  return out;
}

nlohmann::json Module::to_json() const {
  nlohmann::json j;
  j["algebra"] = alg_->name();
  j["dims"] = dims_;
  nlohmann::json arrows = nlohmann::json::object();
  for (std::size_t a = 0; a < action_.size(); ++a) arrows[alg_->quiver().arrows[a].name] = matrix_json(action_[a]);
  j["arrows"] = arrows;
  return j;
}

Module Module::from_json(AlgebraPtr alg, const nlohmann::json& j) {
  auto dims = j.at("dims").get<std::vector<int>>();
  std::vector<Matrix> act;
  for (const auto& ar : alg->quiver().arrows)
    act.push_back(to_matrix(j.at("arrows").at(ar.name), dims.at(ar.target), dims.at(ar.source)));
  return Module(alg, std::move(dims), std::move(act));
}

bool Morphism::is_zero() const {
  return std::all_of(maps.begin(), maps.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool is_morphism(const Module& m, const Module& n, const std::vector<Matrix>& maps) {
  const auto& q = m.algebra()->quiver();
  if (maps.size() != static_cast<std::size_t>(q.vertices)) return false;
  for (int v = 0; v < q.vertices; ++v)
    if (maps[v].rows() != static_cast<std::size_t>(n.dim(v)) || maps[v].cols() != static_cast<std::size_t>(m.dim(v)))
      return false;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (n.action(a) * maps[ar.source] != maps[ar.target] * m.action(a)) return false;
  }
  return true;
}

Morphism make_morphism(Module m, Module n, std::vector<Matrix> maps) {
  if (!is_morphism(m, n, maps)) throw std::invalid_argument("maps do not commute with the arrow actions");
  return Morphism{std::move(m), std::move(n), std::move(maps)};
}

Morphism identity_morphism(const Module& m) {
  std::vector<Matrix> maps;
  for (int d : m.dims()) maps.push_back(Matrix::identity(d));
  return Morphism{m, m, std::move(maps)};
}

Morphism zero_morphism(const Module& m, const Module& n) {
  std::vector<Matrix> maps;
  for (int v = 0; v < m.algebra()->num_vertices(); ++v) maps.emplace_back(n.dim(v), m.dim(v));
  return Morphism{m, n, std::move(maps)};
}

Morphism compose(const Morphism& second, const Morphism& first) {
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < first.maps.size(); ++v) maps.push_back(second.maps[v] * first.maps[v]);
  return Morphism{first.source, second.target, std::move(maps)};
}

Morphism operator+(const Morphism& f, const Morphism& g) {
  Morphism h = f;
  for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] += g.maps[v];
  return h;
}

Morphism operator*(const Morphism& f, const Scalar& s) {
  Morphism h = f;
  for (auto& m : h.maps) m *= s;
  return h;
}

std::vector<Scalar> flatten(const Morphism& f) {
  std::vector<Scalar> out;
  for (const auto& m : f.maps) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

Module direct_sum(const Module& m, const Module& n) {
  std::vector<int> dims;
  for (std::size_t v = 0; v < m.dims().size(); ++v) dims.push_back(m.dim(v) + n.dim(v));
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < m.actions().size(); ++a) act.push_back(block_diag(m.action(a), n.action(a)));
  return Module(m.algebra(), std::move(dims), std::move(act));
}

Module direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw std::invalid_argument("direct_sum of nothing needs an algebra");
  Module out = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) out = direct_sum(out, ms[i]);
  return out;
}

std::vector<Morphism> hom_space(const Module& m, const Module& n) {
  const auto& alg = m.algebra();
  const auto& q = alg->quiver();
  const int V = q.vertices;
  std::vector<std::size_t> off(V + 1, 0);
  for (int v = 0; v < V; ++v) off[v + 1] = off[v] + static_cast<std::size_t>(n.dim(v)) * m.dim(v);
  std::size_t nrows = 0;
  for (const auto& ar : q.arrows) nrows += static_cast<std::size_t>(n.dim(ar.target)) * m.dim(ar.source);
  Matrix eq(nrows, off[V]);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    const Matrix& na = n.action(a);
    const Matrix& ma = m.action(a);
    for (int i = 0; i < n.dim(t); ++i)
      for (int j = 0; j < m.dim(s); ++j, ++row) {
        // (N_a X_s)_{ij} - (X_t M_a)_{ij}
        for (int p = 0; p < n.dim(s); ++p)
          if (!na(i, p).is_zero()) eq(row, off[s] + p * m.dim(s) + j) += na(i, p);
        for (int r = 0; r < m.dim(t); ++r)
          if (!ma(r, j).is_zero()) eq(row, off[t] + i * m.dim(t) + r) -= ma(r, j);
      }
  }
  Matrix k = kernel_basis(eq);
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Matrix> maps;
    for (int v = 0; v < V; ++v) {
      Matrix blk(n.dim(v), m.dim(v));
      for (int i = 0; i < n.dim(v); ++i)
        for (int j = 0; j < m.dim(v); ++j) blk(i, j) = k(off[v] + i * m.dim(v) + j, c);
      maps.push_back(std::move(blk));
    }
    out.push_back(Morphism{m, n, std::move(maps)});
  }
  return out;
}

SubModule restrict_to(const Module& m, const std::vector<Matrix>& bases) {
  const auto& q = m.algebra()->quiver();
  std::vector<Split> sp;
  std::vector<int> dims;
  for (int v = 0; v < q.vertices; ++v) {
    sp.push_back(split(bases[v], m.dim(v)));
    dims.push_back(static_cast<int>(bases[v].rows() == static_cast<std::size_t>(m.dim(v)) ? bases[v].cols() : 0));
  }
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    Matrix img = dims[s] ? m.action(a) * bases[s] : Matrix(m.dim(t), 0);
    Matrix x = sp[t].left * img;
    if (dims[t] ? (bases[t] * x != img) : !img.is_zero())
      throw std::logic_error("subspaces are not closed under the action");
    act.push_back(std::move(x));
  }
  Module sub(m.algebra(), dims, std::move(act));
  std::vector<Matrix> inc;
  for (int v = 0; v < q.vertices; ++v) inc.push_back(dims[v] ? bases[v] : Matrix(m.dim(v), 0));
  return SubModule{sub, Morphism{sub, m, std::move(inc)}};
}

SubModule generate_submodule(const Module& m, const std::vector<Matrix>& gens) {
  const auto& q = m.algebra()->quiver();
  const int V = q.vertices;
  std::vector<Matrix> span(V);
  for (int v = 0; v < V; ++v)
    span[v] = gens[v].rows() == static_cast<std::size_t>(m.dim(v)) ? column_space(gens[v]) : Matrix(m.dim(v), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      const int s = q.arrows[a].source, t = q.arrows[a].target;
      if (span[s].cols() == 0) continue;
      Matrix img = m.action(a) * span[s];
      Matrix merged = column_space(hstack(span[t], img));
      if (merged.cols() > span[t].cols()) {
        span[t] = std::move(merged);
        changed = true;
      }
    }
  }
  return restrict_to(m, span);
}

QuotientModule quotient(const Module& m, const std::vector<Matrix>& sub_bases) {
  const auto& q = m.algebra()->quiver();
  std::vector<Split> sp;
  std::vector<int> dims;
  for (int v = 0; v < q.vertices; ++v) {
    sp.push_back(split(sub_bases[v], m.dim(v)));
    dims.push_back(static_cast<int>(sp.back().comp.cols()));
  }
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.arrows[a].source, t = q.arrows[a].target;
    act.push_back(sp[t].proj * m.action(a) * sp[s].comp);
  }
  Module quo(m.algebra(), dims, std::move(act));
  std::vector<Matrix> proj, sect;
  for (auto& s : sp) {
    proj.push_back(s.proj);
    sect.push_back(s.comp);
  }
  return QuotientModule{quo, Morphism{m, quo, std::move(proj)}, std::move(sect)};
}

SubModule kernel(const Morphism& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.maps) b.push_back(kernel_basis(m));
  return restrict_to(f.source, b);
}

SubModule image(const Morphism& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.maps) b.push_back(column_space(m));
  return restrict_to(f.target, b);
}

QuotientModule cokernel(const Morphism& f) {
  std::vector<Matrix> b;
  for (const auto& m : f.maps) b.push_back(column_space(m));
  return quotient(f.target, b);
}

SubModule radical(const Module& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> b;
  for (int v = 0; v < q.vertices; ++v) {
    Matrix acc(m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v) acc = hstack(acc, m.action(a));
    b.push_back(column_space(acc));
  }
  return restrict_to(m, b);
}

SubModule socle(const Module& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> b;
  for (int v = 0; v < q.vertices; ++v) {
    Matrix acc(0, m.dim(v));
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].source == v) acc = vstack(acc, m.action(a));
    b.push_back(kernel_basis(acc));
  }
  return restrict_to(m, b);
}

QuotientModule top(const Module& m) { return quotient(m, radical(m).inclusion.maps); }

ProjectiveCover projective_cover(const Module& m) {
  const auto& alg = m.algebra();
  const int V = alg->num_vertices();
  auto rad = radical(m);
  ProjectiveCover pc;
  std::vector<Module> summands;
  for (int k = 0; k < V; ++k) {
    auto idx = extend_basis(rad.inclusion.maps[k], Matrix::identity(m.dim(k)));
    for (auto i : idx) {
      std::vector<Scalar> g(m.dim(k));
      g[i] = Scalar(1);
      pc.vertices.push_back(k);
      pc.generators.push_back(std::move(g));
      summands.push_back(projective(alg, k));
    }
  }
  Module src = summands.empty() ? Module::zero(alg) : direct_sum(summands);
  std::vector<Matrix> maps;
  for (int v = 0; v < V; ++v) {
    Matrix blk(m.dim(v), src.dim(v));
    std::size_t col = 0;
    for (std::size_t s = 0; s < pc.vertices.size(); ++s) {
      const int k = pc.vertices[s];
      Matrix g = Matrix::column(pc.generators[s]);
      for (int mono : alg->slice(v, k)) blk.set_block(0, col++, m.monomial_action(mono) * g);
    }
    maps.push_back(std::move(blk));
  }
  pc.map = Morphism{src, m, std::move(maps)};
  return pc;
}

InjectiveHull injective_hull(const Module& m) {
  auto pc = projective_cover(dual(m));
  Morphism d = dual(pc.map);
  d.source = m;
  return InjectiveHull{std::move(d), pc.vertices};
}

Module simple(const AlgebraPtr& alg, int k) {
  require(k >= 0 && k < alg->num_vertices(), "vertex out of range");
  std::vector<int> dims(alg->num_vertices(), 0);
  dims[k] = 1;
  std::vector<Matrix> act;
  for (const auto& ar : alg->quiver().arrows) act.emplace_back(dims[ar.target], dims[ar.source]);
  return Module(alg, std::move(dims), std::move(act));
}

Module projective(const AlgebraPtr& alg, int k) {
  require(k >= 0 && k < alg->num_vertices(), "vertex out of range");
  const int V = alg->num_vertices();
  std::vector<int> dims;
  for (int v = 0; v < V; ++v) dims.push_back(static_cast<int>(alg->slice(v, k).size()));
  std::vector<Matrix> act;
  const auto& arrows = alg->quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a)
    act.push_back(alg->left_mult_matrix(AlgElem::basis(alg->arrow_basis(static_cast<int>(a))), arrows[a].target,
                                        arrows[a].source, k));
  return Module(alg, std::move(dims), std::move(act));
}

Module injective(const AlgebraPtr& alg, int k) {
  require(k >= 0 && k < alg->num_vertices(), "vertex out of range");
  const int V = alg->num_vertices();
  std::vector<int> dims;
  for (int v = 0; v < V; ++v) dims.push_back(static_cast<int>(alg->slice(k, v).size()));
  std::vector<Matrix> act;
  const auto& arrows = alg->quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int u = arrows[a].source, v = arrows[a].target;
    const int ab = alg->arrow_basis(static_cast<int>(a));
    const auto& rows = alg->slice(k, v);
    Matrix mat(rows.size(), alg->slice(k, u).size());
    // (alpha . m*)(y) = m*(y alpha)
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [idx, c] : alg->mul_basis(rows[r], ab)) mat(r, alg->slice_pos(idx)) += c;
    act.push_back(std::move(mat));
  }
  return Module(alg, std::move(dims), std::move(act));
}

Module standard(const AlgebraPtr& alg, int k) {
  Module p = projective(alg, k);
  std::vector<Matrix> gens;
  for (int v = 0; v < alg->num_vertices(); ++v)
    gens.push_back(v > k ? Matrix::identity(p.dim(v)) : Matrix(p.dim(v), 0));
  auto sub = generate_submodule(p, gens);
  return quotient(p, sub.inclusion.maps).module;
}

Module costandard(const AlgebraPtr& alg, int k) { return dual(standard(alg, k)); }

Module regular_module(const AlgebraPtr& alg) {
  const int V = alg->num_vertices();
  std::vector<std::vector<int>> at(V);  // basis monomials by target, in index order
  for (int i = 0; i < alg->dim(); ++i) at[alg->basis(i).target].push_back(i);
  std::vector<int> dims;
  for (auto& l : at) dims.push_back(static_cast<int>(l.size()));
  std::vector<Matrix> act;
  const auto& arrows = alg->quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const int u = arrows[a].source, v = arrows[a].target;
    Matrix mat(dims[v], dims[u]);
    const int ab = alg->arrow_basis(static_cast<int>(a));
    for (std::size_t c = 0; c < at[u].size(); ++c)
      for (const auto& [idx, s] : alg->mul_basis(ab, at[u][c])) {
        auto pos = std::find(at[v].begin(), at[v].end(), idx) - at[v].begin();
        mat(pos, c) += s;
      }
    act.push_back(std::move(mat));
  }
  return Module(alg, std::move(dims), std::move(act));
}

Module dual(const Module& m) {
  const auto& alg = m.algebra();
  require(alg->has_involution(), "duality needs an anti-involution");
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < m.actions().size(); ++a)
    act.push_back(m.action(alg->sigma_arrow(static_cast<int>(a))).transpose());
  return Module(alg, m.dims(), std::move(act));
}

Morphism dual(const Morphism& f) {
  std::vector<Matrix> maps;
  for (const auto& m : f.maps) maps.push_back(m.transpose());
  return Morphism{dual(f.target), dual(f.source), std::move(maps)};
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  auto e = hom_space(m, m);
  if (field_characteristic() == 0) return trace_form_rank(e) == 1;
  return !find_split(m, e, 1, 20).has_value();
}

std::vector<Module> decompose(const Module& m, std::uint64_t seed) {
  if (m.is_zero()) return {};
  auto e = hom_space(m, m);
  const bool char0 = field_characteristic() == 0;
  if (char0 && trace_form_rank(e) == 1) return {m};
  auto s = find_split(m, e, seed, 40);
  if (!s) {
    if (char0) throw std::runtime_error("endomorphism ring does not split over the base field");
    return {m};
  }
  std::vector<Module> out;
  for (const auto* part : {&s->kernel_part, &s->image_part}) {
    auto sub = restrict_to(m, *part);
    auto pieces = decompose(sub.module, seed + 1);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  return out;
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    default:
      return "unknown";
  }
}

Tri isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  if (m.dims() != n.dims()) return Tri::no;
  if (m.is_zero()) return Tri::yes;
  auto h = hom_space(m, n);
  if (h.empty()) return Tri::no;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 8; ++t) {
    std::vector<Scalar> c(h.size());
    for (auto& s : c) s = random_scalar(rng, 30);
    if (all_invertible(combine(h, c))) return Tri::yes;
  }
  if (!is_indecomposable(m)) return Tri::unknown;
  // Over a local End(m), m ~ n iff some composite of basis maps is invertible.
  auto back = hom_space(n, m);
  for (const auto& f : h)
    for (const auto& g : back)
      if (all_invertible(compose(g, f).maps)) return Tri::yes;
  return Tri::no;
}

Module nonsplit_extension(const Module& c, const Module& b) {
  auto pc = projective_cover(c);
  auto omega = kernel(pc.map);
  auto hom_ob = hom_space(omega.module, b);
  auto hom_pb = hom_space(pc.map.source, b);
  const std::size_t len = flatten(zero_morphism(omega.module, b)).size();
  Matrix h(len, hom_ob.size()), r(len, hom_pb.size());
  for (std::size_t i = 0; i < hom_ob.size(); ++i) {
    auto v = flatten(hom_ob[i]);
    for (std::size_t j = 0; j < len; ++j) h(j, i) = v[j];
  }
  for (std::size_t i = 0; i < hom_pb.size(); ++i) {
    auto v = flatten(compose(hom_pb[i], omega.inclusion));
    for (std::size_t j = 0; j < len; ++j) r(j, i) = v[j];
  }
  auto fresh = extend_basis(column_space(r), h);
  if (fresh.size() != 1)
    throw std::runtime_error("Ext^1 has dimension " + std::to_string(fresh.size()) + ", expected 1");
  const Morphism& f = hom_ob[fresh[0]];
  // Pushout of b <- omega -> cover.
  Module sum = direct_sum(b, pc.map.source);
  std::vector<Matrix> maps;
  for (std::size_t v = 0; v < f.maps.size(); ++v) maps.push_back(vstack(f.maps[v], omega.inclusion.maps[v] * Scalar(-1)));
  auto coker = cokernel(make_morphism(omega.module, sum, std::move(maps)));
  const Module& e = coker.module;
  // Induced projection e -> c, then look for a section.
  std::vector<Matrix> to_c;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    Matrix zero_then_pi = hstack(Matrix(c.dim(static_cast<int>(v)), b.dim(static_cast<int>(v))), pc.map.maps[v]);
    to_c.push_back(zero_then_pi * coker.section[v]);
  }
  Morphism p = make_morphism(e, c, std::move(to_c));
  auto sections = hom_space(c, e);
  const auto id = flatten(identity_morphism(c));
  Matrix sys(id.size(), sections.size());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    auto v = flatten(compose(p, sections[i]));
    for (std::size_t j = 0; j < v.size(); ++j) sys(j, i) = v[j];
  }
  if (solve(sys, id)) throw std::logic_error("constructed extension splits");
  return e;
}

Module string_object(const AlgebraPtr& alg, int sign, int a, int b) {
  const int n = alg->num_vertices() - 1;
  require(0 <= b && b <= a && a <= n, "string object needs 0 <= b <= a <= n");
  if (sign < 0) return dual(string_object(alg, 1, a, b));
  if (a == b) return simple(alg, a);
  if (a == b + 1) return standard(alg, a);
  return nonsplit_extension(string_object(alg, 1, a - 2, b), standard(alg, a));
}

}  // namespace pervpn

#include "pervpn/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pervpn {

using Sparse = std::vector<std::pair<int, Scalar>>;

namespace {

// Dense accumulator for sparse sums over a fixed index range.
class Accumulator {
 public:
  explicit Accumulator(int size) : values_(size), touched_(size, false) {}
  void add(int idx, const Scalar& c) {
    if (c.is_zero()) return;
    if (!touched_[idx]) {
      touched_[idx] = true;
      order_.push_back(idx);
    }
    values_[idx] += c;
  }
  Sparse take() {
    std::sort(order_.begin(), order_.end());
    Sparse out;
    for (int i : order_)
      if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
    return out;
  }

 private:
  std::vector<Scalar> values_;
  std::vector<bool> touched_;
  std::vector<int> order_;
};

}  // namespace

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  throw std::out_of_range("no arrow named " + name);
}

AlgElem AlgElem::basis(int idx, Scalar c) {
  AlgElem e;
  if (!c.is_zero()) e.terms_.emplace_back(idx, std::move(c));
  return e;
}

AlgElem AlgElem::from_sorted(std::vector<std::pair<int, Scalar>> terms) {
  AlgElem e;
  e.terms_ = std::move(terms);
  return e;
}

Scalar AlgElem::coeff(int idx) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                             [](const auto& t, int i) { return t.first < i; });
  if (it != terms_.end() && it->first == idx) return it->second;
  return Scalar();
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  Sparse out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) { return *this += -o; }

AlgElem& AlgElem::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem e = *this;
  for (auto& t : e.terms_) t.second = -t.second;
  return e;
}

AlgebraPtr PathAlgebra::build(std::string name, Quiver quiver, std::vector<Relation> relations,
                              std::optional<std::vector<int>> sigma) {
  std::shared_ptr<PathAlgebra> A(new PathAlgebra());
  A->name_ = std::move(name);
  A->quiver_ = std::move(quiver);
  A->relations_ = std::move(relations);
  A->sigma_ = std::move(sigma);
  const int V = A->quiver_.vertices;
  const auto& arrows = A->quiver_.arrows;
  const int na = static_cast<int>(arrows.size());
  for (const auto& ar : arrows)
    if (ar.source < 0 || ar.source >= V || ar.target < 0 || ar.target >= V)
      throw std::invalid_argument("arrow endpoint out of range");

  struct RelInfo {
    int source, target;
  };
  std::vector<RelInfo> rel_info;
  for (const auto& r : A->relations_) {
    if (r.terms.empty()) throw std::invalid_argument("empty relation");
    int s = -1, t = -1;
    for (const auto& term : r.terms) {
      if (term.arrows.size() != 2) throw std::invalid_argument("relations must have path length 2");
      const Arrow& first = arrows.at(term.arrows[0]);
      const Arrow& second = arrows.at(term.arrows[1]);
      if (first.target != second.source) throw std::invalid_argument("relation path not composable");
      if (s < 0) {
        s = first.source;
        t = second.target;
      } else if (s != first.source || t != second.target) {
        throw std::invalid_argument("relation terms with different endpoints");
      }
    }
    rel_info.push_back({s, t});
  }

  // Level 0: idempotents.
  A->levels_.emplace_back();
  A->idempotent_.resize(V);
  for (int v = 0; v < V; ++v) {
    A->idempotent_[v] = static_cast<int>(A->basis_.size());
    A->levels_[0].push_back(A->idempotent_[v]);
    A->basis_.push_back({v, v, {}});
  }
  A->prepend_.assign(na, {});
  A->arrow_basis_.assign(na, -1);

  constexpr int kMaxLength = 256;
  for (int len = 1;; ++len) {
    if (len > kMaxLength) throw std::runtime_error("path algebra is not finite-dimensional");
    const auto& prev = A->levels_[len - 1];
    // Candidates: arrow a after basis monomial m of the previous level.
    std::vector<std::pair<int, int>> cand;
    std::map<std::pair<int, int>, int> cand_index;
    for (int a = 0; a < na; ++a)
      for (int m : prev)
        if (A->basis_[m].target == arrows[a].source) {
          cand_index[{a, m}] = static_cast<int>(cand.size());
          cand.emplace_back(a, m);
        }
    // Relation images r (x) m' for m' two levels down.
    std::vector<std::vector<std::pair<int, Scalar>>> rows;
    if (len >= 2) {
      for (std::size_t ri = 0; ri < A->relations_.size(); ++ri)
        for (int m2 : A->levels_[len - 2]) {
          if (A->basis_[m2].target != rel_info[ri].source) continue;
          Accumulator acc(static_cast<int>(cand.size()));
          for (const auto& term : A->relations_[ri].terms) {
            for (const auto& [idx, c] : A->prepend_[term.arrows[0]][m2])
              acc.add(cand_index.at({term.arrows[1], idx}), c * term.coeff);
          }
          auto row = acc.take();
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    Matrix rel(rows.size(), cand.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto& [j, c] : rows[i]) rel(i, j) = c;
    auto [red, piv] = rref(std::move(rel));
    std::vector<int> pivot_row(cand.size(), -1);
    for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<int>(i);
    std::vector<int> new_id(cand.size(), -1);
    std::vector<int> level;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (pivot_row[c] >= 0) continue;
      auto [a, m] = cand[c];
      Monomial mono{A->basis_[m].source, arrows[a].target, A->basis_[m].arrows};
      mono.arrows.push_back(a);
      new_id[c] = static_cast<int>(A->basis_.size());
      level.push_back(new_id[c]);
      A->basis_.push_back(std::move(mono));
      if (len == 1) A->arrow_basis_[a] = new_id[c];
    }
    for (auto& p : A->prepend_) p.resize(A->basis_.size());
    for (std::size_t c = 0; c < cand.size(); ++c) {
      auto [a, m] = cand[c];
      Sparse image;
      if (pivot_row[c] < 0) {
        image.emplace_back(new_id[c], Scalar(1));
      } else {
        for (std::size_t j = 0; j < cand.size(); ++j) {
          if (new_id[j] < 0) continue;
          const Scalar& x = red(pivot_row[c], j);
          if (!x.is_zero()) image.emplace_back(new_id[j], -x);
        }
      }
      A->prepend_[a][m] = std::move(image);
    }
    if (level.empty()) break;
    A->levels_.push_back(std::move(level));
  }
  for (int a = 0; a < na; ++a)
    if (A->arrow_basis_[a] < 0) throw std::invalid_argument("arrow killed by relations");
  for (auto& p : A->prepend_) p.resize(A->basis_.size());

  const int D = A->dim();
  A->slices_.assign(V * V, {});
  A->slice_pos_.assign(D, 0);
  for (int i = 0; i < D; ++i) {
    auto& s = A->slices_[A->basis_[i].target * V + A->basis_[i].source];
    A->slice_pos_[i] = static_cast<int>(s.size());
    s.push_back(i);
  }

  A->mult_.assign(static_cast<std::size_t>(D) * D, {});
  for (int x = 0; x < D; ++x)
    for (int y = 0; y < D; ++y) {
      const Monomial& mx = A->basis_[x];
      const Monomial& my = A->basis_[y];
      if (mx.source != my.target) continue;
      Sparse cur{{y, Scalar(1)}};
      for (int a : mx.arrows) {
        Accumulator acc(D);
        for (const auto& [idx, c] : cur)
          for (const auto& [j, d] : A->prepend_[a][idx]) acc.add(j, c * d);
        cur = acc.take();
        if (cur.empty()) break;
      }
      A->mult_[static_cast<std::size_t>(x) * D + y] = std::move(cur);
    }

  if (A->sigma_) {
    const auto& s = *A->sigma_;
    if (static_cast<int>(s.size()) != na) throw std::invalid_argument("sigma size mismatch");
    for (int a = 0; a < na; ++a) {
      if (s[a] < 0 || s[a] >= na || s[s[a]] != a || arrows[s[a]].source != arrows[a].target ||
          arrows[s[a]].target != arrows[a].source)
        throw std::invalid_argument("sigma must be an arrow-reversing involution");
    }
    for (const auto& r : A->relations_) {
      Relation image;
      for (const auto& term : r.terms)
        image.terms.push_back({{s[term.arrows[1]], s[term.arrows[0]]}, term.coeff});
      if (!A->evaluate(image).is_zero()) throw std::invalid_argument("sigma does not preserve relations");
    }
  }
  return A;
}

std::vector<int> PathAlgebra::slice(int target, int source, int length) const {
  std::vector<int> out;
  for (int i : slice(target, source))
    if (basis_[i].length() == length) out.push_back(i);
  return out;
}

AlgElem PathAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.terms().size() == 1 && y.terms().size() == 1) {
    const auto& [i, c] = x.terms()[0];
    const auto& [j, d] = y.terms()[0];
    const Sparse& p = mul_basis(i, j);
    if (p.empty()) return {};
    Scalar cd = c * d;
    Sparse out = p;
    if (!cd.is_one())
      for (auto& t : out) t.second *= cd;
    return AlgElem::from_sorted(std::move(out));
  }
  Accumulator acc(dim());
  for (const auto& [i, c] : x.terms())
    for (const auto& [j, d] : y.terms()) {
      const Sparse& p = mul_basis(i, j);
      if (p.empty()) continue;
      Scalar cd = c * d;
      for (const auto& [k, e] : p) acc.add(k, cd * e);
    }
  return AlgElem::from_sorted(acc.take());
}

AlgElem PathAlgebra::reduce_path(int start, const std::vector<int>& arrows) const {
  AlgElem cur = AlgElem::basis(idempotent(start));
  int at = start;
  for (int a : arrows) {
    if (quiver_.arrows.at(a).source != at) throw std::invalid_argument("path not composable");
    at = quiver_.arrows[a].target;
    cur = mul(AlgElem::basis(arrow_basis(a)), cur);
    if (cur.is_zero()) return {};
  }
  return cur;
}

AlgElem PathAlgebra::evaluate(const Relation& r) const {
  AlgElem sum;
  for (const auto& term : r.terms) {
    int start = quiver_.arrows.at(term.arrows.at(0)).source;
    sum += reduce_path(start, term.arrows) * term.coeff;
  }
  return sum;
}

AlgElem PathAlgebra::sigma(const AlgElem& x) const {
  if (!sigma_) throw std::logic_error("algebra has no anti-involution");
  AlgElem out;
  for (const auto& [i, c] : x.terms()) {
    const Monomial& m = basis_[i];
    std::vector<int> rev;
    for (auto it = m.arrows.rbegin(); it != m.arrows.rend(); ++it) rev.push_back((*sigma_)[*it]);
    out += reduce_path(m.target, rev) * c;
  }
  return out;
}

std::vector<int> PathAlgebra::radical_power_basis(int m) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (basis_[i].length() >= m) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> PathAlgebra::cartan_matrix() const {
  const int V = num_vertices();
  std::vector<std::vector<int>> c(V, std::vector<int>(V, 0));
  for (int l = 0; l < V; ++l)
    for (int k = 0; k < V; ++k) c[l][k] = static_cast<int>(slice(l, k).size());
  return c;
}

std::string PathAlgebra::word(int i) const {
  const Monomial& m = basis_[i];
  if (m.arrows.empty()) return "e" + std::to_string(m.source);
  std::string w;
  for (auto it = m.arrows.rbegin(); it != m.arrows.rend(); ++it) {
    if (!w.empty()) w += "*";
    w += quiver_.arrows[*it].name;
  }
  return w;
}

std::string PathAlgebra::str(const AlgElem& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [i, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    if (!c.is_one()) s += "(" + c.str() + ")";
    s += word(i);
  }
  return s;
}

std::vector<Scalar> PathAlgebra::slice_coords(const AlgElem& x, int target, int source) const {
  std::vector<Scalar> v(slice(target, source).size());
  for (const auto& [i, c] : x.terms()) {
    if (basis_[i].target != target || basis_[i].source != source)
      throw std::invalid_argument("element outside the requested slice");
    v[slice_pos_[i]] = c;
  }
  return v;
}

AlgElem PathAlgebra::from_slice_coords(const std::vector<Scalar>& v, std::size_t offset, int target,
                                       int source) const {
  const auto& s = slice(target, source);
  Sparse terms;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (!v[offset + j].is_zero()) terms.emplace_back(s[j], v[offset + j]);
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return AlgElem::from_sorted(std::move(terms));
}

Matrix PathAlgebra::left_mult_matrix(const AlgElem& x, int v, int u, int k) const {
  const auto& src = slice(u, k);
  const auto& dst = slice(v, k);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [i, c] : x.terms())
      for (const auto& [r, d] : mul_basis(i, src[j])) m(slice_pos_[r], j) += c * d;
  return m;
}

nlohmann::json PathAlgebra::to_json() const {
  using nlohmann::json;
  json j;
  j["name"] = name_;
  j["vertices"] = quiver_.vertices;
  j["composition"] = "right-to-left; 'arrows' lists traversal order";
  json arrows = json::array();
  for (const auto& a : quiver_.arrows) arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : relations_) {
    json terms = json::array();
    for (const auto& t : r.terms) {
      json names = json::array();
      for (int a : t.arrows) names.push_back(quiver_.arrows[a].name);
      terms.push_back({{"coeff", t.coeff.str()}, {"arrows", names}});
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  json basis = json::array();
  for (int i = 0; i < dim(); ++i) {
    json names = json::array();
    for (int a : basis_[i].arrows) names.push_back(quiver_.arrows[a].name);
    basis.push_back({{"index", i},
                     {"source", basis_[i].source},
                     {"target", basis_[i].target},
                     {"length", basis_[i].length()},
                     {"word", word(i)},
                     {"arrows", names}});
  }
  j["basis"] = basis;
  json mult = json::array();
  for (int x = 0; x < dim(); ++x)
    for (int y = 0; y < dim(); ++y) {
      const auto& p = mul_basis(x, y);
      if (p.empty()) continue;
      json prod = json::array();
      for (const auto& [k, c] : p) prod.push_back({k, c.str()});
      mult.push_back({x, y, prod});
    }
  j["mult"] = mult;
  if (sigma_) {
    json s = json::array();
    for (int a : *sigma_) s.push_back(quiver_.arrows[a].name);
    j["sigma"] = s;
  }
  return j;
}

AlgebraPtr build_An(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Quiver q;
  q.vertices = n + 1;
  // index of b_i is 2(i-1), a_i is 2(i-1)+1
  for (int i = 1; i <= n; ++i) {
    q.arrows.push_back({"b" + std::to_string(i), i - 1, i});
    q.arrows.push_back({"a" + std::to_string(i), i, i - 1});
  }
  auto b = [](int i) { return 2 * (i - 1); };
  auto a = [](int i) { return 2 * (i - 1) + 1; };
  std::vector<Relation> rels;
  for (int i = 2; i <= n; ++i) rels.push_back({{{{a(i), a(i - 1)}, Scalar(1)}}});
  for (int i = 1; i <= n - 1; ++i) rels.push_back({{{{b(i), b(i + 1)}, Scalar(1)}}});
  for (int i = 2; i <= n; ++i)
    rels.push_back({{{{b(i), a(i)}, Scalar(1)}, {{a(i - 1), b(i - 1)}, Scalar(-1)}}});
  if (n >= 1) rels.push_back({{{{a(n), b(n)}, Scalar(1)}}});
  std::vector<int> sigma(2 * n);
  for (int i = 1; i <= n; ++i) {
    sigma[a(i)] = b(i);
    sigma[b(i)] = a(i);
  }
  return PathAlgebra::build("A" + std::to_string(n), std::move(q), std::move(rels), std::move(sigma));
}

AlgebraPtr build_En(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Quiver q;
  q.vertices = n + 1;
  // up_k: k -> k+1 at index 2k, down_k: k+1 -> k at 2k+1
  for (int k = 0; k < n; ++k) {
    q.arrows.push_back({"e" + std::to_string(k) + "_" + std::to_string(k + 1), k, k + 1});
    q.arrows.push_back({"e" + std::to_string(k + 1) + "_" + std::to_string(k), k + 1, k});
  }
  auto up = [](int k) { return 2 * k; };
  auto down = [](int k) { return 2 * k + 1; };
  std::vector<Relation> rels;
  if (n >= 1) rels.push_back({{{{up(0), down(0)}, Scalar(1)}}});
  for (int k = 1; k <= n - 1; ++k)
    rels.push_back({{{{up(k), down(k)}, Scalar(1)}, {{down(k - 1), up(k - 1)}, Scalar(-1)}}});
  std::vector<int> sigma(2 * n);
  for (int k = 0; k < n; ++k) {
    sigma[up(k)] = down(k);
    sigma[down(k)] = up(k);
  }
  return PathAlgebra::build("E" + std::to_string(n), std::move(q), std::move(rels), std::move(sigma));
}

}  // namespace pervpn

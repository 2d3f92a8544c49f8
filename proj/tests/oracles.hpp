#pragma once

// Independent reference computations used only by tests. They avoid the
// library's rewriting, resolution and Hom-complex code paths.

#include <map>
#include <stdexcept>
#include <vector>

#include "pervpn/module.hpp"

namespace oracle {

using pervpn::AlgebraPtr;
using pervpn::Matrix;
using pervpn::Scalar;

// All paths of a given positive length, in traversal order.
inline std::vector<std::vector<int>> paths_of_length(const pervpn::Quiver& q, int len) {
  std::vector<std::vector<int>> out;
  if (len == 1) {
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) out.push_back({a});
    return out;
  }
  for (const auto& p : paths_of_length(q, len - 1))
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
      if (q.arrows[p.back()].target != q.arrows[a].source) continue;
      auto np = p;
      np.push_back(a);
      out.push_back(std::move(np));
    }
  return out;
}

// Dimension of kQ / (relations) by enumerating paths length by length and
// spanning the ideal by p * r * q. Relations must be homogeneous in length.
// Returns dims per length; stops at the first vanishing length.
inline std::vector<int> graded_dims_by_enumeration(const pervpn::Quiver& q, const std::vector<pervpn::Relation>& rels,
                                                   int max_len) {
  for (const auto& r : rels)
    for (const auto& t : r.terms)
      if (t.arrows.size() != r.terms.front().arrows.size()) throw std::invalid_argument("inhomogeneous relation");
  auto start = [&](const std::vector<int>& p) { return q.arrows[p.front()].source; };
  auto end = [&](const std::vector<int>& p) { return q.arrows[p.back()].target; };
  std::vector<int> dims{q.vertices};
  for (int len = 1; len <= max_len; ++len) {
    auto paths = paths_of_length(q, len);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;
    std::vector<std::vector<Scalar>> gens;
    for (const auto& r : rels) {
      const int rl = static_cast<int>(r.terms.front().arrows.size());
      if (rl > len) continue;
      const int rs = q.arrows[r.terms.front().arrows.front()].source;
      const int rt = q.arrows[r.terms.front().arrows.back()].target;
      for (int pre = 0; pre <= len - rl; ++pre) {
        const int post = len - rl - pre;
        auto heads = pre == 0 ? std::vector<std::vector<int>>{{}} : paths_of_length(q, pre);
        auto tails = post == 0 ? std::vector<std::vector<int>>{{}} : paths_of_length(q, post);
        for (const auto& h : heads) {
          if (!h.empty() && end(h) != rs) continue;
          for (const auto& t : tails) {
            if (!t.empty() && start(t) != rt) continue;
            std::vector<Scalar> v(paths.size());
            for (const auto& term : r.terms) {
              std::vector<int> p = h;
              p.insert(p.end(), term.arrows.begin(), term.arrows.end());
              p.insert(p.end(), t.begin(), t.end());
              v[index.at(p)] += term.coeff;
            }
            gens.push_back(std::move(v));
          }
        }
      }
    }
    Matrix m(paths.size(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c)
      for (std::size_t r = 0; r < paths.size(); ++r) m(r, c) = gens[c][r];
    const int d = static_cast<int>(paths.size() - pervpn::rank(m));
    if (d == 0) break;
    dims.push_back(d);
  }
  return dims;
}

// String module read off its walk: support [b, a] with one-dimensional spaces;
// the arrow between j-1 and j points down (a_j) when j has the parity of a
// and up (b_j) otherwise. The minus variant reverses every arrow.
inline pervpn::Module direct_string(const AlgebraPtr& alg, int sign, int a, int b) {
  const auto& q = alg->quiver();
  std::vector<int> dims(q.vertices, 0);
  for (int j = b; j <= a; ++j) dims[j] = 1;
  std::vector<Matrix> act;
  for (const auto& arr : q.arrows) act.emplace_back(dims[arr.target], dims[arr.source]);
  for (int j = b + 1; j <= a; ++j) {
    bool down = (a - j) % 2 == 0;
    if (sign < 0) down = !down;
    const std::string name = std::string(down ? "a" : "b") + std::to_string(j);
    act[q.arrow_index(name)](0, 0) = Scalar(1);
  }
  return pervpn::Module(alg, dims, act);
}

// dim Ext^r(M, N) for r = 0..rmax by dimension shifting along syzygies:
// 0 -> Hom(M,N) -> Hom(P,N) -> Hom(OmegaM,N) -> Ext^1(M,N) -> 0 and
// Ext^{r+1}(M,N) = Ext^1(OmegaM, N) for r >= 1.
inline std::vector<int> ext_by_syzygies(const pervpn::Module& m, const pervpn::Module& n, int rmax) {
  auto hom = [](const pervpn::Module& x, const pervpn::Module& y) {
    return static_cast<int>(pervpn::hom_space(x, y).size());
  };
  std::vector<int> out{hom(m, n)};
  pervpn::Module cur = m;
  for (int r = 1; r <= rmax; ++r) {
    if (cur.is_zero()) {
      out.push_back(0);
      continue;
    }
    auto cover = pervpn::projective_cover(cur);
    auto omega = pervpn::kernel(cover.map).module;
    out.push_back(hom(omega, n) - hom(cover.map.source, n) + hom(cur, n));
    cur = omega;
  }
  return out;
}

}  // namespace oracle

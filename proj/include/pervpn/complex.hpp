#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pervpn/algebra.hpp"
#include "pervpn/module.hpp"

namespace pervpn {

// Matrix with algebra entries describing a map between direct sums of
// indecomposable projectives. Entry (r, c) lies in e_{src[c]} A e_{tgt[r]} and
// acts as right multiplication P_{src[c]} -> P_{tgt[r]}, y -> y * entry.
class AlgMatrix {
 public:
  AlgMatrix() = default;
  AlgMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  AlgElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const AlgElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;
  AlgMatrix& operator*=(const Scalar& s);
  AlgMatrix& operator+=(const AlgMatrix& o);
  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<AlgElem> data_;
};

// Matrix of "first, then second".
AlgMatrix compose(const PathAlgebra& alg, const AlgMatrix& second, const AlgMatrix& first);

// Bounded complex of projectives, cohomological: d maps degree i to i+1.
struct ProjComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::vector<int>> terms;  // vertex of each summand, degree lo + i
  std::vector<AlgMatrix> diffs;         // diffs[i]: degree lo+i -> lo+i+1

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool is_zero() const;
  const std::vector<int>& term(int d) const;
  AlgMatrix diff(int d) const;
  int total_summands() const;
  // multiplicity of P_k in degree d, indexed [degree - lo][k]
  std::vector<std::vector<int>> multiplicities() const;

  // Checks shapes, entry slices and d^2 = 0; throws on failure.
  void validate() const;
  void trim();
  nlohmann::json to_json() const;
  static ProjComplex from_json(AlgebraPtr alg, const nlohmann::json& j);
  std::string summary() const;
};

ProjComplex zero_complex(AlgebraPtr alg);
ProjComplex stalk(AlgebraPtr alg, const std::vector<int>& vertices, int degree = 0);
// C[m]^i = C^{i+m}, differential scaled by (-1)^m.
ProjComplex shift(const ProjComplex& c, int m);
ProjComplex direct_sum(const ProjComplex& c, const ProjComplex& d);

// Chain map of degree `degree`: blocks[i] maps source degree source.lo + i to
// target degree source.lo + i + degree.
struct ChainMap {
  std::shared_ptr<const ProjComplex> source;
  std::shared_ptr<const ProjComplex> target;
  int degree = 0;
  std::vector<AlgMatrix> blocks;

  AlgMatrix block(int d) const;
  bool is_zero() const;
};

ChainMap zero_map(std::shared_ptr<const ProjComplex> c, std::shared_ptr<const ProjComplex> d, int degree);
ChainMap identity_map(std::shared_ptr<const ProjComplex> c);
// g after f, degrees add.
ChainMap compose(const ChainMap& g, const ChainMap& f);
// d_D f - (-1)^|f| f d_C, as a map of degree |f|+1.
ChainMap boundary(const ChainMap& f);
bool is_closed(const ChainMap& f);
// Mapping cone of a degree-0 chain map f: A -> B. cone^d = A^{d+1} + B^d with
// d = [[-d_A, 0], [f, d_B]]; A summands come first.
ProjComplex cone(const ChainMap& f);

// Bounded complex of modules.
struct ModuleComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<std::vector<Matrix>> diffs;  // per degree, per vertex

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  const Module& term(int d) const;
  // Zero matrices outside the stored range.
  Matrix diff(int d, int v) const;
  void validate() const;
};

ModuleComplex stalk(const Module& m, int degree = 0);
Module projective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices);
Module injective_sum(const AlgebraPtr& alg, const std::vector<int>& vertices);
// Component at vertex v of the module map realized by an algebra matrix.
Matrix realized_map(const PathAlgebra& alg, const AlgMatrix& m, const std::vector<int>& src,
                    const std::vector<int>& tgt, int v);
Matrix realized_injective_map(const PathAlgebra& alg, const AlgMatrix& m, const std::vector<int>& src,
                              const std::vector<int>& tgt, int v);
ModuleComplex realize(const ProjComplex& c);
// Same data read as a complex of injectives: P_k -> I_k, right multiplication
// by x -> precomposition with left multiplication by x.
ModuleComplex realize_injective(const ProjComplex& c);
// Degrees negated, matrices transposed, entries through the anti-involution.
// D(realize(c)) is isomorphic to realize_injective(dualdata(c)).
ProjComplex dualdata(const ProjComplex& c);

// Cohomology dims per degree (outer) and vertex (inner), index degree - c.lo.
std::vector<std::vector<int>> homology_dims(const ProjComplex& c);
std::vector<std::vector<int>> homology_dims(const ModuleComplex& c);

}  // namespace pervpn

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pervpn/matrix.hpp"
#include "pervpn/scalar.hpp"

namespace pervpn {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertices = 0;
  std::vector<Arrow> arrows;

  int arrow_index(const std::string& name) const;
};

// A path is stored in traversal order: arrows[0] is crossed first. As an
// algebra product it reads right to left, so traversal (b1, a1) is a1*b1.
struct PathTerm {
  std::vector<int> arrows;
  Scalar coeff;
};

struct Relation {
  std::vector<PathTerm> terms;
};

struct Monomial {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
  int length() const { return static_cast<int>(arrows.size()); }
};

// Sparse combination of basis monomials, sorted by index, no zero coefficients.
class AlgElem {
 public:
  AlgElem() = default;
  static AlgElem basis(int idx, Scalar c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int idx) const;
  const std::vector<std::pair<int, Scalar>>& terms() const { return terms_; }

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Scalar& s);
  AlgElem operator-() const;
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(AlgElem a, const Scalar& s) { return a *= s; }
  friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

  // Takes ownership of already-canonical terms.
  static AlgElem from_sorted(std::vector<std::pair<int, Scalar>> terms);

 private:
  std::vector<std::pair<int, Scalar>> terms_;
};

class PathAlgebra;
using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

class PathAlgebra {
 public:
  // sigma: optional arrow permutation reversing each arrow, extended to an
  // anti-automorphism.
  static AlgebraPtr build(std::string name, Quiver quiver, std::vector<Relation> relations,
                          std::optional<std::vector<int>> sigma = std::nullopt);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.vertices; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int max_length() const { return static_cast<int>(levels_.size()) - 1; }

  const Monomial& basis(int i) const { return basis_[i]; }
  // Basis monomials of e_target A e_source, ordered by length.
  const std::vector<int>& slice(int target, int source) const {
    return slices_[target * quiver_.vertices + source];
  }
  std::vector<int> slice(int target, int source, int length) const;
  // Position of basis element i inside its (target, source) slice.
  int slice_pos(int i) const { return slice_pos_[i]; }
  int idempotent(int v) const { return idempotent_[v]; }
  int arrow_basis(int a) const { return arrow_basis_[a]; }

  // Product x*y, meaning "first y, then x".
  const std::vector<std::pair<int, Scalar>>& mul_basis(int x, int y) const { return mult_[x * dim() + y]; }
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  AlgElem reduce_path(int start, const std::vector<int>& arrows) const;
  AlgElem evaluate(const Relation& r) const;

  bool has_involution() const { return sigma_.has_value(); }
  int sigma_arrow(int a) const { return (*sigma_)[a]; }
  AlgElem sigma(const AlgElem& x) const;

  std::vector<int> radical_power_basis(int m) const;
  // Entry (l, k) = dim e_l A e_k.
  std::vector<std::vector<int>> cartan_matrix() const;
  std::string word(int i) const;
  std::string str(const AlgElem& x) const;

  // Coordinates of x in the slice e_target A e_source, x assumed to lie there.
  std::vector<Scalar> slice_coords(const AlgElem& x, int target, int source) const;
  AlgElem from_slice_coords(const std::vector<Scalar>& v, std::size_t offset, int target, int source) const;
  // Left-multiplication matrix of x from e_u A e_k to e_v A e_k (x in e_v A e_u).
  Matrix left_mult_matrix(const AlgElem& x, int v, int u, int k) const;

  nlohmann::json to_json() const;

 private:
  PathAlgebra() = default;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::optional<std::vector<int>> sigma_;
  std::vector<Monomial> basis_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> slices_;
  std::vector<int> slice_pos_;
  std::vector<int> idempotent_;
  std::vector<int> arrow_basis_;
  // prepend_[a][i] = arrow a times basis element i.
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> prepend_;
  std::vector<std::vector<std::pair<int, Scalar>>> mult_;
};

// The perverse-sheaf algebra on vertices 0..n with arrows b_i: i-1 -> i and
// a_i: i -> i-1. The zero loop sits at vertex n; the loop at vertex 0 is not
// imposed to vanish. Anti-involution swaps a_i and b_i.
AlgebraPtr build_An(int n);
// Graded algebra on vertices 0..n with arrows e{k}_{l}: k -> l of degree 1.
AlgebraPtr build_En(int n);

}  // namespace pervpn

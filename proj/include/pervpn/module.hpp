#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pervpn/algebra.hpp"
#include "pervpn/matrix.hpp"

namespace pervpn {

// A quiver representation: one space per vertex and one matrix per arrow
// (target dim x source dim). Relations are checked on construction.
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr alg, std::vector<int> dims, std::vector<Matrix> action);
  static Module zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& action(int arrow) const { return action_[arrow]; }
  const std::vector<Matrix>& actions() const { return action_; }

  // Matrix of basis monomial i acting from its source space to its target space.
  const Matrix& monomial_action(int i) const { return mono_[i]; }
  // Matrix of x (lying in e_to A e_from) as a map M_from -> M_to.
  Matrix act(const AlgElem& x, int from, int to) const;

  nlohmann::json to_json() const;
  static Module from_json(AlgebraPtr alg, const nlohmann::json& j);

 private:
  AlgebraPtr alg_;
  std::vector<int> dims_;
  std::vector<Matrix> action_;
  std::vector<Matrix> mono_;
};

struct Morphism {
  Module source;
  Module target;
  std::vector<Matrix> maps;  // per vertex, target dim x source dim

  bool is_zero() const;
};

bool is_morphism(const Module& m, const Module& n, const std::vector<Matrix>& maps);
Morphism make_morphism(Module m, Module n, std::vector<Matrix> maps);
Morphism identity_morphism(const Module& m);
Morphism zero_morphism(const Module& m, const Module& n);
// second after first
Morphism compose(const Morphism& second, const Morphism& first);
Morphism operator+(const Morphism& f, const Morphism& g);
Morphism operator*(const Morphism& f, const Scalar& s);
std::vector<Scalar> flatten(const Morphism& f);

Module direct_sum(const Module& m, const Module& n);
Module direct_sum(const std::vector<Module>& ms);

std::vector<Morphism> hom_space(const Module& m, const Module& n);

struct SubModule {
  Module module;
  Morphism inclusion;
};
struct QuotientModule {
  Module module;
  Morphism projection;
  std::vector<Matrix> section;  // per vertex right inverse of projection (linear only)
};

// Submodule generated by the columns of gens[v] at each vertex.
SubModule generate_submodule(const Module& m, const std::vector<Matrix>& gens);
// Restriction to per-vertex subspaces that are already closed under the action.
SubModule restrict_to(const Module& m, const std::vector<Matrix>& bases);
QuotientModule quotient(const Module& m, const std::vector<Matrix>& sub_bases);

SubModule kernel(const Morphism& f);
SubModule image(const Morphism& f);
QuotientModule cokernel(const Morphism& f);

SubModule radical(const Module& m);
SubModule socle(const Module& m);
QuotientModule top(const Module& m);

struct ProjectiveCover {
  Morphism map;                   // from the direct sum of projectives onto m
  std::vector<int> vertices;      // summand k of the source is P_{vertices[k]}
  std::vector<std::vector<Scalar>> generators;  // image of e_k of each summand, in m_k
};
ProjectiveCover projective_cover(const Module& m);

struct InjectiveHull {
  Morphism map;  // m into a direct sum of dual(P_k) ~ I_k
  std::vector<int> vertices;
};
InjectiveHull injective_hull(const Module& m);

Module simple(const AlgebraPtr& alg, int k);
Module projective(const AlgebraPtr& alg, int k);
Module injective(const AlgebraPtr& alg, int k);
Module standard(const AlgebraPtr& alg, int k);
Module costandard(const AlgebraPtr& alg, int k);
Module regular_module(const AlgebraPtr& alg);
Module dual(const Module& m);
Morphism dual(const Morphism& f);

bool is_indecomposable(const Module& m);
// Splits off summands by Fitting decomposition of endomorphisms. Throws if the
// endomorphism ring does not split over the base field.
std::vector<Module> decompose(const Module& m, std::uint64_t seed = 1);

enum class Tri { yes, no, unknown };
const char* to_string(Tri t);
Tri isomorphic(const Module& m, const Module& n, std::uint64_t seed = 1);

// Middle term of the nonsplit extension 0 -> b -> E -> c -> 0, which must be
// unique up to scalar.
Module nonsplit_extension(const Module& c, const Module& b);
Module string_object(const AlgebraPtr& alg, int sign, int a, int b);

}  // namespace pervpn

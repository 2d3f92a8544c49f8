#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pervpn/homalg.hpp"

namespace pervpn {

// Derived Nakayama functor: P_k -> I_k termwise, then back to a minimal
// complex of projectives.
ProjComplex serre(const ProjComplex& x);
// D S D, with D the duality through the anti-involution.
ProjComplex inverse_serre(const ProjComplex& x);

struct DualityCheck {
  bool ok = true;
  int rlo = 0;
  std::vector<int> lhs;  // dim Hom(X, Y[r])
  std::vector<int> rhs;  // dim Hom(Y, S(X)[-r])
};
DualityCheck serre_duality_check(const std::shared_ptr<const ProjComplex>& x,
                                 const std::shared_ptr<const ProjComplex>& y);

// dim Hom(X, Y[r]) for r in [rlo, rhi]
std::vector<int> hom_dims(const std::shared_ptr<const ProjComplex>& x, const std::shared_ptr<const ProjComplex>& y,
                          int rlo, int rhi);

enum class CyStatus { yes, no, not_applicable, inconclusive };
const char* to_string(CyStatus s);
struct CyResult {
  CyStatus status = CyStatus::not_applicable;
  std::string route;  // "pairing" or "serre"
  std::string detail;
};
// Composition pairings Hom(P_k, M[r]) x Hom(M, P_k[d-r]) -> Hom(M, M[d]);
// not applicable unless Hom(M, M[d]) is one-dimensional.
CyResult cy_pairing(const std::shared_ptr<const ProjComplex>& m, int d);
// Pairing route when it applies, otherwise S(M) ~ M[d].
CyResult cy_check(const std::shared_ptr<const ProjComplex>& m, int d, std::uint64_t seed = 1);

class PTwistContext {
 public:
  PTwistContext(std::shared_ptr<const ProjComplex> e, ChainMap t, int k);
  // E = minimal resolution of the top simple, t a degree-2 generator.
  static PTwistContext for_top_simple(const AlgebraPtr& alg);

  const std::shared_ptr<const ProjComplex>& e() const { return e_; }
  const ChainMap& t() const { return t_; }
  int k() const { return k_; }

 private:
  std::shared_ptr<const ProjComplex> e_;
  ChainMap t_;
  int k_;
};

struct PTwistTrace {
  int hom_dim = 0;        // total dimension of Hom(E, X)
  int tensor_summands = 0;
  int cone_summands = 0;  // summands of cone(ev) before minimization
};
// cone( cone(t* (x) 1 - 1 (x) t) --ev--> X ), minimized.
ProjComplex p_twist(const PTwistContext& ctx, const std::shared_ptr<const ProjComplex>& x, PTwistTrace* trace = nullptr);

}  // namespace pervpn

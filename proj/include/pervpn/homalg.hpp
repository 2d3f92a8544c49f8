#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pervpn/complex.hpp"

namespace pervpn {

// Finite-dimensional cochain complex of vector spaces.
struct CochainComplex {
  int lo = 0;
  std::vector<int> dims;
  std::vector<Matrix> diffs;  // diffs[i]: degree lo+i -> lo+i+1

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  int dim(int d) const { return (d < lo || d > hi()) ? 0 : dims[d - lo]; }
  Matrix diff(int d) const;
};

struct CohomologyBasis {
  Matrix boundaries;  // columns span B
  Matrix reps;        // cocycles whose classes form a basis of H
};

// Hom^r(P, X) = prod_i Hom(P^i, X^{i+r}), with
// delta f = d_X f - (-1)^r f d_P. Coordinates of Hom(P_k, Y) are the vertex-k
// slice of Y. Cohomology is available for degrees [rlo, rhi].
class GradedHom {
 public:
  struct Block {
    int src_degree;
    int summand;
    std::size_t offset;
    int dim;
  };

  GradedHom(std::shared_ptr<const ProjComplex> p, ModuleComplex x, int rlo, int rhi, bool with_bases = true);

  const ProjComplex& source() const { return *p_; }
  std::shared_ptr<const ProjComplex> source_ptr() const { return p_; }
  const ModuleComplex& target() const { return x_; }
  // Set when X is the realization of a complex of projectives.
  std::shared_ptr<const ProjComplex> target_proj;

  int rlo() const { return rlo_; }
  int rhi() const { return rhi_; }
  const CochainComplex& complex() const { return c_; }
  int dim(int r) const { return c_.dim(r); }
  int cohomology_dim(int r) const;
  const CohomologyBasis& cohomology(int r) const;
  const std::vector<Block>& layout(int r) const;
  std::size_t offset(int r, int src_degree, int summand) const;

  bool is_cocycle(int r, const std::vector<Scalar>& v) const;
  bool is_coboundary(int r, const std::vector<Scalar>& v) const;
  // Coordinates of the class of a cocycle along cohomology(r).reps.
  std::vector<Scalar> class_coords(int r, const std::vector<Scalar>& v) const;

  // Needs target_proj.
  ChainMap to_chain_map(int r, const std::vector<Scalar>& v) const;
  std::vector<Scalar> coords(const ChainMap& f) const;
  // Matrix of f -> f o t, from degree r to r + |t|, for t an endomorphism of P.
  Matrix precompose(const ChainMap& t, int r) const;

 private:
  std::shared_ptr<const ProjComplex> p_;
  ModuleComplex x_;
  int rlo_, rhi_;
  int lo_;  // rlo - 1, first stored degree
  CochainComplex c_;
  std::vector<std::vector<Block>> layouts_;
  std::vector<std::vector<std::vector<std::size_t>>> block_offsets_;
  std::vector<int> ranks_;  // rank of delta^r for r in [lo_, rhi_]
  std::vector<CohomologyBasis> bases_;
  bool with_bases_;
};

std::shared_ptr<const GradedHom> hom_complex(std::shared_ptr<const ProjComplex> p, const ModuleComplex& x, int rlo,
                                             int rhi, bool with_bases = true);
std::shared_ptr<const GradedHom> hom_complex(std::shared_ptr<const ProjComplex> p, std::shared_ptr<const ProjComplex> q,
                                             int rlo, int rhi, bool with_bases = true);
// Natural degree window of Hom(P, Q).
std::pair<int, int> hom_range(const ProjComplex& p, const ProjComplex& q);

// A complex of projectives with a quasi-isomorphism to a module complex,
// recorded as the image of each generator.
struct Replacement {
  std::shared_ptr<const ProjComplex> complex;
  std::vector<std::vector<std::vector<Scalar>>> generators;  // [degree - lo][summand] in Y^d at its vertex
};

// Projective replacement built top-down: P^i covers the cycles of the cone in
// degree i. Gives a minimal resolution for a stalk module.
Replacement proj_replacement(const ModuleComplex& y, int max_below);
Replacement minimal_proj_resolution(const Module& m, int maxdeg);
std::vector<int> ext_dims(const Module& m, const Module& n, int rmax);

// Gaussian cancellation of invertible components.
ProjComplex minimal_perfect(const ProjComplex& c);
bool is_minimal(const ProjComplex& c);

enum class IsoStatus { certified, refuted, inconclusive };
const char* to_string(IsoStatus s);
struct IsoResult {
  IsoStatus status = IsoStatus::inconclusive;
  std::string reason;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::optional<ChainMap> certificate;
};
// Non-minimal inputs are minimized first; the certificate then relates the
// minimal forms. Refutation uses invariants only (multiplicities, homology),
// so non-isomorphic pairs that share them come back inconclusive.
IsoResult complexes_iso(const ProjComplex& c, const ProjComplex& d, std::uint64_t seed, int max_rounds = 5);
// Independent check: closed degree-0 map whose top components are invertible.
bool verify_certificate(const ChainMap& f);

struct TensorLayout {
  struct Block {
    int i, j;
    std::size_t offset;
    int nx;
    int ns;
  };
  int lo = 0;
  std::vector<std::vector<Block>> blocks;  // per total degree
  std::size_t index(int d, int i, int x, int j, int s) const;
};
struct TensorResult {
  ProjComplex complex;
  TensorLayout layout;
};
// Total complex of V (x) P: d(x (x) p) = dx (x) p + (-1)^|x| x (x) dp.
TensorResult tensor_ghom(const CochainComplex& v, const ProjComplex& p);

// Ext classes as closed maps between fixed resolutions.
struct ExtClass {
  std::shared_ptr<const GradedHom> space;  // Hom(P_M, realize(P_N)) with target_proj
  ChainMap rep;

  int degree() const { return rep.degree; }
  bool is_zero() const;
  std::vector<Scalar> coords() const;
};
ExtClass ext_class(std::shared_ptr<const GradedHom> space, int r, const std::vector<Scalar>& coords);
std::vector<ExtClass> ext_basis(std::shared_ptr<const GradedHom> space, int r);
ExtClass yoneda_compose(std::shared_ptr<const GradedHom> space, const ExtClass& g, const ExtClass& f);
// Lifts a cocycle of Hom(P_M, N) to a closed map P_M -> P_N through the
// augmentation of P_N.
ChainMap lift_to_resolution(const GradedHom& to_res, const Replacement& res_n, const GradedHom& to_module, int r,
                            const std::vector<Scalar>& f);

struct EndRingProfile {
  std::vector<int> dims;  // degrees 0..rmax
  bool pattern = false;   // 1 in even degrees 0..2k, 0 elsewhere
  int k = -1;
  int max_power = -1;     // largest m with t^m != 0
  bool p_like = false;
};
EndRingProfile graded_end_ring_profile(std::shared_ptr<const ProjComplex> p, int rmax);

}  // namespace pervpn

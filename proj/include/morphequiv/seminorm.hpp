#pragma once

#include <vector>

#include "morphequiv/frame.hpp"

namespace morphequiv {

/// Spectral norm (largest singular value); 0 for empty matrices.
double op_norm(const CMatrix& a);

/// The seminorm x ↦ c·‖Ax‖ on F^{A.cols()}.
struct SeminormRep {
  double scale = 1;
  CMatrix op;

  /// Throws SchemaError for a negative or non-finite scale.
  SeminormRep(double scale, CMatrix op);
  /// The norm of F^n.
  static SeminormRep norm(Eigen::Index n);

  Eigen::Index dim() const noexcept { return op.cols(); }
  /// sup over the unit sphere, c·‖A‖.
  double sup() const { return scale * op_norm(op); }
  /// Whether the seminorm is bounded by the ambient norm.
  bool dominated(double tol = 1e-9) const { return sup() <= 1.0 + tol; }
};

/// c·‖Ax‖. Throws DimensionMismatch.
double eval_seminorm(const SeminormRep& s, const CVector& x);

/// t ≤ s pointwise, decided as c_t²·B*B ⪯ c_s²·A*A (relative tolerance 1e-9).
/// Throws DimensionMismatch.
bool leq_seminorm(const SeminormRep& s, const SeminormRep& t);

enum class Param { sigma, tau1, tau2 };

/// Image of a seminorm on H₂ under the parameter map of m: H₁ → H₂, a
/// seminorm on H₁ (the maps run backwards):
///   sigma: (sup s)·‖m(·)‖,  tau1: s∘m,  tau2: (sup s)·‖·‖.
/// Throws DimensionMismatch.
SeminormRep apply_param(Param which, const CMatrix& m, const SeminormRep& s);

/// max over probes of |[σ(m)∘σ(m̄)](s)(x) − σ(m̄∘m)(s)(x)| for m: H₁ → H₂,
/// m̄: H₂ → H₃, s on H₃.
double non_functoriality_gap(const CMatrix& m, const CMatrix& m_bar, const SeminormRep& s,
                             const std::vector<CVector>& probes);

/// [τ₁(u₁)∘σ(T_f)∘τ₂(u₂)](s) in closed form: (sup s)·‖T_f u₁(·)‖ on H̃.
/// u₁: H̃ → H, u₂: L²(Ω) → L²(Ω̃), s on L²(Ω̃). Throws DimensionMismatch.
SeminormRep bridge_composite(const BesselFamily& f, const CMatrix& u1, const CMatrix& u2, const SeminormRep& s);
/// The same composite evaluated stage by stage through apply_param.
SeminormRep bridge_composite_staged(const BesselFamily& f, const CMatrix& u1, const CMatrix& u2,
                                    const SeminormRep& s);

struct BridgeVerdict {
  bool equivalent = false;
  /// rho(T_f̃) against rho(T_f∘u₁), on H̃.
  AsympVerdict u_side;
  /// rho(T_f) against rho(T_f̃∘v₁), on H.
  AsympVerdict v_side;
  /// Optimal scalar 2-cells, meaningful on the side that is equivalent:
  /// c: composite ⇒ σ(T_f̃), c̃: σ(T_f̃) ⇒ composite, and d, d̃ likewise.
  double c = 0;
  double c_tilde = 0;
  double d = 0;
  double d_tilde = 0;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Def.-2.1 test for T_f and T_f̃ in the seminorm 2-category, reduced to ≍
/// by evaluating at the ambient norm. u₁: H̃ → H, u₂: L²(Ω) → L²(Ω̃),
/// v₁: H → H̃, v₂: L²(Ω̃) → L²(Ω). Throws DimensionMismatch.
BridgeVerdict bridge_equivalent(const BesselFamily& f, const BesselFamily& f_tilde, const CMatrix& u1,
                                const CMatrix& u2, const CMatrix& v1, const CMatrix& v2, const Tolerances& tol = {});

}  // namespace morphequiv

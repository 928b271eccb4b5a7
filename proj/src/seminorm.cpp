#include "morphequiv/seminorm.hpp"

#include <cmath>

#include "morphequiv/errors.hpp"

namespace morphequiv {

namespace {

std::string dims(Eigen::Index r, Eigen::Index c) { return std::to_string(r) + "x" + std::to_string(c); }

void expect_shape(const char* what, const CMatrix& a, Eigen::Index rows, Eigen::Index cols) {
  if (a.rows() != rows || a.cols() != cols)
    throw DimensionMismatch(std::string(what) + " must be " + dims(rows, cols) + ", got " + dims(a.rows(), a.cols()));
}

RhoForm form_of(const SeminormRep& s, const Tolerances& tol) {
  return RhoForm::of_operator(s.scale * s.op, tol);
}

}  // namespace

double op_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

SeminormRep::SeminormRep(double scale_, CMatrix op_) : scale(scale_), op(std::move(op_)) {
  if (!std::isfinite(scale) || scale < 0) throw SchemaError("seminorm scale must be finite and nonnegative");
  if (!op.allFinite()) throw SchemaError("seminorm operator must be finite");
}

SeminormRep SeminormRep::norm(Eigen::Index n) { return SeminormRep(1.0, CMatrix::Identity(n, n)); }

double eval_seminorm(const SeminormRep& s, const CVector& x) {
  if (x.size() != s.dim())
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " for a seminorm on F^" +
                            std::to_string(s.dim()));
  return s.scale * (s.op * x).norm();
}

bool leq_seminorm(const SeminormRep& s, const SeminormRep& t) {
  if (s.dim() != t.dim())
    throw DimensionMismatch("seminorms on F^" + std::to_string(s.dim()) + " and F^" + std::to_string(t.dim()));
  const CMatrix big = s.scale * s.scale * (s.op.adjoint() * s.op);
  const CMatrix small = t.scale * t.scale * (t.op.adjoint() * t.op);
  if (s.dim() == 0) return true;
  const CMatrix diff = (big - small + (big - small).adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(diff, Eigen::EigenvaluesOnly);
  const double scale = std::max(op_norm(big), op_norm(small));
  return eig.eigenvalues()(0) >= -1e-9 * scale;
}

SeminormRep apply_param(Param which, const CMatrix& m, const SeminormRep& s) {
  if (s.dim() != m.rows())
    throw DimensionMismatch("seminorm on F^" + std::to_string(s.dim()) + " pulled back along a " +
                            dims(m.rows(), m.cols()) + " operator");
  switch (which) {
    case Param::sigma: return SeminormRep(s.sup(), m);
    case Param::tau1: return SeminormRep(s.scale, s.op * m);
    case Param::tau2: return SeminormRep(s.sup(), CMatrix::Identity(m.cols(), m.cols()));
  }
  return s;
}

double non_functoriality_gap(const CMatrix& m, const CMatrix& m_bar, const SeminormRep& s,
                             const std::vector<CVector>& probes) {
  if (m_bar.cols() != m.rows())
    throw DimensionMismatch("m is " + dims(m.rows(), m.cols()) + " but m_bar is " + dims(m_bar.rows(), m_bar.cols()));
  const SeminormRep staged = apply_param(Param::sigma, m, apply_param(Param::sigma, m_bar, s));
  const SeminormRep direct = apply_param(Param::sigma, m_bar * m, s);
  double gap = 0;
  for (const CVector& x : probes) gap = std::max(gap, std::abs(eval_seminorm(staged, x) - eval_seminorm(direct, x)));
  return gap;
}

SeminormRep bridge_composite(const BesselFamily& f, const CMatrix& u1, const CMatrix& u2, const SeminormRep& s) {
  if (u1.rows() != f.dim())
    throw DimensionMismatch("u1 must map into F^" + std::to_string(f.dim()) + ", got " + dims(u1.rows(), u1.cols()));
  expect_shape("u2", u2, s.dim(), f.count());
  return SeminormRep(s.sup(), f.analysis_operator() * u1);
}

SeminormRep bridge_composite_staged(const BesselFamily& f, const CMatrix& u1, const CMatrix& u2,
                                    const SeminormRep& s) {
  const SeminormRep on_source_l2 = apply_param(Param::tau2, u2, s);
  const SeminormRep on_h = apply_param(Param::sigma, f.analysis_operator(), on_source_l2);
  return apply_param(Param::tau1, u1, on_h);
}

BridgeVerdict bridge_equivalent(const BesselFamily& f, const BesselFamily& f_tilde, const CMatrix& u1,
                                const CMatrix& u2, const CMatrix& v1, const CMatrix& v2, const Tolerances& tol) {
  expect_shape("u1", u1, f.dim(), f_tilde.dim());
  expect_shape("u2", u2, f_tilde.count(), f.count());
  expect_shape("v1", v1, f_tilde.dim(), f.dim());
  expect_shape("v2", v2, f.count(), f_tilde.count());

  // Evaluate both parallel 1-cells at the ambient norm of the target L² space.
  const SeminormRep norm_tilde = SeminormRep::norm(f_tilde.count());
  const SeminormRep norm = SeminormRep::norm(f.count());
  const SeminormRep composite_u = bridge_composite(f, u1, u2, norm_tilde);
  const SeminormRep target_u = apply_param(Param::sigma, f_tilde.analysis_operator(), norm_tilde);
  const SeminormRep composite_v = bridge_composite(f_tilde, v1, v2, norm);
  const SeminormRep target_v = apply_param(Param::sigma, f.analysis_operator(), norm);

  BridgeVerdict out;
  out.u_side = asymp_compare(form_of(target_u, tol), form_of(composite_u, tol), tol);
  out.v_side = asymp_compare(form_of(target_v, tol), form_of(composite_v, tol), tol);
  if (out.u_side) {
    out.c = out.u_side.k1;
    out.c_tilde = 1.0 / out.u_side.k2;
  }
  if (out.v_side) {
    out.d = out.v_side.k1;
    out.d_tilde = 1.0 / out.v_side.k2;
  }
  out.equivalent = out.u_side.equivalent && out.v_side.equivalent;
  return out;
}

}  // namespace morphequiv

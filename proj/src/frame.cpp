#include "morphequiv/frame.hpp"

#include <cmath>
#include <random>

#include "morphequiv/errors.hpp"

namespace morphequiv {

namespace {

std::string dims(Eigen::Index r, Eigen::Index c) { return std::to_string(r) + "x" + std::to_string(c); }

CMatrix hermitian_part(const CMatrix& p) { return (p + p.adjoint()) / 2.0; }

bool has_imaginary_part(const CMatrix& a) { return a.imag().cwiseAbs().maxCoeff() > 0.0; }

}  // namespace

std::string to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field parse_field(const std::string& name) {
  if (name == "real") return Field::real;
  if (name == "complex") return Field::complex;
  throw SchemaError("field must be \"real\" or \"complex\", got \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// BesselFamily

BesselFamily::BesselFamily(Field field, CMatrix vectors, Eigen::VectorXd weights)
    : field_(field), vectors_(std::move(vectors)), weights_(std::move(weights)) {
  if (vectors_.rows() < 1) throw SchemaError("a family needs dimension at least 1");
  if (weights_.size() != vectors_.cols())
    throw DimensionMismatch(std::to_string(weights_.size()) + " weights for " + std::to_string(vectors_.cols()) +
                            " vectors");
  for (Eigen::Index i = 0; i < weights_.size(); ++i)
    if (!std::isfinite(weights_(i)) || weights_(i) <= 0) throw SchemaError("weights must be finite and positive");
  if (!vectors_.allFinite()) throw SchemaError("family vectors must be finite");
  if (field_ == Field::real && vectors_.size() > 0 && has_imaginary_part(vectors_))
    throw SchemaError("real family with complex entries");
}

BesselFamily BesselFamily::real(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& weights) {
  return BesselFamily(Field::real, vectors.cast<Complex>(), weights);
}

BesselFamily BesselFamily::real(const Eigen::MatrixXd& vectors) {
  return real(vectors, Eigen::VectorXd::Ones(vectors.cols()));
}

CMatrix BesselFamily::analysis_operator() const {
  return weights_.cwiseSqrt().cast<Complex>().asDiagonal() * vectors_.adjoint();
}

BesselFamily standard_basis(Eigen::Index n, Field field) {
  return BesselFamily(field, CMatrix::Identity(n, n), Eigen::VectorXd::Ones(n));
}

// ---------------------------------------------------------------------------
// OperatorMatrix

std::string to_string(OperatorClass c) {
  switch (c) {
    case OperatorClass::inj: return "inj";
    case OperatorClass::inj_cl: return "inj-cl";
    case OperatorClass::iso: return "iso";
    case OperatorClass::any: return "any";
  }
  return "any";
}

OperatorClass parse_operator_class(const std::string& name) {
  if (name == "inj") return OperatorClass::inj;
  if (name == "inj-cl") return OperatorClass::inj_cl;
  if (name == "iso") return OperatorClass::iso;
  if (name == "any") return OperatorClass::any;
  throw SchemaError("unknown operator class \"" + name + "\"");
}

bool satisfies(const CMatrix& a, OperatorClass c, const Tolerances& tol) {
  switch (c) {
    case OperatorClass::any:
      return true;
    case OperatorClass::inj:
    case OperatorClass::inj_cl: {
      // Finite dimensions: injective operators automatically have closed range.
      if (a.cols() == 0) return true;
      if (a.rows() < a.cols()) return false;
      Eigen::JacobiSVD<CMatrix> svd(a);
      const auto& s = svd.singularValues();
      return s(0) > 0 && s(s.size() - 1) > tol.rank * s(0);
    }
    case OperatorClass::iso:
      return (a.adjoint() * a - CMatrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff() <= tol.isometry;
  }
  return false;
}

OperatorMatrix::OperatorMatrix(CMatrix a, OperatorClass cls, const Tolerances& tol) : a_(std::move(a)), cls_(cls) {
  if (!a_.allFinite()) throw SchemaError("operator entries must be finite");
  if (!satisfies(a_, cls_, tol))
    throw ClassViolation(dims(a_.rows(), a_.cols()) + " operator is not in class " + to_string(cls_));
}

OperatorMatrix OperatorMatrix::real(const Eigen::MatrixXd& a, OperatorClass cls) {
  return OperatorMatrix(a.cast<Complex>(), cls);
}

// ---------------------------------------------------------------------------
// RhoForm

RhoForm::RhoForm(const CMatrix& p, const Tolerances& tol) {
  if (p.rows() != p.cols()) throw DimensionMismatch("quadratic form must be square, got " + dims(p.rows(), p.cols()));
  if (!p.allFinite()) throw LawViolation("quadratic form has non-finite entries");
  const double size = p.size() > 0 ? p.cwiseAbs().maxCoeff() : 0.0;
  if (p.size() > 0 && (p - p.adjoint()).cwiseAbs().maxCoeff() > tol.hermitian * size)
    throw LawViolation("quadratic form is not Hermitian");
  p_ = hermitian_part(p);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(p_);
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
  const double top = eigenvalues_.size() > 0 ? eigenvalues_.cwiseAbs().maxCoeff() : 0.0;
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_(i) < -tol.psd * top) throw LawViolation("quadratic form is not positive semidefinite");
    eigenvalues_(i) = std::max(eigenvalues_(i), 0.0);
  }
}

RhoForm RhoForm::of_operator(const CMatrix& t, const Tolerances& tol) {
  return RhoForm(hermitian_part(t.adjoint() * t), tol);
}

double RhoForm::max_eigenvalue() const noexcept {
  return eigenvalues_.size() > 0 ? eigenvalues_(eigenvalues_.size() - 1) : 0.0;
}

Eigen::Index RhoForm::rank(const Tolerances& tol) const {
  const double top = max_eigenvalue();
  if (!(top > 0)) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i)
    if (eigenvalues_(i) > tol.rank * top) ++r;
  return r;
}

RhoForm RhoForm::transported(const CMatrix& u, const Tolerances& tol) const {
  if (u.cols() != dim())
    throw DimensionMismatch("cannot transport a form on F^" + std::to_string(dim()) + " along a " +
                            dims(u.rows(), u.cols()) + " operator");
  return RhoForm(hermitian_part(u * p_ * u.adjoint()), tol);
}

RhoForm frame_operator(const BesselFamily& f, const Tolerances& tol) {
  const CMatrix& v = f.vectors();
  return RhoForm(hermitian_part(v * f.weights().cast<Complex>().asDiagonal() * v.adjoint()), tol);
}

double rho_eval(const RhoForm& p, const CVector& x) {
  if (x.size() != p.dim())
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) + " for a form on F^" +
                            std::to_string(p.dim()));
  const double q = x.dot(p.matrix() * x).real();
  return std::sqrt(std::max(q, 0.0));
}

CMatrix psd_power(const RhoForm& p, double exponent) {
  Eigen::VectorXd powered(p.dim());
  for (Eigen::Index i = 0; i < p.dim(); ++i) {
    const double lambda = p.eigenvalues()(i);
    if (exponent < 0 && !(lambda > 0)) throw LawViolation("negative power of a singular form");
    powered(i) = lambda > 0 ? std::pow(lambda, exponent) : 0.0;
  }
  const CMatrix& v = p.eigenvectors();
  return hermitian_part(v * powered.cast<Complex>().asDiagonal() * v.adjoint());
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

/// A unit vector in ker(zero_side) on which `other` is positive.
CVector separating_vector(const RhoForm& zero_side, const RhoForm& other, const Tolerances& tol) {
  const Eigen::Index kernel = zero_side.dim() - zero_side.rank(tol);
  const CMatrix z = zero_side.eigenvectors().leftCols(kernel);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(z.adjoint() * other.matrix() * z));
  CVector x = z * eig.eigenvectors().col(kernel - 1);
  return x / x.norm();
}

}  // namespace

AsympVerdict asymp_compare(const RhoForm& a, const RhoForm& b, const Tolerances& tol) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("comparing forms on F^" + std::to_string(a.dim()) + " and F^" + std::to_string(b.dim()));
  const Eigen::Index n = a.dim();
  const Eigen::Index ra = a.rank(tol), rb = b.rank(tol);
  const Eigen::Index rs = RhoForm(hermitian_part(a.matrix() + b.matrix()), tol).rank(tol);

  AsympVerdict out;
  if (ra != rs || rb != rs) {
    out.reason = "kernel mismatch";
    out.separating = rs > ra ? separating_vector(a, b, tol) : separating_vector(b, a, tol);
    return out;
  }
  out.equivalent = true;
  if (ra == 0) {
    out.k1 = out.k2 = 1.0;
    out.argmin = out.argmax = CVector::Unit(n, 0);
    return out;
  }
  // Whiten by a on its range: B/A over the range of a becomes a Rayleigh quotient.
  const CMatrix v = a.eigenvectors().rightCols(ra);
  const Eigen::VectorXd lambda = a.eigenvalues().tail(ra);
  const CMatrix w = v * lambda.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(w.adjoint() * b.matrix() * w));
  const Eigen::VectorXd& mu = eig.eigenvalues();
  out.k1 = std::sqrt(std::max(mu(0), 0.0));
  out.k2 = std::sqrt(std::max(mu(ra - 1), 0.0));
  out.argmin = w * eig.eigenvectors().col(0);
  out.argmax = w * eig.eigenvectors().col(ra - 1);
  return out;
}

std::vector<double> DefVerdict::constants() const { return {forward.k1, forward.k2, backward.k1, backward.k2}; }

DefVerdict def_equivalent_with_witness(const BesselFamily& f, const BesselFamily& f_tilde, const OperatorMatrix& u,
                                       const OperatorMatrix& u_tilde, std::optional<OperatorClass> variant,
                                       const Tolerances& tol) {
  if (u.rows() != f_tilde.dim() || u.cols() != f.dim())
    throw DimensionMismatch("u must be " + dims(f_tilde.dim(), f.dim()) + ", got " + dims(u.rows(), u.cols()));
  if (u_tilde.rows() != f.dim() || u_tilde.cols() != f_tilde.dim())
    throw DimensionMismatch("u~ must be " + dims(f.dim(), f_tilde.dim()) + ", got " +
                            dims(u_tilde.rows(), u_tilde.cols()));
  if (variant) {
    if (!satisfies(u.matrix(), *variant, tol)) throw ClassViolation("u is not in class " + to_string(*variant));
    if (!satisfies(u_tilde.matrix(), *variant, tol))
      throw ClassViolation("u~ is not in class " + to_string(*variant));
  }
  DefVerdict out;
  out.forward = asymp_compare(frame_operator(f, tol).transported(u.matrix(), tol), frame_operator(f_tilde, tol), tol);
  out.backward =
      asymp_compare(frame_operator(f_tilde, tol).transported(u_tilde.matrix(), tol), frame_operator(f, tol), tol);
  out.equivalent = out.forward.equivalent && out.backward.equivalent;
  return out;
}

FrameBounds is_frame(const BesselFamily& f, const Tolerances& tol) {
  const RhoForm p = frame_operator(f, tol);
  FrameBounds out;
  out.lower = p.eigenvalues()(0);
  out.upper = p.max_eigenvalue();
  out.is_frame = out.upper > 0 && out.lower > tol.rank * out.upper;
  return out;
}

OnbWitness onb_witness(const BesselFamily& f, const Tolerances& tol) {
  if (!is_frame(f, tol)) throw NotAFrame("family does not span F^" + std::to_string(f.dim()));
  const RhoForm p = frame_operator(f, tol);
  return {OperatorMatrix(psd_power(p, -0.5), OperatorClass::inj, tol),
          OperatorMatrix(psd_power(p, 0.5), OperatorClass::inj, tol)};
}

AdjointCheck adjoint_identity_check(const BesselFamily& f, const OperatorMatrix& alpha, std::uint64_t seed,
                                    std::size_t random_probes) {
  if (alpha.rows() != f.dim())
    throw DimensionMismatch("alpha must map into F^" + std::to_string(f.dim()) + ", got " +
                            dims(alpha.rows(), alpha.cols()));
  const CMatrix& a = alpha.matrix();
  const CMatrix& v = f.vectors();
  const Eigen::Index n = f.dim(), m = f.count(), k = alpha.cols();
  const bool complex_probes = f.field() == Field::complex || (a.size() > 0 && has_imaginary_part(a));

  std::vector<CVector> probes;
  for (Eigen::Index i = 0; i < k; ++i) probes.push_back(CVector::Unit(k, i));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (std::size_t p = 0; p < random_probes; ++p) {
    CVector z(k);
    for (Eigen::Index i = 0; i < k; ++i) z(i) = Complex(normal(rng), complex_probes ? normal(rng) : 0.0);
    probes.push_back(z);
  }

  // alpha* f, one column per index
  const CMatrix g = a.adjoint() * v;
  AdjointCheck out;
  out.probes = probes.size();
  double scale = 0;
  for (const CVector& z : probes) {
    const CVector az = a * z;
    CVector lhs(m), rhs(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Complex left = 0, right = 0;
      for (Eigen::Index j = 0; j < n; ++j) left += az(j) * std::conj(v(j, i));
      for (Eigen::Index j = 0; j < k; ++j) right += z(j) * std::conj(g(j, i));
      const double root = std::sqrt(f.weights()(i));
      lhs(i) = root * left;
      rhs(i) = root * right;
    }
    out.max_deviation = std::max(out.max_deviation, (lhs - rhs).norm());
    scale = std::max(scale, lhs.norm());
  }
  out.scale = scale > 0 ? scale : 1.0;
  return out;
}

BesselFamily phase_unitary_act(const BesselFamily& f, const OperatorMatrix& u, const std::vector<Complex>& phases,
                               const Tolerances& tol) {
  if (u.rows() != u.cols()) throw NotUnitary("unitary must be square, got " + dims(u.rows(), u.cols()));
  if (u.cols() != f.dim())
    throw DimensionMismatch("unitary is " + dims(u.rows(), u.cols()) + " but the family lives in F^" +
                            std::to_string(f.dim()));
  if (!satisfies(u.matrix(), OperatorClass::iso, tol)) throw NotUnitary("u*u differs from the identity");
  if (static_cast<Eigen::Index>(phases.size()) != f.count())
    throw DimensionMismatch(std::to_string(phases.size()) + " phases for " + std::to_string(f.count()) + " vectors");
  bool complex = f.field() == Field::complex || has_imaginary_part(u.matrix());
  for (const Complex& phase : phases) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) throw BadPhase("phase of modulus " + std::to_string(std::abs(phase)));
    complex = complex || phase.imag() != 0.0;
  }
  CMatrix out = u.matrix() * f.vectors();
  for (Eigen::Index i = 0; i < out.cols(); ++i) out.col(i) *= phases[static_cast<std::size_t>(i)];
  if (!complex) out = out.real().cast<Complex>();
  return BesselFamily(complex ? Field::complex : Field::real, std::move(out), f.weights());
}

}  // namespace morphequiv

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace morphequiv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Field { real, complex };

std::string to_string(Field f);
/// Throws SchemaError.
Field parse_field(const std::string& name);

struct Tolerances {
  /// Eigenvalues below rank * λmax count as zero.
  double rank = 1e-10;
  /// Eigenvalues down to -psd * λmax are clamped to zero.
  double psd = 1e-9;
  /// Relative Hermitian asymmetry accepted for a quadratic form.
  double hermitian = 1e-12;
  /// Deviation from A*A = I accepted for isometries and unitaries.
  double isometry = 1e-9;
};

/// A finite weighted system f: {1..m} -> F^n. Column i of `vectors` is f(ω_i).
class BesselFamily {
public:
  /// Throws DimensionMismatch if weights and columns disagree, SchemaError
  /// for n = 0, non-positive or non-finite weights, non-finite entries, or
  /// imaginary parts in a real family.
  BesselFamily(Field field, CMatrix vectors, Eigen::VectorXd weights);
  static BesselFamily real(const Eigen::MatrixXd& vectors, const Eigen::VectorXd& weights);
  static BesselFamily real(const Eigen::MatrixXd& vectors);

  Field field() const noexcept { return field_; }
  Eigen::Index dim() const noexcept { return vectors_.rows(); }
  Eigen::Index count() const noexcept { return vectors_.cols(); }
  const CMatrix& vectors() const noexcept { return vectors_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }

  /// T_f = diag(√μ) F*, an m x n matrix: L²(μ) is identified with F^m
  /// through x ↦ (√μ_i x_i), so ‖T_f x‖ is the weighted L² norm.
  CMatrix analysis_operator() const;

private:
  Field field_;
  CMatrix vectors_;
  Eigen::VectorXd weights_;
};

/// Orthonormal basis of F^n with unit weights.
BesselFamily standard_basis(Eigen::Index n, Field field = Field::real);

enum class OperatorClass { inj, inj_cl, iso, any };

std::string to_string(OperatorClass c);
/// "inj", "inj-cl", "iso", "any"; throws SchemaError.
OperatorClass parse_operator_class(const std::string& name);
/// inj and inj-cl: full column rank; iso: A*A = I; any: always.
bool satisfies(const CMatrix& a, OperatorClass c, const Tolerances& tol = {});

class OperatorMatrix {
public:
  /// Throws ClassViolation if the matrix fails its class tag.
  explicit OperatorMatrix(CMatrix a, OperatorClass cls = OperatorClass::any, const Tolerances& tol = {});
  static OperatorMatrix real(const Eigen::MatrixXd& a, OperatorClass cls = OperatorClass::any);

  const CMatrix& matrix() const noexcept { return a_; }
  OperatorClass cls() const noexcept { return cls_; }
  Eigen::Index rows() const noexcept { return a_.rows(); }
  Eigen::Index cols() const noexcept { return a_.cols(); }

private:
  CMatrix a_;
  OperatorClass cls_;
};

/// x ↦ sqrt(x*Px) for a positive semidefinite P.
class RhoForm {
public:
  /// Throws LawViolation if P is not square, not Hermitian or has an
  /// eigenvalue below -psd * λmax.
  explicit RhoForm(const CMatrix& p, const Tolerances& tol = {});
  /// The form x ↦ ‖Tx‖, i.e. P = T*T.
  static RhoForm of_operator(const CMatrix& t, const Tolerances& tol = {});

  Eigen::Index dim() const noexcept { return p_.rows(); }
  const CMatrix& matrix() const noexcept { return p_; }
  /// Ascending, clamped at zero.
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  const CMatrix& eigenvectors() const noexcept { return eigenvectors_; }
  double max_eigenvalue() const noexcept;
  /// Number of eigenvalues above rank * λmax.
  Eigen::Index rank(const Tolerances& tol = {}) const;
  /// u P u*: the form of the transported family u∘f.
  RhoForm transported(const CMatrix& u, const Tolerances& tol = {}) const;

private:
  CMatrix p_;
  Eigen::VectorXd eigenvalues_;
  CMatrix eigenvectors_;
};

/// P_f = Σ μ_i f_i f_i*. Throws DimensionMismatch on malformed families.
RhoForm frame_operator(const BesselFamily& f, const Tolerances& tol = {});
/// sqrt(max(x*Px, 0)). Throws DimensionMismatch.
double rho_eval(const RhoForm& p, const CVector& x);

struct AsympVerdict {
  bool equivalent = false;
  /// Optimal constants with K1·A ≤ B ≤ K2·A (when equivalent).
  double k1 = 0;
  double k2 = 0;
  /// Vectors at which B/A attains K1 and K2.
  CVector argmin;
  CVector argmax;
  /// "kernel mismatch" when not equivalent.
  std::string reason;
  /// When not equivalent: x with exactly one of A(x), B(x) zero.
  CVector separating;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Decides A ≍ B for A = rho(a), B = rho(b). Equivalent iff the kernels
/// agree; the constants are the square roots of the extreme generalized
/// eigenvalues of b against a on the common range. Two zero forms compare
/// as (1, 1). Throws DimensionMismatch.
AsympVerdict asymp_compare(const RhoForm& a, const RhoForm& b, const Tolerances& tol = {});

struct DefVerdict {
  bool equivalent = false;
  /// rho(u∘f) against rho(f̃), on H̃.
  AsympVerdict forward;
  /// rho(ũ∘f̃) against rho(f), on H.
  AsympVerdict backward;

  explicit operator bool() const noexcept { return equivalent; }
  /// (K1, K2, K̃1, K̃2)
  std::vector<double> constants() const;
};

/// Checks rho(u∘f) ≍ rho(f̃) and rho(ũ∘f̃) ≍ rho(f) for the supplied
/// u: H → H̃ and ũ: H̃ → H. When `variant` is given both operators must lie
/// in that class (ClassViolation otherwise). Throws DimensionMismatch.
DefVerdict def_equivalent_with_witness(const BesselFamily& f, const BesselFamily& f_tilde, const OperatorMatrix& u,
                                       const OperatorMatrix& u_tilde,
                                       std::optional<OperatorClass> variant = std::nullopt,
                                       const Tolerances& tol = {});

struct FrameBounds {
  bool is_frame = false;
  double lower = 0;
  double upper = 0;
  bool tight(double rel = 1e-9) const { return is_frame && upper - lower <= rel * upper; }

  explicit operator bool() const noexcept { return is_frame; }
};

/// Frame iff λmin(P_f) > rank * λmax; bounds are (λmin, λmax).
FrameBounds is_frame(const BesselFamily& f, const Tolerances& tol = {});

struct OnbWitness {
  OperatorMatrix u;
  OperatorMatrix u_tilde;
};

/// u = P_f^{-1/2}, ũ = P_f^{1/2}. Throws NotAFrame.
OnbWitness onb_witness(const BesselFamily& f, const Tolerances& tol = {});

struct AdjointCheck {
  double max_deviation = 0;
  /// Largest ‖(T_f∘α)(z)‖ over the probes (1 if all vanish).
  double scale = 1;
  std::size_t probes = 0;

  double relative() const { return max_deviation / scale; }
};

/// Compares (T_f∘α)(z) with T_{α*∘f}(z) on the standard basis of the
/// source space plus `random_probes` seeded Gaussian vectors. α: F^ñ → F^n.
/// Throws DimensionMismatch.
AdjointCheck adjoint_identity_check(const BesselFamily& f, const OperatorMatrix& alpha, std::uint64_t seed = 0,
                                    std::size_t random_probes = 16);

/// f̃(ω_i) = α_i·u(f(ω_i)). Throws NotUnitary unless u is a square isometry,
/// BadPhase unless every |α_i| = 1 within 1e-12, DimensionMismatch.
BesselFamily phase_unitary_act(const BesselFamily& f, const OperatorMatrix& u, const std::vector<Complex>& phases,
                               const Tolerances& tol = {});

/// Hermitian square root and inverse square root of a positive definite form.
CMatrix psd_power(const RhoForm& p, double exponent);

}  // namespace morphequiv

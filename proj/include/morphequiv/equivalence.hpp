#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morphequiv/category.hpp"

namespace morphequiv {

/// The parameter data (C, D, sigma, tau1, tau2) of the relation. sigma,
/// tau1 and tau2 agree on objects; tau1 and tau2 are functors.
class EquivData {
public:
  /// Throws LawViolation when the object maps disagree, a boundary is
  /// broken, or tau1/tau2 fail functoriality.
  EquivData(std::shared_ptr<const CategoryView> c, std::shared_ptr<const TwoCategoryView> d,
            MorphismMap sigma, MorphismMap tau1, MorphismMap tau2);

  const CategoryView& c() const noexcept { return *c_; }
  const TwoCategoryView& d() const noexcept { return *d_; }
  std::shared_ptr<const CategoryView> c_ptr() const noexcept { return c_; }
  std::shared_ptr<const TwoCategoryView> d_ptr() const noexcept { return d_; }
  const MorphismFunction& sigma() const noexcept { return sigma_; }
  const FunctorData& tau1() const noexcept { return tau1_; }
  const FunctorData& tau2() const noexcept { return tau2_; }

private:
  std::shared_ptr<const CategoryView> c_;
  std::shared_ptr<const TwoCategoryView> d_;
  MorphismFunction sigma_;
  FunctorData tau1_;
  FunctorData tau2_;
};

/// Certificate for m ≃ m̃:
///   u1: B → B̃, u2: Ã → A, v1: B̃ → B, v2: A → Ã   (morphisms of C)
///   phi:      tau1(u1) ∘ sigma(m) ∘ tau2(u2) ⇒ sigma(m̃)
///   phi_tilde: the reverse
///   psi:      tau1(v1) ∘ sigma(m̃) ∘ tau2(v2) ⇒ sigma(m)
///   psi_tilde: the reverse
struct Witness {
  ArrowIndex u1, u2, v1, v2;
  CellIndex phi, phi_tilde, psi, psi_tilde;

  bool operator==(const Witness&) const = default;
};

struct WitnessNames {
  std::string u1, u2, v1, v2, phi, phi_tilde, psi, psi_tilde;

  bool operator==(const WitnessNames&) const = default;
};

WitnessNames names_of(const EquivData& e, const Witness& w);
/// Throws UnknownId.
Witness witness_from_names(const EquivData& e, const WitnessNames& names);

/// tau1(u1) ∘ sigma(m) ∘ tau2(u2) in D. Throws NotComposable unless
/// dom(u1) = cod(m) and cod(u2) = dom(m).
ArrowIndex composite_boundary(const EquivData& e, ArrowIndex u1, ArrowIndex m, ArrowIndex u2);
std::string composite_boundary(const EquivData& e, std::string_view u1, std::string_view m,
                               std::string_view u2);

struct VerifyResult {
  bool ok = false;
  /// Name of the first failing condition, empty when ok. One of
  /// "u1 boundary", "u2 boundary", "v1 boundary", "v2 boundary",
  /// "phi boundary", "phiTilde boundary", "psi boundary", "psiTilde boundary".
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

VerifyResult verify_witness(const EquivData& e, ArrowIndex m, ArrowIndex m_tilde, const Witness& w);

struct SearchResult {
  bool equivalent = false;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return equivalent; }
};

/// Exhaustive search; returns the first witness in lexicographic name order
/// of (u1, u2, phi, phiTilde, v1, v2, psi, psiTilde).
SearchResult are_equivalent(const EquivData& e, ArrowIndex m, ArrowIndex m_tilde);
SearchResult are_equivalent(const EquivData& e, std::string_view m, std::string_view m_tilde);

/// Witness constructors from the proof that ≃ is an equivalence relation.
Witness derive_reflexivity(const EquivData& e, ArrowIndex m);
/// Input: a witness for m ≃ m̃. Output: a witness for m̃ ≃ m.
/// Throws InvalidPremise if the input does not verify.
Witness derive_symmetry(const EquivData& e, ArrowIndex m, ArrowIndex m_tilde, const Witness& w);
/// Inputs: witnesses for m ≃ m̄ and m̄ ≃ m̄̄. Output: a witness for m ≃ m̄̄
/// assembled by whiskering and vertical composition. Throws InvalidPremise
/// for unverified inputs and NotComposable if D lacks a needed composite.
Witness derive_transitivity(const EquivData& e, ArrowIndex m, ArrowIndex m_bar,
                            ArrowIndex m_bar_bar, const Witness& first, const Witness& second);

/// Partition of all morphisms of C into ≃-classes. Members of each block and
/// the blocks themselves are ordered by name (blocks by their least member).
std::vector<std::vector<std::string>> equivalence_classes(const EquivData& e);
/// Same, restricted to the given morphisms.
std::vector<std::vector<std::string>> equivalence_classes(const EquivData& e,
                                                          const std::vector<ArrowIndex>& among);

}  // namespace morphequiv

#pragma once

// The named two-vertex algebras A(n,m,l), A'(n,m0,m1), B_n, the commuting
// A', the truncated polynomial ring Lambda(m), and the explicit
// identifications between their varieties.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvl/extension.hpp"
#include "qvl/presentation.hpp"
#include "qvl/representation.hpp"

namespace qvl {

enum class FamilyKind { kA, kAprime, kAprimeCommuting, kLambda, kB };

std::string to_string(FamilyKind kind);
/// Accepts A, Aprime, AprimeCommuting, Lambda, B (case-insensitive).
std::optional<FamilyKind> parse_family_kind(const std::string& text);

/// Parameters that a kind does not use are ignored.
///   A:               n >= 1, m >= 2, l >= 1
///   Aprime:          n >= 0, m0 >= 1, m1 >= 1
///   AprimeCommuting: m >= 2
///   Lambda:          m >= 1
///   B:               n >= 1, m >= 2   (B_n = A(n, m, m-1))
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::kA;
  std::size_t n = 1;
  std::size_t m = 2;
  std::size_t l = 1;
  std::size_t m0 = 1;
  std::size_t m1 = 1;

  static FamilyDescriptor a(std::size_t n, std::size_t m, std::size_t l);
  static FamilyDescriptor aprime(std::size_t n, std::size_t m0, std::size_t m1);
  static FamilyDescriptor aprime_commuting(std::size_t m);
  static FamilyDescriptor lambda(std::size_t m);
  static FamilyDescriptor b(std::size_t n, std::size_t m);
};

/// Throws SemanticError on parameters outside the ranges above.
void validate(const FamilyDescriptor& desc);
/// "A(1,3,2)", "Lambda(3)", ...
std::string describe(const FamilyDescriptor& desc);

/// Vertices "0", "1"; arrows e0, e1, a1..an with a_i : 1 -> 0. A loop whose
/// power relation would have exponent 1 is left out of the quiver. Lambda(m)
/// has the single vertex "0" and loop "e".
PresentationPtr build_family(const FamilyDescriptor& desc);

/// The two-simple classification: A(n,m,l) iff l = 1 or l = m - 1, A' always.
/// A(n,m,l) with l >= 2m - 1 coincides with A'(n,m,m). B and the commuting A'
/// are instances of listed families. Throws SemanticError for Lambda and for
/// A(n,m,l) with m <= l <= 2m - 2, which the table does not decide.
bool is_geometrically_irreducible_family(const FamilyDescriptor& desc);

/// sum_{i=0}^{l} e0^{l-i} a1 e1^i inside a quiver of the Q(n) shape.
Relation rho_relation(const Quiver& quiver, std::size_t l);

/// Commuting A'(m) -> A(1,m,1) by e1 -> -e1, and back.
class CommutingTwist {
 public:
  explicit CommutingTwist(std::size_t m);

  const PresentationPtr& source() const noexcept { return source_; }
  const PresentationPtr& target() const noexcept { return target_; }

  /// Throws ValidationError if m is not a valid representation of source().
  template <Field F>
  Representation<F> forward(const Representation<F>& m) const;
  template <Field F>
  Representation<F> backward(const Representation<F>& m) const;

 private:
  PresentationPtr source_;
  PresentationPtr target_;
};

/// rep of the commuting A'(m) in dimension (d, e) <-> H_Lambda(e, d):
/// M -> (V, W, f) = (M_e1, M_e0, M_a1).
class HomCorrespondence {
 public:
  explicit HomCorrespondence(std::size_t m);

  const PresentationPtr& algebra() const noexcept { return algebra_; }
  const PresentationPtr& lambda() const noexcept { return lambda_; }

  template <Field F>
  HomTriple<F> forward(const Representation<F>& m) const;
  /// Throws ValidationError if the triple is not a homomorphism of valid
  /// Lambda-modules.
  template <Field F>
  Representation<F> backward(const HomTriple<F>& triple) const;

 private:
  PresentationPtr algebra_;
  PresentationPtr lambda_;
};

/// rep of B_1 = A(1,m,m-1) in dimension (d, e) <-> E_Lambda(e, d):
/// M -> (U, V, Z) = (M_e1, M_e0, M_a1).
class ExtCorrespondence {
 public:
  explicit ExtCorrespondence(std::size_t m);

  const PresentationPtr& algebra() const noexcept { return algebra_; }
  const PresentationPtr& lambda() const noexcept { return lambda_; }

  template <Field F>
  ExtensionTriple<F> forward(const Representation<F>& m) const;
  /// Throws ValidationError if U, V are invalid or Z is not a cocycle.
  template <Field F>
  Representation<F> backward(const ExtensionTriple<F>& triple) const;

 private:
  PresentationPtr algebra_;
  PresentationPtr lambda_;
};

/// rep of B_n <-> rep of B_1 x (d x e matrices)^{n-1}; the free factors are
/// the matrices of a2..an.
class ProductSplit {
 public:
  ProductSplit(std::size_t n, std::size_t m);

  const PresentationPtr& algebra() const noexcept { return algebra_; }
  const PresentationPtr& base() const noexcept { return base_; }

  template <Field F>
  std::pair<Representation<F>, std::vector<Matrix<F>>> forward(const Representation<F>& m) const;
  template <Field F>
  Representation<F> backward(const Representation<F>& base,
                             const std::vector<Matrix<F>>& free) const;

 private:
  std::size_t n_;
  PresentationPtr algebra_;
  PresentationPtr base_;
};

}  // namespace qvl

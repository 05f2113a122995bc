#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qvl/field.hpp"
#include "qvl/quiver.hpp"

namespace qvl {

/// A quiver bound by relations, together with a truncation bound N: every
/// path of length N lies in the ideal I generated by the relations.
///
/// N is either supplied or derived. Derivation needs a weakly triangular
/// quiver with at most one loop per vertex, each loop carrying a monomial
/// power relation loop^m_x; then N = sum_x (m_x - 1) + D + 1, D being the
/// longest path of non-loop arrows. Either way the constructor checks that
/// all paths of length N lie in I modulo paths of length N + 1.
class BoundQuiverPresentation {
 public:
  BoundQuiverPresentation(std::string name, Quiver quiver,
                          std::vector<Relation> relations,
                          std::optional<std::size_t> truncation_bound = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t truncation_bound() const noexcept { return bound_; }
  /// Whether the bound was given rather than derived.
  bool bound_is_explicit() const noexcept { return bound_explicit_; }

  /// Compares quiver, relations and bound; the name is not part of the
  /// algebra.
  bool operator==(const BoundQuiverPresentation& other) const {
    return quiver_ == other.quiver_ && relations_ == other.relations_ &&
           bound_ == other.bound_;
  }

 private:
  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::size_t bound_ = 0;
  bool bound_explicit_ = false;
};

using PresentationPtr = std::shared_ptr<const BoundQuiverPresentation>;

PresentationPtr make_presentation(std::string name, Quiver quiver,
                                  std::vector<Relation> relations,
                                  std::optional<std::size_t> truncation_bound = std::nullopt);

/// nullopt when the derivation rule above does not apply.
std::optional<std::size_t> derive_truncation_bound(const Quiver& quiver,
                                                   const std::vector<Relation>& relations);

/// Same algebra object or structurally equal presentations.
bool same_algebra(const PresentationPtr& a, const PresentationPtr& b);

/// Linear combination of paths with rational coefficients; an element of
/// the path algebra kQ (truncate to work in kQ/J^N).
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement from_path(const Path& path, const Rational& coefficient = 1);
  static AlgebraElement from_relation(const Relation& relation);

  const std::map<Path, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement scaled(const Rational& factor) const;
  /// Product in kQ: pairs of non-composable paths multiply to zero.
  AlgebraElement operator*(const AlgebraElement& other) const;
  /// Drops every path of length >= window.
  AlgebraElement truncated(std::size_t window) const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  void add_term(const Path& path, const Rational& coefficient);
  std::map<Path, Rational> terms_;
};

std::string format_element(const Quiver& quiver, const AlgebraElement& element);

}  // namespace qvl

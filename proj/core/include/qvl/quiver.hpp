#pragma once

// Quivers, paths and relations.
//
// A path alpha_1 ... alpha_l is stored in written order; it acts right to
// left, so alpha_l is applied first and s(alpha_i) = t(alpha_{i+1}).

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qvl/field.hpp"

namespace qvl {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string name;
  VertexIndex source = 0;
  VertexIndex target = 0;

  bool is_loop() const noexcept { return source == target; }
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws SemanticError on duplicate names or out-of-range endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<ArrowIndex> find_arrow(std::string_view name) const;

  bool is_loop(ArrowIndex a) const { return arrow(a).is_loop(); }
  std::vector<ArrowIndex> loops_at(VertexIndex v) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// 0 for loops, 1 for every other arrow.
std::size_t degree(const Quiver& quiver, ArrowIndex arrow);

class Path {
 public:
  static Path trivial(VertexIndex vertex);
  /// Throws SemanticError if `arrows` is empty or not composable.
  static Path from_arrows(const Quiver& quiver, std::vector<ArrowIndex> arrows);
  /// `arrow` repeated `times` times (a power of a loop when times > 1).
  static Path power(const Quiver& quiver, ArrowIndex arrow, std::size_t times);

  VertexIndex source() const noexcept { return source_; }
  VertexIndex target() const noexcept { return target_; }
  std::size_t length() const noexcept { return arrows_.size(); }
  bool is_trivial() const noexcept { return arrows_.empty(); }
  std::span<const ArrowIndex> arrows() const noexcept { return arrows_; }

  /// True iff `sub` (nontrivial) occurs as a contiguous run of arrows.
  bool contains_subpath(const Path& sub) const;

  /// Length first, then lexicographic on arrow indices; trivial paths by
  /// vertex.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const = default;

 private:
  friend std::optional<Path> concatenate(const Path& lhs, const Path& rhs);

  Path(VertexIndex source, VertexIndex target, std::vector<ArrowIndex> arrows)
      : source_(source), target_(target), arrows_(std::move(arrows)) {}

  VertexIndex source_ = 0;
  VertexIndex target_ = 0;
  std::vector<ArrowIndex> arrows_;
};

/// lhs * rhs: first rhs, then lhs. nullopt when s(lhs) != t(rhs).
std::optional<Path> concatenate(const Path& lhs, const Path& rhs);

/// Number of non-loop arrows.
std::size_t degree(const Quiver& quiver, const Path& path);

/// Vertices visited by the path: t(alpha_1), s(alpha_1), ..., s(alpha_l).
std::set<VertexIndex> support(const Quiver& quiver, const Path& path);

std::string format_path(const Quiver& quiver, const Path& path);

struct Term {
  Rational coefficient;
  Path path;

  bool operator==(const Term&) const = default;
};

/// A nonzero linear combination of pairwise distinct, parallel paths of
/// length at least 2, kept sorted by the path order.
class Relation {
 public:
  /// Combines equal paths, drops zero coefficients and validates. Throws
  /// SemanticError for an empty result, non-parallel terms or short paths.
  Relation(const Quiver& quiver, std::vector<Term> terms);

  static Relation monomial(const Quiver& quiver, Path path);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  VertexIndex source() const noexcept { return terms_.front().path.source(); }
  VertexIndex target() const noexcept { return terms_.front().path.target(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  bool operator==(const Relation&) const = default;

 private:
  explicit Relation(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

/// Minimum degree over the terms.
std::size_t degree(const Quiver& quiver, const Relation& relation);

std::string format_relation(const Quiver& quiver, const Relation& relation);

/// True iff no oriented cycle has positive degree, i.e. no non-loop arrow
/// lies on a cycle.
bool is_weakly_triangular(const Quiver& quiver);

/// Length of the longest path using only non-loop arrows, or nullopt if
/// those arrows contain a cycle.
std::optional<std::size_t> longest_loop_free_path(const Quiver& quiver);

}  // namespace qvl

#pragma once

// The ideal I of a bound quiver realized inside the truncated path algebra
// kQ/J^W, and the relation-set checks built on it: membership, nilpotency
// indices of loops, minimal and normalized generating sets, the Ext^2
// relation count, support decomposition and simple loop extensions.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qvl/field.hpp"
#include "qvl/matrix.hpp"
#include "qvl/presentation.hpp"
#include "qvl/quiver.hpp"

namespace qvl {

/// All paths of length < window (trivial paths included), in path order.
class PathBasis {
 public:
  PathBasis(const Quiver& quiver, std::size_t window);

  std::size_t window() const noexcept { return window_; }
  std::size_t size() const noexcept { return paths_.size(); }
  const Path& path(std::size_t i) const { return paths_.at(i); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  std::optional<std::size_t> index_of(const Path& path) const;

 private:
  std::size_t window_;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
};

/// Which products p * rho * q span the subspace.
enum class Multipliers {
  kAll,         // I
  kNontrivial,  // IJ + JI: at least one of p, q has positive length
};

/// A subspace of kQ/J^W given by a reduced row echelon basis.
template <Field F>
class IdealSubspace {
 public:
  IdealSubspace(PathBasis basis, Matrix<F> echelon, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), echelon_(std::move(echelon)), pivots_(std::move(pivots)) {}

  const PathBasis& path_basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return pivots_.size(); }
  /// Basis vectors as rows, in reduced row echelon form.
  const Matrix<F>& echelon() const noexcept { return echelon_; }

  /// Coordinates of e truncated to the window.
  Vector<F> coordinates(const AlgebraElement& e) const;
  bool contains(const AlgebraElement& e) const;
  bool contains(const IdealSubspace& other) const;
  std::vector<AlgebraElement> basis_elements() const;

 private:
  PathBasis basis_;
  Matrix<F> echelon_;
  std::vector<std::size_t> pivots_;
};

/// span{ p * rho * q truncated below `window` : rho in relations }.
template <Field F>
IdealSubspace<F> ideal_subspace(const Quiver& quiver, const std::vector<Relation>& relations,
                                std::size_t window, const F& field,
                                Multipliers multipliers = Multipliers::kAll);

/// The ideal of the presentation inside kQ/J^N, N the truncation bound.
template <Field F = RationalField>
IdealSubspace<F> ideal_subspace(const BoundQuiverPresentation& pres, const F& field = F{});

/// e in I. Exact because J^N is contained in I.
template <Field F = RationalField>
bool ideal_membership(const AlgebraElement& e, const BoundQuiverPresentation& pres,
                      const F& field = F{});

/// Minimal m with loop^m in I. Throws SemanticError if `loop` is not a loop.
template <Field F = RationalField>
std::size_t loop_nilpotency_index(const BoundQuiverPresentation& pres, ArrowIndex loop,
                                  const F& field = F{});

/// Whether removing any single element of R strictly shrinks <R>. Throws
/// ValidationError unless <R> equals the ideal of the presentation.
/// Ideals are compared modulo paths of length N + 1.
template <Field F = RationalField>
bool is_minimal_relation_set(const std::vector<Relation>& relations,
                             const BoundQuiverPresentation& pres, const F& field = F{});

/// For every loop a: a^{m_a} belongs to R and is the only element of R with
/// a summand containing a^{m_a}. Throws ValidationError unless R is a
/// minimal generating set.
template <Field F = RationalField>
bool is_normalized(const std::vector<Relation>& relations, const BoundQuiverPresentation& pres,
                   const F& field = F{});

struct Ext2Dimension {
  std::size_t relation_count = 0;      // # R_{x,y}
  std::size_t quotient_dimension = 0;  // dim 1_y (I / (IJ + JI)) 1_x
  bool agree() const noexcept { return relation_count == quotient_dimension; }
};

/// Counts relations from x to y and, independently, the dimension of
/// 1_y (I/(IJ+JI)) 1_x by linear algebra in kQ/J^{N+1}. Throws
/// SemanticError for x == y and ValidationError when the quiver is not
/// weakly triangular or R does not generate I.
template <Field F = RationalField>
Ext2Dimension ext2_dimension(const BoundQuiverPresentation& pres,
                             const std::vector<Relation>& relations, VertexIndex x,
                             VertexIndex y, const F& field = F{});

/// rho = sum_X rho_X, grouping terms by the set of vertices their path
/// visits.
std::map<std::set<VertexIndex>, Relation> decompose_by_support(const Quiver& quiver,
                                                               const Relation& relation);

/// Every relation has degree 0 and only involves loops at one vertex, and
/// every vertex carries at most one loop.
bool is_simple_loop_extension(const BoundQuiverPresentation& pres);

}  // namespace qvl

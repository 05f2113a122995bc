#pragma once

// Representations of bound quivers over an exact field: relation
// evaluation, validity, homomorphisms, base change and cokernels.

#include <cstddef>
#include <optional>
#include <vector>

#include "qvl/field.hpp"
#include "qvl/matrix.hpp"
#include "qvl/presentation.hpp"

namespace qvl {

/// d_x per vertex, indexed like the quiver's vertices.
using DimensionVector = std::vector<std::size_t>;

/// e <= d componentwise.
bool dominated_by(const DimensionVector& e, const DimensionVector& d);
DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);
/// Throws SemanticError unless b <= a.
DimensionVector operator-(const DimensionVector& a, const DimensionVector& b);

/// One matrix V_a of shape d_{t a} x d_{s a} per arrow. Shapes are enforced
/// on construction; validity against the relations is a separate predicate.
template <Field F>
class Representation {
 public:
  Representation(PresentationPtr presentation, F field, DimensionVector dims,
                 std::vector<Matrix<F>> matrices);

  static Representation zero(PresentationPtr presentation, F field, DimensionVector dims);

  const PresentationPtr& presentation_ptr() const noexcept { return presentation_; }
  const BoundQuiverPresentation& presentation() const noexcept { return *presentation_; }
  const Quiver& quiver() const noexcept { return presentation_->quiver(); }
  const F& field() const noexcept { return field_; }
  const DimensionVector& dims() const noexcept { return dims_; }
  std::size_t dim(VertexIndex v) const { return dims_.at(v); }
  const Matrix<F>& arrow(ArrowIndex a) const { return matrices_.at(a); }
  const std::vector<Matrix<F>>& matrices() const noexcept { return matrices_; }

  Representation with_arrow(ArrowIndex a, Matrix<F> m) const;

  bool operator==(const Representation& other) const {
    return same_algebra(presentation_, other.presentation_) && field_ == other.field_ &&
           dims_ == other.dims_ && matrices_ == other.matrices_;
  }

 private:
  PresentationPtr presentation_;
  F field_;
  DimensionVector dims_;
  std::vector<Matrix<F>> matrices_;
};

/// A collection f_x of matrices, one per vertex. Used both for
/// homomorphisms and for base changes g in GL(d).
template <Field F>
struct HomMorphism {
  std::vector<Matrix<F>> maps;

  const Matrix<F>& at(VertexIndex v) const { return maps.at(v); }
  bool operator==(const HomMorphism&) const = default;
};

template <Field F>
using BaseChange = HomMorphism<F>;

/// (V, W, f) with f : V -> W.
template <Field F>
struct HomTriple {
  Representation<F> source;
  Representation<F> target;
  HomMorphism<F> map;

  bool operator==(const HomTriple&) const = default;
};

/// Relation with coefficients already mapped into a field, for repeated
/// evaluation.
template <Field F>
struct CompiledRelation {
  struct Term {
    typename F::Element coefficient;
    std::vector<ArrowIndex> arrows;
  };
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::vector<Term> terms;
};

template <Field F>
std::vector<CompiledRelation<F>> compile_relations(const BoundQuiverPresentation& pres,
                                                   const F& field);

/// sum_i lambda_i M_{a_i1} ... M_{a_il} for matrices indexed by arrow.
template <Field F>
Matrix<F> evaluate_compiled(const CompiledRelation<F>& relation,
                            const std::vector<Matrix<F>>& matrices, const DimensionVector& dims,
                            const F& field);

/// V_{a_1} ... V_{a_l}; the identity of size d_x for the trivial path 1_x.
template <Field F>
Matrix<F> evaluate_path(const Representation<F>& v, const Path& path);

template <Field F>
Matrix<F> evaluate_relation(const Representation<F>& v, const Relation& relation);

/// All generating relations vanish on v.
template <Field F>
bool is_valid(const Representation<F>& v);

/// Index of the first generating relation that does not vanish.
template <Field F>
std::optional<std::size_t> first_violated_relation(const Representation<F>& v);

/// Shapes match and U_a f_{s a} = f_{t a} V_a for every arrow.
template <Field F>
bool is_homomorphism(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f);

/// Basis of Hom(source, target) as the kernel of the intertwining system.
/// Unknowns are ordered by vertex, then row-major within f_x.
template <Field F>
std::vector<HomMorphism<F>> hom_basis(const Representation<F>& source,
                                      const Representation<F>& target);

/// rank f_x = dim source_x at every vertex. Throws ValidationError if f is
/// not a homomorphism.
template <Field F>
bool is_monomorphism(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f);

/// (g * V)_a = g_{t a} V_a g_{s a}^{-1}. Throws ValidationError if some g_x
/// is singular or has the wrong size.
template <Field F>
Representation<F> gl_action(const BaseChange<F>& g, const Representation<F>& v);

template <Field F>
Representation<F> simple_module(PresentationPtr presentation, const F& field, VertexIndex x);

/// Block diagonal sum, first summand on top.
template <Field F>
Representation<F> direct_sum(const Representation<F>& v, const Representation<F>& u);

template <Field F>
HomMorphism<F> identity_morphism(const Representation<F>& v);

/// lhs o rhs, vertexwise.
template <Field F>
HomMorphism<F> compose(const HomMorphism<F>& lhs, const HomMorphism<F>& rhs);

/// Standard unit columns at the non-pivot rows of the column-reduced f:
/// [f | complement] is invertible whenever f has full column rank.
template <Field F>
Matrix<F> default_complement(const Matrix<F>& f);

template <Field F>
struct Cokernel {
  Representation<F> quotient;
  HomMorphism<F> projection;
};

/// U = W / Im f of dimension dim W - dim V, using default_complement to
/// pick coordinates on U. Throws ValidationError unless f is a
/// monomorphism.
template <Field F>
Cokernel<F> cokernel(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f);

}  // namespace qvl

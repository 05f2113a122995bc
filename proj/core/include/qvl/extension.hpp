#pragma once

// Extension cocycles Z^{U,V}, the block representations W^{V,Z,U} and the
// maps between monomorphism triples and extension triples.

#include <optional>
#include <vector>

#include "qvl/representation.hpp"

namespace qvl {

/// One block Z_a of shape d_{t a} x e_{s a} per arrow, d = dim V, e = dim U.
template <Field F>
struct ArrowBlock {
  std::vector<Matrix<F>> blocks;

  const Matrix<F>& at(ArrowIndex a) const { return blocks.at(a); }
  bool operator==(const ArrowBlock&) const = default;
};

template <Field F>
ArrowBlock<F> zero_block(const Representation<F>& u, const Representation<F>& v);

/// Throws SemanticError unless every Z_a has shape d_{t a} x e_{s a}.
template <Field F>
void check_block_shapes(const Representation<F>& u, const Representation<F>& v,
                        const ArrowBlock<F>& z);

template <Field F>
struct ExtensionTriple {
  Representation<F> u;
  Representation<F> v;
  ArrowBlock<F> z;

  bool operator==(const ExtensionTriple&) const = default;
};

/// sum_i lambda_i sum_j V_{a_i1} ... V_{a_i,j-1} Z_{a_ij} U_{a_i,j+1} ... U_{a_il}
template <Field F>
Matrix<F> cocycle_value(const Representation<F>& u, const Representation<F>& v,
                        const ArrowBlock<F>& z, const Relation& relation);

template <Field F>
bool is_cocycle(const Representation<F>& u, const Representation<F>& v, const ArrowBlock<F>& z);

/// Basis of Z^{U,V}, the blocks whose value vanishes on every generating
/// relation. Coordinates run over arrows in order, row-major within Z_a.
template <Field F>
std::vector<ArrowBlock<F>> cocycle_space_basis(const Representation<F>& u,
                                               const Representation<F>& v);

template <Field F>
std::size_t cocycle_ambient_dimension(const Representation<F>& u, const Representation<F>& v);

/// 0 -> V -mu-> W -pi-> U -> 0 with W_a = [[V_a, Z_a], [0, U_a]].
template <Field F>
struct Extension {
  Representation<F> w;
  HomMorphism<F> mu;
  HomMorphism<F> pi;
};

/// Throws ValidationError if Z is not a cocycle or W fails a relation.
template <Field F>
Extension<F> build_extension(const Representation<F>& u, const Representation<F>& v,
                             const ArrowBlock<F>& z);

template <Field F>
struct Splitting {
  BaseChange<F> g;
  ArrowBlock<F> z;
  Representation<F> u;
};

/// Puts W in block upper triangular form along g = [f, h]. Without h the
/// default complement of each f_x is used. Throws ValidationError if f is
/// not a monomorphism or [f, h] is singular somewhere.
/// Guarantees g * W^{V,Z,U} = W and f = g o mu.
template <Field F>
Splitting<F> splitting_from_mono(const Representation<F>& v, const Representation<F>& w,
                                 const HomMorphism<F>& f,
                                 const std::optional<std::vector<Matrix<F>>>& h = std::nullopt);

/// (V, g * W^{V,Z,U}, g o mu).
template <Field F>
HomTriple<F> phi_map(const BaseChange<F>& g, const ExtensionTriple<F>& triple);

/// (lower right blocks, V, upper right blocks) of [f, h]^{-1} * W.
template <Field F>
ExtensionTriple<F> psi_map(const Representation<F>& v, const Representation<F>& w,
                           const HomMorphism<F>& f,
                           const std::optional<std::vector<Matrix<F>>>& h = std::nullopt);

}  // namespace qvl

#pragma once

// JSON interchange for fields, matrices, representations, arrow blocks and
// vertex maps.
//
//   {"field": {"type": "Fp", "p": 5} | {"type": "Q"},
//    "dims": {"0": 1, "1": 2},
//    "mats": {"a1": [[1, 0]], "e1": [[0, 1], [0, 0]]}}
//
// F_p entries are integers in [0, p); rational entries are strings "a/b"
// (integers are accepted on input).

#include <variant>

#include <nlohmann/json.hpp>

#include "qvl/extension.hpp"
#include "qvl/representation.hpp"

namespace qvl {

using Json = nlohmann::json;
using AnyRepresentation =
    std::variant<Representation<PrimeField>, Representation<RationalField>>;

Json field_to_json(const FieldSpec& field);
/// Throws SemanticError on an unknown type or a non-prime p.
FieldSpec field_from_json(const Json& j);

template <Field F>
Json matrix_to_json(const Matrix<F>& m);
/// Throws SemanticError on a shape mismatch or an entry outside the field.
template <Field F>
Matrix<F> matrix_from_json(const Json& j, const F& field, std::size_t rows, std::size_t cols);

template <Field F>
Json representation_to_json(const Representation<F>& v);

/// Reads the field from the document.
AnyRepresentation representation_from_json(const Json& j, const PresentationPtr& pres);
/// Requires the document's field to equal `field`.
template <Field F>
Representation<F> representation_from_json(const Json& j, const PresentationPtr& pres,
                                            const F& field);

/// {"blocks": {arrow: matrix}}. Shapes follow dim V (rows) and dim U (cols).
template <Field F>
Json block_to_json(const ArrowBlock<F>& z, const Quiver& quiver);
template <Field F>
ArrowBlock<F> block_from_json(const Json& j, const Representation<F>& u,
                              const Representation<F>& v);

/// {"maps": {vertex: matrix}} for f : source -> target.
template <Field F>
Json morphism_to_json(const HomMorphism<F>& f, const Quiver& quiver);
template <Field F>
HomMorphism<F> morphism_from_json(const Json& j, const Quiver& quiver,
                                  const DimensionVector& source_dims,
                                  const DimensionVector& target_dims, const F& field);

/// Per-vertex matrices with free shapes checked against rows x cols.
template <Field F>
std::vector<Matrix<F>> vertex_matrices_from_json(const Json& j, const Quiver& quiver,
                                                 const DimensionVector& rows,
                                                 const DimensionVector& cols, const F& field);

}  // namespace qvl

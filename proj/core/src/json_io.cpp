#include "qvl/json_io.hpp"

#include "qvl/errors.hpp"

namespace qvl {

namespace {

template <Field F>
typename F::Element entry_from_json(const Json& j, const F& field);

template <>
PrimeField::Element entry_from_json(const Json& j, const PrimeField& field) {
  if (!j.is_number_integer()) throw SemanticError("F_p entry must be an integer, got " + j.dump());
  const auto v = j.get<std::int64_t>();
  if (v < 0 || static_cast<std::uint64_t>(v) >= field.order()) {
    throw SemanticError("F_p entry " + j.dump() + " is outside [0, " +
                        std::to_string(field.order()) + ")");
  }
  return static_cast<PrimeField::Element>(v);
}

template <>
RationalField::Element entry_from_json(const Json& j, const RationalField&) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw SemanticError("rational entry must be a string or an integer, got " + j.dump());
}

Json entry_to_json(const PrimeField&, PrimeField::Element a) { return a; }
Json entry_to_json(const RationalField&, const Rational& a) { return to_string(a); }

const Json& object_member(const Json& j, const char* key) {
  if (!j.is_object()) throw SemanticError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw SemanticError(std::string("missing \"") + key + "\"");
  if (!it->is_object()) throw SemanticError(std::string("\"") + key + "\" must be an object");
  return *it;
}

template <typename Lookup>
void reject_unknown_keys(const Json& obj, Lookup known, const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    if (!known(key)) throw SemanticError("unknown " + what + " '" + key + "'");
  }
}

DimensionVector dims_from_json(const Json& j, const Quiver& q) {
  const Json& dims = object_member(j, "dims");
  reject_unknown_keys(dims, [&](const std::string& k) { return q.find_vertex(k).has_value(); },
                      "vertex");
  DimensionVector out(q.vertex_count(), 0);
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    const auto it = dims.find(q.vertex_name(x));
    if (it == dims.end()) continue;
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
      throw SemanticError("dimension at vertex '" + q.vertex_name(x) +
                          "' must be a nonnegative integer");
    }
    out[x] = it->get<std::size_t>();
  }
  return out;
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
  if (const auto* p = std::get_if<PrimeField>(&field)) return {{"type", "Fp"}, {"p", p->order()}};
  return {{"type", "Q"}};
}

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw SemanticError("field must be an object with a \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  if (type == "Q") return RationalField{};
  if (type == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_unsigned()) {
      throw SemanticError("F_p field needs a positive integer \"p\"");
    }
    const auto p = j["p"].get<std::uint64_t>();
    if (p > UINT32_MAX) throw SemanticError("p is too large");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw SemanticError("unknown field type '" + type + "'");
}

template <Field F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m.field(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field F>
Matrix<F> matrix_from_json(const Json& j, const F& field, std::size_t rows, std::size_t cols) {
  const std::string expected = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) {
    throw SemanticError("expected a " + expected + " matrix, got " + j.dump());
  }
  Matrix<F> m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw SemanticError("expected a " + expected + " matrix, got " + j.dump());
    }
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c], field);
  }
  return m;
}

template <Field F>
Json representation_to_json(const Representation<F>& v) {
  const Quiver& q = v.quiver();
  Json dims = Json::object();
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) dims[q.vertex_name(x)] = v.dim(x);
  Json mats = Json::object();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) mats[q.arrow(a).name] = matrix_to_json(v.arrow(a));
  return {{"field", field_to_json(FieldSpec{v.field()})}, {"dims", dims}, {"mats", mats}};
}

template <Field F>
Representation<F> representation_from_json(const Json& j, const PresentationPtr& pres,
                                            const F& field) {
  const Quiver& q = pres->quiver();
  if (!j.is_object()) throw SemanticError("representation must be a JSON object");
  if (j.contains("field")) {
    const FieldSpec declared = field_from_json(j["field"]);
    const auto* same = std::get_if<F>(&declared);
    if (same == nullptr || !(*same == field)) {
      throw SemanticError("representation is over " + describe(declared) + ", expected " +
                          describe(FieldSpec{field}));
    }
  }
  const DimensionVector dims = dims_from_json(j, q);
  const Json& mats = object_member(j, "mats");
  reject_unknown_keys(mats, [&](const std::string& k) { return q.find_arrow(k).has_value(); },
                      "arrow");
  std::vector<Matrix<F>> out;
  for (const auto& a : q.arrows()) {
    const std::size_t r = dims[a.target], c = dims[a.source];
    const auto it = mats.find(a.name);
    if (it == mats.end()) {
      if (r * c != 0) throw SemanticError("missing matrix for arrow '" + a.name + "'");
      out.emplace_back(field, r, c);
      continue;
    }
    try {
      out.push_back(matrix_from_json(*it, field, r, c));
    } catch (const SemanticError& e) {
      throw SemanticError("arrow '" + a.name + "': " + e.what());
    }
  }
  return Representation<F>(pres, field, dims, std::move(out));
}

AnyRepresentation representation_from_json(const Json& j, const PresentationPtr& pres) {
  if (!j.is_object() || !j.contains("field")) throw SemanticError("representation lacks \"field\"");
  return std::visit(
      [&](const auto& field) -> AnyRepresentation {
        return representation_from_json(j, pres, field);
      },
      field_from_json(j["field"]));
}

template <Field F>
Json block_to_json(const ArrowBlock<F>& z, const Quiver& quiver) {
  Json blocks = Json::object();
  for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
    blocks[quiver.arrow(a).name] = matrix_to_json(z.at(a));
  }
  return {{"blocks", blocks}};
}

template <Field F>
ArrowBlock<F> block_from_json(const Json& j, const Representation<F>& u,
                              const Representation<F>& v) {
  const Quiver& q = u.quiver();
  const Json& blocks = object_member(j, "blocks");
  reject_unknown_keys(blocks, [&](const std::string& k) { return q.find_arrow(k).has_value(); },
                      "arrow");
  ArrowBlock<F> z;
  for (const auto& a : q.arrows()) {
    const std::size_t r = v.dim(a.target), c = u.dim(a.source);
    const auto it = blocks.find(a.name);
    if (it == blocks.end()) {
      if (r * c != 0) throw SemanticError("missing block for arrow '" + a.name + "'");
      z.blocks.emplace_back(u.field(), r, c);
    } else {
      z.blocks.push_back(matrix_from_json(*it, u.field(), r, c));
    }
  }
  return z;
}

template <Field F>
Json morphism_to_json(const HomMorphism<F>& f, const Quiver& quiver) {
  Json maps = Json::object();
  for (VertexIndex x = 0; x < quiver.vertex_count(); ++x) {
    maps[quiver.vertex_name(x)] = matrix_to_json(f.at(x));
  }
  return {{"maps", maps}};
}

template <Field F>
std::vector<Matrix<F>> vertex_matrices_from_json(const Json& j, const Quiver& quiver,
                                                 const DimensionVector& rows,
                                                 const DimensionVector& cols, const F& field) {
  const Json& maps = object_member(j, "maps");
  reject_unknown_keys(maps, [&](const std::string& k) { return quiver.find_vertex(k).has_value(); },
                      "vertex");
  std::vector<Matrix<F>> out;
  for (VertexIndex x = 0; x < quiver.vertex_count(); ++x) {
    const auto it = maps.find(quiver.vertex_name(x));
    if (it == maps.end()) {
      if (rows[x] * cols[x] != 0) {
        throw SemanticError("missing matrix at vertex '" + quiver.vertex_name(x) + "'");
      }
      out.emplace_back(field, rows[x], cols[x]);
    } else {
      out.push_back(matrix_from_json(*it, field, rows[x], cols[x]));
    }
  }
  return out;
}

template <Field F>
HomMorphism<F> morphism_from_json(const Json& j, const Quiver& quiver,
                                  const DimensionVector& source_dims,
                                  const DimensionVector& target_dims, const F& field) {
  return {vertex_matrices_from_json(j, quiver, target_dims, source_dims, field)};
}

#define QVL_INSTANTIATE_JSON(F)                                                                  \
  template Json matrix_to_json<F>(const Matrix<F>&);                                             \
  template Matrix<F> matrix_from_json<F>(const Json&, const F&, std::size_t, std::size_t);       \
  template Json representation_to_json<F>(const Representation<F>&);                             \
  template Representation<F> representation_from_json<F>(const Json&, const PresentationPtr&,    \
                                                         const F&);                              \
  template Json block_to_json<F>(const ArrowBlock<F>&, const Quiver&);                           \
  template ArrowBlock<F> block_from_json<F>(const Json&, const Representation<F>&,               \
                                            const Representation<F>&);                           \
  template Json morphism_to_json<F>(const HomMorphism<F>&, const Quiver&);                       \
  template HomMorphism<F> morphism_from_json<F>(const Json&, const Quiver&,                      \
                                                const DimensionVector&, const DimensionVector&,  \
                                                const F&);                                       \
  template std::vector<Matrix<F>> vertex_matrices_from_json<F>(                                  \
      const Json&, const Quiver&, const DimensionVector&, const DimensionVector&, const F&);

QVL_INSTANTIATE_JSON(PrimeField)
QVL_INSTANTIATE_JSON(RationalField)

}  // namespace qvl

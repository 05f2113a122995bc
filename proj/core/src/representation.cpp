#include "qvl/representation.hpp"

#include "qvl/errors.hpp"

namespace qvl {

bool dominated_by(const DimensionVector& e, const DimensionVector& d) {
  if (e.size() != d.size()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > d[i]) return false;
  }
  return true;
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw SemanticError("dimension vectors of different length");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
  if (!dominated_by(b, a)) throw SemanticError("dimension vector difference is negative");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

template <Field F>
Representation<F>::Representation(PresentationPtr presentation, F field, DimensionVector dims,
                                   std::vector<Matrix<F>> matrices)
    : presentation_(std::move(presentation)),
      field_(std::move(field)),
      dims_(std::move(dims)),
      matrices_(std::move(matrices)) {
  if (!presentation_) throw SemanticError("representation without a presentation");
  const Quiver& q = presentation_->quiver();
  if (dims_.size() != q.vertex_count()) {
    throw SemanticError("dimension vector has " + std::to_string(dims_.size()) +
                        " entries for " + std::to_string(q.vertex_count()) + " vertices");
  }
  if (matrices_.size() != q.arrow_count()) {
    throw SemanticError("expected " + std::to_string(q.arrow_count()) + " arrow matrices");
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    const auto& m = matrices_[a];
    if (!(m.field() == field_) || m.rows() != dims_[arrow.target] ||
        m.cols() != dims_[arrow.source]) {
      throw SemanticError("matrix for arrow '" + arrow.name + "' has shape " + m.shape() +
                          ", expected " + std::to_string(dims_[arrow.target]) + "x" +
                          std::to_string(dims_[arrow.source]));
    }
  }
}

template <Field F>
Representation<F> Representation<F>::zero(PresentationPtr presentation, F field,
                                          DimensionVector dims) {
  std::vector<Matrix<F>> mats;
  const Quiver& q = presentation->quiver();
  if (dims.size() != q.vertex_count()) throw SemanticError("dimension vector length mismatch");
  for (const auto& a : q.arrows()) mats.emplace_back(field, dims[a.target], dims[a.source]);
  return Representation(std::move(presentation), std::move(field), std::move(dims),
                        std::move(mats));
}

template <Field F>
Representation<F> Representation<F>::with_arrow(ArrowIndex a, Matrix<F> m) const {
  auto mats = matrices_;
  mats.at(a) = std::move(m);
  return Representation(presentation_, field_, dims_, std::move(mats));
}

template <Field F>
std::vector<CompiledRelation<F>> compile_relations(const BoundQuiverPresentation& pres,
                                                   const F& field) {
  std::vector<CompiledRelation<F>> out;
  for (const auto& r : pres.relations()) {
    CompiledRelation<F> c;
    c.source = r.source();
    c.target = r.target();
    for (const auto& t : r.terms()) {
      c.terms.push_back({field.from_rational(t.coefficient),
                         std::vector<ArrowIndex>(t.path.arrows().begin(), t.path.arrows().end())});
    }
    out.push_back(std::move(c));
  }
  return out;
}

template <Field F>
Matrix<F> evaluate_compiled(const CompiledRelation<F>& relation,
                            const std::vector<Matrix<F>>& matrices, const DimensionVector& dims,
                            const F& field) {
  Matrix<F> sum(field, dims[relation.target], dims[relation.source]);
  for (const auto& t : relation.terms) {
    // Multiply from the right so that zero factors short-circuit early.
    Matrix<F> product = matrices[t.arrows.back()];
    for (std::size_t i = t.arrows.size() - 1; i-- > 0;) {
      if (product.is_zero()) break;
      product = matrices[t.arrows[i]] * product;
    }
    if (product.is_zero()) continue;
    if (product.rows() != sum.rows() || product.cols() != sum.cols()) {
      product = Matrix<F>(field, sum.rows(), sum.cols());
    }
    sum += product.scaled(t.coefficient);
  }
  return sum;
}

template <Field F>
Matrix<F> evaluate_path(const Representation<F>& v, const Path& path) {
  if (path.is_trivial()) return Matrix<F>::identity(v.field(), v.dim(path.source()));
  const auto arrows = path.arrows();
  Matrix<F> out = v.arrow(arrows.front());
  for (std::size_t i = 1; i < arrows.size(); ++i) out = out * v.arrow(arrows[i]);
  return out;
}

template <Field F>
Matrix<F> evaluate_relation(const Representation<F>& v, const Relation& relation) {
  const F& k = v.field();
  Matrix<F> sum(k, v.dim(relation.target()), v.dim(relation.source()));
  for (const auto& t : relation.terms()) {
    sum += evaluate_path(v, t.path).scaled(k.from_rational(t.coefficient));
  }
  return sum;
}

template <Field F>
std::optional<std::size_t> first_violated_relation(const Representation<F>& v) {
  const auto& rels = v.presentation().relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!evaluate_relation(v, rels[i]).is_zero()) return i;
  }
  return std::nullopt;
}

template <Field F>
bool is_valid(const Representation<F>& v) {
  return !first_violated_relation(v).has_value();
}

namespace {

template <Field F>
bool shapes_fit(const Representation<F>& source, const Representation<F>& target,
                const HomMorphism<F>& f) {
  if (f.maps.size() != source.dims().size()) return false;
  for (VertexIndex x = 0; x < f.maps.size(); ++x) {
    if (f.maps[x].rows() != target.dim(x) || f.maps[x].cols() != source.dim(x)) return false;
  }
  return true;
}

template <Field F>
void require_same_algebra(const Representation<F>& a, const Representation<F>& b) {
  if (!same_algebra(a.presentation_ptr(), b.presentation_ptr()) || !(a.field() == b.field())) {
    throw SemanticError("representations of different algebras or fields");
  }
}

}  // namespace

template <Field F>
bool is_homomorphism(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f) {
  require_same_algebra(source, target);
  if (!shapes_fit(source, target, f)) return false;
  const Quiver& q = source.quiver();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    if (!(target.arrow(a) * f.maps[arrow.source] == f.maps[arrow.target] * source.arrow(a))) {
      return false;
    }
  }
  return true;
}

template <Field F>
std::vector<HomMorphism<F>> hom_basis(const Representation<F>& source,
                                      const Representation<F>& target) {
  require_same_algebra(source, target);
  const F& k = source.field();
  const Quiver& q = source.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (VertexIndex x = 0; x < n; ++x) offset[x + 1] = offset[x] + target.dim(x) * source.dim(x);
  const std::size_t unknowns = offset[n];

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += target.dim(a.target) * source.dim(a.source);
  Matrix<F> system(k, equations, unknowns);

  // Row (i, j) of arrow a: sum_k W_a(i,k) f_s(k,j) - sum_k f_t(i,k) V_a(k,j) = 0.
  std::size_t row = 0;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    const VertexIndex s = arrow.source, t = arrow.target;
    const auto& wa = target.arrow(a);
    const auto& va = source.arrow(a);
    const std::size_t ws = target.dim(s), vs = source.dim(s), vt = source.dim(t);
    for (std::size_t i = 0; i < target.dim(t); ++i) {
      for (std::size_t j = 0; j < vs; ++j, ++row) {
        for (std::size_t kk = 0; kk < ws; ++kk) {
          auto& c = system(row, offset[s] + kk * vs + j);
          c = k.add(c, wa(i, kk));
        }
        for (std::size_t kk = 0; kk < vt; ++kk) {
          auto& c = system(row, offset[t] + i * vt + kk);
          c = k.sub(c, va(kk, j));
        }
      }
    }
  }

  std::vector<HomMorphism<F>> out;
  for (const auto& vec : kernel_basis(system)) {
    HomMorphism<F> f;
    for (VertexIndex x = 0; x < n; ++x) {
      std::vector<typename F::Element> data(vec.begin() + static_cast<std::ptrdiff_t>(offset[x]),
                                            vec.begin() + static_cast<std::ptrdiff_t>(offset[x + 1]));
      f.maps.emplace_back(k, target.dim(x), source.dim(x), std::move(data));
    }
    out.push_back(std::move(f));
  }
  return out;
}

template <Field F>
bool is_monomorphism(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f) {
  if (!is_homomorphism(source, target, f)) {
    throw ValidationError("map is not a homomorphism");
  }
  for (VertexIndex x = 0; x < f.maps.size(); ++x) {
    if (rank(f.maps[x]) != source.dim(x)) return false;
  }
  return true;
}

template <Field F>
Representation<F> gl_action(const BaseChange<F>& g, const Representation<F>& v) {
  const Quiver& q = v.quiver();
  if (g.maps.size() != q.vertex_count()) throw ValidationError("base change has wrong length");
  std::vector<Matrix<F>> inverses;
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    if (g.maps[x].rows() != v.dim(x) || g.maps[x].cols() != v.dim(x)) {
      throw ValidationError("base change at vertex " + q.vertex_name(x) + " has wrong size");
    }
    auto inv = inverse(g.maps[x]);
    if (!inv) throw ValidationError("base change at vertex " + q.vertex_name(x) + " is singular");
    inverses.push_back(std::move(*inv));
  }
  std::vector<Matrix<F>> mats;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    mats.push_back(g.maps[arrow.target] * v.arrow(a) * inverses[arrow.source]);
  }
  return Representation<F>(v.presentation_ptr(), v.field(), v.dims(), std::move(mats));
}

template <Field F>
Representation<F> simple_module(PresentationPtr presentation, const F& field, VertexIndex x) {
  const std::size_t n = presentation->quiver().vertex_count();
  if (x >= n) throw SemanticError("vertex out of range");
  DimensionVector dims(n, 0);
  dims[x] = 1;
  return Representation<F>::zero(std::move(presentation), field, std::move(dims));
}

template <Field F>
Representation<F> direct_sum(const Representation<F>& v, const Representation<F>& u) {
  require_same_algebra(v, u);
  const Quiver& q = v.quiver();
  std::vector<Matrix<F>> mats;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& va = v.arrow(a);
    const auto& ua = u.arrow(a);
    Matrix<F> m(v.field(), va.rows() + ua.rows(), va.cols() + ua.cols());
    m.set_block(0, 0, va);
    m.set_block(va.rows(), va.cols(), ua);
    mats.push_back(std::move(m));
  }
  return Representation<F>(v.presentation_ptr(), v.field(), v.dims() + u.dims(), std::move(mats));
}

template <Field F>
HomMorphism<F> identity_morphism(const Representation<F>& v) {
  HomMorphism<F> out;
  for (const auto d : v.dims()) out.maps.push_back(Matrix<F>::identity(v.field(), d));
  return out;
}

template <Field F>
HomMorphism<F> compose(const HomMorphism<F>& lhs, const HomMorphism<F>& rhs) {
  if (lhs.maps.size() != rhs.maps.size()) throw SemanticError("composing maps of different length");
  HomMorphism<F> out;
  for (std::size_t x = 0; x < lhs.maps.size(); ++x) out.maps.push_back(lhs.maps[x] * rhs.maps[x]);
  return out;
}

template <Field F>
Matrix<F> default_complement(const Matrix<F>& f) {
  const auto ech = row_reduce(f.transpose());
  std::vector<bool> pivot(f.rows(), false);
  for (const auto c : ech.pivot_columns) pivot[c] = true;
  std::size_t free = 0;
  for (const bool p : pivot) free += p ? 0 : 1;
  Matrix<F> out(f.field(), f.rows(), free);
  std::size_t col = 0;
  for (std::size_t r = 0; r < f.rows(); ++r) {
    if (!pivot[r]) out(r, col++) = f.field().one();
  }
  return out;
}

template <Field F>
Cokernel<F> cokernel(const Representation<F>& source, const Representation<F>& target,
                     const HomMorphism<F>& f) {
  if (!is_monomorphism(source, target, f)) throw ValidationError("cokernel needs a monomorphism");
  const F& k = source.field();
  const Quiver& q = source.quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Matrix<F>> basis, inverses;
  HomMorphism<F> projection;
  DimensionVector dims(n);
  for (VertexIndex x = 0; x < n; ++x) {
    const auto& fx = f.maps[x];
    Matrix<F> g = fx.hstack(default_complement(fx));
    auto inv = inverse(g);
    dims[x] = target.dim(x) - source.dim(x);
    projection.maps.push_back(inv->block(source.dim(x), 0, dims[x], target.dim(x)));
    basis.push_back(std::move(g));
    inverses.push_back(std::move(*inv));
  }
  std::vector<Matrix<F>> mats;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    const Matrix<F> conj = inverses[arrow.target] * target.arrow(a) * basis[arrow.source];
    mats.push_back(conj.block(source.dim(arrow.target), source.dim(arrow.source),
                              dims[arrow.target], dims[arrow.source]));
  }
  (void)k;
  return {Representation<F>(source.presentation_ptr(), source.field(), std::move(dims),
                            std::move(mats)),
          std::move(projection)};
}

#define QVL_INSTANTIATE_REPRESENTATION(F)                                                     \
  template class Representation<F>;                                                           \
  template std::vector<CompiledRelation<F>> compile_relations<F>(                             \
      const BoundQuiverPresentation&, const F&);                                              \
  template Matrix<F> evaluate_compiled<F>(const CompiledRelation<F>&,                         \
                                          const std::vector<Matrix<F>>&,                      \
                                          const DimensionVector&, const F&);                  \
  template Matrix<F> evaluate_path<F>(const Representation<F>&, const Path&);                 \
  template Matrix<F> evaluate_relation<F>(const Representation<F>&, const Relation&);         \
  template bool is_valid<F>(const Representation<F>&);                                        \
  template std::optional<std::size_t> first_violated_relation<F>(const Representation<F>&);   \
  template bool is_homomorphism<F>(const Representation<F>&, const Representation<F>&,        \
                                   const HomMorphism<F>&);                                    \
  template std::vector<HomMorphism<F>> hom_basis<F>(const Representation<F>&,                 \
                                                    const Representation<F>&);                \
  template bool is_monomorphism<F>(const Representation<F>&, const Representation<F>&,        \
                                   const HomMorphism<F>&);                                    \
  template Representation<F> gl_action<F>(const BaseChange<F>&, const Representation<F>&);    \
  template Representation<F> simple_module<F>(PresentationPtr, const F&, VertexIndex);        \
  template Representation<F> direct_sum<F>(const Representation<F>&, const Representation<F>&); \
  template HomMorphism<F> identity_morphism<F>(const Representation<F>&);                     \
  template HomMorphism<F> compose<F>(const HomMorphism<F>&, const HomMorphism<F>&);           \
  template Matrix<F> default_complement<F>(const Matrix<F>&);                                 \
  template Cokernel<F> cokernel<F>(const Representation<F>&, const Representation<F>&,        \
                                   const HomMorphism<F>&);

QVL_INSTANTIATE_REPRESENTATION(PrimeField)
QVL_INSTANTIATE_REPRESENTATION(RationalField)

}  // namespace qvl

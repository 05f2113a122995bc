#include "qvl/extension.hpp"

#include "qvl/errors.hpp"

namespace qvl {

template <Field F>
ArrowBlock<F> zero_block(const Representation<F>& u, const Representation<F>& v) {
  ArrowBlock<F> z;
  for (const auto& a : u.quiver().arrows()) {
    z.blocks.emplace_back(u.field(), v.dim(a.target), u.dim(a.source));
  }
  return z;
}

template <Field F>
void check_block_shapes(const Representation<F>& u, const Representation<F>& v,
                        const ArrowBlock<F>& z) {
  const Quiver& q = u.quiver();
  if (!same_algebra(u.presentation_ptr(), v.presentation_ptr())) {
    throw SemanticError("U and V are representations of different algebras");
  }
  if (z.blocks.size() != q.arrow_count()) throw SemanticError("block count does not match arrows");
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    if (z.blocks[a].rows() != v.dim(arrow.target) || z.blocks[a].cols() != u.dim(arrow.source)) {
      throw SemanticError("block for arrow '" + arrow.name + "' has shape " +
                          z.blocks[a].shape() + ", expected " +
                          std::to_string(v.dim(arrow.target)) + "x" +
                          std::to_string(u.dim(arrow.source)));
    }
  }
}

template <Field F>
Matrix<F> cocycle_value(const Representation<F>& u, const Representation<F>& v,
                        const ArrowBlock<F>& z, const Relation& relation) {
  check_block_shapes(u, v, z);
  const F& k = u.field();
  Matrix<F> sum(k, v.dim(relation.target()), u.dim(relation.source()));
  for (const auto& t : relation.terms()) {
    const auto arrows = t.path.arrows();
    const std::size_t l = arrows.size();
    // suffix[j] = U_{a_{j}} ... U_{a_{l-1}} (0-based), identity when j = l.
    std::vector<Matrix<F>> suffix;
    suffix.reserve(l + 1);
    suffix.push_back(Matrix<F>::identity(k, u.dim(relation.source())));
    for (std::size_t j = l; j-- > 0;) suffix.push_back(u.arrow(arrows[j]) * suffix.back());
    Matrix<F> prefix = Matrix<F>::identity(k, v.dim(relation.target()));
    Matrix<F> term(k, sum.rows(), sum.cols());
    for (std::size_t j = 0; j < l; ++j) {
      term += prefix * z.at(arrows[j]) * suffix[l - 1 - j];
      prefix = prefix * v.arrow(arrows[j]);
    }
    sum += term.scaled(k.from_rational(t.coefficient));
  }
  return sum;
}

template <Field F>
bool is_cocycle(const Representation<F>& u, const Representation<F>& v, const ArrowBlock<F>& z) {
  for (const auto& r : u.presentation().relations()) {
    if (!cocycle_value(u, v, z, r).is_zero()) return false;
  }
  return true;
}

template <Field F>
std::size_t cocycle_ambient_dimension(const Representation<F>& u, const Representation<F>& v) {
  std::size_t total = 0;
  for (const auto& a : u.quiver().arrows()) total += v.dim(a.target) * u.dim(a.source);
  return total;
}

template <Field F>
std::vector<ArrowBlock<F>> cocycle_space_basis(const Representation<F>& u,
                                               const Representation<F>& v) {
  const F& k = u.field();
  const Quiver& q = u.quiver();
  const auto& rels = u.presentation().relations();
  const std::size_t ambient = cocycle_ambient_dimension(u, v);
  std::size_t equations = 0;
  for (const auto& r : rels) equations += v.dim(r.target()) * u.dim(r.source());

  Matrix<F> system(k, equations, ambient);
  std::size_t col = 0;
  ArrowBlock<F> unit = zero_block(u, v);
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    auto& block = unit.blocks[a];
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j, ++col) {
        block(i, j) = k.one();
        std::size_t row = 0;
        for (const auto& r : rels) {
          const auto value = cocycle_value(u, v, unit, r);
          for (const auto& x : value.data()) system(row++, col) = x;
        }
        block(i, j) = k.zero();
      }
    }
  }

  std::vector<ArrowBlock<F>> out;
  for (const auto& vec : kernel_basis(system)) {
    ArrowBlock<F> z = zero_block(u, v);
    std::size_t pos = 0;
    for (auto& block : z.blocks) {
      for (auto& x : block.data()) x = vec[pos++];
    }
    out.push_back(std::move(z));
  }
  return out;
}

template <Field F>
Extension<F> build_extension(const Representation<F>& u, const Representation<F>& v,
                             const ArrowBlock<F>& z) {
  const auto& rels = u.presentation().relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!cocycle_value(u, v, z, rels[i]).is_zero()) {
      throw ValidationError("Z is not a cocycle: relation " + std::to_string(i) + " (" +
                            format_relation(u.quiver(), rels[i]) + ") does not vanish");
    }
  }
  const F& k = u.field();
  const Quiver& q = u.quiver();
  std::vector<Matrix<F>> mats;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    Matrix<F> m(k, v.dim(arrow.target) + u.dim(arrow.target),
                v.dim(arrow.source) + u.dim(arrow.source));
    m.set_block(0, 0, v.arrow(a));
    m.set_block(0, v.dim(arrow.source), z.at(a));
    m.set_block(v.dim(arrow.target), v.dim(arrow.source), u.arrow(a));
    mats.push_back(std::move(m));
  }
  Representation<F> w(u.presentation_ptr(), k, v.dims() + u.dims(), std::move(mats));
  if (const auto bad = first_violated_relation(w)) {
    throw ValidationError("extension fails relation " +
                          format_relation(q, w.presentation().relations()[*bad]));
  }
  HomMorphism<F> mu, pi;
  for (VertexIndex x = 0; x < q.vertex_count(); ++x) {
    const std::size_t d = v.dim(x), e = u.dim(x);
    Matrix<F> inc(k, d + e, d);
    inc.set_block(0, 0, Matrix<F>::identity(k, d));
    Matrix<F> proj(k, e, d + e);
    proj.set_block(0, d, Matrix<F>::identity(k, e));
    mu.maps.push_back(std::move(inc));
    pi.maps.push_back(std::move(proj));
  }
  return {std::move(w), std::move(mu), std::move(pi)};
}

template <Field F>
Splitting<F> splitting_from_mono(const Representation<F>& v, const Representation<F>& w,
                                 const HomMorphism<F>& f,
                                 const std::optional<std::vector<Matrix<F>>>& h) {
  if (!is_monomorphism(v, w, f)) throw ValidationError("f is not a monomorphism");
  const Quiver& q = v.quiver();
  const std::size_t n = q.vertex_count();
  if (h && h->size() != n) throw ValidationError("complement has wrong number of vertices");

  BaseChange<F> g, g_inv;
  DimensionVector udims = w.dims() - v.dims();
  for (VertexIndex x = 0; x < n; ++x) {
    const Matrix<F> hx = h ? (*h)[x] : default_complement(f.maps[x]);
    if (hx.rows() != w.dim(x) || hx.cols() != udims[x]) {
      throw ValidationError("complement at vertex " + q.vertex_name(x) + " has shape " +
                            hx.shape());
    }
    Matrix<F> gx = f.maps[x].hstack(hx);
    auto inv = inverse(gx);
    if (!inv) throw ValidationError("[f, h] is singular at vertex " + q.vertex_name(x));
    g.maps.push_back(std::move(gx));
    g_inv.maps.push_back(std::move(*inv));
  }

  const Representation<F> normal = gl_action(g_inv, w);
  ArrowBlock<F> z;
  std::vector<Matrix<F>> umats;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    const std::size_t ds = v.dim(arrow.source), dt = v.dim(arrow.target);
    const std::size_t es = udims[arrow.source], et = udims[arrow.target];
    const auto& m = normal.arrow(a);
    if (!m.block(dt, 0, et, ds).is_zero() || !(m.block(0, 0, dt, ds) == v.arrow(a))) {
      throw ValidationError("image of f is not a subrepresentation");
    }
    z.blocks.push_back(m.block(0, ds, dt, es));
    umats.push_back(m.block(dt, ds, et, es));
  }
  Representation<F> u(v.presentation_ptr(), v.field(), std::move(udims), std::move(umats));
  return {std::move(g), std::move(z), std::move(u)};
}

template <Field F>
HomTriple<F> phi_map(const BaseChange<F>& g, const ExtensionTriple<F>& triple) {
  const auto ext = build_extension(triple.u, triple.v, triple.z);
  return {triple.v, gl_action(g, ext.w), compose(g, ext.mu)};
}

template <Field F>
ExtensionTriple<F> psi_map(const Representation<F>& v, const Representation<F>& w,
                           const HomMorphism<F>& f,
                           const std::optional<std::vector<Matrix<F>>>& h) {
  auto s = splitting_from_mono(v, w, f, h);
  return {std::move(s.u), v, std::move(s.z)};
}

#define QVL_INSTANTIATE_EXTENSION(F)                                                           \
  template ArrowBlock<F> zero_block<F>(const Representation<F>&, const Representation<F>&);    \
  template void check_block_shapes<F>(const Representation<F>&, const Representation<F>&,      \
                                      const ArrowBlock<F>&);                                   \
  template Matrix<F> cocycle_value<F>(const Representation<F>&, const Representation<F>&,      \
                                      const ArrowBlock<F>&, const Relation&);                  \
  template bool is_cocycle<F>(const Representation<F>&, const Representation<F>&,              \
                              const ArrowBlock<F>&);                                           \
  template std::size_t cocycle_ambient_dimension<F>(const Representation<F>&,                  \
                                                    const Representation<F>&);                 \
  template std::vector<ArrowBlock<F>> cocycle_space_basis<F>(const Representation<F>&,         \
                                                             const Representation<F>&);        \
  template Extension<F> build_extension<F>(const Representation<F>&, const Representation<F>&, \
                                           const ArrowBlock<F>&);                              \
  template Splitting<F> splitting_from_mono<F>(const Representation<F>&,                       \
                                               const Representation<F>&, const HomMorphism<F>&, \
                                               const std::optional<std::vector<Matrix<F>>>&);  \
  template HomTriple<F> phi_map<F>(const BaseChange<F>&, const ExtensionTriple<F>&);           \
  template ExtensionTriple<F> psi_map<F>(const Representation<F>&, const Representation<F>&,   \
                                         const HomMorphism<F>&,                                \
                                         const std::optional<std::vector<Matrix<F>>>&);

QVL_INSTANTIATE_EXTENSION(PrimeField)
QVL_INSTANTIATE_EXTENSION(RationalField)

}  // namespace qvl

#include "qvl/ideal.hpp"

#include <algorithm>

#include "qvl/errors.hpp"

namespace qvl {

PathBasis::PathBasis(const Quiver& quiver, std::size_t window) : window_(window) {
  if (window == 0) return;
  std::vector<Path> frontier;
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  for (std::size_t length = 0; length < window && !frontier.empty(); ++length) {
    paths_.insert(paths_.end(), frontier.begin(), frontier.end());
    if (length + 1 == window) break;
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (ArrowIndex a = 0; a < quiver.arrow_count(); ++a) {
        if (auto ap = concatenate(Path::from_arrows(quiver, {a}), p)) {
          next.push_back(std::move(*ap));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(paths_.begin(), paths_.end());
  for (std::size_t i = 0; i < paths_.size(); ++i) index_.emplace(paths_[i], i);
}

std::optional<std::size_t> PathBasis::index_of(const Path& path) const {
  const auto it = index_.find(path);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <Field F>
void reduce_against(const Matrix<F>& echelon, const std::vector<std::size_t>& pivots,
                    Vector<F>& v) {
  const F& k = echelon.field();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto factor = v[pivots[r]];
    if (k.is_zero(factor)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = k.sub(v[j], k.mul(factor, echelon(r, j)));
    }
  }
}

template <Field F>
bool is_zero_vector(const F& k, const Vector<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return k.is_zero(x); });
}

struct EndpointFilter {
  VertexIndex source;
  VertexIndex target;
};

// Rows spanning the products p * rho * q, optionally restricted to the
// products running from filter->source to filter->target.
template <Field F>
std::vector<Vector<F>> generator_rows(const Quiver& quiver,
                                      const std::vector<Relation>& relations,
                                      const PathBasis& basis, const F& field,
                                      Multipliers multipliers,
                                      std::optional<EndpointFilter> filter) {
  std::vector<Vector<F>> rows;
  const std::size_t window = basis.window();
  for (const auto& rho : relations) {
    std::size_t min_length = SIZE_MAX;
    for (const auto& t : rho.terms()) min_length = std::min(min_length, t.path.length());
    std::vector<typename F::Element> coeffs;
    for (const auto& t : rho.terms()) coeffs.push_back(field.from_rational(t.coefficient));
    for (const auto& p : basis.paths()) {
      if (p.source() != rho.target()) continue;
      if (filter && p.target() != filter->target) continue;
      for (const auto& q : basis.paths()) {
        if (q.target() != rho.source()) continue;
        if (filter && q.source() != filter->source) continue;
        if (multipliers == Multipliers::kNontrivial && p.is_trivial() && q.is_trivial()) {
          continue;
        }
        if (p.length() + q.length() + min_length >= window) continue;
        Vector<F> row(basis.size(), field.zero());
        bool nonzero = false;
        for (std::size_t i = 0; i < rho.terms().size(); ++i) {
          const auto& sigma = rho.terms()[i].path;
          if (p.length() + sigma.length() + q.length() >= window) continue;
          const auto path = concatenate(*concatenate(p, sigma), q);
          const auto idx = basis.index_of(*path);
          row[*idx] = field.add(row[*idx], coeffs[i]);
          nonzero = true;
        }
        if (nonzero && !is_zero_vector(field, row)) rows.push_back(std::move(row));
      }
    }
  }
  (void)quiver;
  return rows;
}

template <Field F>
Matrix<F> stack_rows(const F& field, const std::vector<Vector<F>>& rows, std::size_t cols) {
  Matrix<F> m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <Field F>
IdealSubspace<F> subspace_from_rows(PathBasis basis, const F& field,
                                    const std::vector<Vector<F>>& rows) {
  auto ech = row_reduce(stack_rows(field, rows, basis.size()));
  const std::size_t dim = ech.pivot_columns.size();
  Matrix<F> echelon = ech.reduced.block(0, 0, dim, basis.size());
  return IdealSubspace<F>(std::move(basis), std::move(echelon), std::move(ech.pivot_columns));
}

template <Field F>
std::size_t rank_of_rows(const F& field, const std::vector<Vector<F>>& rows, std::size_t cols) {
  return rank(stack_rows(field, rows, cols));
}

template <Field F>
bool generates_same_ideal(const Quiver& quiver, const std::vector<Relation>& lhs,
                          const std::vector<Relation>& rhs, std::size_t window,
                          const F& field) {
  const auto a = ideal_subspace(quiver, lhs, window, field);
  const auto b = ideal_subspace(quiver, rhs, window, field);
  return a.contains(b) && b.contains(a);
}

}  // namespace

template <Field F>
Vector<F> IdealSubspace<F>::coordinates(const AlgebraElement& e) const {
  const F& k = echelon_.field();
  Vector<F> v(basis_.size(), k.zero());
  for (const auto& [path, c] : e.terms()) {
    if (path.length() >= basis_.window()) continue;
    const auto idx = basis_.index_of(path);
    if (!idx) throw SemanticError("element refers to a path outside the quiver");
    v[*idx] = k.add(v[*idx], k.from_rational(c));
  }
  return v;
}

template <Field F>
bool IdealSubspace<F>::contains(const AlgebraElement& e) const {
  auto v = coordinates(e);
  reduce_against(echelon_, pivots_, v);
  return is_zero_vector(echelon_.field(), v);
}

template <Field F>
bool IdealSubspace<F>::contains(const IdealSubspace& other) const {
  if (other.basis_.window() != basis_.window() || other.basis_.size() != basis_.size()) {
    throw SemanticError("subspaces live in different truncated path algebras");
  }
  for (std::size_t r = 0; r < other.dimension(); ++r) {
    Vector<F> v(other.echelon_.data().begin() + r * basis_.size(),
                other.echelon_.data().begin() + (r + 1) * basis_.size());
    reduce_against(echelon_, pivots_, v);
    if (!is_zero_vector(echelon_.field(), v)) return false;
  }
  return true;
}

template <Field F>
std::vector<AlgebraElement> IdealSubspace<F>::basis_elements() const {
  std::vector<AlgebraElement> out;
  if constexpr (std::is_same_v<F, RationalField>) {
    for (std::size_t r = 0; r < dimension(); ++r) {
      AlgebraElement e;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (!echelon_.field().is_zero(echelon_(r, j))) {
          e = e + AlgebraElement::from_path(basis_.path(j), echelon_(r, j));
        }
      }
      out.push_back(std::move(e));
    }
  } else {
    // Lift residues to their integer representatives.
    for (std::size_t r = 0; r < dimension(); ++r) {
      AlgebraElement e;
      for (std::size_t j = 0; j < basis_.size(); ++j) {
        if (!echelon_.field().is_zero(echelon_(r, j))) {
          e = e + AlgebraElement::from_path(
                      basis_.path(j), Rational(static_cast<unsigned long>(echelon_(r, j))));
        }
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

template <Field F>
IdealSubspace<F> ideal_subspace(const Quiver& quiver, const std::vector<Relation>& relations,
                                std::size_t window, const F& field, Multipliers multipliers) {
  PathBasis basis(quiver, window);
  const auto rows = generator_rows(quiver, relations, basis, field, multipliers, std::nullopt);
  return subspace_from_rows(std::move(basis), field, rows);
}

template <Field F>
IdealSubspace<F> ideal_subspace(const BoundQuiverPresentation& pres, const F& field) {
  return ideal_subspace(pres.quiver(), pres.relations(), pres.truncation_bound(), field,
                        Multipliers::kAll);
}

template <Field F>
bool ideal_membership(const AlgebraElement& e, const BoundQuiverPresentation& pres,
                      const F& field) {
  return ideal_subspace(pres, field).contains(e);
}

template <Field F>
std::size_t loop_nilpotency_index(const BoundQuiverPresentation& pres, ArrowIndex loop,
                                  const F& field) {
  const Quiver& q = pres.quiver();
  if (loop >= q.arrow_count() || !q.is_loop(loop)) {
    throw SemanticError("loop_nilpotency_index expects a loop");
  }
  const std::size_t n = pres.truncation_bound();
  const auto ideal = ideal_subspace(q, pres.relations(), n + 1, field);
  for (std::size_t m = 1; m <= n; ++m) {
    if (ideal.contains(AlgebraElement::from_path(Path::power(q, loop, m)))) return m;
  }
  // Unreachable for a validated presentation: loop^N lies in I.
  throw ValidationError("no power of the loop lies in the ideal");
}

template <Field F>
bool is_minimal_relation_set(const std::vector<Relation>& relations,
                             const BoundQuiverPresentation& pres, const F& field) {
  const Quiver& q = pres.quiver();
  const std::size_t window = pres.truncation_bound() + 1;
  const auto ideal = ideal_subspace(q, pres.relations(), window, field);
  const auto generated = ideal_subspace(q, relations, window, field);
  if (!ideal.contains(generated) || !generated.contains(ideal)) {
    throw ValidationError("relation set does not generate the ideal of '" + pres.name() + "'");
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    auto rest = relations;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (ideal_subspace(q, rest, window, field).dimension() == generated.dimension()) {
      return false;
    }
  }
  return true;
}

template <Field F>
bool is_normalized(const std::vector<Relation>& relations, const BoundQuiverPresentation& pres,
                   const F& field) {
  if (!is_minimal_relation_set(relations, pres, field)) {
    throw ValidationError("relation set is not minimal");
  }
  const Quiver& q = pres.quiver();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (!q.is_loop(a)) continue;
    const Path power = Path::power(q, a, loop_nilpotency_index(pres, a, field));
    bool present = false;
    std::size_t containing = 0;
    for (const auto& r : relations) {
      if (r.is_monomial() && r.terms().front().path == power) present = true;
      const bool hit = std::any_of(r.terms().begin(), r.terms().end(), [&](const Term& t) {
        return t.path.contains_subpath(power);
      });
      if (hit) ++containing;
    }
    if (!present || containing != 1) return false;
  }
  return true;
}

template <Field F>
Ext2Dimension ext2_dimension(const BoundQuiverPresentation& pres,
                             const std::vector<Relation>& relations, VertexIndex x,
                             VertexIndex y, const F& field) {
  const Quiver& q = pres.quiver();
  if (x >= q.vertex_count() || y >= q.vertex_count()) {
    throw SemanticError("vertex out of range");
  }
  if (x == y) throw SemanticError("the relation count formula needs distinct vertices");
  if (!is_weakly_triangular(q)) throw ValidationError("quiver is not weakly triangular");
  const std::size_t window = pres.truncation_bound() + 1;
  if (!generates_same_ideal(q, relations, pres.relations(), window, field)) {
    throw ValidationError("relation set does not generate the ideal of '" + pres.name() + "'");
  }

  Ext2Dimension out;
  for (const auto& r : relations) {
    if (r.source() == x && r.target() == y) ++out.relation_count;
  }
  // J^{N+1} lies in IJ + JI, so the quotient is computed exactly in kQ/J^{N+1}.
  const PathBasis basis(q, window);
  const EndpointFilter filter{x, y};
  const auto ideal_rows =
      generator_rows(q, pres.relations(), basis, field, Multipliers::kAll, filter);
  const auto radical_rows =
      generator_rows(q, pres.relations(), basis, field, Multipliers::kNontrivial, filter);
  out.quotient_dimension = rank_of_rows(field, ideal_rows, basis.size()) -
                           rank_of_rows(field, radical_rows, basis.size());
  return out;
}

std::map<std::set<VertexIndex>, Relation> decompose_by_support(const Quiver& quiver,
                                                               const Relation& relation) {
  std::map<std::set<VertexIndex>, std::vector<Term>> groups;
  for (const auto& t : relation.terms()) groups[support(quiver, t.path)].push_back(t);
  std::map<std::set<VertexIndex>, Relation> out;
  for (auto& [support_set, terms] : groups) {
    out.emplace(support_set, Relation(quiver, std::move(terms)));
  }
  return out;
}

bool is_simple_loop_extension(const BoundQuiverPresentation& pres) {
  const Quiver& q = pres.quiver();
  for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
    if (q.loops_at(v).size() > 1) return false;
  }
  for (const auto& r : pres.relations()) {
    const VertexIndex v = r.source();
    for (const auto& t : r.terms()) {
      for (const auto a : t.path.arrows()) {
        const auto& arrow = q.arrow(a);
        if (!arrow.is_loop() || arrow.source != v) return false;
      }
    }
  }
  return true;
}

#define QVL_INSTANTIATE_IDEAL(F)                                                          \
  template class IdealSubspace<F>;                                                        \
  template IdealSubspace<F> ideal_subspace<F>(const Quiver&, const std::vector<Relation>&, \
                                              std::size_t, const F&, Multipliers);        \
  template IdealSubspace<F> ideal_subspace<F>(const BoundQuiverPresentation&, const F&);  \
  template bool ideal_membership<F>(const AlgebraElement&, const BoundQuiverPresentation&, \
                                    const F&);                                            \
  template std::size_t loop_nilpotency_index<F>(const BoundQuiverPresentation&,           \
                                                ArrowIndex, const F&);                    \
  template bool is_minimal_relation_set<F>(const std::vector<Relation>&,                  \
                                           const BoundQuiverPresentation&, const F&);     \
  template bool is_normalized<F>(const std::vector<Relation>&,                            \
                                 const BoundQuiverPresentation&, const F&);               \
  template Ext2Dimension ext2_dimension<F>(const BoundQuiverPresentation&,                \
                                           const std::vector<Relation>&, VertexIndex,     \
                                           VertexIndex, const F&);

QVL_INSTANTIATE_IDEAL(PrimeField)
QVL_INSTANTIATE_IDEAL(RationalField)

}  // namespace qvl

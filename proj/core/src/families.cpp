#include "qvl/families.hpp"

#include <algorithm>
#include <cctype>

#include "qvl/errors.hpp"

namespace qvl {

namespace {

constexpr ArrowIndex kE0 = 0;
constexpr ArrowIndex kE1 = 1;
constexpr ArrowIndex kA1 = 2;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

void require(bool ok, const FamilyDescriptor& desc, const std::string& what) {
  if (!ok) throw SemanticError(describe(desc) + ": " + what);
}

std::vector<ArrowIndex> repeated(ArrowIndex a, std::size_t times) {
  return std::vector<ArrowIndex>(times, a);
}

struct QuiverShape {
  Quiver quiver;
  std::optional<ArrowIndex> e0;
  std::optional<ArrowIndex> e1;
};

QuiverShape two_vertex_quiver(bool with_e0, bool with_e1, std::size_t n,
                              const std::string& first_arrow = "a") {
  std::vector<Arrow> arrows;
  QuiverShape shape;
  if (with_e0) {
    shape.e0 = arrows.size();
    arrows.push_back({"e0", 0, 0});
  }
  if (with_e1) {
    shape.e1 = arrows.size();
    arrows.push_back({"e1", 1, 1});
  }
  for (std::size_t i = 1; i <= n; ++i) arrows.push_back({first_arrow + std::to_string(i), 1, 0});
  shape.quiver = Quiver({"0", "1"}, std::move(arrows));
  return shape;
}

template <Field F>
void require_valid(const Representation<F>& m, const PresentationPtr& expected) {
  if (!same_algebra(m.presentation_ptr(), expected)) {
    throw SemanticError("representation belongs to '" + m.presentation().name() +
                        "', expected '" + expected->name() + "'");
  }
  if (const auto bad = first_violated_relation(m)) {
    throw ValidationError("representation violates relation " +
                          format_relation(m.quiver(), m.presentation().relations()[*bad]));
  }
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kA: return "A";
    case FamilyKind::kAprime: return "Aprime";
    case FamilyKind::kAprimeCommuting: return "AprimeCommuting";
    case FamilyKind::kLambda: return "Lambda";
    case FamilyKind::kB: return "B";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(const std::string& text) {
  const std::string t = lower(text);
  for (const auto k : {FamilyKind::kA, FamilyKind::kAprime, FamilyKind::kAprimeCommuting,
                       FamilyKind::kLambda, FamilyKind::kB}) {
    if (t == lower(to_string(k))) return k;
  }
  return std::nullopt;
}

FamilyDescriptor FamilyDescriptor::a(std::size_t n, std::size_t m, std::size_t l) {
  return {FamilyKind::kA, n, m, l, 1, 1};
}
FamilyDescriptor FamilyDescriptor::aprime(std::size_t n, std::size_t m0, std::size_t m1) {
  return {FamilyKind::kAprime, n, 2, 1, m0, m1};
}
FamilyDescriptor FamilyDescriptor::aprime_commuting(std::size_t m) {
  return {FamilyKind::kAprimeCommuting, 1, m, 1, 1, 1};
}
FamilyDescriptor FamilyDescriptor::lambda(std::size_t m) {
  return {FamilyKind::kLambda, 1, m, 1, 1, 1};
}
FamilyDescriptor FamilyDescriptor::b(std::size_t n, std::size_t m) {
  return {FamilyKind::kB, n, m, m >= 1 ? m - 1 : 0, 1, 1};
}

std::string describe(const FamilyDescriptor& d) {
  const auto s = [](std::size_t v) { return std::to_string(v); };
  switch (d.kind) {
    case FamilyKind::kA: return "A(" + s(d.n) + "," + s(d.m) + "," + s(d.l) + ")";
    case FamilyKind::kAprime: return "Aprime(" + s(d.n) + "," + s(d.m0) + "," + s(d.m1) + ")";
    case FamilyKind::kAprimeCommuting: return "AprimeCommuting(" + s(d.m) + ")";
    case FamilyKind::kLambda: return "Lambda(" + s(d.m) + ")";
    case FamilyKind::kB: return "B" + s(d.n) + "(" + s(d.m) + ")";
  }
  return "?";
}

void validate(const FamilyDescriptor& d) {
  switch (d.kind) {
    case FamilyKind::kA:
      require(d.n >= 1, d, "n must be at least 1");
      require(d.m >= 2, d, "m must be at least 2");
      require(d.l >= 1, d, "l must be at least 1");
      break;
    case FamilyKind::kAprime:
      require(d.m0 >= 1 && d.m1 >= 1, d, "m0 and m1 must be at least 1");
      break;
    case FamilyKind::kAprimeCommuting:
      require(d.m >= 2, d, "m must be at least 2");
      break;
    case FamilyKind::kLambda:
      require(d.m >= 1, d, "m must be at least 1");
      break;
    case FamilyKind::kB:
      require(d.n >= 1, d, "n must be at least 1");
      require(d.m >= 2, d, "m must be at least 2");
      break;
  }
}

Relation rho_relation(const Quiver& quiver, std::size_t l) {
  const auto e0 = quiver.find_arrow("e0");
  const auto e1 = quiver.find_arrow("e1");
  const auto a1 = quiver.find_arrow("a1");
  if (!e0 || !e1 || !a1) throw SemanticError("quiver lacks e0, e1 or a1");
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= l; ++i) {
    auto arrows = repeated(*e0, l - i);
    arrows.push_back(*a1);
    const auto tail = repeated(*e1, i);
    arrows.insert(arrows.end(), tail.begin(), tail.end());
    terms.push_back({Rational(1), Path::from_arrows(quiver, std::move(arrows))});
  }
  return Relation(quiver, std::move(terms));
}

PresentationPtr build_family(const FamilyDescriptor& d) {
  validate(d);
  const std::string name = describe(d);
  switch (d.kind) {
    case FamilyKind::kA:
    case FamilyKind::kB: {
      const std::size_t l = d.kind == FamilyKind::kB ? d.m - 1 : d.l;
      auto shape = two_vertex_quiver(true, true, d.n);
      std::vector<Relation> rels{Relation::monomial(shape.quiver, Path::power(shape.quiver, *shape.e0, d.m)),
                                 Relation::monomial(shape.quiver, Path::power(shape.quiver, *shape.e1, d.m)),
                                 rho_relation(shape.quiver, l)};
      return make_presentation(name, std::move(shape.quiver), std::move(rels));
    }
    case FamilyKind::kAprime: {
      auto shape = two_vertex_quiver(d.m0 >= 2, d.m1 >= 2, d.n);
      std::vector<Relation> rels;
      if (shape.e0) {
        rels.push_back(Relation::monomial(shape.quiver, Path::power(shape.quiver, *shape.e0, d.m0)));
      }
      if (shape.e1) {
        rels.push_back(Relation::monomial(shape.quiver, Path::power(shape.quiver, *shape.e1, d.m1)));
      }
      return make_presentation(name, std::move(shape.quiver), std::move(rels));
    }
    case FamilyKind::kAprimeCommuting: {
      auto shape = two_vertex_quiver(true, true, 1);
      const Quiver& q = shape.quiver;
      std::vector<Relation> rels{
          Relation::monomial(q, Path::power(q, kE0, d.m)),
          Relation::monomial(q, Path::power(q, kE1, d.m)),
          Relation(q, {{Rational(1), Path::from_arrows(q, {kE0, kA1})},
                       {Rational(-1), Path::from_arrows(q, {kA1, kE1})}})};
      return make_presentation(name, std::move(shape.quiver), std::move(rels));
    }
    case FamilyKind::kLambda: {
      if (d.m == 1) return make_presentation(name, Quiver({"0"}, {}), {});
      Quiver q({"0"}, {{"e", 0, 0}});
      std::vector<Relation> rels{Relation::monomial(q, Path::power(q, 0, d.m))};
      return make_presentation(name, std::move(q), std::move(rels));
    }
  }
  throw SemanticError("unknown family");
}

bool is_geometrically_irreducible_family(const FamilyDescriptor& d) {
  validate(d);
  switch (d.kind) {
    case FamilyKind::kA:
      if (d.l == 1 || d.l + 1 == d.m || d.l + 1 >= 2 * d.m) return true;
      if (d.l >= d.m) {
        throw SemanticError(describe(d) +
                            " is not one of the classified forms (needs l < m or l >= 2m - 1)");
      }
      return false;
    case FamilyKind::kAprime:
    case FamilyKind::kAprimeCommuting:
    case FamilyKind::kB:
      return true;
    case FamilyKind::kLambda:
      throw SemanticError(describe(d) + " has one simple; the classification covers two");
  }
  return false;
}

CommutingTwist::CommutingTwist(std::size_t m)
    : source_(build_family(FamilyDescriptor::aprime_commuting(m))),
      target_(build_family(FamilyDescriptor::a(1, m, 1))) {}

template <Field F>
Representation<F> CommutingTwist::forward(const Representation<F>& m) const {
  require_valid(m, source_);
  auto mats = m.matrices();
  mats[kE1] = -mats[kE1];
  return Representation<F>(target_, m.field(), m.dims(), std::move(mats));
}

template <Field F>
Representation<F> CommutingTwist::backward(const Representation<F>& m) const {
  require_valid(m, target_);
  auto mats = m.matrices();
  mats[kE1] = -mats[kE1];
  return Representation<F>(source_, m.field(), m.dims(), std::move(mats));
}

HomCorrespondence::HomCorrespondence(std::size_t m)
    : algebra_(build_family(FamilyDescriptor::aprime_commuting(m))),
      lambda_(build_family(FamilyDescriptor::lambda(m))) {}

template <Field F>
HomTriple<F> HomCorrespondence::forward(const Representation<F>& m) const {
  require_valid(m, algebra_);
  const F& k = m.field();
  Representation<F> v(lambda_, k, {m.dim(1)}, {m.arrow(kE1)});
  Representation<F> w(lambda_, k, {m.dim(0)}, {m.arrow(kE0)});
  return {std::move(v), std::move(w), HomMorphism<F>{{m.arrow(kA1)}}};
}

template <Field F>
Representation<F> HomCorrespondence::backward(const HomTriple<F>& t) const {
  require_valid(t.source, lambda_);
  require_valid(t.target, lambda_);
  if (!is_homomorphism(t.source, t.target, t.map)) {
    throw ValidationError("triple is not a homomorphism");
  }
  return Representation<F>(algebra_, t.source.field(), {t.target.dim(0), t.source.dim(0)},
                           {t.target.arrow(0), t.source.arrow(0), t.map.at(0)});
}

ExtCorrespondence::ExtCorrespondence(std::size_t m)
    : algebra_(build_family(FamilyDescriptor::b(1, m))),
      lambda_(build_family(FamilyDescriptor::lambda(m))) {}

template <Field F>
ExtensionTriple<F> ExtCorrespondence::forward(const Representation<F>& m) const {
  require_valid(m, algebra_);
  const F& k = m.field();
  Representation<F> u(lambda_, k, {m.dim(1)}, {m.arrow(kE1)});
  Representation<F> v(lambda_, k, {m.dim(0)}, {m.arrow(kE0)});
  return {std::move(u), std::move(v), ArrowBlock<F>{{m.arrow(kA1)}}};
}

template <Field F>
Representation<F> ExtCorrespondence::backward(const ExtensionTriple<F>& t) const {
  require_valid(t.u, lambda_);
  require_valid(t.v, lambda_);
  if (!is_cocycle(t.u, t.v, t.z)) throw ValidationError("Z is not a cocycle");
  return Representation<F>(algebra_, t.u.field(), {t.v.dim(0), t.u.dim(0)},
                           {t.v.arrow(0), t.u.arrow(0), t.z.at(0)});
}

ProductSplit::ProductSplit(std::size_t n, std::size_t m)
    : n_(n),
      algebra_(build_family(FamilyDescriptor::b(n, m))),
      base_(build_family(FamilyDescriptor::b(1, m))) {}

template <Field F>
std::pair<Representation<F>, std::vector<Matrix<F>>> ProductSplit::forward(
    const Representation<F>& m) const {
  require_valid(m, algebra_);
  const auto& mats = m.matrices();
  std::vector<Matrix<F>> head(mats.begin(), mats.begin() + 3);
  std::vector<Matrix<F>> free(mats.begin() + 3, mats.end());
  return {Representation<F>(base_, m.field(), m.dims(), std::move(head)), std::move(free)};
}

template <Field F>
Representation<F> ProductSplit::backward(const Representation<F>& base,
                                         const std::vector<Matrix<F>>& free) const {
  require_valid(base, base_);
  if (free.size() + 1 != n_) {
    throw SemanticError("expected " + std::to_string(n_ - 1) + " free matrices");
  }
  auto mats = base.matrices();
  mats.insert(mats.end(), free.begin(), free.end());
  return Representation<F>(algebra_, base.field(), base.dims(), std::move(mats));
}

#define QVL_INSTANTIATE_FAMILIES(F)                                                          \
  template Representation<F> CommutingTwist::forward<F>(const Representation<F>&) const;     \
  template Representation<F> CommutingTwist::backward<F>(const Representation<F>&) const;    \
  template HomTriple<F> HomCorrespondence::forward<F>(const Representation<F>&) const;       \
  template Representation<F> HomCorrespondence::backward<F>(const HomTriple<F>&) const;      \
  template ExtensionTriple<F> ExtCorrespondence::forward<F>(const Representation<F>&) const; \
  template Representation<F> ExtCorrespondence::backward<F>(const ExtensionTriple<F>&) const; \
  template std::pair<Representation<F>, std::vector<Matrix<F>>> ProductSplit::forward<F>(    \
      const Representation<F>&) const;                                                       \
  template Representation<F> ProductSplit::backward<F>(const Representation<F>&,             \
                                                       const std::vector<Matrix<F>>&) const;

QVL_INSTANTIATE_FAMILIES(PrimeField)
QVL_INSTANTIATE_FAMILIES(RationalField)

}  // namespace qvl

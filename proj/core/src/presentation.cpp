#include "qvl/presentation.hpp"

#include <algorithm>

#include "qvl/errors.hpp"
#include "qvl/ideal.hpp"

namespace qvl {

std::optional<std::size_t> derive_truncation_bound(const Quiver& quiver,
                                                   const std::vector<Relation>& relations) {
  const auto longest = longest_loop_free_path(quiver);
  if (!longest) return std::nullopt;
  std::size_t bound = *longest + 1;
  for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
    const auto loops = quiver.loops_at(v);
    if (loops.empty()) continue;
    if (loops.size() > 1) return std::nullopt;
    std::optional<std::size_t> exponent;
    for (const auto& r : relations) {
      if (!r.is_monomial()) continue;
      const auto arrows = r.terms().front().path.arrows();
      const bool pure = std::all_of(arrows.begin(), arrows.end(),
                                    [&](ArrowIndex a) { return a == loops.front(); });
      if (pure && (!exponent || arrows.size() < *exponent)) exponent = arrows.size();
    }
    if (!exponent) return std::nullopt;
    bound += *exponent - 1;
  }
  return bound;
}

BoundQuiverPresentation::BoundQuiverPresentation(std::string name, Quiver quiver,
                                                 std::vector<Relation> relations,
                                                 std::optional<std::size_t> truncation_bound)
    : name_(std::move(name)), quiver_(std::move(quiver)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    for (const auto& t : r.terms()) {
      for (const auto a : t.path.arrows()) {
        if (a >= quiver_.arrow_count()) {
          throw SemanticError("relation refers to an arrow outside the quiver");
        }
      }
    }
  }
  if (truncation_bound) {
    if (*truncation_bound == 0) throw SemanticError("truncation bound must be positive");
    bound_ = *truncation_bound;
    bound_explicit_ = true;
  } else {
    const auto derived = derive_truncation_bound(quiver_, relations_);
    if (!derived) {
      throw SemanticError("presentation '" + name_ +
                          "' needs an explicit truncation bound");
    }
    bound_ = *derived;
  }
  // Paths of length N must lie in I; checked modulo J^{N+1}.
  const auto ideal =
      ideal_subspace(quiver_, relations_, bound_ + 1, RationalField{}, Multipliers::kAll);
  for (const auto& p : ideal.path_basis().paths()) {
    if (p.length() != bound_) continue;
    if (!ideal.contains(AlgebraElement::from_path(p))) {
      throw SemanticError("truncation bound " + std::to_string(bound_) +
                          " is invalid: path '" + format_path(quiver_, p) +
                          "' is not in the ideal");
    }
  }
}

PresentationPtr make_presentation(std::string name, Quiver quiver,
                                  std::vector<Relation> relations,
                                  std::optional<std::size_t> truncation_bound) {
  return std::make_shared<const BoundQuiverPresentation>(
      std::move(name), std::move(quiver), std::move(relations), truncation_bound);
}

bool same_algebra(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

AlgebraElement AlgebraElement::from_path(const Path& path, const Rational& coefficient) {
  AlgebraElement e;
  e.add_term(path, coefficient);
  return e;
}

AlgebraElement AlgebraElement::from_relation(const Relation& relation) {
  AlgebraElement e;
  for (const auto& t : relation.terms()) e.add_term(t.path, t.coefficient);
  return e;
}

void AlgebraElement::add_term(const Path& path, const Rational& coefficient) {
  auto [it, inserted] = terms_.try_emplace(path, 0);
  it->second += coefficient;
  if (sgn(it->second) == 0) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  AlgebraElement out = *this;
  for (const auto& [p, c] : other.terms_) out.add_term(p, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return *this + other.scaled(-1);
}

AlgebraElement AlgebraElement::scaled(const Rational& factor) const {
  AlgebraElement out;
  if (sgn(factor) == 0) return out;
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * factor);
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  AlgebraElement out;
  for (const auto& [p, c] : terms_) {
    for (const auto& [q, d] : other.terms_) {
      if (auto pq = concatenate(p, q)) out.add_term(*pq, c * d);
    }
  }
  return out;
}

AlgebraElement AlgebraElement::truncated(std::size_t window) const {
  AlgebraElement out;
  for (const auto& [p, c] : terms_) {
    if (p.length() < window) out.terms_.emplace(p, c);
  }
  return out;
}

std::string format_element(const Quiver& quiver, const AlgebraElement& element) {
  if (element.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : element.terms()) {
    Rational a = c;
    if (out.empty()) {
      if (sgn(a) < 0) out += "-";
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
    }
    a = abs(a);
    if (a != 1) out += to_string(a) + "*";
    out += format_path(quiver, p);
  }
  return out;
}

}  // namespace qvl

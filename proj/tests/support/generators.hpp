#pragma once

// Seeded random matrices, valid representations and cocycles for the named
// two-vertex families and Lambda(m).

#include <algorithm>
#include <random>

#include "qvl/qvl.hpp"

namespace qvl::testing {

using Rng = std::mt19937_64;

inline PrimeField::Element random_element(const PrimeField& k, Rng& rng) {
  return static_cast<PrimeField::Element>(
      std::uniform_int_distribution<std::uint32_t>(0, k.order() - 1)(rng));
}

inline Rational random_element(const RationalField&, Rng& rng) {
  const long num = std::uniform_int_distribution<long>(-4, 4)(rng);
  const long den = std::uniform_int_distribution<long>(1, 3)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

template <Field F>
Matrix<F> random_matrix(const F& k, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix<F> m(k, rows, cols);
  for (auto& x : m.data()) x = random_element(k, rng);
  return m;
}

template <Field F>
Matrix<F> random_invertible(const F& k, std::size_t n, Rng& rng) {
  for (;;) {
    auto m = random_matrix(k, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

/// A random nilpotent d x d matrix N with N^m = 0: strictly upper
/// triangular Jordan-type blocks of size <= m, conjugated at random.
template <Field F>
Matrix<F> random_nilpotent(const F& k, std::size_t d, std::size_t m, Rng& rng) {
  Matrix<F> n(k, d, d);
  std::size_t start = 0;
  while (start < d) {
    const std::size_t size =
        std::uniform_int_distribution<std::size_t>(1, std::min(m, d - start))(rng);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) n(start + i, start + j) = random_element(k, rng);
    }
    start += size;
  }
  if (d == 0) return n;
  const auto g = random_invertible(k, d, rng);
  return g * n * *inverse(g);
}

/// Loops get random nilpotent matrices of index at most their nilpotency
/// index; the remaining arrows are a random solution of the (then linear)
/// relations. Every relation term must contain at most one non-loop arrow.
template <Field F>
Representation<F> random_valid_representation(const PresentationPtr& pres, const F& k,
                                              const DimensionVector& dims, Rng& rng) {
  const Quiver& q = pres->quiver();
  std::vector<Matrix<F>> mats;
  std::vector<ArrowIndex> free;
  std::size_t unknowns = 0;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    if (arrow.is_loop()) {
      std::size_t m = 0;
      for (const auto& rel : pres->relations()) {
        const auto arrows = rel.terms().front().path.arrows();
        if (rel.is_monomial() && std::all_of(arrows.begin(), arrows.end(),
                                             [&](ArrowIndex b) { return b == a; })) {
          m = arrows.size();
        }
      }
      if (m == 0) m = loop_nilpotency_index(*pres, a);
      mats.push_back(random_nilpotent(k, dims[arrow.source], m, rng));
    } else {
      mats.emplace_back(k, dims[arrow.target], dims[arrow.source]);
      free.push_back(a);
      unknowns += dims[arrow.target] * dims[arrow.source];
    }
  }
  auto evaluate = [&](const std::vector<Matrix<F>>& candidate) {
    const Representation<F> r(pres, k, dims, candidate);
    Vector<F> out;
    for (const auto& rel : pres->relations()) {
      const auto value = evaluate_relation(r, rel);
      out.insert(out.end(), value.data().begin(), value.data().end());
    }
    return out;
  };
  const auto base = evaluate(mats);
  Matrix<F> system(k, base.size(), unknowns);
  std::size_t col = 0;
  for (const ArrowIndex a : free) {
    for (std::size_t e = 0; e < mats[a].data().size(); ++e, ++col) {
      auto probe = mats;
      probe[a].data()[e] = k.one();
      const auto value = evaluate(probe);
      for (std::size_t r = 0; r < value.size(); ++r) system(r, col) = k.sub(value[r], base[r]);
    }
  }
  Vector<F> x(unknowns, k.zero());
  for (const auto& v : kernel_basis(system)) {
    const auto c = random_element(k, rng);
    for (std::size_t i = 0; i < unknowns; ++i) x[i] = k.add(x[i], k.mul(c, v[i]));
  }
  col = 0;
  for (const ArrowIndex a : free) {
    for (auto& entry : mats[a].data()) entry = x[col++];
  }
  return Representation<F>(pres, k, dims, std::move(mats));
}

template <Field F>
ArrowBlock<F> random_cocycle(const Representation<F>& u, const Representation<F>& v, Rng& rng) {
  const F& k = u.field();
  auto z = zero_block(u, v);
  for (const auto& b : cocycle_space_basis(u, v)) {
    const auto c = random_element(k, rng);
    for (std::size_t a = 0; a < z.blocks.size(); ++a) z.blocks[a] += b.at(a).scaled(c);
  }
  return z;
}

template <Field F>
BaseChange<F> random_base_change(const F& k, const DimensionVector& dims, Rng& rng) {
  BaseChange<F> g;
  for (const auto d : dims) g.maps.push_back(random_invertible(k, d, rng));
  return g;
}

inline DimensionVector random_dims(std::size_t vertices, std::size_t max, Rng& rng) {
  DimensionVector d(vertices);
  for (auto& x : d) x = std::uniform_int_distribution<std::size_t>(0, max)(rng);
  return d;
}

/// A mix of every family kind with small parameters.
inline FamilyDescriptor random_family(Rng& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  switch (pick(0, 4)) {
    case 0: {
      const auto m = pick(2, 4);
      return FamilyDescriptor::a(pick(1, 2), m, pick(1, 2 * m));
    }
    case 1:
      return FamilyDescriptor::aprime(pick(0, 2), pick(1, 3), pick(1, 3));
    case 2:
      return FamilyDescriptor::aprime_commuting(pick(2, 3));
    case 3:
      return FamilyDescriptor::lambda(pick(1, 4));
    default:
      return FamilyDescriptor::b(pick(1, 2), pick(2, 3));
  }
}

}  // namespace qvl::testing

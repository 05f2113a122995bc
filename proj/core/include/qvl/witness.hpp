#pragma once

// Exact point-count identities and reducibility witnesses over F_q.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qvl/enumeration.hpp"
#include "qvl/families.hpp"

namespace qvl {

/// The hom variety of Aprime(n,2,2) for d = (1,1), e = (0,1), next to the
/// set {(b, a_1..a_n) : a_i b = 0}.
struct HomCensus {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;            // points of the set
  std::uint64_t count_b0 = 0;         // points with b = 0
  std::uint64_t count_a0 = 0;         // points with a = 0
  std::uint64_t count_both = 0;       // b = 0 and a = 0
  std::uint64_t expected = 0;         // q^n + q - 1
  std::uint64_t hom_points = 0;       // points of H enumerated directly
  bool union_of_components = false;   // set = {b = 0} u {a = 0}
  bool bijection = false;             // H -> set is injective and lands in the set
  bool ok() const noexcept {
    return total == expected && union_of_components && bijection && hom_points == total;
  }
};

HomCensus hom_counterexample_census(std::size_t n, std::uint32_t q,
                                    const EnumerationOptions& options = {});

/// The coordinates of one point of M_B((1,1),(1,l)): lambda, mu_i at the
/// small module, U and V_i of the large module, the column W of f.
struct MonoPoint {
  PrimeField::Element lambda;
  std::vector<PrimeField::Element> mu;
  Matrix<PrimeField> u;
  std::vector<Matrix<PrimeField>> v;
  Matrix<PrimeField> w;
};

struct WitnessReport {
  std::size_t m = 0;
  std::size_t l = 0;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::string algebra;
  std::uint64_t total = 0;
  std::uint64_t in_u1 = 0;  // rk U = l - 1
  std::uint64_t in_u2 = 0;  // mu_1 != 0
  std::uint64_t in_both = 0;
  /// Every point satisfies V_1 U^{l-1} = 0, U^l = 0, lambda mu_i = V_i W,
  /// U W = 0 with lambda, W nonzero.
  bool equations_hold = true;
  /// Im U^{l-1} in Ker V_1 and Im W in Ker U at every point, and at points
  /// with rk U = l - 1 also Ker U = Im U^{l-1} and mu_1 = 0.
  bool implications_hold = true;
  std::optional<MonoPoint> sample_u1;
  std::optional<MonoPoint> sample_u2;

  bool reducible() const noexcept {
    return in_u1 > 0 && in_u2 > 0 && in_both == 0 && equations_hold && implications_hold;
  }
};

/// B = A(n,m,1) for l = 2, B = A(n,m,m-1) for l = m. Throws SemanticError
/// for any other l.
WitnessReport mono_reducibility_witness(std::size_t m, std::size_t l, std::size_t n,
                                        std::uint32_t q, const EnumerationOptions& options = {});

struct ProductCheck {
  std::uint64_t count_bn = 0;
  std::uint64_t count_b1 = 0;
  std::uint64_t factor = 0;  // q^{(n-1) d e}
  bool holds() const noexcept { return count_bn == count_b1 * factor; }
};

/// #rep_{B_n}((d,e)) against #rep_{B_1}((d,e)) * q^{(n-1)de}.
ProductCheck product_count_check(std::size_t n, std::size_t m, std::size_t d, std::size_t e,
                                 std::uint32_t q, const EnumerationOptions& options = {});

struct ProbeEntry {
  std::uint32_t q = 0;
  std::uint64_t count = 0;
  Rational coefficient;  // count / q^D
};

/// Fits counts to c q^D. D is the nearest integer to log_q(count) at the
/// largest q. Evidence about dimension and top-dimensional components only.
struct ProbeReport {
  std::size_t dimension = 0;
  std::vector<ProbeEntry> entries;
  /// The coefficients agree for all q.
  bool stable = false;
};

ProbeReport leading_coefficient_probe(const std::function<std::uint64_t(std::uint32_t)>& counter,
                                      std::vector<std::uint32_t> qs);

}  // namespace qvl

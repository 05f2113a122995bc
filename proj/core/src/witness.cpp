#include "qvl/witness.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qvl/errors.hpp"

namespace qvl {

namespace {

using Element = PrimeField::Element;

std::uint64_t ipow(std::uint64_t base, std::uint64_t exponent) {
  const auto p = checked_power(base, exponent);
  if (!p) throw BudgetExceeded("power overflows 64 bits");
  return *p;
}

}  // namespace

HomCensus hom_counterexample_census(std::size_t n, std::uint32_t q,
                                    const EnumerationOptions& options) {
  const PrimeField k(q);
  HomCensus census;
  census.n = n;
  census.q = q;
  census.expected = ipow(q, n) + q - 1;

  const auto in_set = [](std::span<const Element> p) {
    return p[0] == 0 || std::all_of(p.begin() + 1, p.end(), [](Element a) { return a == 0; });
  };
  // The defining equations a_i b = 0, checked literally.
  const auto satisfies = [&](std::span<const Element> p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (k.mul(p[i], p[0]) != 0) return false;
    }
    return true;
  };

  census.union_of_components = true;
  for_each_point(n + 1, k, options, [&](std::span<const Element> p) {
    const bool member = satisfies(p);
    const bool b0 = p[0] == 0;
    const bool a0 = std::all_of(p.begin() + 1, p.end(), [](Element a) { return a == 0; });
    if (member) ++census.total;
    if (b0) ++census.count_b0;
    if (a0) ++census.count_a0;
    if (b0 && a0) ++census.count_both;
    if (member != in_set(p)) census.union_of_components = false;
    return true;
  });

  const auto pres = build_family(FamilyDescriptor::aprime(n, 2, 2));
  std::set<std::vector<Element>> seen;
  bool lands = true;
  for_each_hom_triple(pres, k, {0, 1}, {1, 1}, options, [&](const HomTriple<PrimeField>& t) {
    std::vector<Element> point{t.map.at(1)(0, 0)};
    for (std::size_t i = 1; i <= n; ++i) point.push_back(t.target.arrow(1 + i)(0, 0));
    if (!satisfies(point)) lands = false;
    seen.insert(std::move(point));
    ++census.hom_points;
    return true;
  });
  census.bijection = lands && seen.size() == census.hom_points && seen.size() == census.total;
  return census;
}

WitnessReport mono_reducibility_witness(std::size_t m, std::size_t l, std::size_t n,
                                        std::uint32_t q, const EnumerationOptions& options) {
  if (m < 2) throw SemanticError("m must be at least 2");
  if (n < 1) throw SemanticError("n must be at least 1");
  if (l != 2 && l != m) throw SemanticError("l must be 2 or m");
  const PrimeField k(q);
  const auto desc = l == 2 ? FamilyDescriptor::a(n, m, 1) : FamilyDescriptor::a(n, m, m - 1);
  const auto pres = build_family(desc);

  WitnessReport report;
  report.m = m;
  report.l = l;
  report.n = n;
  report.q = q;
  report.algebra = describe(desc);

  for_each_mono_triple(pres, k, {1, 1}, {1, l}, options, [&](const HomTriple<PrimeField>& t) {
    MonoPoint p{t.map.at(0)(0, 0), {}, t.target.arrow(1), {}, t.map.at(1)};
    for (std::size_t i = 1; i <= n; ++i) {
      p.mu.push_back(t.source.arrow(1 + i)(0, 0));
      p.v.push_back(t.target.arrow(1 + i));
    }
    ++report.total;

    const auto top = p.u.power(l - 1);
    bool eq = (p.v[0] * top).is_zero() && p.u.power(l).is_zero() && (p.u * p.w).is_zero() &&
              p.lambda != 0 && !p.w.is_zero();
    for (std::size_t i = 0; i < n; ++i) {
      eq = eq && (p.v[i] * p.w)(0, 0) == k.mul(p.lambda, p.mu[i]);
    }
    if (!eq) report.equations_hold = false;

    const std::size_t rk = rank(p.u);
    const bool u1 = rk + 1 == l;
    const bool u2 = p.mu[0] != 0;
    if (!(p.v[0] * top).is_zero() || !(p.u * p.w).is_zero()) report.implications_hold = false;
    if (u1) {
      const bool kernel_is_image = (p.u * top).is_zero() && rank(top) == l - rk;
      if (!kernel_is_image || p.mu[0] != 0) report.implications_hold = false;
    }
    if (u1) {
      ++report.in_u1;
      if (!report.sample_u1) report.sample_u1 = p;
    }
    if (u2) {
      ++report.in_u2;
      if (!report.sample_u2) report.sample_u2 = p;
    }
    if (u1 && u2) ++report.in_both;
    return true;
  });
  return report;
}

ProductCheck product_count_check(std::size_t n, std::size_t m, std::size_t d, std::size_t e,
                                 std::uint32_t q, const EnumerationOptions& options) {
  const PrimeField k(q);
  ProductCheck check;
  check.count_bn =
      RepresentationEnumerator(build_family(FamilyDescriptor::b(n, m)), k, {d, e}, options).count();
  check.count_b1 =
      RepresentationEnumerator(build_family(FamilyDescriptor::b(1, m)), k, {d, e}, options).count();
  check.factor = ipow(q, (n - 1) * d * e);
  return check;
}

ProbeReport leading_coefficient_probe(const std::function<std::uint64_t(std::uint32_t)>& counter,
                                      std::vector<std::uint32_t> qs) {
  if (qs.empty()) throw SemanticError("probe needs at least one field size");
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  ProbeReport report;
  std::vector<std::uint64_t> counts;
  for (const auto q : qs) counts.push_back(counter(q));
  const std::uint64_t top = counts.back();
  if (top > 0) {
    const double d = std::log(static_cast<double>(top)) / std::log(static_cast<double>(qs.back()));
    report.dimension = static_cast<std::size_t>(std::max(0.0, std::round(d)));
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), qs[i], report.dimension);
    Rational c(mpz_class(std::to_string(counts[i])), denom);
    c.canonicalize();
    report.entries.push_back({qs[i], counts[i], c});
  }
  report.stable = std::all_of(report.entries.begin(), report.entries.end(), [&](const auto& e) {
    return e.coefficient == report.entries.front().coefficient;
  });
  return report;
}

}  // namespace qvl

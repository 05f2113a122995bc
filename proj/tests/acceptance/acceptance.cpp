// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (capped at 1).

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/generators.hpp"
#include "qvl/qvl.hpp"

namespace {

using namespace qvl;
using qvl::testing::Rng;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

// criterion 1
template <Field F>
Matrix<F> power_sum(const Matrix<F>& v, const Matrix<F>& z, const Matrix<F>& u, std::size_t m) {
  Matrix<F> out(v.field(), z.rows(), z.cols());
  for (std::size_t i = 0; i < m; ++i) out += v.power(m - 1 - i) * z * u.power(i);
  return out;
}

template <Field F>
void cocycle_closed_form_trials(const F& k, std::size_t trials, Rng& rng, Check& c) {
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto pres = build_family(FamilyDescriptor::lambda(m));
    const Relation eps_m = Relation::monomial(pres->quiver(), Path::power(pres->quiver(), 0, m));
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      const std::size_t e = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
      const Representation<F> v(pres, k, {d}, {testing::random_matrix(k, d, d, rng)});
      const Representation<F> u(pres, k, {e}, {testing::random_matrix(k, e, e, rng)});
      const ArrowBlock<F> z{{testing::random_matrix(k, d, e, rng)}};
      c.require(cocycle_value(u, v, z, eps_m) == power_sum(v.arrow(0), z.at(0), u.arrow(0), m),
                "closed form mismatch at m=" + std::to_string(m));
    }
  }
}

Check cocycle_closed_form() {
  Check c;
  Rng rng(0x5eed0001);
  cocycle_closed_form_trials(PrimeField(5), 100, rng, c);
  cocycle_closed_form_trials(RationalField{}, 20, rng, c);
  c.detail << "3 x (100 over F_5 + 20 over Q)";
  return c;
}

const std::vector<std::pair<std::size_t, std::size_t>> kGrid{{1, 1}, {2, 1}, {1, 2}, {2, 2}};

// criterion 2
Check hom_correspondence() {
  Check c;
  const std::size_t m = 2;
  const HomCorrespondence corr(m);
  for (const std::uint32_t q : {2u, 3u}) {
    const PrimeField k(q);
    for (const auto& [d, e] : kGrid) {
      std::uint64_t reps = 0, triples = 0;
      RepresentationEnumerator(corr.algebra(), k, {d, e}).for_each([&](const auto& point) {
        ++reps;
        const auto t = corr.forward(point);
        c.require(corr.backward(t) == point, "backward o forward != id");
        return c.ok;
      });
      for_each_hom_triple(corr.lambda(), k, {e}, {d}, {}, [&](const HomTriple<PrimeField>& t) {
        ++triples;
        c.require(corr.forward(corr.backward(t)) == t, "forward o backward != id");
        return c.ok;
      });
      c.require(reps == triples, "count mismatch at (" + std::to_string(d) + "," +
                                     std::to_string(e) + "), q=" + std::to_string(q));
      if (q == 3 && d == 2 && e == 2) c.detail << "#rep((2,2))(F_3) = #H = " << reps;
    }
  }
  return c;
}

// criterion 3
Check ext_correspondence() {
  Check c;
  const std::size_t m = 2;
  const ExtCorrespondence corr(m);
  for (const std::uint32_t q : {2u, 3u}) {
    const PrimeField k(q);
    for (const auto& [d, e] : kGrid) {
      std::uint64_t reps = 0, triples = 0;
      RepresentationEnumerator(corr.algebra(), k, {d, e}).for_each([&](const auto& point) {
        ++reps;
        c.require(corr.backward(corr.forward(point)) == point, "backward o forward != id");
        return c.ok;
      });
      for_each_ext_triple(corr.lambda(), k, {e}, {d}, {}, [&](const ExtensionTriple<PrimeField>& t) {
        ++triples;
        c.require(corr.forward(corr.backward(t)) == t, "forward o backward != id");
        return c.ok;
      });
      c.require(reps == triples, "count mismatch at (" + std::to_string(d) + "," +
                                     std::to_string(e) + "), q=" + std::to_string(q));
      if (q == 3 && d == 2 && e == 2) c.detail << "#rep_B1((2,2))(F_3) = #E = " << reps;
    }
  }
  return c;
}

// criterion 4
template <Field F>
void extension_round_trip(const FamilyDescriptor& desc, const F& k, Rng& rng, Check& c) {
  const auto pres = build_family(desc);
  const std::size_t nv = pres->quiver().vertex_count();
  const auto u = testing::random_valid_representation(pres, k, testing::random_dims(nv, 2, rng), rng);
  const auto v = testing::random_valid_representation(pres, k, testing::random_dims(nv, 2, rng), rng);
  const std::string where = " in " + describe(desc);
  c.require(is_valid(u) && is_valid(v), "generator produced an invalid module" + where);
  const auto z = testing::random_cocycle(u, v, rng);
  const ExtensionTriple<F> triple{u, v, z};
  const auto ext = build_extension(u, v, z);

  c.require(is_valid(ext.w), "W invalid" + where);
  c.require(ext.w.dims() == v.dims() + u.dims(), "dimensions not additive" + where);
  c.require(is_homomorphism(v, ext.w, ext.mu) && is_monomorphism(v, ext.w, ext.mu),
            "mu not a monomorphism" + where);
  c.require(is_homomorphism(ext.w, u, ext.pi), "pi not a homomorphism" + where);
  for (VertexIndex x = 0; x < nv; ++x) {
    c.require(rank(ext.pi.at(x)) == u.dim(x), "pi not onto" + where);
    c.require((ext.pi.at(x) * ext.mu.at(x)).is_zero(), "pi o mu != 0" + where);
    c.require(rank(ext.mu.at(x)) + rank(ext.pi.at(x)) == ext.w.dim(x), "ranks not additive" + where);
  }

  // Transport by g, then split along g o mu with the complement taken from g.
  const auto g = testing::random_base_change(k, ext.w.dims(), rng);
  const auto image = phi_map(g, triple);
  c.require(image.source == v && image.target == gl_action(g, ext.w) &&
                image.map == compose(g, ext.mu),
            "phi_map contract" + where);
  std::vector<Matrix<F>> h;
  for (VertexIndex x = 0; x < nv; ++x) {
    h.push_back(g.at(x).block(0, v.dim(x), ext.w.dim(x), u.dim(x)));
  }
  const auto split = splitting_from_mono(image.source, image.target, image.map, std::make_optional(h));
  c.require(split.g == g && split.z == z && split.u == u, "split with h does not recover (g,Z,U)" + where);
  c.require(psi_map(image.source, image.target, image.map, std::make_optional(h)) == triple, "psi o phi != id" + where);

  const auto plain = splitting_from_mono(image.source, image.target, image.map);
  const auto rebuilt = build_extension(plain.u, v, plain.z);
  c.require(gl_action(plain.g, rebuilt.w) == image.target, "g * W^{V,Z,U} != W" + where);
  c.require(compose(plain.g, rebuilt.mu) == image.map, "f != g o mu" + where);
}

Check extension_round_trips() {
  Check c;
  Rng rng(0x5eed0004);
  for (std::size_t t = 0; t < 200 && c.ok; ++t) {
    const auto desc = testing::random_family(rng);
    if (t % 5 == 4) {
      extension_round_trip(desc, RationalField{}, rng, c);
    } else {
      extension_round_trip(desc, PrimeField(t % 2 ? 3 : 2), rng, c);
    }
  }
  c.detail << "200 triples (160 over F_2/F_3, 40 over Q)";
  return c;
}

// criterion 5
Check mono_witness() {
  Check c;
  std::size_t runs = 0;
  for (const auto& [m, l] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {3, 3}}) {
    for (const std::size_t n : {1u, 2u}) {
      for (const std::uint32_t q : {2u, 3u}) {
        const auto r = mono_reducibility_witness(m, l, n, q);
        ++runs;
        c.require(r.in_u1 > 0, "U1 empty for " + r.algebra);
        c.require(r.in_u2 > 0, "U2 empty for " + r.algebra);
        c.require(r.in_both == 0, "U1 and U2 meet for " + r.algebra);
        c.require(r.implications_hold, "rk U = l-1 without mu_1 = 0 for " + r.algebra);
        c.require(r.equations_hold, "defining equations fail for " + r.algebra);
      }
    }
  }
  c.detail << runs << " exhaustive enumerations";
  return c;
}

// criterion 6
Check hom_census() {
  Check c;
  for (const std::size_t n : {1u, 2u, 3u}) {
    for (const std::uint32_t q : {2u, 3u, 5u}) {
      const auto census = hom_counterexample_census(n, q);
      std::uint64_t qn = 1;
      for (std::size_t i = 0; i < n; ++i) qn *= q;
      const std::string at = " at n=" + std::to_string(n) + ", q=" + std::to_string(q);
      c.require(census.total == qn + q - 1, "total != q^n + q - 1" + at);
      c.require(census.union_of_components, "set != {b=0} u {a=0}" + at);
      c.require(census.bijection && census.hom_points == census.total, "H does not match" + at);
    }
  }
  c.detail << "n in {1,2,3}, q in {2,3,5}";
  return c;
}

// criterion 7
Check ext2_formula() {
  Check c;
  std::size_t cases = 0;
  for (const std::size_t n : {1u, 2u}) {
    for (const std::size_t m : {2u, 3u}) {
      for (const std::size_t l : {std::size_t{1}, m - 1}) {
        const auto pres = build_family(FamilyDescriptor::a(n, m, l));
        const auto r = ext2_dimension(*pres, pres->relations(), 1, 0);
        ++cases;
        c.require(r.relation_count == 1 && r.quotient_dimension == 1,
                  "expected (1,1) for " + pres->name());
      }
      for (const std::size_t m1 : {2u, 3u}) {
        const auto pres = build_family(FamilyDescriptor::aprime(n, m, m1));
        const auto r = ext2_dimension(*pres, pres->relations(), 1, 0);
        ++cases;
        c.require(r.relation_count == 0 && r.quotient_dimension == 0,
                  "expected (0,0) for " + pres->name());
      }
    }
  }
  c.detail << cases << " algebras";
  return c;
}

// criterion 8
Check product_split() {
  Check c;
  for (const std::size_t n : {1u, 2u, 3u}) {
    for (const auto& [d, e] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}}) {
      for (const std::uint32_t q : {2u, 3u}) {
        const auto r = product_count_check(n, 2, d, e, q);
        c.require(r.holds(), "B_" + std::to_string(n) + " count " + std::to_string(r.count_bn) +
                                 " != " + std::to_string(r.count_b1) + " * " +
                                 std::to_string(r.factor));
      }
    }
  }
  c.detail << "m = 2";
  return c;
}

// criterion 9: brute force over all n x n matrices, independent of the enumerator
std::uint64_t brute_force_nilpotent(std::size_t n, const PrimeField& k) {
  std::uint64_t count = 0;
  EnumerationOptions options;
  for_each_point(n * n, k, options, [&](std::span<const PrimeField::Element> x) {
    Matrix<PrimeField> a(k, n, n, std::vector<PrimeField::Element>(x.begin(), x.end()));
    count += a.power(n).is_zero() ? 1 : 0;
    return true;
  });
  return count;
}

Check nilpotent_counts() {
  Check c;
  for (const std::size_t n : {1u, 2u, 3u}) {
    for (const std::uint32_t q : {2u, 3u}) {
      const PrimeField k(q);
      const auto enumerated =
          RepresentationEnumerator(build_family(FamilyDescriptor::lambda(n)), k, {n}).count();
      const auto brute = brute_force_nilpotent(n, k);
      const auto classical = *checked_power(q, n * n - n);
      const std::string at = " at n=" + std::to_string(n) + ", q=" + std::to_string(q);
      c.require(enumerated == brute, "enumerator disagrees with brute force" + at);
      c.require(brute == classical, "count != q^(n^2-n)" + at);
    }
  }
  c.detail << "Lambda(3), dim 3 over F_3: " << *checked_power(3, 6);
  return c;
}

// criterion 10
Check structural_predicates() {
  Check c;
  std::vector<FamilyDescriptor> all;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 2; m <= 4; ++m) {
      for (std::size_t l = 1; l <= 2 * m; ++l) all.push_back(FamilyDescriptor::a(n, m, l));
      all.push_back(FamilyDescriptor::b(n, m));
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m0 = 1; m0 <= 3; ++m0) {
      for (std::size_t m1 = 1; m1 <= 3; ++m1) all.push_back(FamilyDescriptor::aprime(n, m0, m1));
    }
  }
  for (std::size_t m = 1; m <= 4; ++m) all.push_back(FamilyDescriptor::lambda(m));
  for (std::size_t m = 2; m <= 4; ++m) all.push_back(FamilyDescriptor::aprime_commuting(m));

  for (const auto& desc : all) {
    const auto pres = build_family(desc);
    c.require(is_weakly_triangular(pres->quiver()), describe(desc) + " not weakly triangular");
    if (desc.kind == FamilyKind::kAprime) {
      c.require(is_simple_loop_extension(*pres), describe(desc) + " should be a simple loop extension");
    }
    if (desc.kind == FamilyKind::kA) {
      c.require(!is_simple_loop_extension(*pres), describe(desc) + " should not be a simple loop extension");
    }
  }

  // Expected values from the two-simple classification table.
  const std::vector<std::pair<FamilyDescriptor, bool>> table{
      {FamilyDescriptor::a(1, 2, 1), true},   {FamilyDescriptor::a(2, 2, 1), true},
      {FamilyDescriptor::a(1, 3, 1), true},   {FamilyDescriptor::a(1, 3, 2), true},
      {FamilyDescriptor::a(2, 3, 2), true},   {FamilyDescriptor::a(1, 4, 2), false},
      {FamilyDescriptor::a(2, 4, 2), false},  {FamilyDescriptor::a(1, 4, 3), true},
      {FamilyDescriptor::a(1, 5, 2), false},  {FamilyDescriptor::a(1, 5, 3), false},
      {FamilyDescriptor::a(3, 5, 2), false},  {FamilyDescriptor::a(1, 5, 4), true},
      {FamilyDescriptor::a(1, 6, 4), false},  {FamilyDescriptor::aprime(1, 2, 2), true},
      {FamilyDescriptor::aprime(2, 2, 3), true}, {FamilyDescriptor::aprime(0, 3, 3), true},
      {FamilyDescriptor::aprime(3, 1, 2), true}, {FamilyDescriptor::b(1, 2), true},
      {FamilyDescriptor::b(2, 3), true},      {FamilyDescriptor::aprime_commuting(2), true},
  };
  for (const auto& [desc, expected] : table) {
    c.require(is_geometrically_irreducible_family(desc) == expected,
              "classification of " + describe(desc));
  }
  c.detail << all.size() << " built families, " << table.size() << " classification cases";
  return c;
}

// criterion 11
Check cli_contract() {
  Check c;
  const std::filesystem::path corpus = std::filesystem::path(QVL_SOURCE_DIR) / "tests/data/corpus";
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
    if (entry.path().extension() != ".qv") continue;
    ++files;
    std::ifstream in(entry.path());
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = parse_quiver_spec(text);
    const auto printed = print_quiver_spec(*first);
    const auto second = parse_quiver_spec(printed);
    c.require(*first == *second && print_quiver_spec(*second) == printed,
              "round trip changes " + entry.path().filename().string());
  }
  c.require(files >= 10, "corpus has fewer than 10 files");
  const std::string command = std::string(QVL_PYTHON) + " " + QVL_SOURCE_DIR +
                              "/tests/cli/cli_test.py " + QVL_CLI + " " + QVL_SOURCE_DIR +
                              " > cli_test.log 2>&1";
  const int status = std::system(command.c_str());
  c.require(status == 0, "schema/exit-code script failed, see cli_test.log");
  c.detail << files << " corpus files; schema and exit codes via cli_test.py";
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cocycle closed form on eps^m", 10, cocycle_closed_form},
      {2, "rep of commuting A'(2) matches H over Lambda(2)", 60, hom_correspondence},
      {3, "rep of B_1 matches E over Lambda(2)", 60, ext_correspondence},
      {4, "extension round trip", 0, extension_round_trips},
      {5, "mono reducibility witness", 120, mono_witness},
      {6, "hom counterexample census", 0, hom_census},
      {7, "Ext^2 relation count", 0, ext2_formula},
      {8, "product split of B_n counts", 0, product_split},
      {9, "nilpotent matrix counts", 0, nilpotent_counts},
      {10, "structural predicates and classification", 0, structural_predicates},
      {11, "CLI round trip, schema, exit codes", 0, cli_contract},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.limit_seconds > 0 && seconds > crit.limit_seconds) {
      c.ok = false;
      c.detail << " (over the " << crit.limit_seconds << " s limit)";
    }
    failed += c.ok ? 0 : 1;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << crit.id << ": " << crit.name << " ["
              << time.str() << " s] " << c.detail.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

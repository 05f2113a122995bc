#pragma once

// Exhaustive enumeration of representation, homomorphism, monomorphism and
// extension varieties over a prime field F_q.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qvl/extension.hpp"
#include "qvl/representation.hpp"

namespace qvl {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// QVL_BUDGET if set to a positive integer, otherwise `fallback`.
std::uint64_t budget_from_environment(std::uint64_t fallback = kDefaultBudget);

/// base^exponent, or nullopt past 2^64.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent);

struct EnumerationOptions {
  /// Cap on candidate points visited, summed over all threads.
  std::uint64_t budget = kDefaultBudget;
  /// Order in which arrow matrices are assigned; empty means id order.
  std::vector<ArrowIndex> arrow_order;
  /// 0 or 1 runs serially.
  unsigned threads = 1;
};

/// Points of rep_A(d)(F_q). Arrow matrices are assigned one stage at a time,
/// entries row-major with the last entry running fastest, and each relation
/// is tested as soon as all its arrows carry a value.
class RepresentationEnumerator {
 public:
  RepresentationEnumerator(PresentationPtr presentation, PrimeField field, DimensionVector dims,
                           EnumerationOptions options = {});

  std::uint64_t count() const;
  /// Stops early when the callback returns false.
  void for_each(const std::function<bool(const Representation<PrimeField>&)>& visit) const;
  std::vector<Representation<PrimeField>> collect() const;

 private:
  struct Stage {
    ArrowIndex arrow;
    std::size_t entries;
    std::uint64_t size;
    std::vector<std::size_t> relations;  // fully assigned after this stage
  };

  PresentationPtr presentation_;
  PrimeField field_;
  DimensionVector dims_;
  EnumerationOptions options_;
  std::vector<CompiledRelation<PrimeField>> relations_;
  std::vector<Stage> stages_;

  struct Budget;
  using MatrixVisitor = std::function<bool(const std::vector<Matrix<PrimeField>>&)>;
  bool walk(std::size_t stage, std::uint64_t begin, std::uint64_t end,
            std::vector<Matrix<PrimeField>>& mats, Budget& budget,
            const MatrixVisitor& visit) const;
  std::uint64_t count_from(std::size_t stage, std::uint64_t begin, std::uint64_t end,
                           std::vector<Matrix<PrimeField>>& mats, Budget& budget) const;
  bool satisfied(const Stage& stage, const std::vector<Matrix<PrimeField>>& mats) const;
  std::vector<Matrix<PrimeField>> blank() const;
  std::vector<std::uint64_t> free_tail_;  // product of stage sizes when no relation remains
};

enum class VarietyKind { kRep, kHom, kMono, kExt, kCustom };

/// A subset of F_q^dimension cut out by a predicate.
struct CustomVariety {
  std::size_t dimension = 0;
  std::function<bool(std::span<const PrimeField::Element>)> contains;
};

/// rep: points of rep(dims). hom and mono: triples (V, W, f) with
/// dim V = dims, dim W = dims2. ext: triples (U, V, Z) with dim U = dims,
/// dim V = dims2.
struct EnumerationTask {
  VarietyKind kind = VarietyKind::kRep;
  PresentationPtr presentation;
  DimensionVector dims;
  DimensionVector dims2;
  std::uint32_t q = 2;
  EnumerationOptions options;
  CustomVariety custom;
};

/// Throws BudgetExceeded when the task visits more than options.budget
/// candidates or a single stage alone is larger than the budget.
std::uint64_t count_points(const EnumerationTask& task);

void for_each_hom_triple(const PresentationPtr& presentation, const PrimeField& field,
                         const DimensionVector& source_dims, const DimensionVector& target_dims,
                         const EnumerationOptions& options,
                         const std::function<bool(const HomTriple<PrimeField>&)>& visit);

void for_each_mono_triple(const PresentationPtr& presentation, const PrimeField& field,
                          const DimensionVector& source_dims, const DimensionVector& target_dims,
                          const EnumerationOptions& options,
                          const std::function<bool(const HomTriple<PrimeField>&)>& visit);

void for_each_ext_triple(const PresentationPtr& presentation, const PrimeField& field,
                         const DimensionVector& u_dims, const DimensionVector& v_dims,
                         const EnumerationOptions& options,
                         const std::function<bool(const ExtensionTriple<PrimeField>&)>& visit);

/// Every point of F_q^dimension, last coordinate fastest.
void for_each_point(std::size_t dimension, const PrimeField& field,
                    const EnumerationOptions& options,
                    const std::function<bool(std::span<const PrimeField::Element>)>& visit);

}  // namespace qvl

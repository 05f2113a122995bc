#include "qvl/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <numeric>
#include <string>

#include "qvl/errors.hpp"

namespace qvl {

std::uint64_t budget_from_environment(std::uint64_t fallback) {
  const char* raw = std::getenv("QVL_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) return fallback;
  return value;
}

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return std::nullopt;
    out *= base;
  }
  return out;
}

struct RepresentationEnumerator::Budget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = 0;

  void spend(std::uint64_t n) {
    if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) {
      throw BudgetExceeded("enumeration exceeded the budget of " + std::to_string(limit) +
                           " candidate points");
    }
  }
};

namespace {

using Element = PrimeField::Element;

void decode(std::uint64_t index, std::uint32_t p, std::vector<Element>& entries) {
  for (std::size_t j = entries.size(); j-- > 0;) {
    entries[j] = static_cast<Element>(index % p);
    index /= p;
  }
}

unsigned thread_count(const EnumerationOptions& options) {
  return std::max(1u, options.threads);
}

/// Runs work(t, threads) on every thread index and sums the results.
template <typename Work>
std::uint64_t parallel_sum(unsigned threads, Work work) {
  if (threads <= 1) return work(0u, 1u);
  std::vector<std::future<std::uint64_t>> parts;
  for (unsigned t = 0; t < threads; ++t) {
    parts.push_back(std::async(std::launch::async, work, t, threads));
  }
  std::uint64_t total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace

RepresentationEnumerator::RepresentationEnumerator(PresentationPtr presentation, PrimeField field,
                                                   DimensionVector dims,
                                                   EnumerationOptions options)
    : presentation_(std::move(presentation)),
      field_(field),
      dims_(std::move(dims)),
      options_(std::move(options)) {
  const Quiver& q = presentation_->quiver();
  if (dims_.size() != q.vertex_count()) throw SemanticError("dimension vector length mismatch");
  relations_ = compile_relations(*presentation_, field_);

  std::vector<ArrowIndex> order = options_.arrow_order;
  if (order.empty()) {
    order.resize(q.arrow_count());
    std::iota(order.begin(), order.end(), ArrowIndex{0});
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ArrowIndex> ids(q.arrow_count());
    std::iota(ids.begin(), ids.end(), ArrowIndex{0});
    if (sorted != ids) throw SemanticError("arrow order is not a permutation of the arrows");
  }

  std::vector<std::size_t> position(q.arrow_count());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  for (const auto a : order) {
    const auto& arrow = q.arrow(a);
    const std::size_t entries = dims_[arrow.target] * dims_[arrow.source];
    const auto size = checked_power(field_.order(), entries);
    if (!size || *size > options_.budget) {
      throw BudgetExceeded("arrow '" + arrow.name + "' alone has " +
                           std::to_string(field_.order()) + "^" + std::to_string(entries) +
                           " values, over the budget of " + std::to_string(options_.budget));
    }
    stages_.push_back({a, entries, *size, {}});
  }
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    std::size_t last = 0;
    for (const auto& t : relations_[r].terms) {
      for (const auto a : t.arrows) last = std::max(last, position[a]);
    }
    stages_[last].relations.push_back(r);
  }
  free_tail_.assign(stages_.size() + 1, 0);
  free_tail_[stages_.size()] = 1;
  for (std::size_t i = stages_.size(); i-- > 0;) {
    if (!stages_[i].relations.empty() || free_tail_[i + 1] == 0) break;
    const auto product = free_tail_[i + 1] * stages_[i].size;
    if (stages_[i].size != 0 && product / stages_[i].size != free_tail_[i + 1]) break;
    free_tail_[i] = product;
  }
}

std::vector<Matrix<PrimeField>> RepresentationEnumerator::blank() const {
  std::vector<Matrix<PrimeField>> mats;
  for (const auto& a : presentation_->quiver().arrows()) {
    mats.emplace_back(field_, dims_[a.target], dims_[a.source]);
  }
  return mats;
}

bool RepresentationEnumerator::satisfied(const Stage& stage,
                                         const std::vector<Matrix<PrimeField>>& mats) const {
  for (const auto r : stage.relations) {
    if (!evaluate_compiled(relations_[r], mats, dims_, field_).is_zero()) return false;
  }
  return true;
}

bool RepresentationEnumerator::walk(std::size_t s, std::uint64_t begin, std::uint64_t end,
                                    std::vector<Matrix<PrimeField>>& mats, Budget& budget,
                                    const MatrixVisitor& visit) const {
  if (s == stages_.size()) return visit(mats);
  const Stage& stage = stages_[s];
  auto& entries = mats[stage.arrow].data();
  for (std::uint64_t v = begin; v < end; ++v) {
    budget.spend(1);
    decode(v, field_.order(), entries);
    if (!satisfied(stage, mats)) continue;
    if (s + 1 < stages_.size()) {
      if (!walk(s + 1, 0, stages_[s + 1].size, mats, budget, visit)) return false;
    } else if (!visit(mats)) {
      return false;
    }
  }
  return true;
}

std::uint64_t RepresentationEnumerator::count_from(std::size_t s, std::uint64_t begin,
                                                   std::uint64_t end,
                                                   std::vector<Matrix<PrimeField>>& mats,
                                                   Budget& budget) const {
  if (s == stages_.size()) return 1;
  const Stage& stage = stages_[s];
  if (free_tail_[s] != 0 && begin == 0 && end == stage.size) return free_tail_[s];
  if (stage.relations.empty() && free_tail_[s + 1] != 0) return (end - begin) * free_tail_[s + 1];
  auto& entries = mats[stage.arrow].data();
  std::uint64_t total = 0;
  for (std::uint64_t v = begin; v < end; ++v) {
    budget.spend(1);
    decode(v, field_.order(), entries);
    if (!satisfied(stage, mats)) continue;
    total += s + 1 < stages_.size() ? count_from(s + 1, 0, stages_[s + 1].size, mats, budget) : 1;
  }
  return total;
}

std::uint64_t RepresentationEnumerator::count() const {
  Budget budget;
  budget.limit = options_.budget;
  if (stages_.empty()) return 1;
  const std::uint64_t first = stages_.front().size;
  return parallel_sum(thread_count(options_), [&](unsigned t, unsigned threads) {
    auto mats = blank();
    const std::uint64_t begin = first * t / threads;
    const std::uint64_t end = first * (t + 1) / threads;
    return count_from(0, begin, end, mats, budget);
  });
}

void RepresentationEnumerator::for_each(
    const std::function<bool(const Representation<PrimeField>&)>& visit) const {
  Budget budget;
  budget.limit = options_.budget;
  auto mats = blank();
  const auto emit = [&](const std::vector<Matrix<PrimeField>>& m) {
    return visit(Representation<PrimeField>(presentation_, field_, dims_, m));
  };
  if (stages_.empty()) {
    emit(mats);
    return;
  }
  walk(0, 0, stages_.front().size, mats, budget, emit);
}

std::vector<Representation<PrimeField>> RepresentationEnumerator::collect() const {
  std::vector<Representation<PrimeField>> out;
  for_each([&](const Representation<PrimeField>& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

namespace {

struct PairBudget {
  std::atomic<std::uint64_t> used{0};
  std::uint64_t limit = 0;

  void spend(std::uint64_t n) {
    if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) {
      throw BudgetExceeded("enumeration exceeded the budget of " + std::to_string(limit) +
                           " candidate points");
    }
  }
};

/// Every coefficient vector in F_q^size, last coefficient fastest.
bool for_each_combination(std::size_t size, const PrimeField& k, PairBudget& budget,
                          const std::function<bool(const std::vector<Element>&)>& visit) {
  const auto total = checked_power(k.order(), size);
  if (!total) throw BudgetExceeded("linear span too large to enumerate");
  std::vector<Element> coeffs(size);
  for (std::uint64_t v = 0; v < *total; ++v) {
    budget.spend(1);
    decode(v, k.order(), coeffs);
    if (!visit(coeffs)) return false;
  }
  return true;
}

HomMorphism<PrimeField> combine_hom(const std::vector<HomMorphism<PrimeField>>& basis,
                                    const std::vector<Element>& c, const PrimeField& k,
                                    const Representation<PrimeField>& v,
                                    const Representation<PrimeField>& w) {
  HomMorphism<PrimeField> f;
  for (VertexIndex x = 0; x < v.dims().size(); ++x) f.maps.emplace_back(k, w.dim(x), v.dim(x));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    for (VertexIndex x = 0; x < f.maps.size(); ++x) f.maps[x] += basis[i].maps[x].scaled(c[i]);
  }
  return f;
}

ArrowBlock<PrimeField> combine_block(const std::vector<ArrowBlock<PrimeField>>& basis,
                                     const std::vector<Element>& c,
                                     ArrowBlock<PrimeField> zero) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t a = 0; a < zero.blocks.size(); ++a) {
      zero.blocks[a] += basis[i].blocks[a].scaled(c[i]);
    }
  }
  return zero;
}

bool injective(const HomMorphism<PrimeField>& f, const Representation<PrimeField>& v) {
  for (VertexIndex x = 0; x < f.maps.size(); ++x) {
    if (rank(f.maps[x]) != v.dim(x)) return false;
  }
  return true;
}

struct RepLists {
  std::vector<Representation<PrimeField>> first;
  std::vector<Representation<PrimeField>> second;
};

RepLists both_lists(const PresentationPtr& pres, const PrimeField& k, const DimensionVector& a,
                    const DimensionVector& b, const EnumerationOptions& options) {
  EnumerationOptions serial = options;
  serial.threads = 1;
  return {RepresentationEnumerator(pres, k, a, serial).collect(),
          RepresentationEnumerator(pres, k, b, serial).collect()};
}

std::uint64_t power_or_throw(std::uint64_t q, std::size_t e) {
  const auto p = checked_power(q, e);
  if (!p) throw BudgetExceeded("point count overflows 64 bits");
  return *p;
}

template <typename PerPair>
std::uint64_t sum_over_pairs(const RepLists& lists, unsigned threads, PerPair per_pair) {
  const std::uint64_t pairs = lists.first.size() * lists.second.size();
  return parallel_sum(threads, [&](unsigned t, unsigned n) {
    std::uint64_t total = 0;
    for (std::uint64_t i = t; i < pairs; i += n) {
      total += per_pair(lists.first[i / lists.second.size()], lists.second[i % lists.second.size()]);
    }
    return total;
  });
}

std::uint64_t count_custom(const EnumerationTask& task, const PrimeField& k) {
  const auto ambient = checked_power(k.order(), task.custom.dimension);
  if (!ambient || *ambient > task.options.budget) {
    throw BudgetExceeded("custom variety has " + std::to_string(k.order()) + "^" +
                         std::to_string(task.custom.dimension) + " candidate points, over the budget of " +
                         std::to_string(task.options.budget));
  }
  if (!task.custom.contains) throw SemanticError("custom variety without a predicate");
  return parallel_sum(thread_count(task.options), [&](unsigned t, unsigned n) {
    std::vector<Element> point(task.custom.dimension);
    std::uint64_t total = 0;
    for (std::uint64_t v = *ambient * t / n; v < *ambient * (t + 1) / n; ++v) {
      decode(v, k.order(), point);
      if (task.custom.contains(point)) ++total;
    }
    return total;
  });
}

}  // namespace

std::uint64_t count_points(const EnumerationTask& task) {
  const PrimeField k(task.q);
  if (task.kind == VarietyKind::kCustom) return count_custom(task, k);
  if (!task.presentation) throw SemanticError("enumeration task without a presentation");
  const unsigned threads = thread_count(task.options);
  if (task.kind == VarietyKind::kRep) {
    return RepresentationEnumerator(task.presentation, k, task.dims, task.options).count();
  }
  const auto lists = both_lists(task.presentation, k, task.dims, task.dims2, task.options);
  PairBudget budget;
  budget.limit = task.options.budget;
  switch (task.kind) {
    case VarietyKind::kHom:
      return sum_over_pairs(lists, threads, [&](const auto& v, const auto& w) {
        budget.spend(1);
        return power_or_throw(k.order(), hom_basis(v, w).size());
      });
    case VarietyKind::kExt:
      return sum_over_pairs(lists, threads, [&](const auto& u, const auto& v) {
        budget.spend(1);
        return power_or_throw(k.order(), cocycle_space_basis(u, v).size());
      });
    case VarietyKind::kMono:
      return sum_over_pairs(lists, threads, [&](const auto& v, const auto& w) {
        const auto basis = hom_basis(v, w);
        std::uint64_t n = 0;
        for_each_combination(basis.size(), k, budget, [&](const std::vector<Element>& c) {
          if (injective(combine_hom(basis, c, k, v, w), v)) ++n;
          return true;
        });
        return n;
      });
    default:
      break;
  }
  throw SemanticError("unsupported variety kind");
}

void for_each_hom_triple(const PresentationPtr& presentation, const PrimeField& field,
                         const DimensionVector& source_dims, const DimensionVector& target_dims,
                         const EnumerationOptions& options,
                         const std::function<bool(const HomTriple<PrimeField>&)>& visit) {
  const auto lists = both_lists(presentation, field, source_dims, target_dims, options);
  PairBudget budget;
  budget.limit = options.budget;
  for (const auto& v : lists.first) {
    for (const auto& w : lists.second) {
      const auto basis = hom_basis(v, w);
      const bool go = for_each_combination(basis.size(), field, budget, [&](const std::vector<Element>& c) {
        return visit(HomTriple<PrimeField>{v, w, combine_hom(basis, c, field, v, w)});
      });
      if (!go) return;
    }
  }
}

void for_each_mono_triple(const PresentationPtr& presentation, const PrimeField& field,
                          const DimensionVector& source_dims, const DimensionVector& target_dims,
                          const EnumerationOptions& options,
                          const std::function<bool(const HomTriple<PrimeField>&)>& visit) {
  for_each_hom_triple(presentation, field, source_dims, target_dims, options,
                      [&](const HomTriple<PrimeField>& t) {
                        return injective(t.map, t.source) ? visit(t) : true;
                      });
}

void for_each_ext_triple(const PresentationPtr& presentation, const PrimeField& field,
                         const DimensionVector& u_dims, const DimensionVector& v_dims,
                         const EnumerationOptions& options,
                         const std::function<bool(const ExtensionTriple<PrimeField>&)>& visit) {
  const auto lists = both_lists(presentation, field, u_dims, v_dims, options);
  PairBudget budget;
  budget.limit = options.budget;
  for (const auto& u : lists.first) {
    for (const auto& v : lists.second) {
      const auto basis = cocycle_space_basis(u, v);
      const auto zero = zero_block(u, v);
      const bool go = for_each_combination(basis.size(), field, budget, [&](const std::vector<Element>& c) {
        return visit(ExtensionTriple<PrimeField>{u, v, combine_block(basis, c, zero)});
      });
      if (!go) return;
    }
  }
}

void for_each_point(std::size_t dimension, const PrimeField& field,
                    const EnumerationOptions& options,
                    const std::function<bool(std::span<const Element>)>& visit) {
  const auto ambient = checked_power(field.order(), dimension);
  if (!ambient || *ambient > options.budget) {
    throw BudgetExceeded("ambient space too large for the budget of " +
                         std::to_string(options.budget));
  }
  std::vector<Element> point(dimension);
  for (std::uint64_t v = 0; v < *ambient; ++v) {
    decode(v, field.order(), point);
    if (!visit(point)) return;
  }
}

}  // namespace qvl

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvl/qvl.hpp"

namespace qvl::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kSyntax = 3,
  kSemantic = 4,
  kBudget = 5,
  kIo = 6,
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path);
Json read_json(const std::string& path);

/// Either --quiver FILE or --family KIND with its parameters.
struct AlgebraArgs {
  std::string quiver_file;
  std::string family;
  std::size_t n = 1;
  std::size_t m = 2;
  std::size_t l = 1;
  std::size_t m0 = 1;
  std::size_t m1 = 1;
};

FamilyDescriptor family_descriptor(const AlgebraArgs& args);
PresentationPtr load_algebra(const AlgebraArgs& args);

VertexIndex vertex_named(const Quiver& quiver, const std::string& name);
/// Accepts one entry per vertex; a single vertex quiver also takes "--dim 2".
DimensionVector dimension_vector(const Quiver& quiver, const std::vector<std::size_t>& dims,
                                 const std::string& option);

std::uint64_t effective_budget(const std::optional<std::uint64_t>& flag);

}  // namespace qvl::cli

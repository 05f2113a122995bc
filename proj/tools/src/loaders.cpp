#include "loaders.hpp"

#include <fstream>
#include <sstream>

namespace qvl::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

FamilyDescriptor family_descriptor(const AlgebraArgs& args) {
  const auto kind = parse_family_kind(args.family);
  if (!kind) throw UsageError("unknown family '" + args.family + "'");
  FamilyDescriptor d{*kind, args.n, args.m, args.l, args.m0, args.m1};
  if (*kind == FamilyKind::kB) d.l = args.m - 1;
  return d;
}

PresentationPtr load_algebra(const AlgebraArgs& args) {
  if (!args.quiver_file.empty() && !args.family.empty()) {
    throw UsageError("give either --quiver or --family, not both");
  }
  if (!args.quiver_file.empty()) return parse_quiver_spec(read_file(args.quiver_file));
  if (!args.family.empty()) return build_family(family_descriptor(args));
  throw UsageError("an algebra is required: --quiver FILE or --family KIND");
}

VertexIndex vertex_named(const Quiver& quiver, const std::string& name) {
  const auto v = quiver.find_vertex(name);
  if (!v) throw SemanticError("unknown vertex '" + name + "'");
  return *v;
}

DimensionVector dimension_vector(const Quiver& quiver, const std::vector<std::size_t>& dims,
                                 const std::string& option) {
  if (dims.size() != quiver.vertex_count()) {
    throw UsageError(option + " needs " + std::to_string(quiver.vertex_count()) +
                     " entries, one per vertex, got " + std::to_string(dims.size()));
  }
  return dims;
}

std::uint64_t effective_budget(const std::optional<std::uint64_t>& flag) {
  if (flag) {
    if (*flag == 0) throw UsageError("--budget must be positive");
    return *flag;
  }
  return budget_from_environment();
}

}  // namespace qvl::cli

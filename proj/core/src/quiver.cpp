#include "qvl/quiver.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "qvl/errors.hpp"

namespace qvl {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw SemanticError("duplicate vertex '" + v + "'");
  }
  seen.clear();
  for (const auto& a : arrows_) {
    if (a.name.empty()) throw SemanticError("arrow with empty name");
    if (!seen.insert(a.name).second) {
      throw SemanticError("duplicate arrow '" + a.name + "'");
    }
    if (a.source >= vertices_.size() || a.target >= vertices_.size()) {
      throw SemanticError("arrow '" + a.name + "' has an endpoint outside the quiver");
    }
  }
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view name) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view name) const {
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].name == name) return a;
  }
  return std::nullopt;
}

std::vector<ArrowIndex> Quiver::loops_at(VertexIndex v) const {
  std::vector<ArrowIndex> out;
  for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
    if (arrows_[a].source == v && arrows_[a].target == v) out.push_back(a);
  }
  return out;
}

std::size_t degree(const Quiver& quiver, ArrowIndex arrow) {
  return quiver.is_loop(arrow) ? 0 : 1;
}

Path Path::trivial(VertexIndex vertex) { return Path(vertex, vertex, {}); }

Path Path::from_arrows(const Quiver& quiver, std::vector<ArrowIndex> arrows) {
  if (arrows.empty()) throw SemanticError("a nontrivial path needs at least one arrow");
  for (const auto a : arrows) {
    if (a >= quiver.arrow_count()) throw SemanticError("arrow index out of range");
  }
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    const auto& outer = quiver.arrow(arrows[i]);
    const auto& inner = quiver.arrow(arrows[i + 1]);
    if (outer.source != inner.target) {
      throw SemanticError("arrows '" + outer.name + "' and '" + inner.name +
                          "' are not composable");
    }
  }
  const VertexIndex s = quiver.arrow(arrows.back()).source;
  const VertexIndex t = quiver.arrow(arrows.front()).target;
  return Path(s, t, std::move(arrows));
}

Path Path::power(const Quiver& quiver, ArrowIndex arrow, std::size_t times) {
  if (times == 0) return trivial(quiver.arrow(arrow).source);
  return from_arrows(quiver, std::vector<ArrowIndex>(times, arrow));
}

bool Path::contains_subpath(const Path& sub) const {
  if (sub.is_trivial()) return false;
  return std::search(arrows_.begin(), arrows_.end(), sub.arrows_.begin(),
                     sub.arrows_.end()) != arrows_.end();
}

std::strong_ordering Path::operator<=>(const Path& other) const {
  if (auto c = arrows_.size() <=> other.arrows_.size(); c != 0) return c;
  if (arrows_.empty()) return source_ <=> other.source_;
  return std::lexicographical_compare_three_way(arrows_.begin(), arrows_.end(),
                                                other.arrows_.begin(),
                                                other.arrows_.end());
}

std::optional<Path> concatenate(const Path& lhs, const Path& rhs) {
  if (lhs.source() != rhs.target()) return std::nullopt;
  if (lhs.is_trivial()) return rhs;
  if (rhs.is_trivial()) return lhs;
  // Composability is inherited from the two factors.
  std::vector<ArrowIndex> arrows(lhs.arrows_);
  arrows.insert(arrows.end(), rhs.arrows_.begin(), rhs.arrows_.end());
  return Path(rhs.source_, lhs.target_, std::move(arrows));
}

std::size_t degree(const Quiver& quiver, const Path& path) {
  std::size_t d = 0;
  for (const auto a : path.arrows()) d += degree(quiver, a);
  return d;
}

std::set<VertexIndex> support(const Quiver& quiver, const Path& path) {
  std::set<VertexIndex> out{path.target()};
  for (const auto a : path.arrows()) out.insert(quiver.arrow(a).source);
  return out;
}

std::string format_path(const Quiver& quiver, const Path& path) {
  if (path.is_trivial()) return "1_" + quiver.vertex_name(path.source());
  std::string out;
  const auto arrows = path.arrows();
  for (std::size_t i = 0; i < arrows.size();) {
    std::size_t j = i;
    while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
    if (!out.empty()) out += '*';
    out += quiver.arrow(arrows[i]).name;
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Relation::Relation(const Quiver& quiver, std::vector<Term> terms) {
  std::map<Path, Rational> combined;
  for (auto& t : terms) {
    if (t.path.length() < 2) {
      throw SemanticError("relation term '" + format_path(quiver, t.path) +
                          "' has length below 2");
    }
    combined[t.path] += t.coefficient;
  }
  for (auto& [path, c] : combined) {
    if (sgn(c) != 0) terms_.push_back({c, path});
  }
  if (terms_.empty()) throw SemanticError("relation is zero");
  for (const auto& t : terms_) {
    if (t.path.source() != terms_.front().path.source() ||
        t.path.target() != terms_.front().path.target()) {
      throw SemanticError("relation terms '" + format_path(quiver, terms_.front().path) +
                          "' and '" + format_path(quiver, t.path) +
                          "' are not parallel");
    }
  }
}

Relation Relation::monomial(const Quiver& quiver, Path path) {
  return Relation(quiver, {Term{Rational(1), std::move(path)}});
}

std::size_t degree(const Quiver& quiver, const Relation& relation) {
  std::size_t d = SIZE_MAX;
  for (const auto& t : relation.terms()) d = std::min(d, degree(quiver, t.path));
  return d;
}

std::string format_relation(const Quiver& quiver, const Relation& relation) {
  std::string out;
  bool first = true;
  for (const auto& t : relation.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    out += format_path(quiver, t.path);
    first = false;
  }
  return out;
}

namespace {

// reach[u][v]: a path of positive length from u to v using any arrows.
std::vector<std::vector<bool>> reachability(const Quiver& quiver) {
  const std::size_t n = quiver.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : quiver.arrows()) reach[a.source][a.target] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

}  // namespace

bool is_weakly_triangular(const Quiver& quiver) {
  const auto reach = reachability(quiver);
  for (const auto& a : quiver.arrows()) {
    if (!a.is_loop() && reach[a.target][a.source]) return false;
  }
  return true;
}

std::optional<std::size_t> longest_loop_free_path(const Quiver& quiver) {
  if (!is_weakly_triangular(quiver)) return std::nullopt;
  const std::size_t n = quiver.vertex_count();
  // Longest path ending at each vertex; relax n times (DAG, so n rounds suffice).
  std::vector<std::size_t> best(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& a : quiver.arrows()) {
      if (a.is_loop()) continue;
      if (best[a.source] + 1 > best[a.target]) {
        best[a.target] = best[a.source] + 1;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::size_t out = 0;
  for (const auto b : best) out = std::max(out, b);
  return out;
}

}  // namespace qvl

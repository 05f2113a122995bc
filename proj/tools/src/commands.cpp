#include "commands.hpp"

#include <memory>
#include <sstream>

#include "CLI11.hpp"

namespace qvl::cli {

namespace {

void add_algebra_options(CLI::App* sub, AlgebraArgs& a) {
  sub->add_option("--quiver", a.quiver_file, "Presentation in the quiver DSL");
  sub->add_option("--family", a.family, "A, Aprime, AprimeCommuting, Lambda or B");
  sub->add_option("--n", a.n, "Number of arrows 1 -> 0");
  sub->add_option("--m", a.m, "Loop nilpotency (A, B, Lambda, AprimeCommuting)");
  sub->add_option("--l", a.l, "Exponent of the mixed relation (A)");
  sub->add_option("--m0", a.m0, "Nilpotency of e0 (Aprime)");
  sub->add_option("--m1", a.m1, "Nilpotency of e1 (Aprime)");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dims_text(const DimensionVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

template <Field F>
Representation<F> read_rep(const std::string& path, const PresentationPtr& pres, const F& field) {
  return representation_from_json(read_json(path), pres, field);
}

FieldSpec field_of(const std::string& path) {
  const Json j = read_json(path);
  if (!j.is_object() || !j.contains("field")) throw SemanticError("'" + path + "' lacks \"field\"");
  return field_from_json(j["field"]);
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  AlgebraArgs algebra;
  std::string rep;
};

Outcome run_check(const CheckArgs& args) {
  const auto pres = load_algebra(args.algebra);
  const auto any = representation_from_json(read_json(args.rep), pres);
  return std::visit(
      [&](const auto& v) {
        Outcome out;
        Json violated = Json::array();
        const auto& rels = pres->relations();
        for (const auto& r : rels) {
          if (!evaluate_relation(v, r).is_zero()) violated.push_back(format_relation(v.quiver(), r));
        }
        const bool valid = violated.empty();
        out.result = {{"valid", valid},
                      {"field", field_to_json(FieldSpec{v.field()})},
                      {"dims", representation_to_json(v)["dims"]},
                      {"violated", violated}};
        out.text = valid ? "valid\n" : "invalid: relation " + violated[0].get<std::string>() +
                                           " does not vanish\n";
        out.exit_code = valid ? kOk : kCheckFailed;
        return out;
      },
      any);
}

// ---------------------------------------------------------------- hom

struct HomArgs {
  AlgebraArgs algebra;
  std::string source;
  std::string target;
};

Outcome run_hom(const HomArgs& args) {
  const auto pres = load_algebra(args.algebra);
  return std::visit(
      [&](const auto& field) {
        const auto v = read_rep(args.source, pres, field);
        const auto w = read_rep(args.target, pres, field);
        const auto basis = hom_basis(v, w);
        Outcome out;
        Json items = Json::array();
        std::ostringstream text;
        text << "dim Hom = " << basis.size() << "\n";
        for (const auto& f : basis) {
          items.push_back(morphism_to_json(f, pres->quiver()));
          text << items.back().dump() << "\n";
        }
        out.result = {{"dimension", basis.size()}, {"basis", items}};
        out.text = text.str();
        return out;
      },
      field_of(args.source));
}

// ---------------------------------------------------------------- cocycles

struct CocycleArgs {
  AlgebraArgs algebra;
  std::string u;
  std::string v;
};

Outcome run_cocycles(const CocycleArgs& args) {
  const auto pres = load_algebra(args.algebra);
  return std::visit(
      [&](const auto& field) {
        const auto u = read_rep(args.u, pres, field);
        const auto v = read_rep(args.v, pres, field);
        const auto basis = cocycle_space_basis(u, v);
        Outcome out;
        Json items = Json::array();
        std::ostringstream text;
        text << "dim Z = " << basis.size() << " (ambient " << cocycle_ambient_dimension(u, v)
             << ")\n";
        for (const auto& z : basis) {
          items.push_back(block_to_json(z, pres->quiver()));
          text << items.back().dump() << "\n";
        }
        out.result = {{"dimension", basis.size()},
                      {"ambient_dimension", cocycle_ambient_dimension(u, v)},
                      {"basis", items}};
        out.text = text.str();
        return out;
      },
      field_of(args.u));
}

// ---------------------------------------------------------------- extend

struct ExtendArgs {
  AlgebraArgs algebra;
  std::string u;
  std::string v;
  std::string z;
};

Outcome run_extend(const ExtendArgs& args) {
  const auto pres = load_algebra(args.algebra);
  return std::visit(
      [&](const auto& field) {
        const auto u = read_rep(args.u, pres, field);
        const auto v = read_rep(args.v, pres, field);
        const auto z = block_from_json(read_json(args.z), u, v);
        const auto ext = build_extension(u, v, z);
        Outcome out;
        out.result = {{"extension", representation_to_json(ext.w)},
                      {"mu", morphism_to_json(ext.mu, pres->quiver())},
                      {"pi", morphism_to_json(ext.pi, pres->quiver())}};
        out.text = out.result["extension"].dump(2) + "\n";
        return out;
      },
      field_of(args.u));
}

// ---------------------------------------------------------------- split

struct SplitArgs {
  AlgebraArgs algebra;
  std::string v;
  std::string w;
  std::string map;
  std::string complement;
};

Outcome run_split(const SplitArgs& args) {
  const auto pres = load_algebra(args.algebra);
  return std::visit(
      [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const Quiver& q = pres->quiver();
        const auto v = read_rep(args.v, pres, field);
        const auto w = read_rep(args.w, pres, field);
        const auto f = morphism_from_json(read_json(args.map), q, v.dims(), w.dims(), field);
        std::optional<std::vector<Matrix<F>>> h;
        if (!args.complement.empty()) {
          h = vertex_matrices_from_json(read_json(args.complement), q, w.dims(),
                                        w.dims() - v.dims(), field);
        }
        const auto s = splitting_from_mono(v, w, f, h);
        Outcome out;
        out.result = {{"g", morphism_to_json(s.g, q)},
                      {"z", block_to_json(s.z, q)},
                      {"u", representation_to_json(s.u)}};
        out.text = out.result.dump(2) + "\n";
        return out;
      },
      field_of(args.v));
}

// ---------------------------------------------------------------- count / probe

struct VarietyArgs {
  AlgebraArgs algebra;
  std::string variety = "rep";
  std::vector<std::size_t> dim;
  std::vector<std::size_t> dim2;
  std::uint32_t q = 2;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
};

void add_variety_options(CLI::App* sub, VarietyArgs& a) {
  add_algebra_options(sub, a.algebra);
  sub->add_option("--variety", a.variety, "rep, hom, mono or ext")
      ->check(CLI::IsMember({"rep", "hom", "mono", "ext"}));
  sub->add_option("--dim", a.dim, "Dimension vector (first module), comma separated")
      ->delimiter(',')
      ->required();
  sub->add_option("--dim2", a.dim2, "Second dimension vector for hom, mono, ext")
      ->delimiter(',');
  sub->add_option("--threads", a.threads, "Worker threads");
  sub->add_option("--budget", a.budget, "Maximum number of candidate points");
}

EnumerationTask make_task(const VarietyArgs& args, std::uint32_t q) {
  EnumerationTask task;
  task.presentation = load_algebra(args.algebra);
  const Quiver& quiver = task.presentation->quiver();
  task.q = q;
  task.dims = dimension_vector(quiver, args.dim, "--dim");
  if (args.variety == "rep") {
    task.kind = VarietyKind::kRep;
    if (!args.dim2.empty()) throw UsageError("--dim2 is only used by hom, mono and ext");
  } else {
    task.kind = args.variety == "hom"    ? VarietyKind::kHom
                : args.variety == "mono" ? VarietyKind::kMono
                                         : VarietyKind::kExt;
    task.dims2 = dimension_vector(quiver, args.dim2, "--dim2");
  }
  task.options.budget = effective_budget(args.budget);
  task.options.threads = args.threads;
  return task;
}

Outcome run_count(const VarietyArgs& args) {
  const auto task = make_task(args, args.q);
  const auto n = count_points(task);
  Outcome out;
  out.result = {{"algebra", task.presentation->name()},
                {"variety", args.variety},
                {"dims", task.dims},
                {"q", args.q},
                {"count", n}};
  if (!task.dims2.empty()) out.result["dims2"] = task.dims2;
  out.text = std::to_string(n) + "\n";
  return out;
}

struct ProbeArgs {
  VarietyArgs variety;
  std::vector<std::uint32_t> qs{2, 3, 5};
};

Outcome run_probe(const ProbeArgs& args) {
  const auto report = leading_coefficient_probe(
      [&](std::uint32_t q) { return count_points(make_task(args.variety, q)); }, args.qs);
  Outcome out;
  Json entries = Json::array();
  std::ostringstream text;
  for (const auto& e : report.entries) {
    entries.push_back({{"q", e.q}, {"count", e.count}, {"coefficient", to_string(e.coefficient)}});
    text << "q=" << e.q << " count=" << e.count << " c=" << to_string(e.coefficient) << "\n";
  }
  text << "D=" << report.dimension << " stable=" << yes_no(report.stable)
       << " (point counts are evidence, not proof)\n";
  out.result = {{"dimension", report.dimension},
                {"entries", entries},
                {"stable", report.stable},
                {"note", "point counts over finite fields are evidence, not proof"}};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------- census-hom

struct CensusArgs {
  std::size_t n = 1;
  std::uint32_t q = 2;
  std::optional<std::uint64_t> budget;
};

Outcome run_census(const CensusArgs& args) {
  EnumerationOptions options;
  options.budget = effective_budget(args.budget);
  const auto c = hom_counterexample_census(args.n, args.q, options);
  Outcome out;
  out.result = {{"n", c.n},
                {"q", c.q},
                {"total", c.total},
                {"expected", c.expected},
                {"count_b0", c.count_b0},
                {"count_a0", c.count_a0},
                {"count_both", c.count_both},
                {"hom_points", c.hom_points},
                {"union_of_components", c.union_of_components},
                {"bijection", c.bijection},
                {"ok", c.ok()}};
  std::ostringstream text;
  text << "points " << c.total << " (q^n + q - 1 = " << c.expected << ")\n"
       << "b = 0: " << c.count_b0 << ", a = 0: " << c.count_a0 << ", both: " << c.count_both
       << "\n"
       << "equals {b = 0} u {a = 0}: " << yes_no(c.union_of_components) << "\n"
       << "hom variety points " << c.hom_points << ", bijection: " << yes_no(c.bijection) << "\n";
  out.text = text.str();
  out.exit_code = c.ok() ? kOk : kCheckFailed;
  return out;
}

// ---------------------------------------------------------------- witness-mono

struct WitnessArgs {
  std::size_t m = 2;
  std::size_t l = 2;
  std::size_t n = 1;
  std::uint32_t q = 2;
  std::optional<std::uint64_t> budget;
};

Json point_json(const MonoPoint& p) {
  Json v = Json::array();
  for (const auto& m : p.v) v.push_back(matrix_to_json(m));
  return {{"lambda", p.lambda}, {"mu", p.mu}, {"U", matrix_to_json(p.u)},
          {"V", v},             {"W", matrix_to_json(p.w)}};
}

std::string point_text(const MonoPoint& p) {
  std::ostringstream s;
  s << "lambda=" << p.lambda << " mu=(";
  for (std::size_t i = 0; i < p.mu.size(); ++i) s << (i ? "," : "") << p.mu[i];
  s << ") U=" << p.u;
  for (std::size_t i = 0; i < p.v.size(); ++i) s << " V" << i + 1 << "=" << p.v[i];
  s << " W=" << p.w;
  return s.str();
}

Outcome run_witness(const WitnessArgs& args) {
  EnumerationOptions options;
  options.budget = effective_budget(args.budget);
  const auto r = mono_reducibility_witness(args.m, args.l, args.n, args.q, options);
  Outcome out;
  out.result = {{"algebra", r.algebra},
                {"m", r.m},
                {"l", r.l},
                {"n", r.n},
                {"q", r.q},
                {"total", r.total},
                {"u1", r.in_u1},
                {"u2", r.in_u2},
                {"intersection", r.in_both},
                {"disjoint", r.in_both == 0},
                {"equations_hold", r.equations_hold},
                {"implications_hold", r.implications_hold},
                {"reducible", r.reducible()}};
  if (r.sample_u1) out.result["sample_u1"] = point_json(*r.sample_u1);
  if (r.sample_u2) out.result["sample_u2"] = point_json(*r.sample_u2);
  std::ostringstream text;
  text << r.algebra << ", M((1,1),(1," << r.l << ")) over F_" << r.q << "\n"
       << "points " << r.total << "\n"
       << "U1 (rk U = l-1): " << r.in_u1 << "\n"
       << "U2 (mu_1 != 0): " << r.in_u2 << "\n"
       << "U1 and U2 share " << r.in_both << " points\n"
       << "equations hold: " << yes_no(r.equations_hold)
       << ", implications hold: " << yes_no(r.implications_hold) << "\n";
  if (r.sample_u1) text << "sample in U1: " << point_text(*r.sample_u1) << "\n";
  if (r.sample_u2) text << "sample in U2: " << point_text(*r.sample_u2) << "\n";
  text << "reducible: " << yes_no(r.reducible()) << "\n";
  out.text = text.str();
  out.exit_code = r.reducible() ? kOk : kCheckFailed;
  return out;
}

// ---------------------------------------------------------------- product-check

struct ProductArgs {
  std::size_t n = 1;
  std::size_t m = 2;
  std::size_t d = 1;
  std::size_t e = 1;
  std::uint32_t q = 2;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
};

Outcome run_product(const ProductArgs& args) {
  EnumerationOptions options;
  options.budget = effective_budget(args.budget);
  options.threads = args.threads;
  const auto c = product_count_check(args.n, args.m, args.d, args.e, args.q, options);
  Outcome out;
  out.result = {{"count_bn", c.count_bn},
                {"count_b1", c.count_b1},
                {"factor", c.factor},
                {"holds", c.holds()}};
  out.text = "rep B" + std::to_string(args.n) + ": " + std::to_string(c.count_bn) +
             ", rep B1 * q^((n-1)de): " + std::to_string(c.count_b1) + " * " +
             std::to_string(c.factor) + "\nholds: " + yes_no(c.holds()) + "\n";
  out.exit_code = c.holds() ? kOk : kCheckFailed;
  return out;
}

// ---------------------------------------------------------------- ext2

struct Ext2Args {
  AlgebraArgs algebra;
  std::string x;
  std::string y;
  std::string relations;
};

Outcome run_ext2(const Ext2Args& args) {
  const auto pres = load_algebra(args.algebra);
  std::vector<Relation> rels = pres->relations();
  if (!args.relations.empty()) {
    const auto other = parse_quiver_spec(read_file(args.relations));
    if (!(other->quiver() == pres->quiver())) {
      throw SemanticError("relation file uses a different quiver");
    }
    rels = other->relations();
  }
  const Quiver& q = pres->quiver();
  const auto r = ext2_dimension(*pres, rels, vertex_named(q, args.x), vertex_named(q, args.y));
  Outcome out;
  out.result = {{"x", args.x},
                {"y", args.y},
                {"relation_count", r.relation_count},
                {"quotient_dimension", r.quotient_dimension},
                {"agree", r.agree()}};
  out.text = "#R(" + args.x + "," + args.y + ") = " + std::to_string(r.relation_count) +
             ", dim 1_y (I/(IJ+JI)) 1_x = " + std::to_string(r.quotient_dimension) +
             (r.agree() ? "\n" : "\nDISAGREE\n");
  out.exit_code = r.agree() ? kOk : kCheckFailed;
  return out;
}

// ---------------------------------------------------------------- classify

Outcome run_classify(const AlgebraArgs& args) {
  if (args.family.empty()) throw UsageError("classify needs --family");
  const auto desc = family_descriptor(args);
  const bool irreducible = is_geometrically_irreducible_family(desc);
  const auto pres = build_family(desc);
  Outcome out;
  out.result = {{"family", describe(desc)},
                {"geometrically_irreducible", irreducible},
                {"weakly_triangular", is_weakly_triangular(pres->quiver())},
                {"simple_loop_extension", is_simple_loop_extension(*pres)}};
  out.text = describe(desc) + ": " + (irreducible ? "" : "not ") + "geometrically irreducible\n";
  return out;
}

// ---------------------------------------------------------------- format

Outcome run_format(const AlgebraArgs& args) {
  const auto pres = load_algebra(args);
  Outcome out;
  out.text = print_quiver_spec(*pres);
  out.result = {{"name", pres->name()},
                {"truncation_bound", pres->truncation_bound()},
                {"bound_explicit", pres->bound_is_explicit()},
                {"spec", out.text}};
  return out;
}

}  // namespace

std::vector<Command> register_commands(CLI::App& app) {
  std::vector<Command> commands;

  {
    auto a = std::make_shared<CheckArgs>();
    auto* sub = app.add_subcommand("check", "Check a representation against the relations");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--rep", a->rep, "Representation JSON")->required();
    commands.push_back({sub, [a] { return run_check(*a); }});
  }
  {
    auto a = std::make_shared<HomArgs>();
    auto* sub = app.add_subcommand("hom", "Basis of Hom(source, target)");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--source", a->source, "Source representation JSON")->required();
    sub->add_option("--target", a->target, "Target representation JSON")->required();
    commands.push_back({sub, [a] { return run_hom(*a); }});
  }
  {
    auto a = std::make_shared<CocycleArgs>();
    auto* sub = app.add_subcommand("cocycles", "Basis of the cocycle space Z^{U,V}");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--u", a->u, "U representation JSON")->required();
    sub->add_option("--v", a->v, "V representation JSON")->required();
    commands.push_back({sub, [a] { return run_cocycles(*a); }});
  }
  {
    auto a = std::make_shared<ExtendArgs>();
    auto* sub = app.add_subcommand("extend", "Build W^{V,Z,U} from a cocycle");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--u", a->u, "U representation JSON")->required();
    sub->add_option("--v", a->v, "V representation JSON")->required();
    sub->add_option("--z", a->z, "Cocycle blocks JSON")->required();
    commands.push_back({sub, [a] { return run_extend(*a); }});
  }
  {
    auto a = std::make_shared<SplitArgs>();
    auto* sub = app.add_subcommand("split", "Put W in block triangular form along a monomorphism");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--v", a->v, "Submodule V JSON")->required();
    sub->add_option("--w", a->w, "Module W JSON")->required();
    sub->add_option("--map", a->map, "Monomorphism f JSON")->required();
    sub->add_option("--complement", a->complement, "Complement h JSON");
    commands.push_back({sub, [a] { return run_split(*a); }});
  }
  {
    auto a = std::make_shared<VarietyArgs>();
    auto* sub = app.add_subcommand("count", "Count F_q-points of a variety");
    add_variety_options(sub, *a);
    sub->add_option("--q", a->q, "Prime field size");
    commands.push_back({sub, [a] { return run_count(*a); }});
  }
  {
    auto a = std::make_shared<ProbeArgs>();
    auto* sub = app.add_subcommand("probe", "Fit point counts to c q^D over several q");
    add_variety_options(sub, a->variety);
    sub->add_option("--qs", a->qs, "Prime field sizes, comma separated")->delimiter(',');
    commands.push_back({sub, [a] { return run_probe(*a); }});
  }
  {
    auto a = std::make_shared<CensusArgs>();
    auto* sub = app.add_subcommand("census-hom", "Points of {a_i b = 0} and of the hom variety");
    sub->add_option("--n", a->n, "Number of arrows")->required();
    sub->add_option("--q", a->q, "Prime field size")->required();
    sub->add_option("--budget", a->budget, "Maximum number of candidate points");
    commands.push_back({sub, [a] { return run_census(*a); }});
  }
  {
    auto a = std::make_shared<WitnessArgs>();
    auto* sub = app.add_subcommand("witness-mono", "Two disjoint open sets in M_B((1,1),(1,l))");
    sub->add_option("--m", a->m, "Loop nilpotency")->required();
    sub->add_option("--l", a->l, "2 for A(n,m,1), m for A(n,m,m-1)")->required();
    sub->add_option("--n", a->n, "Number of arrows")->required();
    sub->add_option("--q", a->q, "Prime field size")->required();
    sub->add_option("--budget", a->budget, "Maximum number of candidate points");
    commands.push_back({sub, [a] { return run_witness(*a); }});
  }
  {
    auto a = std::make_shared<ProductArgs>();
    auto* sub = app.add_subcommand("product-check", "#rep B_n against #rep B_1 * q^((n-1)de)");
    sub->add_option("--n", a->n, "Number of arrows")->required();
    sub->add_option("--m", a->m, "Loop nilpotency")->required();
    sub->add_option("--d", a->d, "Dimension at vertex 0")->required();
    sub->add_option("--e", a->e, "Dimension at vertex 1")->required();
    sub->add_option("--q", a->q, "Prime field size")->required();
    sub->add_option("--threads", a->threads, "Worker threads");
    sub->add_option("--budget", a->budget, "Maximum number of candidate points");
    commands.push_back({sub, [a] { return run_product(*a); }});
  }
  {
    auto a = std::make_shared<Ext2Args>();
    auto* sub = app.add_subcommand("ext2", "Relation count against dim 1_y (I/(IJ+JI)) 1_x");
    add_algebra_options(sub, a->algebra);
    sub->add_option("--x", a->x, "Source vertex")->required();
    sub->add_option("--y", a->y, "Target vertex")->required();
    sub->add_option("--relations", a->relations, "DSL file whose relations form R");
    commands.push_back({sub, [a] { return run_ext2(*a); }});
  }
  {
    auto a = std::make_shared<AlgebraArgs>();
    auto* sub = app.add_subcommand("classify", "Geometric irreducibility of a named family");
    add_algebra_options(sub, *a);
    commands.push_back({sub, [a] { return run_classify(*a); }});
  }
  {
    auto a = std::make_shared<AlgebraArgs>();
    auto* sub = app.add_subcommand("format", "Print a presentation in canonical DSL form");
    add_algebra_options(sub, *a);
    commands.push_back({sub, [a] { return run_format(*a); }});
  }
  return commands;
}

}  // namespace qvl::cli

#include "crossflip/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "crossflip/coloring.hpp"
#include "crossflip/constructions.hpp"
#include "crossflip/dual_graph.hpp"
#include "crossflip/error.hpp"
#include "crossflip/flips.hpp"
#include "crossflip/io.hpp"
#include "crossflip/search.hpp"
#include "crossflip/topology.hpp"

namespace crossflip {

namespace {

// `fixture:NAME` or a path.
std::filesystem::path resolve(const std::string& input) {
  constexpr std::string_view prefix = "fixture:";
  if (input.starts_with(prefix)) return fixture_path(fixture(input.substr(prefix.size())).file);
  return input;
}

struct Loaded {
  Complex complex;
  std::vector<Face> listed;
  std::map<std::string, Vertex> names;
};

Loaded load_input(const std::string& input) {
  FaceList list = load_face_list(resolve(input));
  if (list.faces.empty()) throw Error(ErrorKind::VoidComplex, "no facets in " + input);
  Complex c = make_complex(list.faces);
  return {std::move(c), std::move(list.faces), std::move(list.names)};
}

Coloring coloring_for(const Complex& complex, const std::string& file) {
  if (!file.empty()) return load_coloring(resolve(file));
  auto found = find_coloring(complex);
  if (!found) throw Error(ErrorKind::NotBalanced, "input has no proper (d+1)-coloring");
  return *found;
}

std::string join(const std::vector<long long>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + ")";
}

std::string join(const std::vector<int>& xs) {
  std::vector<long long> wide(xs.begin(), xs.end());
  return join(wide);
}

template <class T>
void write_text(const std::string& path, const T& writer) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  writer(out);
}

struct ReduceArgs {
  std::string input, coloring, protect, out, coloring_out, log;
  int budget = 500;
  std::uint64_t seed = 0;
  int burst = 3;
  int target_f0 = -1;
  double time_limit = 0;
  bool sufficient = false;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const Loaded in = load_input(a.input);
  const Coloring k = coloring_for(in.complex, a.coloring);
  ReduceOptions options;
  options.budget = a.budget;
  options.seed = a.seed;
  options.upflip_burst = a.burst;
  options.sufficient_only = a.sufficient;
  if (a.target_f0 >= 0) options.target_f0 = a.target_f0;
  if (a.time_limit > 0) options.time_limit = std::chrono::milliseconds(static_cast<long long>(a.time_limit * 1000));
  if (!a.protect.empty()) options.protected_edges = load_edges(resolve(a.protect));

  const SearchState s = reduce(in.complex, k, options);
  out << "input_f=" << f_vector(in.complex).str() << "\n";
  out << "best_f=" << f_vector(s.best).str() << "\n";
  out << "final_f=" << f_vector(s.complex).str() << "\n";
  out << "steps=" << s.steps << "\n";
  out << "stop=" << (s.stop_reason.empty() ? "budget" : s.stop_reason) << "\n";
  out << "seed=" << a.seed << "\n";
  if (!a.out.empty()) save_complex(a.out, s.best);
  if (!a.coloring_out.empty()) save_coloring(a.coloring_out, s.best_coloring);
  if (!a.log.empty())
    write_text(a.log, [&](std::ostream& log) {
      for (const auto& e : s.history) log << e.str() << "\n";
    });
  return kExitOk;
}

struct FlipGraphArgs {
  std::string input, coloring, dot;
  int cap = 14;
  std::size_t max_nodes = 5000;
  bool sufficient = false;
};

int cmd_flipgraph(const FlipGraphArgs& a, std::ostream& out) {
  const Loaded in = load_input(a.input);
  const Coloring k = coloring_for(in.complex, a.coloring);
  const FlipGraph g = explore_flip_graph(in.complex, k, {a.cap, a.sufficient, a.max_nodes});
  std::map<int, int> per_f0;
  for (const auto& n : g.nodes) ++per_f0[n.f0];
  out << "nodes=" << g.nodes.size() << "\n";
  out << "edges=" << g.edges.size() << "\n";
  out << "truncated=" << (g.truncated ? "true" : "false") << "\n";
  for (const auto& [f0, count] : per_f0) out << "nodes_f0_" << f0 << "=" << count << "\n";
  if (!a.dot.empty()) write_text(a.dot, [&](std::ostream& dot) { dot << to_dot(g); });
  return kExitOk;
}

struct CheckArgs {
  std::string input, coloring, shelling, protect;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const Loaded in = load_input(a.input);
  const Complex& c = in.complex;
  bool ok = true;

  out << "f_vector=" << f_vector(c).str() << "\n";
  out << "pure=" << (c.is_pure() ? "true" : "false") << "\n";
  std::optional<Coloring> k;
  if (!a.coloring.empty()) {
    k = load_coloring(resolve(a.coloring));
    if (!is_proper(c, *k) || k->num_colors() != c.dim() + 1) {
      ok = false;
      k.reset();
    }
  } else {
    k = find_coloring(c);
  }
  out << "balanced=" << (k ? "true" : "false") << "\n";
  if (k) out << "class_sizes=" << join(k->class_sizes()) << "\n";

  const bool pseudo = is_pseudomanifold(c);
  out << "pseudomanifold=" << (pseudo ? "true" : "false") << "\n";
  out << "normal=" << (is_normal_pseudomanifold(c) ? "true" : "false") << "\n";
  const BettiProfile b = betti_f2(c);
  out << "betti_f2=" << b.str() << "\n";
  out << "euler=" << b.euler() << "\n";
  if (pseudo) out << "orientable=" << (is_orientable(c) ? "true" : "false") << "\n";

  if (c.dim() == 2 && c.is_pure()) {
    try {
      out << "surface=" << classify_surface(c).name() << "\n";
    } catch (const Error&) {
      out << "surface=none\n";
    }
    const SingularityReport sing = singular_faces(c);
    out << "singular_edges=" << sing.edges.size() << "\n";
    out << "singular_vertices=" << sing.vertices.size() << "\n";
    out << "f0_sing=" << sing.f0_sing << "\n";
    out << "dunce_relations=" << (dunce_relations(f_vector(c), sing.f0_sing) ? "true" : "false") << "\n";
  }

  if (!a.shelling.empty()) {
    const auto order = a.shelling == "file" ? in.listed : load_face_list(resolve(a.shelling)).faces;
    const bool valid = verify_shelling(c, order);
    out << "shelling=" << (valid ? "valid" : "invalid") << "\n";
    ok = ok && valid;
  }
  if (!a.protect.empty()) {
    std::size_t present = 0;
    const auto edges = load_edges(resolve(a.protect));
    for (const auto& e : edges) present += c.contains(e) ? 1 : 0;
    out << "protected_edges=" << present << "/" << edges.size() << "\n";
    ok = ok && present == edges.size();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_fvector(const std::string& input, bool subdivide, std::ostream& out) {
  Complex c = load_input(input).complex;
  if (subdivide) c = barycentric_subdivision(c);
  out << "f_vector=" << f_vector(c).str() << "\n";
  return kExitOk;
}

int cmd_subdivide(const std::string& input, const std::string& path, const std::string& coloring_out,
                  std::ostream& out) {
  const Complex c = load_input(input).complex;
  const Subdivision sd = barycentric_subdivision_with_faces(c);
  out << "f_vector=" << f_vector(sd.complex).str() << "\n";
  if (!path.empty()) save_complex(path, sd.complex);
  if (!coloring_out.empty()) save_coloring(coloring_out, dimension_coloring(sd));
  return kExitOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
  return parts;
}

int parse_count(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(s, &used);
    if (used == s.size() && value >= 0) return value;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--recipe", "bad " + what + " '" + s + "'");
}

int cmd_construct(const std::string& recipe, const std::string& input, const std::string& path,
                  const std::string& coloring_out, std::ostream& out) {
  const auto parts = split(recipe, ':');
  ColoredComplex result;
  std::map<std::string, Vertex> names;
  const std::string& kind = parts.empty() ? recipe : parts[0];
  if (kind == "cross-polytope" && parts.size() == 2) {
    result = colored_cross_polytope(parse_count(parts[1], "dimension"));
  } else if (kind == "stacked" && parts.size() == 3) {
    const int d = parse_count(parts[1], "dimension");
    const int n = parse_count(parts[2], "vertex count");
    if (d < 1 || n % (d + 1) != 0 || n < 2 * (d + 1))
      throw CLI::ValidationError("--recipe", "stacked:d:n needs n a multiple of d+1 and at least 2(d+1)");
    result = cross_polytopal_stacked_sphere(d, n / (d + 1) - 1);
  } else if (recipe == "s2xs1-12") {
    Construction c = build_s2_twisted_s1_12();
    result = std::move(c.result);
    names = std::move(c.names);
  } else if (recipe == "s2xs1-16") {
    Construction c = build_s2_times_s1_16();
    result = std::move(c.result);
    names = std::move(c.names);
  } else if (recipe == "bundle2:twisted" || recipe == "bundle2:orientable") {
    Construction c = build_bundle_double(recipe == "bundle2:twisted" ? BundleKind::Twisted : BundleKind::Orientable);
    result = std::move(c.result);
    names = std::move(c.names);
  } else if (kind == "suspend" && parts.size() == 2) {
    if (input.empty()) throw CLI::ValidationError("--input", "suspend:k needs --input");
    const Complex base = load_input(input).complex;
    result = suspension_tower({base, coloring_for(base, {})}, parse_count(parts[1], "suspension count"));
  } else {
    throw CLI::ValidationError("--recipe", "unknown recipe '" + recipe + "'");
  }

  const BettiProfile b = betti_f2(result.complex);
  out << "f_vector=" << f_vector(result.complex).str() << "\n";
  out << "betti_f2=" << b.str() << "\n";
  if (result.complex.dim() >= 3 && b.reduced.size() > 1)
    out << "walkup_gap=" << walkup_equality_gap(result.complex, b.reduced[1]) << "\n";
  if (!path.empty()) save_complex(path, result.complex, names, recipe);
  if (!coloring_out.empty()) save_coloring(coloring_out, result.coloring);
  return kExitOk;
}

int cmd_catalog(bool verify, std::ostream& out) {
  bool ok = true;
  for (const Fixture& fx : fixture_catalog()) {
    out << fx.name << " file=" << fx.file << " f=" << join(fx.f_vector) << " betti_f2=" << join(fx.betti);
    if (fx.knot_file) out << " knot=" << *fx.knot_file;
    if (fx.shelling_order) out << " shelling=file-order";
    if (verify) {
      const Loaded in = load_input(fixture_path(fx.file).string());
      bool good = f_vector(in.complex).entries == fx.f_vector && betti_f2(in.complex).betti == fx.betti;
      if (fx.shelling_order) good = good && verify_shelling(in.complex, in.listed);
      if (fx.knot_file) {
        const auto edges = load_edges(fixture_path(*fx.knot_file));
        good = good && edges.size() == 6 &&
               std::all_of(edges.begin(), edges.end(), [&](const Face& e) { return in.complex.contains(e); });
      }
      out << (good ? " ok" : " MISMATCH");
      ok = ok && good;
    }
    out << "  # " << fx.description << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_flips(int d, std::ostream& out) {
  const FlipCatalog& catalog = flip_catalog(d);
  for (const FlipTemplate& t : catalog.templates()) {
    out << t.id << " " << t.name << " " << to_string(t.kind) << " phi=" << f_vector(t.phi).str()
        << " complement=" << f_vector(t.complement).str() << " inverse=" << t.inverse_id
        << (t.sufficient ? " sufficient" : "") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced triangulations and cross-flips", "crossflip"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker cap (the search is currently single-threaded)")
      ->check(CLI::PositiveNumber);

  ReduceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "Greedy vertex reduction by cross-flips");
  reduce_cmd->add_option("--input", ra.input, "Facet file or fixture:NAME")->required();
  reduce_cmd->add_option("--coloring", ra.coloring, "vertex:color file (found by propagation if omitted)");
  reduce_cmd->add_option("--budget", ra.budget, "Maximum number of flips")->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--seed", ra.seed, "Random seed");
  reduce_cmd->add_option("--upflip-burst", ra.burst, "Random up-flips when no down-flip applies");
  reduce_cmd->add_option("--protect", ra.protect, "Edges no flip may delete");
  reduce_cmd->add_option("--target-f0", ra.target_f0, "Stop once this many vertices are reached");
  reduce_cmd->add_option("--time-limit", ra.time_limit, "Wall-clock limit in seconds");
  reduce_cmd->add_flag("--sufficient", ra.sufficient, "Only use the sufficient sub-catalog");
  reduce_cmd->add_option("--out", ra.out, "Write the best complex here");
  reduce_cmd->add_option("--coloring-out", ra.coloring_out, "Write its coloring here");
  reduce_cmd->add_option("--log", ra.log, "Write the flip log here");

  FlipGraphArgs fa;
  auto* graph_cmd = app.add_subcommand("flipgraph", "Explore the cross-flip graph up to isomorphism");
  graph_cmd->add_option("--input", fa.input, "Facet file or fixture:NAME")->required();
  graph_cmd->add_option("--coloring", fa.coloring, "vertex:color file");
  graph_cmd->add_option("--cap", fa.cap, "Only up-flip from complexes with fewer vertices");
  graph_cmd->add_option("--max-nodes", fa.max_nodes, "Stop adding up-flip nodes past this many");
  graph_cmd->add_flag("--sufficient", fa.sufficient, "Only use the sufficient sub-catalog");
  graph_cmd->add_option("--dot", fa.dot, "Write the graph in DOT format");

  CheckArgs ca;
  auto* check_cmd = app.add_subcommand("check", "Report invariants of a complex");
  check_cmd->add_option("--input", ca.input, "Facet file or fixture:NAME")->required();
  check_cmd->add_option("--coloring", ca.coloring, "vertex:color file to verify");
  check_cmd->add_option("--shelling", ca.shelling, "Facet order file, or 'file' for the input's own order");
  check_cmd->add_option("--protect", ca.protect, "Edges that must be present");

  std::string fv_input;
  bool fv_subdivide = false;
  auto* fvector_cmd = app.add_subcommand("fvector", "Print the f-vector");
  fvector_cmd->add_option("--input", fv_input, "Facet file or fixture:NAME")->required();
  fvector_cmd->add_flag("--subdivide", fv_subdivide, "Of the barycentric subdivision");

  std::string sd_input, sd_out, sd_coloring;
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  subdivide_cmd->add_option("--input", sd_input, "Facet file or fixture:NAME")->required();
  subdivide_cmd->add_option("--out", sd_out, "Write the subdivision here");
  subdivide_cmd->add_option("--coloring-out", sd_coloring, "Write its dimension coloring here");

  std::string recipe, co_input, co_out, co_coloring;
  auto* construct_cmd = app.add_subcommand("construct", "Build a complex from a recipe");
  construct_cmd
      ->add_option("--recipe", recipe,
                   "cross-polytope:d | stacked:d:n | s2xs1-12 | s2xs1-16 | bundle2:twisted | bundle2:orientable | "
                   "suspend:k")
      ->required();
  construct_cmd->add_option("--input", co_input, "Base complex for suspend:k");
  construct_cmd->add_option("--out", co_out, "Write the complex here");
  construct_cmd->add_option("--coloring-out", co_coloring, "Write its coloring here");

  bool verify = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "List bundled fixtures");
  catalog_cmd->add_flag("--verify", verify, "Recompute and compare the expected values");

  int flips_dim = 3;
  auto* flips_cmd = app.add_subcommand("flips", "List the basic cross-flip templates");
  flips_cmd->add_option("--dim", flips_dim, "Dimension")->check(CLI::Range(1, 5));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "crossflip: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(ra, out);
    if (*graph_cmd) return cmd_flipgraph(fa, out);
    if (*check_cmd) return cmd_check(ca, out);
    if (*fvector_cmd) return cmd_fvector(fv_input, fv_subdivide, out);
    if (*subdivide_cmd) return cmd_subdivide(sd_input, sd_out, sd_coloring, out);
    if (*construct_cmd) return cmd_construct(recipe, co_input, co_out, co_coloring, out);
    if (*catalog_cmd) return cmd_catalog(verify, out);
    if (*flips_cmd) return cmd_flips(flips_dim, out);
  } catch (const CLI::ValidationError& e) {
    err << "crossflip: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "crossflip: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "crossflip: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace crossflip

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "crossflip/cli.hpp"
#include "crossflip/error.hpp"
#include "crossflip/io.hpp"
#include "helpers.hpp"

using namespace crossflip;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("crossflip_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Facet lines with their labels, sorted inside each facet.
std::set<Face> facet_lines(const fs::path& p) {
  const auto list = load_face_list(p);
  return {list.faces.begin(), list.faces.end()};
}

}  // namespace

TEST_CASE("facet files") {
  const Complex rp3 = load_complex(fixture_path("rp3_16.txt"));
  CHECK(rp3.num_facets() == 72);
  CHECK(rp3.num_vertices() == 16);
  CHECK(testing::fv(load_complex(fixture_path("triple_trefoil_28.txt"))) ==
        std::vector<long long>{1, 28, 204, 352, 176});

  for (const auto& fx : fixture_catalog()) {
    const fs::path copy = scratch_dir() / fx.file;
    const FaceList list = load_face_list(fixture_path(fx.file));
    save_complex(copy, make_complex(list.faces), list.names);
    CHECK(facet_lines(copy) == facet_lines(fixture_path(fx.file)));
    CHECK(load_face_list(copy).names == list.names);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_complex(""), Error);
  try {
    parse_complex("# ok\n[1,2,3]\n[1,2\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_complex("[1,2,v_1]\n");
    FAIL("expected a missing name map");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NeedsNameMap);
  }
  CHECK(parse_complex("# label v_1 = 7\n[1,2,v_1]\n").facets() == std::vector<Face>{{1, 2, 7}});
  try {
    parse_complex("");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::VoidComplex);
  }
}

TEST_CASE("coloring files") {
  const Coloring k = cross_polytope_coloring(3);
  const fs::path p = scratch_dir() / "k.txt";
  save_coloring(p, k);
  CHECK(load_coloring(p) == k);
  std::istringstream bad("1:x\n");
  CHECK_THROWS_AS(parse_coloring(bad), Error);
}

TEST_CASE("fixture catalog") {
  int tables = 0;
  for (const auto& fx : fixture_catalog()) {
    const Complex c = load_complex(fixture_path(fx.file));
    CHECK(f_vector(c).entries == fx.f_vector);
    if (fx.name == "rp3_16" || fx.name == "double_trefoil_22" || fx.name == "triple_trefoil_28") ++tables;
    if (fx.knot_file) {
      const auto edges = load_edges(fixture_path(*fx.knot_file));
      CHECK(edges.size() == 6);
      for (const auto& e : edges) CHECK(c.contains(e));
    }
  }
  CHECK(tables == 3);
  const Run r = run({"catalog", "--verify"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("fixture directory override") {
  const fs::path dir = scratch_dir() / "fixtures";
  fs::create_directories(dir);
  std::ofstream(dir / "s2_simplex.txt") << "[0,1]\n[1,2]\n[0,2]\n";
  ::setenv("CROSSFLIP_FIXTURE_DIR", dir.c_str(), 1);
  CHECK(fixture_path("s2_simplex.txt") == dir / "s2_simplex.txt");
  CHECK(load_complex(fixture_path("s2_simplex.txt")).dim() == 1);
  ::unsetenv("CROSSFLIP_FIXTURE_DIR");
  CHECK(load_complex(fixture_path("s2_simplex.txt")).dim() == 2);
}

TEST_CASE("check subcommand") {
  const Run r = run({"check", "--input", "fixture:double_trefoil_22", "--shelling", "file", "--protect",
                     fixture_path("double_trefoil_22_knot.txt").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("shelling=valid") != std::string::npos);
  CHECK(r.out.find("protected_edges=6/6") != std::string::npos);
  CHECK(r.out.find("betti_f2=(1,0,0,1)") != std::string::npos);

  const Run surface = run({"check", "--input", "fixture:rp2_6"});
  CHECK(surface.out.find("surface=RP^2") != std::string::npos);
  CHECK(surface.out.find("balanced=false") != std::string::npos);

  // A shelling order that starts with two disjoint facets.
  const fs::path order = scratch_dir() / "order.txt";
  {
    std::ofstream o(order);
    const Complex cross = cross_polytope_boundary(2);
    o << "[0,1,2]\n[3,4,5]\n";
    for (const auto& f : cross.facets())
      if (f != Face{0, 1, 2} && f != Face{3, 4, 5}) o << to_string(f) << "\n";
  }
  const fs::path octa = scratch_dir() / "octa.txt";
  save_complex(octa, cross_polytope_boundary(2));
  const Run bad = run({"check", "--input", octa.string(), "--shelling", order.string()});
  CHECK(bad.code == kExitCheckFailed);
  CHECK(bad.out.find("shelling=invalid") != std::string::npos);
}

TEST_CASE("fvector and subdivide") {
  const Run r = run({"fvector", "--input", "fixture:s3_simplex", "--subdivide"});
  CHECK(r.out == "f_vector=(1,30,150,240,120)\n");
  const fs::path out = scratch_dir() / "bd.txt";
  const fs::path k = scratch_dir() / "bd_k.txt";
  CHECK(run({"subdivide", "--input", "fixture:s2_simplex", "--out", out.string(), "--coloring-out", k.string()})
            .code == kExitOk);
  CHECK(is_proper(load_complex(out), load_coloring(k)));
}

TEST_CASE("reduce subcommand") {
  const fs::path bd = scratch_dir() / "bd_rp2.txt";
  REQUIRE(run({"subdivide", "--input", "fixture:rp2_6", "--out", bd.string()}).code == kExitOk);

  const fs::path same = scratch_dir() / "same.txt";
  CHECK(run({"reduce", "--input", bd.string(), "--budget", "0", "--out", same.string()}).code == kExitOk);
  CHECK(load_complex(same) == load_complex(bd));

  auto reduce_into = [&](const std::string& tag) {
    const fs::path out = scratch_dir() / ("best_" + tag + ".txt");
    const fs::path log = scratch_dir() / ("log_" + tag + ".txt");
    const Run r = run({"reduce", "--input", bd.string(), "--budget", "300", "--seed", "7", "--target-f0", "9", "--out",
                       out.string(), "--log", log.string()});
    CHECK(r.code == kExitOk);
    return r.out + slurp(out) + slurp(log);
  };
  const std::string first = reduce_into("a");
  CHECK(first == reduce_into("b"));
  CHECK(first.find("best_f=(1,9,24,16)") != std::string::npos);
}

TEST_CASE("construct and flipgraph subcommands") {
  const Run twisted = run({"construct", "--recipe", "bundle2:twisted"});
  CHECK(twisted.out.find("f_vector=(1,16,84,136,68)") != std::string::npos);
  CHECK(twisted.out.find("walkup_gap=0") != std::string::npos);

  const fs::path out = scratch_dir() / "d12.txt";
  CHECK(run({"construct", "--recipe", "s2xs1-12", "--out", out.string()}).code == kExitOk);
  CHECK(load_face_list(out).names.contains("x1"));
  CHECK(run({"construct", "--recipe", "stacked:3:16"}).out.find("f_vector=(1,16,60,88,44)") != std::string::npos);
  CHECK(run({"construct", "--recipe", "stacked:3:15"}).code == kExitUsage);

  const fs::path dot = scratch_dir() / "g.dot";
  const fs::path octa = scratch_dir() / "octa2.txt";
  save_complex(octa, cross_polytope_boundary(2));
  const Run g = run({"flipgraph", "--input", octa.string(), "--cap", "8", "--sufficient", "--dot", dot.string()});
  CHECK(g.code == kExitOk);
  CHECK(g.out.find("nodes_f0_6=1") != std::string::npos);
  CHECK(slurp(dot).rfind("digraph", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"check"}).code == kExitUsage);
  CHECK(run({"check", "--input", "/nonexistent/file.txt"}).code == kExitCheckFailed);
  CHECK(run({"reduce", "--input", "fixture:torus_7"}).code == kExitCheckFailed);  // not balanced
  CHECK(run({"--threads", "2", "flips", "--dim", "2"}).code == kExitOk);
}

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossflip/coloring.hpp"
#include "crossflip/complex.hpp"

namespace crossflip {

/// A face list as written: `[v1,v2,...]` per line, `#` comments, and
/// `# label NAME = INT` lines binding symbolic labels.
struct FaceList {
  std::vector<Face> faces;  // file order, each sorted
  std::map<std::string, Vertex> names;
};

/// Throws ParseError (with line number) and NeedsNameMap for unbound names.
FaceList parse_face_list(std::istream& in);
FaceList parse_face_list(const std::string& text);
FaceList load_face_list(const std::filesystem::path& path);

/// A face list read as a complex; VoidComplex when there are no facets.
Complex load_complex(const std::filesystem::path& path);
Complex parse_complex(const std::string& text);

/// Protected edges: a face list whose entries all have two vertices.
std::vector<Face> load_edges(const std::filesystem::path& path);

/// `vertex:color` per line.
Coloring parse_coloring(std::istream& in);
Coloring load_coloring(const std::filesystem::path& path);

void write_complex(std::ostream& out, const Complex& complex, const std::map<std::string, Vertex>& names = {},
                   const std::string& comment = {});
void save_complex(const std::filesystem::path& path, const Complex& complex,
                  const std::map<std::string, Vertex>& names = {}, const std::string& comment = {});
void write_coloring(std::ostream& out, const Coloring& coloring);
void save_coloring(const std::filesystem::path& path, const Coloring& coloring);

/// Bundled fixture with the values it must reproduce.
struct Fixture {
  std::string name;
  std::string file;
  std::string description;
  std::vector<long long> f_vector;  // f_{-1}..f_d
  std::vector<long long> betti;     // over F_2
  std::optional<std::string> knot_file;
  bool shelling_order = false;  // facet order in the file is a shelling
};

const std::vector<Fixture>& fixture_catalog();
const Fixture& fixture(const std::string& name);

/// CROSSFLIP_FIXTURE_DIR when set, else the source tree's fixtures/.
std::filesystem::path fixture_dir();
std::filesystem::path fixture_path(const std::string& file);

}  // namespace crossflip

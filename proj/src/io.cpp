#include "crossflip/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "crossflip/error.hpp"

namespace crossflip {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::optional<long long> as_integer(const std::string& token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

Error parse_error(int line, const std::string& what) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return in;
}

}  // namespace

FaceList parse_face_list(std::istream& in) {
  static const std::regex label_line(R"(#\s*label\s+(\S+)\s*=\s*(-?\d+)\s*)");
  FaceList out;
  std::vector<std::pair<int, std::vector<std::string>>> pending;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '#') {
      std::smatch m;
      if (std::regex_match(text, m, label_line)) {
        const long long value = std::stoll(m[2].str());
        if (value < 0) throw parse_error(line, "negative label");
        out.names[m[1].str()] = static_cast<Vertex>(value);
      }
      continue;
    }
    if (text.front() != '[' || text.back() != ']') throw parse_error(line, "expected [v1,v2,...]");
    std::vector<std::string> tokens;
    std::stringstream body(text.substr(1, text.size() - 2));
    for (std::string token; std::getline(body, token, ',');) {
      token = trim(token);
      if (token.empty()) throw parse_error(line, "empty label");
      tokens.push_back(std::move(token));
    }
    if (tokens.empty()) throw parse_error(line, "empty face");
    pending.emplace_back(line, std::move(tokens));
  }

  for (const auto& [line, tokens] : pending) {
    Face face;
    for (const auto& token : tokens) {
      if (auto value = as_integer(token)) {
        if (*value < 0) throw parse_error(line, "negative label " + token);
        face.push_back(static_cast<Vertex>(*value));
      } else if (auto it = out.names.find(token); it != out.names.end()) {
        face.push_back(it->second);
      } else {
        throw Error(ErrorKind::NeedsNameMap,
                    "line " + std::to_string(line) + ": symbolic label '" + token + "' has no `# label` entry");
      }
    }
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end()) throw parse_error(line, "repeated vertex");
    out.faces.push_back(std::move(face));
  }
  return out;
}

FaceList parse_face_list(const std::string& text) {
  std::istringstream in(text);
  return parse_face_list(in);
}

FaceList load_face_list(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_face_list(in);
}

namespace {

Complex to_complex(FaceList list) {
  if (list.faces.empty()) throw Error(ErrorKind::VoidComplex, "no facets");
  return make_complex(std::move(list.faces));
}

}  // namespace

Complex load_complex(const std::filesystem::path& path) { return to_complex(load_face_list(path)); }

Complex parse_complex(const std::string& text) { return to_complex(parse_face_list(text)); }

std::vector<Face> load_edges(const std::filesystem::path& path) {
  auto list = load_face_list(path);
  for (const auto& e : list.faces)
    if (e.size() != 2) throw Error(ErrorKind::ParseError, to_string(e) + " is not an edge");
  return list.faces;
}

Coloring parse_coloring(std::istream& in) {
  std::vector<std::pair<Vertex, int>> pairs;
  int colors = 0;
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw parse_error(line, "expected vertex:color");
    const auto v = as_integer(trim(text.substr(0, colon)));
    const auto c = as_integer(trim(text.substr(colon + 1)));
    if (!v || !c || *v < 0 || *c < 0) throw parse_error(line, "expected vertex:color");
    pairs.emplace_back(static_cast<Vertex>(*v), static_cast<int>(*c));
    colors = std::max(colors, static_cast<int>(*c) + 1);
  }
  Coloring out(colors);
  for (const auto& [v, c] : pairs) out.set(v, c);
  return out;
}

Coloring load_coloring(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_coloring(in);
}

void write_complex(std::ostream& out, const Complex& complex, const std::map<std::string, Vertex>& names,
                   const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const auto& [name, label] : names) out << "# label " << name << " = " << label << "\n";
  for (const auto& f : complex.facets()) out << to_string(f) << "\n";
}

void save_complex(const std::filesystem::path& path, const Complex& complex,
                  const std::map<std::string, Vertex>& names, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_complex(out, complex, names, comment);
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
  for (Vertex v : coloring.vertices()) out << v << ":" << coloring.color(v) << "\n";
}

void save_coloring(const std::filesystem::path& path, const Coloring& coloring) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_coloring(out, coloring);
}

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> fixtures{
      {"s2_simplex", "s2_simplex.txt", "boundary of the tetrahedron", {1, 4, 6, 4}, {1, 0, 1}, {}, false},
      {"s3_simplex", "s3_simplex.txt", "boundary of the 4-simplex", {1, 5, 10, 10, 5}, {1, 0, 0, 1}, {}, false},
      {"rp2_6", "rp2_6.txt", "6-vertex real projective plane", {1, 6, 15, 10}, {1, 1, 1}, {}, false},
      {"torus_7", "torus_7.txt", "7-vertex torus", {1, 7, 21, 14}, {1, 2, 1}, {}, false},
      {"rp3_16", "rp3_16.txt", "balanced 16-vertex real projective 3-space", {1, 16, 88, 144, 72},
       {1, 1, 1, 1}, {}, false},
      {"double_trefoil_22", "double_trefoil_22.txt", "balanced 3-sphere with a double-trefoil knot",
       {1, 22, 136, 228, 114}, {1, 0, 0, 1}, "double_trefoil_22_knot.txt", true},
      {"triple_trefoil_28", "triple_trefoil_28.txt", "balanced 3-sphere with a triple-trefoil knot",
       {1, 28, 204, 352, 176}, {1, 0, 0, 1}, "triple_trefoil_28_knot.txt", false},
  };
  return fixtures;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixture_catalog())
    if (f.name == name) return f;
  throw Error(ErrorKind::Io, "unknown fixture " + name);
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("CROSSFLIP_FIXTURE_DIR"); env && *env) return env;
#ifdef CROSSFLIP_FIXTURE_DIR_DEFAULT
  return CROSSFLIP_FIXTURE_DIR_DEFAULT;
#else
  return "fixtures";
#endif
}

std::filesystem::path fixture_path(const std::string& file) { return fixture_dir() / file; }

}  // namespace crossflip

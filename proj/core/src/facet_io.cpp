#include "conlap/facet_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace conlap {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, fields) for each non-blank, comment-stripped line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t pos = 0;
  for (std::size_t line_no = 1; pos <= text.size(); ++line_no) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::vector<Label> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto field =
          trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (field.empty()) throw ParseError(line_no, "empty vertex label");
      fields.emplace_back(field);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    fn(line_no, std::move(fields));
  }
}

}  // namespace

SimplicialComplex parse_facets(std::string_view text) {
  std::vector<std::vector<Label>> sets;
  for_each_record(text, [&](std::size_t line, std::vector<Label> fields) {
    std::set<Label> seen;
    for (const auto& f : fields) {
      if (!seen.insert(f).second) throw ParseError(line, "duplicate vertex '" + f + "'");
    }
    sets.push_back(std::move(fields));
  });
  return generate_complex(sets);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SimplicialComplex read_facet_file(const std::filesystem::path& path) {
  return parse_facets(read_text_file(path));
}

std::string format_facets(const SimplicialComplex& c) {
  std::string out;
  for (auto i : c.facets()) {
    const auto& vs = c[i].vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k].find_first_of(",#\n\r") != Label::npos || trim(vs[k]) != vs[k] || vs[k].empty()) {
        throw std::invalid_argument("label '" + vs[k] + "' cannot be written to a facet file");
      }
      if (k > 0) out += ',';
      out += vs[k];
    }
    out += '\n';
  }
  return out;
}

void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& c) {
  const std::string text = format_facets(c);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Graph parse_graph(std::string_view text) {
  Graph g;
  auto ensure = [&](const Label& l) {
    if (!g.index_of(l)) g.add_vertex(l);
  };
  for_each_record(text, [&](std::size_t line, std::vector<Label> fields) {
    if (fields.size() > 2) throw ParseError(line, "expected a vertex or an edge u,v");
    for (const auto& f : fields) ensure(f);
    if (fields.size() == 2) {
      if (fields[0] == fields[1]) throw ParseError(line, "loop at '" + fields[0] + "'");
      g.add_edge(fields[0], fields[1]);
    }
  });
  return g;
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

}  // namespace conlap

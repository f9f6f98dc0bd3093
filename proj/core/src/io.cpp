#include "wmetric/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "wmetric/error.hpp"

namespace wmetric {

namespace {

struct Line {
  std::size_t number;
  std::string text;
  std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string body = raw.substr(0, raw.find('#'));
    std::istringstream words(body);
    Line line{n, raw, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "", "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Row label "name:" (possibly glued to the colon) followed by entries.
std::pair<std::string, std::vector<std::string>> split_row(const Line& line, bool label_required,
                                                           const std::string& file) {
  std::vector<std::string> toks = line.tokens;
  std::string label;
  if (toks.front().back() == ':') {
    label = toks.front().substr(0, toks.front().size() - 1);
    toks.erase(toks.begin());
  } else if (toks.size() > 1 && toks[1] == ":") {
    label = toks.front();
    toks.erase(toks.begin(), toks.begin() + 2);
  } else if (label_required) {
    throw ParseError(file, line.number, line.text, "table rows look like 'name: e0 e1 ...'");
  }
  return {label, toks};
}

}  // namespace

MonoidPtr parse_monoid(std::string_view text, const std::string& file) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(file, 0, "", "empty monoid file");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "monoid") {
    throw ParseError(file, head.number, head.text, "expected 'monoid finite|rational|revordinal'");
  }
  const std::string& kind = head.tokens[1];
  if (kind == "rational") {
    if (lines.size() > 1) throw ParseError(file, lines[1].number, lines[1].text, "rational monoids take no body");
    return Monoid::extended_rational();
  }
  if (kind == "revordinal") {
    if (lines.size() != 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "height") {
      const Line& bad = lines.size() > 1 ? lines[1] : head;
      throw ParseError(file, bad.number, bad.text, "expected a single 'height <ordinal>' line");
    }
    try {
      return Monoid::reversed_ordinal(Ordinal::parse(lines[1].tokens[1]));
    } catch (const Error& e) {
      throw ParseError(file, lines[1].number, lines[1].text, e.what());
    }
  }
  if (kind != "finite") throw ParseError(file, head.number, head.text, "unknown monoid kind '" + kind + "'");

  if (lines.size() < 2 || lines[1].tokens.front() != "elems" || lines[1].tokens.size() < 2) {
    const Line& bad = lines.size() > 1 ? lines[1] : head;
    throw ParseError(file, bad.number, bad.text, "expected 'elems e0 e1 ...'");
  }
  std::vector<std::string> names(lines[1].tokens.begin() + 1, lines[1].tokens.end());
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw ParseError(file, lines[1].number, lines[1].text, "duplicate element '" + names[i] + "'");
    }
  }
  const std::size_t n = names.size();
  std::vector<std::vector<std::uint32_t>> table(n);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const Line& line = lines[r];
    auto [label, entries] = split_row(line, true, file);
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(file, line.number, line.text, "unknown row element '" + label + "'");
    if (seen[it->second]) throw ParseError(file, line.number, line.text, "duplicate row for '" + label + "'");
    if (entries.size() != n) {
      throw ParseError(file, line.number, line.text,
                       "row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
    }
    for (const auto& e : entries) {
      auto f = index.find(e);
      if (f == index.end()) throw ParseError(file, line.number, line.text, "unknown element '" + e + "'");
      table[it->second].push_back(f->second);
    }
    seen[it->second] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      const Line& last = lines.back();
      throw ParseError(file, last.number, last.text, "table is not total: no row for '" + names[i] + "'");
    }
  }
  try {
    return Monoid::finite_table(std::move(names), std::move(table));
  } catch (const Error& e) {
    throw ParseError(file, lines[1].number, lines[1].text, e.what());
  }
}

MonoidPtr load_monoid(const std::filesystem::path& path) { return parse_monoid(read_file(path), path.string()); }

std::string serialize_monoid(const Monoid& m) {
  std::ostringstream out;
  switch (m.kind()) {
    case MonoidKind::ExtendedRational:
      out << "monoid rational\n";
      break;
    case MonoidKind::ReversedOrdinal:
      out << "monoid revordinal\nheight " << m.height().to_string() << "\n";
      break;
    case MonoidKind::FiniteTable: {
      const auto& names = m.element_names();
      out << "monoid finite\nelems";
      for (const auto& s : names) out << ' ' << s;
      out << "\n";
      for (std::size_t i = 0; i < names.size(); ++i) {
        out << names[i] << ':';
        for (std::size_t j = 0; j < names.size(); ++j) out << ' ' << names[m.table_entry(i, j)];
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

SpaceFile parse_space(std::string_view text, const std::filesystem::path& base_dir, const std::string& file) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(file, 0, "", "empty space file");
  const Line& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != "space") {
    throw ParseError(file, head.number, head.text, "expected 'space <monoid-file> finite|lazy'");
  }
  if (head.tokens[2] == "lazy") {
    throw ParseError(file, head.number, head.text, "lazy spaces are built in code, not read from files");
  }
  if (head.tokens[2] != "finite") throw ParseError(file, head.number, head.text, "unknown space kind '" + head.tokens[2] + "'");

  SpaceFile out;
  out.monoid_ref = head.tokens[1];
  try {
    out.monoid = load_monoid(base_dir / out.monoid_ref);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw ParseError(file, head.number, head.text, "monoid file: " + std::string(e.what()));
    throw;
  }

  if (lines.size() < 2 || lines[1].tokens.front() != "points" || lines[1].tokens.size() < 2) {
    const Line& bad = lines.size() > 1 ? lines[1] : head;
    throw ParseError(file, bad.number, bad.text, "expected 'points p0 p1 ...'");
  }
  std::vector<std::string> names(lines[1].tokens.begin() + 1, lines[1].tokens.end());
  std::unordered_set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) throw ParseError(file, lines[1].number, lines[1].text, "duplicate point name");
  const std::size_t n = names.size();
  if (lines.size() != n + 2) {
    const Line& bad = lines.size() > n + 2 ? lines[n + 2] : lines.back();
    throw ParseError(file, bad.number, bad.text,
                     "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 2));
  }
  std::vector<std::vector<DistanceValue>> matrix;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 2];
    auto [label, entries] = split_row(line, false, file);
    if (!label.empty() && label != names[r]) {
      throw ParseError(file, line.number, line.text, "row " + std::to_string(r) + " should be labeled '" + names[r] + "'");
    }
    if (entries.size() != n) {
      throw ParseError(file, line.number, line.text,
                       "row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
    }
    std::vector<DistanceValue> row;
    for (const auto& e : entries) {
      try {
        row.push_back(out.monoid->parse_literal(e));
      } catch (const Error& err) {
        throw ParseError(file, line.number, line.text, err.what());
      }
    }
    matrix.push_back(std::move(row));
  }
  try {
    out.space = FiniteSpace::create(out.monoid, std::move(names), std::move(matrix));
  } catch (const Error& e) {
    throw ParseError(file, lines[1].number, lines[1].text, e.what());
  }
  return out;
}

SpaceFile load_space(const std::filesystem::path& path) {
  return parse_space(read_file(path), path.parent_path(), path.string());
}

std::string serialize_space(const SpaceFile& s) {
  std::ostringstream out;
  out << "space " << s.monoid_ref << " finite\npoints";
  for (const auto& p : s.space->names()) out << ' ' << p;
  out << "\n";
  const Monoid& m = *s.monoid;
  for (std::size_t i = 0; i < s.space->size(); ++i) {
    out << s.space->names()[i] << ':';
    for (const auto& v : s.space->matrix()[i]) out << ' ' << m.format(v);
    out << "\n";
  }
  return out.str();
}

bool same_space(const FiniteSpace& a, const FiniteSpace& b) {
  return *a.monoid() == *b.monoid() && a.names() == b.names() && a.matrix() == b.matrix();
}

MapFile parse_map(std::string_view text, const std::string& file) {
  MapFile out;
  out.file = file;
  for (const Line& line : split_lines(text)) {
    if (line.tokens.size() != 3 || line.tokens[1] != "->") {
      throw ParseError(file, line.number, line.text, "map lines look like 'p -> q'");
    }
    out.arrows.emplace_back(line.tokens[0], line.tokens[2]);
    out.lines.push_back(line.number);
  }
  return out;
}

MapFile load_map(const std::filesystem::path& path) { return parse_map(read_file(path), path.string()); }

std::string serialize_map(const MapFile& m) {
  std::string out;
  for (const auto& [p, q] : m.arrows) out += p + " -> " + q + "\n";
  return out;
}

std::vector<std::size_t> resolve_map(const MapFile& m, const FiniteSpace& space) {
  std::vector<std::size_t> image(space.size(), space.size());
  auto index = [&](const std::string& name, std::size_t k) {
    if (!space.contains(Point{name, Origin::Base})) {
      throw ParseError(m.file, m.lines[k], m.arrows[k].first + " -> " + m.arrows[k].second,
                       "'" + name + "' is not a point of the space");
    }
    return space.index_of(Point{name, Origin::Base});
  };
  for (std::size_t k = 0; k < m.arrows.size(); ++k) {
    const std::size_t from = index(m.arrows[k].first, k);
    const std::size_t to = index(m.arrows[k].second, k);
    if (image[from] != space.size()) {
      throw ParseError(m.file, m.lines[k], m.arrows[k].first + " -> " + m.arrows[k].second,
                       "second arrow out of '" + m.arrows[k].first + "'");
    }
    image[from] = to;
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == space.size()) throw ParseError(m.file, 0, "", "no arrow out of '" + space.names()[i] + "'");
  }
  return image;
}

}  // namespace wmetric

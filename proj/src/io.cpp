#include "cx2/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cx2 {

namespace {

struct SourceLine {
  std::string text;
  int number;  // 1-based
};

// Lines with comments stripped and blanks dropped, keeping line numbers.
std::vector<SourceLine> content_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (!blank) out.push_back({line, number});
  }
  return out;
}

Word parse_line(const SourceLine& ln, bool allow_relation,
                std::size_t column_base = 0) {
  try {
    return allow_relation ? parse_relation(ln.text) : parse_word(ln.text);
  } catch (const ParseError& e) {
    throw FileParseError(e.what(), ln.number,
                         static_cast<int>(column_base + e.offset) + 1);
  }
}

}  // namespace

Presentation parse_presentation_text(const std::string& text) {
  std::vector<SourceLine> lines = content_lines(text);
  if (lines.empty()) {
    throw FileParseError("expected a 'gens: <letters>' header", 1, 1);
  }
  const SourceLine& head = lines.front();
  std::size_t pos = head.text.find_first_not_of(" \t");
  if (head.text.compare(pos, 5, "gens:") != 0) {
    throw FileParseError("presentation files start with 'gens: <letters>'",
                         head.number, static_cast<int>(pos) + 1);
  }
  Presentation pres;
  for (std::size_t i = pos + 5; i < head.text.size(); ++i) {
    char c = head.text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') continue;
    if (c < 'a' || c > 'z') {
      throw FileParseError("generators are lowercase letters", head.number,
                           static_cast<int>(i) + 1);
    }
    pres.generators.push_back(c);
  }
  if (pres.generators.empty()) {
    throw FileParseError("the 'gens:' header names no generators",
                         head.number, static_cast<int>(head.text.size()) + 1);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    pres.relators.push_back(parse_line(lines[i], true));
  }
  try {
    validate(pres);
  } catch (const std::invalid_argument& e) {
    throw FileParseError(e.what(), head.number, 1);
  }
  return pres;
}

CombinatorialDescription parse_description_text(const std::string& text) {
  std::vector<SourceLine> lines = content_lines(text);
  CombinatorialDescription d;
  for (const SourceLine& ln : lines) {
    std::size_t first = ln.text.find_first_not_of(" \t");
    std::size_t last = ln.text.find_last_not_of(" \t");
    SourceLine body = ln;
    std::size_t base = 0;
    if (ln.text[first] == '[') {
      if (ln.text[last] != ']') {
        throw FileParseError("unclosed '['", ln.number,
                             static_cast<int>(last) + 2);
      }
      body.text = ln.text.substr(first + 1, last - first - 1);
      base = first + 1;
    }
    Word w = parse_line(body, false, base);
    if (w.empty()) {
      throw FileParseError("empty boundary word", ln.number,
                           static_cast<int>(first) + 1);
    }
    d.relators.push_back(std::move(w));
  }
  if (d.relators.empty()) {
    throw FileParseError("file contains no boundary words", 1, 1);
  }
  validate(d);
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load_presentation_file(const std::string& path) {
  return parse_presentation_text(read_file(path));
}

CombinatorialDescription load_description_file(const std::string& path) {
  return parse_description_text(read_file(path));
}

LoadedInput family_input(const FamilyId& family) {
  LoadedInput input;
  input.source = family.to_string();
  switch (family.kind) {
    case FamilyKind::Tor:
      input.value = torus_knot_description(family.m, family.n);
      break;
    case FamilyKind::Art:
      input.value = artin_description(family.m);
      break;
    case FamilyKind::BS:
      input.value = bs_presentation(family.m, family.n);
      break;
  }
  return input;
}

}  // namespace cx2

#include "amorph/scheme_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "amorph/errors.hpp"

namespace amorph {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_integer(const Token& t, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError(line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

LabelMatrix parse_scheme_text(std::string_view text) {
  int v = -1;
  int d = -1;
  std::vector<int> labels;
  int rows = 0;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    last_line = line_no;
    if (v < 0) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1,
                         "header must be \"v d\"");
      }
      long long hv = to_integer(tokens[0], line_no);
      long long hd = to_integer(tokens[1], line_no);
      if (hv < 1) throw ParseError(line_no, tokens[0].column, "v must be positive");
      if (hd < 0 || hd >= hv * hv) throw ParseError(line_no, tokens[1].column, "d out of range");
      if (hv > 4096) throw ParseError(line_no, tokens[0].column, "v larger than 4096");
      v = static_cast<int>(hv);
      d = static_cast<int>(hd);
      labels.reserve(static_cast<std::size_t>(v) * v);
      continue;
    }
    if (rows == v) {
      throw ParseError(line_no, tokens[0].column,
                       "row count: header declares " + std::to_string(v) + " rows, found more");
    }
    if (static_cast<int>(tokens.size()) != v) {
      int column = static_cast<int>(tokens.size()) > v ? tokens[v].column : static_cast<int>(line.size()) + 1;
      throw ParseError(line_no, column,
                       "row " + std::to_string(rows + 1) + " has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(v));
    }
    for (const auto& t : tokens) {
      long long value = to_integer(t, line_no);
      if (value < 0 || value > d) {
        throw ParseError(line_no, t.column, "label " + std::to_string(value) + " outside [0, " + std::to_string(d) + "]");
      }
      labels.push_back(static_cast<int>(value));
    }
    ++rows;
  }
  if (v < 0) throw ParseError(line_no, 1, "missing header \"v d\"");
  if (rows != v) {
    throw ParseError(last_line + 1, 1,
                     "row count: header declares " + std::to_string(v) + " rows, found " + std::to_string(rows));
  }
  return LabelMatrix(v, d, std::move(labels));
}

LabelMatrix load_label_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scheme_text(buffer.str());
}

AssociationScheme load_scheme(const std::filesystem::path& path) { return validate_scheme(load_label_matrix(path)); }

void write_scheme(std::ostream& out, const LabelMatrix& labels, std::string_view comment) {
  if (!comment.empty()) {
    std::size_t pos = 0;
    while (pos <= comment.size()) {
      auto end = comment.find('\n', pos);
      if (end == std::string_view::npos) end = comment.size();
      out << "# " << comment.substr(pos, end - pos) << '\n';
      pos = end + 1;
    }
  }
  out << labels.v() << ' ' << labels.d() << '\n';
  for (int x = 0; x < labels.v(); ++x) {
    for (int y = 0; y < labels.v(); ++y) out << (y ? " " : "") << labels(x, y);
    out << '\n';
  }
}

std::string scheme_to_text(const LabelMatrix& labels, std::string_view comment) {
  std::ostringstream out;
  write_scheme(out, labels, comment);
  return out.str();
}

void save_scheme(const std::filesystem::path& path, const LabelMatrix& labels, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_scheme(out, labels, comment);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace amorph

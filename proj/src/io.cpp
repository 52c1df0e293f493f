#include "lextri/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace lextri {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

// Next non-comment, non-blank line, tokenized.
bool next_content_line(std::istream& in, std::vector<std::string>& tokens) {
  std::string line;
  while (std::getline(in, line)) {
    if (blank_or_comment(line)) continue;
    tokens.clear();
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    return true;
  }
  return false;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got \"" + tok + "\"");
  }
  if (pos != tok.size())
    throw ParseError(std::string("expected ") + what + ", got \"" + tok + "\"");
  return value;
}

}  // namespace

Rational parse_rational(const std::string& token) {
  const auto bad = [&] {
    return ParseError("expected a rational (integer or p/q), got \"" + token + "\"");
  };
  const std::size_t slash = token.find('/');
  const std::string num_s = slash == std::string::npos ? token : token.substr(0, slash);
  const std::string den_s = slash == std::string::npos ? "1" : token.substr(slash + 1);
  auto digits = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = sign_ok && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits(num_s, true) || !digits(den_s, false)) throw bad();
  const Integer num(num_s);
  const Integer den(den_s);
  if (den == 0) throw ParseError("zero denominator in \"" + token + "\"");
  return make_rational(num, den);
}

std::string format_rational(const Rational& q) { return q.str(); }

PointSet parse_points(std::istream& in) {
  std::vector<std::string> tokens;
  if (!next_content_line(in, tokens)) throw ParseError("missing \"d n\" header");
  if (tokens.size() != 2) throw ParseError("header must be \"d n\"");
  const int d = parse_int(tokens[0], "dimension");
  const int n = parse_int(tokens[1], "point count");
  if (d < 1) throw ParseError("dimension must be at least 1");
  if (n < 1) throw ParseError("point count must be at least 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!next_content_line(in, tokens))
      throw ParseError("expected " + std::to_string(n) + " points, got " +
                       std::to_string(i));
    if (static_cast<int>(tokens.size()) != d)
      throw ParseError("point " + std::to_string(i + 1) + " has " +
                       std::to_string(tokens.size()) + " coordinates, expected " +
                       std::to_string(d));
    Point p;
    p.reserve(static_cast<std::size_t>(d));
    for (const std::string& tok : tokens) p.push_back(parse_rational(tok));
    pts.push_back(std::move(p));
  }
  if (next_content_line(in, tokens)) throw ParseError("trailing content after points");
  return PointSet(d, std::move(pts));
}

std::vector<Cell> parse_cells(std::istream& in, int n_points) {
  std::vector<std::string> tokens;
  if (!next_content_line(in, tokens)) throw ParseError("missing cell count header");
  if (tokens.size() != 1) throw ParseError("cell header must be a single count");
  const int m = parse_int(tokens[0], "cell count");
  if (m < 0) throw ParseError("cell count must be nonnegative");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(in, tokens))
      throw ParseError("expected " + std::to_string(m) + " cells, got " +
                       std::to_string(i));
    Cell c;
    c.reserve(tokens.size());
    for (const std::string& tok : tokens) {
      const int label = parse_int(tok, "point index");
      if (label < 1 || label > n_points)
        throw ParseError("point index " + tok + " out of range 1.." +
                         std::to_string(n_points));
      if (!c.empty() && label <= c.back())
        throw ParseError("cell indices must be strictly ascending: " + tok);
      c.push_back(label);
    }
    if (c.empty()) throw ParseError("empty cell line");
    cells.push_back(std::move(c));
  }
  if (next_content_line(in, tokens)) throw ParseError("trailing content after cells");
  return cells;
}

LexScript parse_script(std::istream& in, int n_points) {
  std::vector<std::string> tokens;
  LexScript script;
  std::vector<bool> seen(static_cast<std::size_t>(n_points) + 1, false);
  while (next_content_line(in, tokens)) {
    if (tokens.size() != 2)
      throw ParseError("script lines must be \"pull K\" or \"push K\"");
    Sign sign;
    if (tokens[0] == "pull")
      sign = Sign::Pull;
    else if (tokens[0] == "push")
      sign = Sign::Push;
    else
      throw ParseError("unknown script action \"" + tokens[0] + "\"");
    const int label = parse_int(tokens[1], "point index");
    if (label < 1 || label > n_points)
      throw ParseError("point index " + tokens[1] + " out of range 1.." +
                       std::to_string(n_points));
    if (seen[static_cast<std::size_t>(label)])
      throw ParseError("point " + tokens[1] + " appears twice in the script");
    seen[static_cast<std::size_t>(label)] = true;
    script.push_back({label, sign});
  }
  return script;
}

GKZVector parse_gkz(std::istream& in, int n_points) {
  GKZVector z;
  std::string tok;
  while (in >> tok) z.push_back(parse_rational(tok));
  if (static_cast<int>(z.size()) != n_points)
    throw ParseError("expected " + std::to_string(n_points) + " rationals, got " +
                     std::to_string(z.size()));
  return z;
}

void write_cells(std::ostream& out, const std::set<Cell>& cells) {
  out << cells.size() << "\n";
  for (const Cell& c : cells) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << "\n";
  }
}

std::string format_script_entry(const ScriptEntry& e) {
  return (e.sign == Sign::Pull ? "pull " : "push ") + std::to_string(e.label);
}

void write_script(std::ostream& out, const LexScript& script) {
  for (const ScriptEntry& e : script) out << format_script_entry(e) << "\n";
}

void write_gkz(std::ostream& out, const GKZVector& z) {
  for (const Rational& q : z) out << format_rational(q) << "\n";
}

std::string format_hyperplane(const Hyperplane& h) {
  std::ostringstream os;
  for (const Integer& a : h.normal) os << a.str() << ' ';
  os << "| " << h.offset.str();
  return os.str();
}

}  // namespace lextri

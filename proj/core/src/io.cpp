#include "unideal/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "unideal/errors.hpp"

namespace unideal::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Tokenized content lines.
std::vector<Line> lines_of(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

std::uint64_t parse_uint(const Line& line, const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail(line, "expected an integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    fail(line, "integer out of range: '" + s + "'");
  }
}

Scalar parse_scalar(const Line& line, const Field& f, const std::string& s) {
  try {
    return f.parse(s);
  } catch (const ParseError& e) {
    fail(line, e.what());
  } catch (const FieldMismatch& e) {
    fail(line, e.what());
  }
}

mpq_class parse_rational(const Line& line, const std::string& s) {
  return parse_scalar(line, Field{}, s).rational();
}

/// "c1 .. cn [+ c0]" starting at token `from`.
LinearForm parse_form(const Line& line, const Field& f, std::size_t from) {
  std::vector<Scalar> coeffs;
  Scalar constant = f.zero();
  const auto& t = line.tokens;
  for (std::size_t i = from; i < t.size(); ++i) {
    if (t[i] == "+") {
      if (i + 2 != t.size()) fail(line, "'+' must be followed by exactly one constant");
      constant = parse_scalar(line, f, t[i + 1]);
      break;
    }
    coeffs.push_back(parse_scalar(line, f, t[i]));
  }
  if (coeffs.empty()) fail(line, "linear form without coefficients");
  return LinearForm(f, std::move(coeffs), constant);
}

void write_form(std::ostream& out, const LinearForm& form) {
  for (std::size_t i = 0; i < form.nvars(); ++i) out << (i ? " " : "") << form.coeff(i);
  if (!form.constant().is_zero()) out << " + " << form.constant();
}

/// Parses circuit lines [begin, end) where lines[end - 1] is the "out" line.
Circuit parse_circuit(const std::vector<Line>& lines, std::size_t begin, std::size_t end, const Field& f) {
  if (begin >= end) throw ParseError("empty circuit");
  const Line& header = lines[begin];
  if (header.tokens.size() != 2 || header.tokens[0] != "vars") fail(header, "expected 'vars n'");
  const std::size_t n = parse_uint(header, header.tokens[1]);
  Circuit c(n, f);
  std::vector<std::size_t> ids;
  bool has_output = false;
  auto child = [&](const Line& line, const std::string& s) {
    const auto id = parse_uint(line, s);
    if (id >= ids.size()) fail(line, "node id " + s + " does not refer to an earlier node");
    return ids[id];
  };
  for (std::size_t i = begin + 1; i < end; ++i) {
    const Line& line = lines[i];
    const auto& t = line.tokens;
    const std::string& op = t[0];
    if (has_output) fail(line, "content after 'out'");
    if (op == "in") {
      if (t.size() != 2) fail(line, "expected 'in i'");
      const auto v = parse_uint(line, t[1]);
      if (v >= n) fail(line, "input index out of range");
      ids.push_back(c.input(v));
    } else if (op == "const") {
      if (t.size() != 2) fail(line, "expected 'const a/b'");
      ids.push_back(c.constant(parse_scalar(line, f, t[1])));
    } else if (op == "add" || op == "mul") {
      if (t.size() < 2) fail(line, "gate without children");
      std::vector<std::size_t> children;
      for (std::size_t j = 1; j < t.size(); ++j) children.push_back(child(line, t[j]));
      ids.push_back(op == "add" ? c.add(std::move(children)) : c.mul(std::move(children)));
    } else if (op == "lin") {
      const LinearForm form = parse_form(line, f, 1);
      if (form.nvars() != n) fail(line, "linear form needs exactly " + std::to_string(n) + " coefficients");
      ids.push_back(c.linear(form));
    } else if (op == "out") {
      if (t.size() != 2) fail(line, "expected 'out id'");
      c.set_output(child(line, t[1]));
      has_output = true;
    } else {
      fail(line, "unknown node kind '" + op + "'");
    }
  }
  if (!has_output) throw ParseError("circuit has no 'out' line");
  return c;
}

}  // namespace

Circuit read_circuit(std::istream& in, const Field& f) {
  const auto lines = lines_of(in);
  return parse_circuit(lines, 0, lines.size(), f);
}

void write_circuit(std::ostream& out, const Circuit& c) {
  out << "vars " << c.nvars() << '\n';
  for (const Node& node : c.nodes()) {
    switch (node.kind) {
      case NodeKind::Input:
        out << "in " << node.var;
        break;
      case NodeKind::Const:
        out << "const " << node.value;
        break;
      case NodeKind::Add:
      case NodeKind::Mul:
        out << (node.kind == NodeKind::Add ? "add" : "mul");
        for (auto ch : node.children) out << ' ' << ch;
        break;
      case NodeKind::Linear:
        out << "lin ";
        write_form(out, node.form);
        break;
    }
    out << '\n';
  }
  out << "out " << c.output() << '\n';
}

UnivariateIdeal read_ideal(std::istream& in, const Field& f) {
  UnivariateIdeal ideal(f);
  for (const Line& line : lines_of(in)) {
    const auto& t = line.tokens;
    if (t.size() < 4 || t[0] != "var" || t[2] != ":") fail(line, "expected 'var i : c0 c1 ... cd'");
    const auto v = parse_uint(line, t[1]);
    std::vector<Scalar> coeffs;
    for (std::size_t j = 3; j < t.size(); ++j) coeffs.push_back(parse_scalar(line, f, t[j]));
    try {
      ideal.add(v, UnivariatePoly(f, std::move(coeffs)));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  }
  return ideal;
}

void write_ideal(std::ostream& out, const UnivariateIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    out << "var " << g.var << " :";
    for (const auto& c : g.poly.coeffs()) out << ' ' << c;
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in, const Field& f) {
  std::vector<std::vector<Scalar>> rows;
  for (const Line& line : lines_of(in)) {
    std::vector<Scalar> row;
    for (const auto& tok : line.tokens) row.push_back(parse_scalar(line, f, tok));
    if (!rows.empty() && row.size() != rows.front().size()) fail(line, "ragged matrix row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0, f);
  return Matrix::from_rows(f, rows);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
    out << '\n';
  }
}

LowRankInput read_lowrank(std::istream& in, const Field& f) {
  const auto lines = lines_of(in);
  std::size_t out_line = 0;
  while (out_line < lines.size() && lines[out_line].tokens[0] != "out") ++out_line;
  if (out_line == lines.size()) throw ParseError("low-rank input has no 'out' line");
  LowRankInput input;
  input.outer = parse_circuit(lines, 0, out_line + 1, f);
  bool explicit_degree = false;
  for (std::size_t i = out_line + 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "form") {
      input.forms.push_back(parse_form(line, f, 1));
    } else if (line.tokens[0] == "degree" && line.tokens.size() == 2) {
      input.degree_bound = static_cast<unsigned>(parse_uint(line, line.tokens[1]));
      explicit_degree = true;
    } else {
      fail(line, "expected 'form c1 .. cn [+ c0]' or 'degree d'");
    }
  }
  if (!explicit_degree) input.degree_bound = static_cast<unsigned>(input.outer.degree_bound());
  try {
    input.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("low-rank input: ") + e.what());
  }
  return input;
}

void write_lowrank(std::ostream& out, const LowRankInput& input) {
  write_circuit(out, input.outer);
  for (const auto& form : input.forms) {
    out << "form ";
    write_form(out, form);
    out << '\n';
  }
  out << "degree " << input.degree_bound << '\n';
}

Graph read_graph(std::istream& in) {
  const auto lines = lines_of(in);
  if (lines.empty() || lines[0].tokens.size() != 2) throw ParseError("graph: expected header 'n m'");
  const auto n = parse_uint(lines[0], lines[0].tokens[0]);
  const auto m = parse_uint(lines[0], lines[0].tokens[1]);
  if (lines.size() != m + 1) throw ParseError("graph: header announces " + std::to_string(m) + " edges");
  Graph g(n);
  for (std::size_t i = 1; i <= m; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) fail(line, "expected 'u v'");
    try {
      g.add_edge(parse_uint(line, line.tokens[0]), parse_uint(line, line.tokens[1]));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Certificate read_certificate(std::istream& in) {
  Certificate c;
  for (const Line& line : lines_of(in)) {
    if (line.tokens.size() != 2) fail(line, "expected 're im'");
    c.point.emplace_back(parse_rational(line, line.tokens[0]), parse_rational(line, line.tokens[1]));
  }
  return c;
}

void write_certificate(std::ostream& out, const Certificate& c) {
  for (const auto& z : c.point) out << z.re.get_str() << ' ' << z.im.get_str() << '\n';
}

KLinEqInstance read_klineq(std::istream& in) {
  const auto lines = lines_of(in);
  if (lines.empty() || lines[0].tokens.size() != 2) throw ParseError("k-Lin-Eq: expected header 'k n'");
  const auto k = parse_uint(lines[0], lines[0].tokens[0]);
  const auto n = parse_uint(lines[0], lines[0].tokens[1]);
  if (lines.size() != k + 2) throw ParseError("k-Lin-Eq: expected " + std::to_string(k) + " rows and a target line");
  KLinEqInstance inst;
  for (std::size_t i = 1; i <= k + 1; ++i) {
    const Line& line = lines[i];
    const std::size_t want = i <= k ? n : k;
    if (line.tokens.size() != want) fail(line, "expected " + std::to_string(want) + " entries");
    std::vector<std::uint64_t> row;
    for (const auto& tok : line.tokens) row.push_back(parse_uint(line, tok));
    if (i <= k)
      inst.a.push_back(std::move(row));
    else
      inst.b = std::move(row);
  }
  return inst;
}

void write_klineq(std::ostream& out, const KLinEqInstance& inst) {
  out << inst.rows() << ' ' << inst.cols() << '\n';
  auto row = [&](const std::vector<std::uint64_t>& r) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
    out << '\n';
  };
  for (const auto& r : inst.a) row(r);
  row(inst.b);
}

OneInThreeInstance read_one_in_three(std::istream& in) {
  const auto lines = lines_of(in);
  if (lines.empty() || lines[0].tokens.size() != 3) throw ParseError("1-in-3: expected header 'vars clauses columns'");
  OneInThreeInstance inst;
  inst.vars = parse_uint(lines[0], lines[0].tokens[0]);
  const auto clauses = parse_uint(lines[0], lines[0].tokens[1]);
  inst.columns = parse_uint(lines[0], lines[0].tokens[2]);
  if (lines.size() != clauses + 1) throw ParseError("1-in-3: header announces " + std::to_string(clauses) + " clauses");
  for (std::size_t i = 1; i <= clauses; ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) fail(line, "expected 'a b c'");
    inst.clauses.push_back({parse_uint(line, line.tokens[0]), parse_uint(line, line.tokens[1]),
                            parse_uint(line, line.tokens[2])});
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("1-in-3: ") + e.what());
  }
  return inst;
}

void write_one_in_three(std::ostream& out, const OneInThreeInstance& inst) {
  out << inst.vars << ' ' << inst.clauses.size() << ' ' << inst.columns << '\n';
  for (const auto& c : inst.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace unideal::io

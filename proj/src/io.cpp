#include "orp/io.hpp"

#include <fstream>
#include <sstream>

namespace orp::io {

namespace {

struct Lines {
  std::vector<std::pair<int, std::vector<std::string>>> rows;  // (line number, tokens)
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      number += 1;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) rows.emplace_back(number, std::move(tokens));
    }
  }

  bool done() const { return pos >= rows.size(); }

  const std::vector<std::string>& next(const char* what) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return rows[pos++].second;
  }

  int line() const { return pos == 0 ? 0 : rows[pos - 1].first; }

  void expect_end() const {
    if (!done()) {
      throw ParseError("trailing content at line " + std::to_string(rows[pos].first));
    }
  }
};

int parse_int(const std::string& tok, const char* what, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + tok + "'");
  }
}

Rational parse_rat(const std::string& tok, int line) {
  try {
    return Rational::parse(tok);
  } catch (const ParseError&) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + tok + "'");
  }
}

void expect_tokens(const std::vector<std::string>& tokens, std::size_t count, int line,
                   const char* what) {
  if (tokens.size() != count) {
    throw ParseError("line " + std::to_string(line) + ": expected " + std::to_string(count) +
                     " tokens for " + what + ", got " + std::to_string(tokens.size()));
  }
}

std::vector<Rational> parse_rat_row(const std::vector<std::string>& tokens, int n, int line,
                                    const char* what) {
  expect_tokens(tokens, static_cast<std::size_t>(n), line, what);
  std::vector<Rational> row;
  row.reserve(n);
  for (const std::string& tok : tokens) row.push_back(parse_rat(tok, line));
  return row;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

BlpInstance parse_blp(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("blp header");
  expect_tokens(header, 4, lines.line(), "blp header");
  if (header[0] != "blp") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'blp'");
  int n = parse_int(header[1], "variable count", lines.line());
  int m = parse_int(header[2], "constraint count", lines.line());
  Sense sense;
  if (header[3] == "max") {
    sense = Sense::Max;
  } else if (header[3] == "min") {
    sense = Sense::Min;
  } else {
    throw ParseError("line " + std::to_string(lines.line()) + ": sense must be max or min");
  }
  if (n < 1 || m < 0) throw ParseError("bad blp dimensions");

  std::vector<Rational> c = parse_rat_row(lines.next("objective"), n, lines.line(), "objective");
  std::vector<BlpRow> rows;
  rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto& tokens = lines.next("constraint row");
    expect_tokens(tokens, static_cast<std::size_t>(n) + 2, lines.line(), "constraint row");
    BlpRow row;
    row.coeffs.reserve(n);
    for (int j = 0; j < n; ++j) row.coeffs.push_back(parse_rat(tokens[j], lines.line()));
    const std::string& rel = tokens[n];
    if (rel == "le") {
      row.rel = Relation::Le;
    } else if (rel == "ge") {
      row.rel = Relation::Ge;
    } else if (rel == "eq") {
      row.rel = Relation::Eq;
    } else {
      throw ParseError("line " + std::to_string(lines.line()) + ": relation must be le, ge or eq");
    }
    row.rhs = parse_rat(tokens[n + 1], lines.line());
    rows.push_back(std::move(row));
  }
  lines.expect_end();
  return BlpInstance::create(sense, std::move(c), std::move(rows));
}

std::string write_blp(const BlpInstance& inst) {
  std::ostringstream out;
  out << "blp " << inst.n << ' ' << inst.m() << ' ' << sense_name(inst.sense) << '\n';
  for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.c[j].str();
  out << '\n';
  for (const BlpRow& row : inst.rows) {
    for (int j = 0; j < inst.n; ++j) out << row.coeffs[j].str() << ' ';
    out << relation_name(row.rel) << ' ' << row.rhs.str() << '\n';
  }
  return out.str();
}

std::pair<BinaryVector, BinaryVector> parse_parents_binary(const std::string& text, int n) {
  Lines lines(text);
  const auto& header = lines.next("parents header");
  if (header.size() != 1 || header[0] != "parents") {
    throw ParseError("line " + std::to_string(lines.line()) + ": expected 'parents'");
  }
  auto read_vec = [&]() {
    const auto& tokens = lines.next("parent vector");
    expect_tokens(tokens, static_cast<std::size_t>(n), lines.line(), "parent vector");
    BinaryVector v(n);
    for (int j = 0; j < n; ++j) {
      if (tokens[j] == "0") {
        v[j] = 0;
      } else if (tokens[j] == "1") {
        v[j] = 1;
      } else {
        throw ParseError("line " + std::to_string(lines.line()) + ": entries must be 0 or 1");
      }
    }
    return v;
  };
  BinaryVector p1 = read_vec();
  BinaryVector p2 = read_vec();
  lines.expect_end();
  return {std::move(p1), std::move(p2)};
}

std::string write_parents_binary(const BinaryVector& p1, const BinaryVector& p2) {
  std::ostringstream out;
  out << "parents\n";
  for (const BinaryVector* p : {&p1, &p2}) {
    for (std::size_t j = 0; j < p->size(); ++j) out << (j ? " " : "") << int((*p)[j]);
    out << '\n';
  }
  return out.str();
}

std::pair<std::vector<int>, std::vector<int>> parse_parents_sequence(const std::string& text,
                                                                     int n) {
  Lines lines(text);
  const auto& header = lines.next("parents header");
  if (header.size() != 1 || header[0] != "parents") {
    throw ParseError("line " + std::to_string(lines.line()) + ": expected 'parents'");
  }
  auto read_seq = [&]() {
    const auto& tokens = lines.next("parent sequence");
    expect_tokens(tokens, static_cast<std::size_t>(n), lines.line(), "parent sequence");
    std::vector<int> seq(n);
    for (int j = 0; j < n; ++j) {
      int id = parse_int(tokens[j], "id", lines.line());
      if (id < 1 || id > n) {
        throw ParseError("line " + std::to_string(lines.line()) + ": id " + std::to_string(id) +
                         " out of range 1.." + std::to_string(n));
      }
      seq[j] = id - 1;
    }
    return seq;
  };
  auto p1 = read_seq();
  auto p2 = read_seq();
  lines.expect_end();
  return {std::move(p1), std::move(p2)};
}

std::string write_parents_sequence(const std::vector<int>& p1, const std::vector<int>& p2) {
  std::ostringstream out;
  out << "parents\n";
  for (const std::vector<int>* p : {&p1, &p2}) {
    for (std::size_t j = 0; j < p->size(); ++j) out << (j ? " " : "") << (*p)[j] + 1;
    out << '\n';
  }
  return out.str();
}

graph::WeightedGraph parse_graph(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("graph header");
  expect_tokens(header, 3, lines.line(), "graph header");
  if (header[0] != "graph") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'graph'");
  int n = parse_int(header[1], "vertex count", lines.line());
  int m = parse_int(header[2], "edge count", lines.line());
  if (n < 1 || m < 0) throw ParseError("bad graph dimensions");

  std::vector<Rational> weights(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& tokens = lines.next("vertex line");
    expect_tokens(tokens, 3, lines.line(), "vertex line");
    if (tokens[0] != "v") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'v'");
    int id = parse_int(tokens[1], "vertex id", lines.line());
    if (id < 1 || id > n) throw ParseError("line " + std::to_string(lines.line()) + ": vertex id out of range");
    if (seen[id - 1]) throw ParseError("line " + std::to_string(lines.line()) + ": duplicate vertex " + tokens[1]);
    seen[id - 1] = 1;
    weights[id - 1] = parse_rat(tokens[2], lines.line());
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto& tokens = lines.next("edge line");
    expect_tokens(tokens, 3, lines.line(), "edge line");
    if (tokens[0] != "e") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'e'");
    int u = parse_int(tokens[1], "endpoint", lines.line());
    int v = parse_int(tokens[2], "endpoint", lines.line());
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("line " + std::to_string(lines.line()) + ": endpoint out of range");
    }
    edges.emplace_back(u - 1, v - 1);
  }
  lines.expect_end();
  return graph::WeightedGraph::create(std::move(weights), std::move(edges));
}

std::string write_graph(const graph::WeightedGraph& g) {
  std::ostringstream out;
  out << "graph " << g.n << ' ' << g.edges.size() << '\n';
  for (int v = 0; v < g.n; ++v) out << "v " << v + 1 << ' ' << g.weight[v].str() << '\n';
  for (const auto& [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

blp::SetSystemInstance parse_set_system(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("setsys header");
  expect_tokens(header, 4, lines.line(), "setsys header");
  if (header[0] != "setsys") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'setsys'");
  blp::SetKind kind;
  if (header[1] == "packing") {
    kind = blp::SetKind::Packing;
  } else if (header[1] == "partition") {
    kind = blp::SetKind::Partition;
  } else if (header[1] == "covering") {
    kind = blp::SetKind::Covering;
  } else {
    throw ParseError("line " + std::to_string(lines.line()) +
                     ": kind must be packing, partition or covering");
  }
  int m = parse_int(header[2], "row count", lines.line());
  int n = parse_int(header[3], "column count", lines.line());
  if (n < 1 || m < 0) throw ParseError("bad setsys dimensions");

  std::vector<Rational> cost = parse_rat_row(lines.next("cost line"), n, lines.line(), "cost line");
  std::vector<std::vector<std::uint8_t>> a(m, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < m; ++i) {
    const auto& tokens = lines.next("matrix row");
    expect_tokens(tokens, static_cast<std::size_t>(n), lines.line(), "matrix row");
    for (int j = 0; j < n; ++j) {
      if (tokens[j] == "0") {
        a[i][j] = 0;
      } else if (tokens[j] == "1") {
        a[i][j] = 1;
      } else {
        throw ParseError("line " + std::to_string(lines.line()) + ": entries must be 0 or 1");
      }
    }
  }
  lines.expect_end();
  return blp::SetSystemInstance::create(kind, std::move(cost), std::move(a));
}

std::string write_set_system(const blp::SetSystemInstance& inst) {
  std::ostringstream out;
  const char* kind = inst.kind == blp::SetKind::Packing
                         ? "packing"
                         : (inst.kind == blp::SetKind::Partition ? "partition" : "covering");
  out << "setsys " << kind << ' ' << inst.m << ' ' << inst.n << '\n';
  for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.cost[j].str();
  out << '\n';
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << int(inst.a[i][j]);
    out << '\n';
  }
  return out.str();
}

blp::SplpInstance parse_splp(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("splp header");
  expect_tokens(header, 3, lines.line(), "splp header");
  if (header[0] != "splp") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'splp'");
  int k = parse_int(header[1], "facility count", lines.line());
  int l = parse_int(header[2], "client count", lines.line());
  if (k < 1 || l < 1) throw ParseError("bad splp dimensions");
  std::vector<Rational> open_cost =
      parse_rat_row(lines.next("opening costs"), k, lines.line(), "opening costs");
  std::vector<std::vector<Rational>> serve(k);
  for (int i = 0; i < k; ++i) {
    serve[i] = parse_rat_row(lines.next("service row"), l, lines.line(), "service row");
  }
  lines.expect_end();
  return blp::SplpInstance::create(std::move(open_cost), std::move(serve));
}

std::string write_splp(const blp::SplpInstance& inst) {
  std::ostringstream out;
  out << "splp " << inst.facilities << ' ' << inst.clients << '\n';
  for (int k = 0; k < inst.facilities; ++k) out << (k ? " " : "") << inst.open_cost[k].str();
  out << '\n';
  for (int k = 0; k < inst.facilities; ++k) {
    for (int l = 0; l < inst.clients; ++l) out << (l ? " " : "") << inst.serve_cost[k][l].str();
    out << '\n';
  }
  return out.str();
}

tsp::TspInstance parse_tsp(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("tsp header");
  expect_tokens(header, 3, lines.line(), "tsp header");
  if (header[0] != "tsp") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'tsp'");
  int n = parse_int(header[1], "vertex count", lines.line());
  bool symmetric;
  if (header[2] == "sym") {
    symmetric = true;
  } else if (header[2] == "gen") {
    symmetric = false;
  } else {
    throw ParseError("line " + std::to_string(lines.line()) + ": mode must be sym or gen");
  }
  if (n < 2) throw ParseError("bad tsp dimension");
  std::vector<std::vector<Rational>> dist(n);
  for (int i = 0; i < n; ++i) {
    dist[i] = parse_rat_row(lines.next("distance row"), n, lines.line(), "distance row");
  }
  lines.expect_end();
  return tsp::TspInstance::create(symmetric, std::move(dist));
}

std::string write_tsp(const tsp::TspInstance& inst) {
  std::ostringstream out;
  out << "tsp " << inst.n << ' ' << (inst.symmetric ? "sym" : "gen") << '\n';
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) out << (j ? " " : "") << inst.dist[i][j].str();
    out << '\n';
  }
  return out.str();
}

sched::SetupInstance parse_sched(const std::string& text) {
  Lines lines(text);
  const auto& header = lines.next("sched header");
  expect_tokens(header, 2, lines.line(), "sched header");
  if (header[0] != "sched") throw ParseError("line " + std::to_string(lines.line()) + ": expected 'sched'");
  int k = parse_int(header[1], "job count", lines.line());
  if (k < 1) throw ParseError("bad sched dimension");
  std::vector<Rational> proc =
      parse_rat_row(lines.next("processing times"), k, lines.line(), "processing times");
  std::vector<std::vector<Rational>> setup(k);
  for (int i = 0; i < k; ++i) {
    setup[i] = parse_rat_row(lines.next("setup row"), k, lines.line(), "setup row");
  }
  lines.expect_end();
  return sched::SetupInstance::create(std::move(proc), std::move(setup));
}

std::string write_sched(const sched::SetupInstance& inst) {
  std::ostringstream out;
  out << "sched " << inst.k << '\n';
  for (int v = 0; v < inst.k; ++v) out << (v ? " " : "") << inst.proc_time[v].str();
  out << '\n';
  for (int v = 0; v < inst.k; ++v) {
    for (int u = 0; u < inst.k; ++u) out << (u ? " " : "") << inst.setup[v][u].str();
    out << '\n';
  }
  return out.str();
}

}  // namespace orp::io

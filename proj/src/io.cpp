#include "netbone/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace netbone {

namespace {

std::vector<std::string_view> split_single_space(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(' ', start);
    if (pos == std::string_view::npos) {
      tokens.push_back(line.substr(start));
      break;
    }
    tokens.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return tokens;
}

[[noreturn]] void fail_line(ErrorCode code, std::size_t line_no,
                            const std::string& what) {
  throw Error(code, "line " + std::to_string(line_no) + ": " + what);
}

double parse_weight_token(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail_line(ErrorCode::MalformedLine, line_no,
              "cannot parse weight '" + std::string(token) + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    fail_line(ErrorCode::NonPositiveWeight, line_no,
              "weight must be a positive finite real, got '" +
                  std::string(token) + "'");
  }
  return value;
}

std::string dot_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string weight_token(const Edge& e) {
  return e.weight_text.empty() ? format_weight(e.weight) : e.weight_text;
}

}  // namespace

DistanceGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t offset = 0;
  bool saw_header = false;
  DistanceGraph g;

  // Ordered (src, dst) pairs as they appeared, to distinguish a repeated
  // line (an error) from the tolerated reversed restatement of an
  // undirected edge.
  std::set<std::pair<NodeIndex, NodeIndex>> raw_pairs;

  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(offset)
                                : text.substr(offset, end - offset);
    offset = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!saw_header) {
      if (line == "directed") {
        g = DistanceGraph(true);
      } else if (line == "undirected") {
        g = DistanceGraph(false);
      } else {
        fail_line(ErrorCode::MalformedLine, line_no,
                  "expected header 'directed' or 'undirected', got '" +
                      std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }

    if (line.empty()) continue;
    if (line.front() == '#') continue;

    auto tokens = split_single_space(line);
    if (tokens.size() != 3 || tokens[0].empty() || tokens[1].empty() ||
        tokens[2].empty()) {
      fail_line(ErrorCode::MalformedLine, line_no,
                "expected '<src> <dst> <weight>' with single spaces, got '" +
                    std::string(line) + "'");
    }

    double w = parse_weight_token(tokens[2], line_no);
    if (tokens[0] == tokens[1]) {
      fail_line(ErrorCode::SelfLoop, line_no,
                "self-loop on node '" + std::string(tokens[0]) + "'");
    }

    NodeIndex u, v;
    try {
      u = g.ensure_node(tokens[0]);
      v = g.ensure_node(tokens[1]);
    } catch (const Error& e) {
      fail_line(e.code(), line_no, e.what());
    }

    if (!raw_pairs.insert({u, v}).second) {
      fail_line(ErrorCode::DuplicateEdge, line_no,
                "duplicate edge line for " + std::string(tokens[0]) + " " +
                    std::string(tokens[1]));
    }
    if (!g.directed() && raw_pairs.count({v, u})) {
      double stored = g.edge_weight(u, v).value();
      if (stored == w) continue;  // reversed restatement, same weight
      fail_line(ErrorCode::DuplicateEdge, line_no,
                "edge " + std::string(tokens[0]) + " -- " +
                    std::string(tokens[1]) +
                    " already listed with a different weight");
    }
    g.add_edge(u, v, w, std::string(tokens[2]));
  }

  if (!saw_header) {
    fail_line(ErrorCode::MalformedLine, 1,
              "empty document; expected 'directed' or 'undirected' header");
  }
  return g;
}

std::string serialize_graph(const DistanceGraph& g, GraphFormat format) {
  auto canonical = g.canonical_edges();

  switch (format) {
    case GraphFormat::EdgeList: {
      std::ostringstream out;
      out << (g.directed() ? "directed" : "undirected") << '\n';
      for (const Edge& e : canonical) {
        out << g.label(e.src) << ' ' << g.label(e.dst) << ' '
            << weight_token(e) << '\n';
      }
      return out.str();
    }
    case GraphFormat::Json: {
      nlohmann::ordered_json doc;
      doc["directed"] = g.directed();
      std::vector<std::string> nodes = g.labels();
      std::sort(nodes.begin(), nodes.end());
      doc["nodes"] = nodes;
      auto& edges = doc["edges"] = nlohmann::ordered_json::array();
      for (const Edge& e : canonical) {
        edges.push_back({{"src", g.label(e.src)},
                         {"dst", g.label(e.dst)},
                         {"w", e.weight}});
      }
      return doc.dump(2) + "\n";
    }
    case GraphFormat::Dot: {
      std::ostringstream out;
      const char* arrow = g.directed() ? " -> " : " -- ";
      out << (g.directed() ? "digraph" : "graph") << " G {\n";
      std::vector<std::string> nodes = g.labels();
      std::sort(nodes.begin(), nodes.end());
      for (const auto& label : nodes) {
        out << "  \"" << dot_escape(label) << "\";\n";
      }
      for (const Edge& e : canonical) {
        out << "  \"" << dot_escape(g.label(e.src)) << '"' << arrow << '"'
            << dot_escape(g.label(e.dst)) << "\" [label=\""
            << dot_escape(weight_token(e)) << "\"];\n";
      }
      out << "}\n";
      return out.str();
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown graph format");
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edges") return GraphFormat::EdgeList;
  if (name == "json") return GraphFormat::Json;
  if (name == "dot") return GraphFormat::Dot;
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + std::string(name) +
                  "'; expected edges, json, or dot");
}

DistanceGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot open file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot open file '" + path.string() + "' for writing");
  }
  out << text;
}

}  // namespace netbone

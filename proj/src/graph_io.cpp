#include <json.hpp>

#include <sstream>

#include "uirg/graph.hpp"

namespace uirg {

// graph6: N(n) followed by the upper triangle read column by column, six bits per byte.

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

SimpleGraph from_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw GraphError("graph6: empty input");
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 63 || s[i] > 126) throw GraphError("graph6: invalid byte at position " + std::to_string(i));
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() < 4 || s[1] == '~') throw GraphError("graph6: unsupported or truncated size header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (s[k] - 63);
    pos = 4;
  }
  if (n > kMaxGraphOrder) throw GraphError("graph6: graph exceeds " + std::to_string(kMaxGraphOrder) + " vertices");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw GraphError("graph6: expected " + std::to_string(nbytes) + " data bytes, found " +
                     std::to_string(s.size() - pos));
  SimpleGraph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    const int last = s.back() - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw GraphError("graph6: nonzero padding bits");
  }
  return g;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  j["labels"] = g.labels();
  return j.dump();
}

SimpleGraph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("json: ") + e.what());
  }
  SimpleGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::string>>());
  return g;
}

}  // namespace uirg

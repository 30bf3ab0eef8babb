#include "conductor/kodaira.hpp"

#include <charconv>
#include <string>

namespace conductor::dualgraph {

namespace {

// Center of multiplicity `center` with arms listed outward from it.
SncdGraph star(long center, const std::vector<std::vector<long>>& arms) {
  SncdGraph g;
  const auto c = g.add_component("c", center, 0);
  for (std::size_t a = 0; a < arms.size(); ++a) {
    std::size_t prev = c;
    for (std::size_t k = 0; k < arms[a].size(); ++k) {
      const auto id = "a" + std::to_string(a) + "_" + std::to_string(k);
      const auto cur = g.add_component(id, arms[a][k], 0);
      g.add_edge(prev, cur);
      prev = cur;
    }
  }
  return g;
}

SncdGraph cycle(long n) {
  SncdGraph g;
  for (long i = 0; i < n; ++i) g.add_component("v" + std::to_string(i), 1, 0);
  for (long i = 0; i < n; ++i) {
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n));
  }
  return g;
}

SncdGraph i_n_star(long n) {
  SncdGraph g;
  for (long i = 0; i <= n; ++i) g.add_component("m" + std::to_string(i), 2, 0);
  for (long i = 0; i < n; ++i) {
    g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  }
  const auto first = std::size_t{0};
  const auto last = static_cast<std::size_t>(n);
  for (int k = 0; k < 2; ++k) {
    g.add_edge(first, g.add_component("l" + std::to_string(k), 1, 0));
    g.add_edge(last, g.add_component("r" + std::to_string(k), 1, 0));
  }
  return g;
}

bool parse_count(std::string_view digits, long& out) {
  if (digits.empty()) return false;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, out);
  return ec == std::errc{} && ptr == end && out >= 0;
}

}  // namespace

SncdGraph kodaira_catalog(std::string_view label) {
  if (label == "II") return star(6, {{1}, {2}, {3}});
  if (label == "III") return star(4, {{1}, {1}, {2}});
  if (label == "IV") return star(3, {{1}, {1}, {1}});
  if (label == "IV*") return star(3, {{2, 1}, {2, 1}, {2, 1}});
  if (label == "III*") return star(4, {{3, 2, 1}, {3, 2, 1}, {2}});
  if (label == "II*") return star(6, {{5, 4, 3, 2, 1}, {4, 2}, {3}});
  if (label.size() >= 2 && label.front() == 'I') {
    const bool starred = label.back() == '*';
    auto digits = label.substr(1, label.size() - 1 - (starred ? 1 : 0));
    long n = 0;
    if (parse_count(digits, n)) {
      if (starred) return i_n_star(n);
      if (n == 0) {
        SncdGraph g;
        g.add_component("c", 1, 1);
        return g;
      }
      if (n == 1) {
        SncdGraph g;
        g.add_component("c", 1, 0);
        g.add_component("x", 2, 0);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        return g;
      }
      return cycle(n);
    }
  }
  throw Error(ErrorCode::kUnknownType,
              "unknown Kodaira type '" + std::string(label) + "'");
}

std::vector<std::string> kodaira_labels(long max_n) {
  std::vector<std::string> out;
  for (long n = 0; n <= max_n; ++n) out.push_back("I" + std::to_string(n));
  out.insert(out.end(), {"II", "III", "IV"});
  for (long n = 0; n <= max_n; ++n) out.push_back("I" + std::to_string(n) + "*");
  out.insert(out.end(), {"IV*", "III*", "II*"});
  return out;
}

}  // namespace conductor::dualgraph

#include "conductor/dualgraph.hpp"

#include <numeric>
#include <set>
#include <string>

namespace conductor::dualgraph {

std::size_t SncdGraph::add_component(std::string id, long n, long g) {
  components.push_back({std::move(id), n, g});
  return components.size() - 1;
}

std::optional<std::size_t> SncdGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].id == id) return i;
  }
  return std::nullopt;
}

void SncdGraph::add_edge(const std::string& a, const std::string& b) {
  const auto ia = index_of(a);
  const auto ib = index_of(b);
  if (!ia || !ib) {
    throw Error(ErrorCode::kPrecondition,
                "edge references unknown component '" + (ia ? b : a) + "'");
  }
  edges.push_back({*ia, *ib});
}

std::vector<long> SncdGraph::degrees() const {
  std::vector<long> deg(components.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

long SncdGraph::intersection(std::size_t i, std::size_t j) const {
  long count = 0;
  for (const auto& e : edges) {
    if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) ++count;
  }
  return count;
}

namespace {

// sum_j n_j E_i.E_j for every i.
std::vector<long> weighted_neighbour_sums(const SncdGraph& graph) {
  std::vector<long> sums(graph.components.size(), 0);
  for (const auto& e : graph.edges) {
    sums[e.a] += graph.components[e.b].n;
    sums[e.b] += graph.components[e.a].n;
  }
  return sums;
}

long generic_euler_characteristic(const SncdGraph& graph) {
  const auto deg = graph.degrees();
  long chi = 0;
  for (std::size_t i = 0; i < graph.components.size(); ++i) {
    const auto& c = graph.components[i];
    chi += c.n * (2 - 2 * c.g - deg[i]);
  }
  return chi;
}

bool connected(const SncdGraph& graph) {
  const std::size_t n = graph.components.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : graph.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

bool proportional(const RationalVector& v, const std::vector<long>& w) {
  // v = lambda * w with lambda != 0; w has positive entries.
  const Rational lambda = v[0] / Rational(w[0]);
  if (lambda.is_zero()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != lambda * Rational(w[i])) return false;
  }
  return true;
}

}  // namespace

SymMatrix intersection_matrix(const SncdGraph& graph) {
  const std::size_t n = graph.components.size();
  SymMatrix m(n);
  for (const auto& e : graph.edges) {
    if (e.a == e.b) continue;
    m.set(e.a, e.b, m.at(e.a, e.b) + Rational(1));
  }
  const auto sums = weighted_neighbour_sums(graph);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, Rational(-sums[i], graph.components[i].n));
  }
  return m;
}

Diagnostics validate(const SncdGraph& graph) {
  Diagnostics out;
  auto flag = [&out](std::string rule, std::string msg) {
    out.push_back({std::move(rule), std::move(msg)});
  };
  const auto& comps = graph.components;
  if (comps.empty()) {
    flag("EmptyGraph", "graph has no components");
    return out;
  }
  std::set<std::string> ids;
  for (const auto& c : comps) {
    if (c.n < 1) {
      flag("BadMultiplicity", "component '" + c.id + "' has multiplicity " +
                                  std::to_string(c.n) + " < 1");
    }
    if (c.g < 0) {
      flag("NegativeGenus", "component '" + c.id + "' has negative genus");
    }
    if (!ids.insert(c.id).second) {
      flag("DuplicateId", "component id '" + c.id + "' used twice");
    }
  }
  for (const auto& e : graph.edges) {
    if (e.a >= comps.size() || e.b >= comps.size()) {
      flag("EdgeOutOfRange", "edge refers to a missing component");
    } else if (e.a == e.b) {
      flag("Loop", "component '" + comps[e.a].id +
                       "' meets itself; smooth components cannot self-intersect");
    }
  }
  if (!out.empty()) return out;

  if (!connected(graph)) {
    flag("NotConnected", "dual graph is not connected");
  }
  const auto sums = weighted_neighbour_sums(graph);
  bool integral = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (sums[i] % comps[i].n != 0) {
      integral = false;
      flag("NonIntegralSelfIntersection",
           "n_i does not divide sum_j n_j E_i.E_j for component '" +
               comps[i].id + "' (" + std::to_string(sums[i]) + "/" +
               std::to_string(comps[i].n) + ")");
    }
  }
  const auto report = check_neg_semidefinite(intersection_matrix(graph));
  std::vector<long> mult;
  for (const auto& c : comps) mult.push_back(c.n);
  if (!report.zariski_ok || !proportional(report.kernel_basis.front(), mult)) {
    flag("ZariskiFailure",
         "intersection form is not negative semidefinite with kernel spanned "
         "by the multiplicity vector (rank " +
             std::to_string(report.rank) + ", kernel dimension " +
             std::to_string(report.kernel_basis.size()) + ")");
  }
  if (graph.index_one) {
    long gcd = 0;
    for (const auto& c : comps) gcd = std::gcd(gcd, c.n);
    if (gcd != 1) {
      flag("IndexNotOne", "gcd of multiplicities is " + std::to_string(gcd));
    }
  }
  const long chi = generic_euler_characteristic(graph);
  if (chi % 2 != 0) {
    flag("OddEulerCharacteristic",
         "chi of the generic fiber is odd (" + std::to_string(chi) + ")");
  } else if (graph.expected_genus && integral) {
    const long g = 1 - chi / 2;
    if (g != *graph.expected_genus) {
      flag("GenusMismatch", "labels give genus " + std::to_string(g) +
                                ", expected " +
                                std::to_string(*graph.expected_genus));
    }
  }
  return out;
}

Rational node_weight(long n, long n_prime) {
  const long d = std::gcd(n, n_prime);
  return Rational(n * n + n_prime * n_prime + d * d, n * n_prime);
}

Rational virtual_nodes(const SncdGraph& graph) {
  Rational sum;
  for (const auto& e : graph.edges) {
    sum += node_weight(graph.components[e.a].n, graph.components[e.b].n);
  }
  return sum / Rational(3);
}

GraphInvariants invariants(const SncdGraph& graph) {
  const auto diags = validate(graph);
  if (!diags.empty()) {
    std::string msg = "graph failed validation:";
    for (const auto& d : diags) msg += " [" + d.rule + "] " + d.message + ";";
    throw Error(ErrorCode::kInvalidGraph, msg);
  }
  GraphInvariants inv;
  inv.V = static_cast<long>(graph.components.size());
  inv.E = static_cast<long>(graph.edges.size());
  inv.b1 = 1 - inv.V + inv.E;
  inv.R = virtual_nodes(graph);
  inv.chi_generic = generic_euler_characteristic(graph);
  inv.g = 1 - inv.chi_generic / 2;
  inv.chi_special = -inv.E;
  for (const auto& c : graph.components) {
    inv.chi_special += 2 - 2 * c.g;
    inv.a += c.g;
  }
  inv.t = inv.b1;
  inv.u = inv.g - inv.a - inv.t;
  inv.art_tame = inv.chi_generic - inv.chi_special;
  const auto sums = weighted_neighbour_sums(graph);
  for (std::size_t i = 0; i < graph.components.size(); ++i) {
    inv.self_intersections.push_back(-sums[i] / graph.components[i].n);
  }
  if (inv.u < 0) {
    throw Error(ErrorCode::kNegativeUnipotentRank,
                "unipotent rank u = g - a - t = " + std::to_string(inv.u) +
                    " < 0; labels are inconsistent");
  }
  if (inv.art_tame != -2 * inv.u - inv.E) {
    throw Error(ErrorCode::kInternal,
                "Art_tame disagrees with -2u - E on a validated graph");
  }
  return inv;
}

long euler_after_resolution(long chi_base,
                            std::span<const long> exceptional_chis) {
  long chi = chi_base;
  for (long c : exceptional_chis) chi += c - 1;
  return chi;
}

namespace {

std::string fresh_id(const SncdGraph& graph, const std::string& stem) {
  for (std::size_t k = graph.components.size();; ++k) {
    std::string id = stem + std::to_string(k);
    if (!graph.index_of(id)) return id;
  }
}

}  // namespace

SncdGraph blow_up_node(const SncdGraph& graph, std::size_t edge) {
  if (edge >= graph.edges.size()) {
    throw Error(ErrorCode::kPrecondition, "no such edge to blow up");
  }
  SncdGraph out = graph;
  const Edge e = out.edges[edge];
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge));
  const long n = graph.components[e.a].n + graph.components[e.b].n;
  const auto k = out.add_component(fresh_id(graph, "x"), n, 0);
  out.add_edge(e.a, k);
  out.add_edge(k, e.b);
  return out;
}

SncdGraph blow_up_point(const SncdGraph& graph, std::size_t component) {
  if (component >= graph.components.size()) {
    throw Error(ErrorCode::kPrecondition, "no such component to blow up");
  }
  SncdGraph out = graph;
  const auto k = out.add_component(fresh_id(graph, "p"),
                                   graph.components[component].n, 0);
  out.add_edge(component, k);
  return out;
}

}  // namespace conductor::dualgraph

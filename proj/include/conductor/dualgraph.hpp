#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conductor/error.hpp"
#include "conductor/linalg.hpp"
#include "conductor/rational.hpp"

namespace conductor::dualgraph {

// Irreducible component E_i of the special fiber: multiplicity n_i, genus.
struct Component {
  std::string id;
  long n = 1;
  long g = 0;

  bool operator==(const Component&) const = default;
};

// Unordered pair of component indices. Repeated edges encode E_i.E_j > 1.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;

  bool operator==(const Edge&) const = default;
};

// Labelled dual graph of an sncd model.
struct SncdGraph {
  std::vector<Component> components;
  std::vector<Edge> edges;
  // Require gcd of all multiplicities to be 1.
  bool index_one = false;
  // When present, a genus disagreeing with chi(generic fiber) is flagged.
  std::optional<long> expected_genus;

  std::size_t add_component(std::string id, long n, long g);
  // Throws kPrecondition for an unknown id.
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(std::size_t a, std::size_t b) { edges.push_back({a, b}); }

  std::optional<std::size_t> index_of(const std::string& id) const;
  std::vector<long> degrees() const;
  // Number of edges joining i and j (i != j).
  long intersection(std::size_t i, std::size_t j) const;

  bool operator==(const SncdGraph&) const = default;
};

// E_i.E_j off the diagonal; E_i^2 = -(1/n_i) sum_j n_j E_i.E_j on it. The
// diagonal may be non-integral for a graph failing validation.
SymMatrix intersection_matrix(const SncdGraph& graph);

// Rule names: EmptyGraph, BadMultiplicity, NegativeGenus, DuplicateId,
// EdgeOutOfRange, Loop, NotConnected, NonIntegralSelfIntersection,
// ZariskiFailure, IndexNotOne, OddEulerCharacteristic, GenusMismatch.
Diagnostics validate(const SncdGraph& graph);

struct GraphInvariants {
  long V = 0;
  long E = 0;
  long b1 = 0;
  Rational R;
  long chi_generic = 0;
  long chi_special = 0;
  long g = 0;
  long a = 0;
  long t = 0;
  long u = 0;
  long art_tame = 0;
  // Aligned with graph.components.
  std::vector<long> self_intersections;
};

// (n^2 + n'^2 + gcd(n,n')^2) / (n n'): one node's share of 3R.
Rational node_weight(long n, long n_prime);

// Virtual number of nodes R = (1/3) sum over edges of node_weight.
Rational virtual_nodes(const SncdGraph& graph);

// Throws kInvalidGraph when validate() reports anything and
// kNegativeUnipotentRank when u < 0.
GraphInvariants invariants(const SncdGraph& graph);

// chi after resolving: chi_base + sum (chi(E_i) - 1) over exceptional E_i.
long euler_after_resolution(long chi_base, std::span<const long> exceptional_chis);

// Blow up the node carried by edges[edge]: the edge is replaced by a new
// rational component of multiplicity n + n' meeting both ends once.
SncdGraph blow_up_node(const SncdGraph& graph, std::size_t edge);

// Blow up a general point of components[component]: adds a rational leaf
// of the same multiplicity.
SncdGraph blow_up_point(const SncdGraph& graph, std::size_t component);

}  // namespace conductor::dualgraph

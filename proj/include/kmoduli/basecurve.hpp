#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

struct BoundaryPoint {
  Rational coefficient;  // in (0, 1]
  std::string location;
};

struct Component {
  long genus = 0;
  Rational moduli_degree;  // >= 0, denominators dividing 12 in the cases in scope
  std::vector<BoundaryPoint> boundary;
  long markings = 0;
};

struct GraphEdge {
  size_t a, b;
  int stabilizer = 1;  // node stabilizer order, in {1,2,3,4}
};

/// Decorated dual graph of a nodal base curve with per-component moduli
/// degree and boundary bookkeeping.
struct DecoratedDualGraph {
  std::vector<Component> components;
  std::vector<GraphEdge> edges;

  size_t valence(size_t comp) const;
  bool connected() const;
  /// Moduli degrees with denominators not dividing 12 are accepted but
  /// reported here.
  std::vector<std::string> validate() const;

  /// deg(K + B + M) restricted to the component: 2g - 2 + valence +
  /// boundary mass + moduli degree.
  Rational adjusted_degree(size_t comp) const;
};

struct MmpStep {
  DecoratedDualGraph graph;
  size_t contracted;            // id in the input graph
  Rational deposited;           // coefficient left at the attachment point
  std::optional<size_t> onto;   // neighbour that received the boundary point
};

/// Contracts the rational tail with the most negative deg(K+B+M) (ties to
/// the lowest id), depositing its moduli degree plus boundary mass as a
/// boundary point at the attachment; nullopt when the graph is minimal.
std::optional<MmpStep> mmp_step(const DecoratedDualGraph& g);

/// Iterates mmp_step to a fixed point; terminates within #components steps.
DecoratedDualGraph run_mmp(const DecoratedDualGraph& g);

/// Conserved quantity: sum of (moduli + boundary mass) plus the canonical
/// contributions sum(2g - 2 + valence).
Rational total_degree(const DecoratedDualGraph& g);

/// Combinatorial type of a stable quasimap limit: component degrees, the
/// admissible node stabilizer multisets, and the number of contracted
/// components (each of which carries a modulus-of-variation marker).
struct QuasimapType {
  std::vector<int> degrees;                       // sorted descending
  std::vector<std::vector<int>> stabilizer_options;  // each sorted ascending
  int contracted = 0;

  std::string str() const;
};

/// All decorated trees of components that can appear as limits of degree-d
/// covers, under the node rules: degree-2 components carry mu_3 nodes (one
/// or two), degree-3 components exactly one mu_2-or-mu_4 node, degree-1
/// components sit between a mu_3 and a mu_4 node, degree-0 components are
/// contracted, attach at >= 3 mu_3 nodes and carry a variation marker;
/// higher degrees follow the 2|d / 3|d divisibility rules. A mu_2/mu_4 node
/// needs both sides odd and one side of degree >= 3. Assignments differing
/// only in the mu_2/mu_4 choice on the same tree are subtypes of one type.
std::vector<QuasimapType> enumerate_quasimap_types(int total_degree);

}  // namespace kmoduli

// poset_engine.hpp
//
// The order on collections of line bundles induced by morphisms acting on
// the Ext^1 germs against a fixed collection of partners on the other side.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adesheaf/hom_calculus.hpp"

namespace ade {

enum class PosetSide {
  Sub,       // F-side N_i: N1 <= N2 iff some g: N1 -> N2 has g_* != 0 on every Ext^1(L_j, -)
  Quotient,  // G-side L_j: L1 <= L2 iff some f: L2 -> L1 has f^* != 0 on every Ext^1(-, N_i)
};

struct BundlePoset {
  std::vector<LineBundle> elements;
  std::vector<LineBundle> partners;
  PosetSide side = PosetSide::Sub;
  std::vector<std::vector<bool>> leq;  // leq[p][q]: elements[p] <= elements[q]
  /// For related pairs, coordinates of a witnessing morphism in the basis of
  /// the relevant Hom space.
  std::vector<std::vector<std::optional<Vector>>> witness;

  std::size_t size() const { return elements.size(); }
  bool less(std::size_t p, std::size_t q) const { return p != q && leq[p][q]; }
  bool comparable(std::size_t p, std::size_t q) const { return leq[p][q] || leq[q][p]; }
};

/// Throws InvalidInput naming the offending bundle or pair when some element
/// or partner has non-scalar endomorphisms, or some cross pair has Ext^1 of
/// dimension other than 1.
BundlePoset build_poset(const CurveConfig& config, std::vector<LineBundle> elements, std::vector<LineBundle> partners,
                        PosetSide side);

struct AxiomCheck {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool ok() const { return reflexive && antisymmetric && transitive; }
};
AxiomCheck check_axioms(const BundlePoset& poset);

bool is_chain(const BundlePoset& poset, const std::vector<std::size_t>& subset);
std::vector<std::size_t> minimal_elements(const BundlePoset& poset, const std::vector<std::size_t>& subset);

/// Largest antichain via Dilworth: n minus a maximum matching of the strict
/// order viewed as a bipartite graph.
std::size_t width(const BundlePoset& poset);
/// Largest antichain by branch and bound.
std::vector<std::size_t> max_antichain(const BundlePoset& poset);
/// max over all subsets of the number of minimal elements; exhaustive, so
/// only for small posets (throws InvalidInput above 24 elements).
std::size_t max_minimal_exhaustive(const BundlePoset& poset);

/// Hasse diagram, edges from smaller to larger.
std::string to_dot(const BundlePoset& poset);

}  // namespace ade

// hom_calculus.hpp
//
// Hom and Ext^1 between line bundles on subtrees, on the reduced curve and on
// the ambient surface.
//
// Hom(L1, L2) is the space of sections of the line bundle on the common
// support W = supp L1 n supp L2 whose degree on a component c is
//   deg_c L2 - deg_c L1 - #{nodes of c leading into supp L2 \ W}.
// The twist comes from the local model at a node k[u,v]/(uv):
//   Hom(k[u], k[v]) = 0,  Hom(k[u], R) = u k[u],  Hom(R, k[u]) = k[u].
// Morphisms are stored untwisted: one multiplier polynomial of degree
// deg_c L2 - deg_c L1 per component of W, vanishing at the twisted nodes.
#pragma once

#include <span>
#include <vector>

#include "adesheaf/tree_bundles.hpp"

namespace ade {

struct HomElement {
  std::vector<int> components;
  std::vector<HomogeneousPoly> blocks;

  bool is_zero() const;
  /// Multiplier value on `component` at the point toward `toward`; zero when
  /// the morphism does not live on that component.
  Rational value_at(const CurveConfig& config, int component, int toward) const;
};

class HomSpace {
 public:
  HomSpace(const CurveConfig& config, LineBundle source, LineBundle target);

  const LineBundle& source() const { return source_; }
  const LineBundle& target() const { return target_; }
  /// W, the componentwise intersection of the supports.
  const std::vector<int>& common() const { return common_; }
  /// Twisted nodes: (component of W, neighbour in supp target \ W).
  const std::vector<std::pair<int, int>>& twisted_nodes() const { return twisted_; }

  int dimension() const { return dimension_; }
  const std::vector<HomElement>& basis() const { return basis_; }

  HomElement element(std::span<const Rational> coords) const;
  /// Throws InvariantViolation if `phi` is not a morphism source -> target.
  Vector coordinates(const HomElement& phi) const;
  HomElement zero() const;

 private:
  LineBundle source_;
  LineBundle target_;
  std::vector<int> common_;
  std::vector<std::pair<int, int>> twisted_;
  int dimension_ = 0;
  GluingProblem problem_;
  GluingSolution solution_;
  std::vector<HomElement> basis_;
};

HomSpace hom0(const CurveConfig& config, const LineBundle& source, const LineBundle& target);

/// Dimension of Hom(source, target) from the node-local models alone: one
/// unknown multiplier per shared component, one condition per node read off
/// the local model there, no intersection/twist bookkeeping.
int hom0_oracle(const CurveConfig& config, const LineBundle& source, const LineBundle& target);

HomElement identity_morphism(const LineBundle& bundle);

/// psi o phi, written in the layout of `into` = Hom(phi.source, psi.target).
HomElement compose(const HomSpace& into, const HomElement& psi, const HomElement& phi);

/// Euler pairing on the surface: -c1(L1).c1(L2).
int chi_X(const CurveConfig& config, const LineBundle& l1, const LineBundle& l2);

/// hom0(L1,L2) + hom0(L2,L1) - chi_X(L1,L2). Throws InvariantViolation if
/// the result is negative.
int hom1_X(const CurveConfig& config, const LineBundle& l1, const LineBundle& l2);

/// Ext^1 on the reduced curve between bundles with no common component: one
/// germ k(x) per node x joining the two supports.
struct Ext1Germs {
  LineBundle source;
  LineBundle target;
  std::vector<Node> nodes;

  int dimension() const { return static_cast<int>(nodes.size()); }
};

/// Throws Unsupported when the supports share a component.
Ext1Germs ext1_Z(const CurveConfig& config, const LineBundle& source, const LineBundle& target);

enum class Side {
  Post,  // phi : target -> target', germs(source, target) -> germs(source, target')
  Pre,   // phi : source' -> source, germs(source, target) -> germs(source', target)
};

struct GermMap {
  Ext1Germs from;
  Ext1Germs to;
  Matrix matrix;  // to.dimension() x from.dimension()
};

/// Induced map on Ext^1 germs: the germ at x is scaled by the value of the
/// multiplier at x. Throws InvalidInput if phi is not composable.
GermMap act_on_ext(const CurveConfig& config, const HomSpace& space, const HomElement& phi, const Ext1Germs& germs,
                   Side side);

}  // namespace ade

// tree_bundles.hpp
//
// Line bundles on connected subtrees of a configuration and their global
// sections. A section is a tuple of homogeneous polynomials, one per
// component, agreeing at the nodes of the support; a component of negative
// degree carries the zero block and forces its neighbours to vanish at the
// shared node.
#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "adesheaf/curve_config.hpp"
#include "adesheaf/linalg.hpp"

namespace ade {

/// sum_k coeffs[k] x^k y^(degree-k). Negative degree is the zero block.
struct HomogeneousPoly {
  int degree = -1;
  Vector coeffs;

  static HomogeneousPoly zero(int degree);
  static HomogeneousPoly constant(Rational c);

  bool is_zero() const { return ade::is_zero(coeffs); }
  Rational evaluate(const ProjectivePoint& p) const;

  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;
};

class LineBundle {
 public:
  LineBundle() = default;
  /// `degrees[k]` is the degree on `support[k]`. The support is sorted on
  /// construction; throws InvalidInput if it is empty, repeats a component
  /// or is disconnected in `config`.
  LineBundle(const CurveConfig& config, std::vector<int> support, std::vector<int> degrees);

  static LineBundle structure_sheaf(const CurveConfig& config, std::vector<int> support);

  const std::vector<int>& support() const { return support_; }
  const std::vector<int>& degrees() const { return degrees_; }
  bool contains(int c) const;
  int degree(int c) const;
  /// Position of `c` in support(), or -1.
  int index_of(int c) const;

  /// Reduced cycle of the support, which is c1 of the pushforward.
  Cycle c1(int config_size) const { return Cycle::reduced(config_size, support_); }

  /// Same support, degrees shifted componentwise by `shift[c-1]`.
  LineBundle shifted(std::span<const int> shift) const;

  /// "O_{C1+C3}(-1,0)".
  std::string name() const;

  friend bool operator==(const LineBundle&, const LineBundle&) = default;
  friend auto operator<=>(const LineBundle&, const LineBundle&) = default;

 private:
  std::vector<int> support_;
  std::vector<int> degrees_;
};

/// One polynomial block per component of the owning support.
struct Section {
  std::vector<HomogeneousPoly> blocks;
};

/// Polynomial blocks on `components` with the given degrees, required to
/// agree on each `matched` node and to vanish at each `vanishing` point
/// (component, neighbour toward which the point lies).
struct GluingProblem {
  std::vector<int> components;
  std::vector<int> degrees;
  std::vector<Node> matched;
  std::vector<std::pair<int, int>> vanishing;
};

struct GluingSolution {
  Kernel kernel;
  std::vector<std::size_t> offsets;  // start of each component's coefficients
  std::size_t equations = 0;
  std::size_t rank = 0;

  std::size_t dimension() const { return kernel.dimension(); }
  Section section(std::size_t k, const GluingProblem& problem) const;
  Section section_from(const Vector& coefficients, const GluingProblem& problem) const;
  /// Flatten a section back into kernel ambient coordinates.
  Vector flatten(const Section& s) const;
};

GluingSolution solve_gluing(const CurveConfig& config, const GluingProblem& problem);

struct SectionSpace {
  LineBundle bundle;
  std::vector<Section> basis;
  /// Internal and boundary nodes of the support.
  std::vector<Node> nodes;
  /// values[n][k] = value of basis section k at nodes[n].
  std::vector<std::vector<Rational>> values;

  std::size_t dimension() const { return basis.size(); }
};

SectionSpace sections(const CurveConfig& config, const LineBundle& bundle);
int h0(const CurveConfig& config, const LineBundle& bundle);
/// Cokernel of the normalization map: sum of the components' h1 plus the
/// node conditions the component sections fail to satisfy.
int h1(const CurveConfig& config, const LineBundle& bundle);
/// Closed form: sum (d_i + 1) minus the number of internal nodes.
int euler_characteristic(const LineBundle& bundle);

/// Value of `s` (a section of `bundle`) at a node of the support or its
/// boundary. Throws InvalidInput for nodes away from the support.
Rational node_value(const CurveConfig& config, const LineBundle& bundle, const Section& s, Node node);

/// Every nonempty connected component subset of `within` (sorted, each sorted).
std::vector<std::vector<int>> connected_subsets(const CurveConfig& config, std::span<const int> within);

}  // namespace ade

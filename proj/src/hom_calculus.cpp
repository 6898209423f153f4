// hom_calculus.cpp
#include "adesheaf/hom_calculus.hpp"

#include <algorithm>

#include "adesheaf/errors.hpp"

namespace ade {

bool HomElement::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const HomogeneousPoly& p) { return p.is_zero(); });
}

Rational HomElement::value_at(const CurveConfig& config, int component, int toward) const {
  auto it = std::find(components.begin(), components.end(), component);
  if (it == components.end()) return Rational{};
  const HomogeneousPoly& block = blocks[static_cast<std::size_t>(it - components.begin())];
  if (block.degree < 0) return Rational{};
  return block.evaluate(config.node_point(component, toward));
}

HomSpace::HomSpace(const CurveConfig& config, LineBundle source, LineBundle target)
    : source_(std::move(source)), target_(std::move(target)) {
  for (int c : source_.support())
    if (target_.contains(c)) common_.push_back(c);
  if (common_.empty()) return;
  if (!config.is_connected(common_)) {
    throw InvariantViolation("intersection of two subtrees is disconnected");
  }

  std::vector<int> twisted_degree;
  for (int c : common_) {
    int twist = 0;
    for (int nb : config.neighbors(c)) {
      if (target_.contains(nb) && !source_.contains(nb)) {
        twisted_.emplace_back(c, nb);
        ++twist;
      }
    }
    twisted_degree.push_back(target_.degree(c) - source_.degree(c) - twist);
  }
  dimension_ = h0(config, LineBundle(config, common_, twisted_degree));

  problem_.components = common_;
  for (int c : common_) problem_.degrees.push_back(target_.degree(c) - source_.degree(c));
  problem_.matched = subtree(config, common_).internal_edges;
  problem_.vanishing = twisted_;
  solution_ = solve_gluing(config, problem_);
  if (static_cast<int>(solution_.dimension()) != dimension_) {
    throw InvariantViolation("Hom(" + source_.name() + ", " + target_.name() +
                             "): multiplier space disagrees with the twisted bundle");
  }
  for (std::size_t k = 0; k < solution_.dimension(); ++k) {
    Section s = solution_.section(k, problem_);
    basis_.push_back(HomElement{common_, std::move(s.blocks)});
  }
}

HomElement HomSpace::zero() const {
  HomElement phi{common_, {}};
  for (int d : problem_.degrees) phi.blocks.push_back(HomogeneousPoly::zero(d));
  return phi;
}

HomElement HomSpace::element(std::span<const Rational> coords) const {
  if (coords.size() != basis_.size()) throw InvalidInput("wrong number of Hom coordinates");
  if (basis_.empty()) return zero();
  Section s = solution_.section_from(solution_.kernel.combine(coords), problem_);
  return HomElement{common_, std::move(s.blocks)};
}

Vector HomSpace::coordinates(const HomElement& phi) const {
  if (phi.components != common_) throw InvariantViolation("morphism lives on the wrong components");
  if (basis_.empty()) {
    if (!phi.is_zero()) throw InvariantViolation("nonzero element of a zero Hom space");
    return {};
  }
  Vector flat = solution_.flatten(Section{phi.blocks});
  Vector coords = solution_.kernel.coordinates(flat);
  if (solution_.kernel.combine(coords) != flat) {
    throw InvariantViolation("element is not a morphism " + source_.name() + " -> " + target_.name());
  }
  return coords;
}

HomSpace hom0(const CurveConfig& config, const LineBundle& source, const LineBundle& target) {
  return HomSpace(config, source, target);
}

namespace {

// Monomial x^k y^(d-k) at one of the three node points, evaluated directly.
Rational monomial_at(int k, int d, int slot) {
  switch (slot) {
    case 0: return k == d ? 1 : 0;  // [1:0]
    case 1: return k == 0 ? 1 : 0;  // [0:1]
    default: return 1;              // [1:1]
  }
}

int slot_of(const CurveConfig& config, int component, int neighbor) {
  const auto& nb = config.neighbors(component);
  return static_cast<int>(std::find(nb.begin(), nb.end(), neighbor) - nb.begin());
}

}  // namespace

int hom0_oracle(const CurveConfig& config, const LineBundle& source, const LineBundle& target) {
  std::vector<int> shared;
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int c : config.components()) {
    offset.push_back(unknowns);
    if (source.contains(c) && target.contains(c)) {
      shared.push_back(c);
      int d = target.degree(c) - source.degree(c);
      if (d >= 0) unknowns += static_cast<std::size_t>(d) + 1;
    }
  }
  if (shared.empty()) return 0;
  auto degree = [&](int c) { return target.degree(c) - source.degree(c); };
  auto put = [&](Vector& row, int c, int toward, const Rational& sign) {
    int d = degree(c);
    int slot = slot_of(config, c, toward);
    for (int k = 0; k <= d; ++k)
      row[offset[static_cast<std::size_t>(c - 1)] + static_cast<std::size_t>(k)] += sign * monomial_at(k, d, slot);
  };

  Matrix system(0, unknowns);
  for (const Node& node : config.edges()) {
    for (auto [c, other] : {std::pair{node.a, node.b}, std::pair{node.b, node.a}}) {
      bool c_in_both = source.contains(c) && target.contains(c);
      if (!c_in_both) continue;
      bool other_in_source = source.contains(other);
      bool other_in_target = target.contains(other);
      Vector row(unknowns);
      if (other_in_source && other_in_target) {
        // R -> R: both branches carry the map; values agree. Record once.
        if (c > other) continue;
        put(row, c, other, 1);
        put(row, other, c, -1);
      } else if (other_in_target) {
        // k[u] -> R: image lies in u k[u], so the multiplier vanishes at x.
        put(row, c, other, 1);
      } else {
        // R -> k[u] or k[u] -> k[u]: no condition.
        continue;
      }
      system.append_row(row);
    }
  }
  return static_cast<int>(unknowns - rank(system));
}

HomElement identity_morphism(const LineBundle& bundle) {
  HomElement id{bundle.support(), {}};
  for (std::size_t k = 0; k < bundle.support().size(); ++k) id.blocks.push_back(HomogeneousPoly::constant(1));
  return id;
}

HomElement compose(const HomSpace& into, const HomElement& psi, const HomElement& phi) {
  HomElement out = into.zero();
  for (std::size_t k = 0; k < out.components.size(); ++k) {
    int c = out.components[k];
    auto ip = std::find(psi.components.begin(), psi.components.end(), c);
    auto ih = std::find(phi.components.begin(), phi.components.end(), c);
    if (ip == psi.components.end() || ih == phi.components.end()) continue;
    HomogeneousPoly prod = psi.blocks[static_cast<std::size_t>(ip - psi.components.begin())] *
                           phi.blocks[static_cast<std::size_t>(ih - phi.components.begin())];
    if (prod.degree != out.blocks[k].degree) throw InvariantViolation("composition degree mismatch");
    out.blocks[k] = std::move(prod);
  }
  into.coordinates(out);  // membership check
  return out;
}

int chi_X(const CurveConfig& config, const LineBundle& l1, const LineBundle& l2) {
  return -intersection(config, l1.c1(config.size()), l2.c1(config.size()));
}

int hom1_X(const CurveConfig& config, const LineBundle& l1, const LineBundle& l2) {
  int value = hom0(config, l1, l2).dimension() + hom0(config, l2, l1).dimension() - chi_X(config, l1, l2);
  if (value < 0) {
    throw InvariantViolation("negative hom1 between " + l1.name() + " and " + l2.name());
  }
  return value;
}

Ext1Germs ext1_Z(const CurveConfig& config, const LineBundle& source, const LineBundle& target) {
  for (int c : source.support()) {
    if (target.contains(c)) {
      throw Unsupported("Ext^1 between " + source.name() + " and " + target.name() + " which share C" +
                        std::to_string(c));
    }
  }
  Ext1Germs g{source, target, {}};
  for (int c : source.support())
    for (int nb : config.neighbors(c))
      if (target.contains(nb)) g.nodes.push_back(Node::between(c, nb));
  std::sort(g.nodes.begin(), g.nodes.end());
  return g;
}

GermMap act_on_ext(const CurveConfig& config, const HomSpace& space, const HomElement& phi, const Ext1Germs& germs,
                   Side side) {
  GermMap map;
  map.from = germs;
  if (side == Side::Post) {
    if (space.source() != germs.target) throw InvalidInput("post-composition with a morphism from the wrong bundle");
    map.to = ext1_Z(config, germs.source, space.target());
  } else {
    if (space.target() != germs.source) throw InvalidInput("pre-composition with a morphism into the wrong bundle");
    map.to = ext1_Z(config, space.source(), germs.target);
  }
  map.matrix = Matrix(map.to.nodes.size(), map.from.nodes.size());
  for (std::size_t j = 0; j < map.from.nodes.size(); ++j) {
    const Node& x = map.from.nodes[j];
    auto it = std::find(map.to.nodes.begin(), map.to.nodes.end(), x);
    if (it == map.to.nodes.end()) continue;
    // The germ's source-side and target-side components at x.
    int on_source = germs.source.contains(x.a) ? x.a : x.b;
    int on_target = x.other(on_source);
    Rational v = side == Side::Post ? phi.value_at(config, on_target, on_source)
                                    : phi.value_at(config, on_source, on_target);
    map.matrix(static_cast<std::size_t>(it - map.to.nodes.begin()), j) = v;
  }
  return map;
}

}  // namespace ade

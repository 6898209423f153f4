// tree_bundles.cpp
#include "adesheaf/tree_bundles.hpp"

#include <algorithm>
#include <numeric>

#include "adesheaf/errors.hpp"

namespace ade {

HomogeneousPoly HomogeneousPoly::zero(int degree) {
  HomogeneousPoly p;
  p.degree = degree;
  if (degree >= 0) p.coeffs.assign(static_cast<std::size_t>(degree) + 1, Rational{});
  return p;
}

HomogeneousPoly HomogeneousPoly::constant(Rational c) {
  HomogeneousPoly p;
  p.degree = 0;
  p.coeffs = {c};
  return p;
}

Rational HomogeneousPoly::evaluate(const ProjectivePoint& p) const {
  Rational total;
  for (int k = 0; k <= degree; ++k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational term = c;
    for (int i = 0; i < k; ++i) term *= p.x;
    for (int i = k; i < degree; ++i) term *= p.y;
    total += term;
  }
  return total;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.degree < 0 || b.degree < 0) return HomogeneousPoly::zero(a.degree + b.degree);
  HomogeneousPoly p = HomogeneousPoly::zero(a.degree + b.degree);
  for (int i = 0; i <= a.degree; ++i)
    for (int j = 0; j <= b.degree; ++j)
      p.coeffs[static_cast<std::size_t>(i + j)] += a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
  return p;
}

LineBundle::LineBundle(const CurveConfig& config, std::vector<int> support, std::vector<int> degrees) {
  if (support.size() != degrees.size()) throw InvalidInput("support and degree lists differ in length");
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return support[i] < support[j]; });
  for (auto i : order) {
    support_.push_back(support[i]);
    degrees_.push_back(degrees[i]);
  }
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw InvalidInput("line bundle support repeats a component");
  }
  if (!config.is_connected(support_)) throw InvalidInput("line bundle support must be nonempty and connected");
}

LineBundle LineBundle::structure_sheaf(const CurveConfig& config, std::vector<int> support) {
  std::vector<int> zeros(support.size(), 0);
  return LineBundle(config, std::move(support), std::move(zeros));
}

int LineBundle::index_of(int c) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), c);
  if (it == support_.end() || *it != c) return -1;
  return static_cast<int>(it - support_.begin());
}

bool LineBundle::contains(int c) const { return index_of(c) >= 0; }

int LineBundle::degree(int c) const {
  int i = index_of(c);
  if (i < 0) throw InvalidInput("C" + std::to_string(c) + " is not in the support of " + name());
  return degrees_[static_cast<std::size_t>(i)];
}

LineBundle LineBundle::shifted(std::span<const int> shift) const {
  LineBundle out = *this;
  for (std::size_t k = 0; k < support_.size(); ++k) {
    out.degrees_[k] += shift[static_cast<std::size_t>(support_[k] - 1)];
  }
  return out;
}

std::string LineBundle::name() const {
  std::string s = "O_{";
  for (std::size_t k = 0; k < support_.size(); ++k) s += (k ? "+C" : "C") + std::to_string(support_[k]);
  s += "}(";
  for (std::size_t k = 0; k < degrees_.size(); ++k) s += (k ? "," : "") + std::to_string(degrees_[k]);
  return s + ")";
}

Section GluingSolution::section_from(const Vector& coefficients, const GluingProblem& problem) const {
  Section s;
  for (std::size_t k = 0; k < problem.components.size(); ++k) {
    HomogeneousPoly p = HomogeneousPoly::zero(problem.degrees[k]);
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) p.coeffs[j] = coefficients[offsets[k] + j];
    s.blocks.push_back(std::move(p));
  }
  return s;
}

Section GluingSolution::section(std::size_t k, const GluingProblem& problem) const {
  return section_from(kernel.basis.at(k), problem);
}

Vector GluingSolution::flatten(const Section& s) const {
  Vector v(kernel.ambient);
  for (std::size_t k = 0; k < s.blocks.size(); ++k)
    for (std::size_t j = 0; j < s.blocks[k].coeffs.size(); ++j) v[offsets[k] + j] = s.blocks[k].coeffs[j];
  return v;
}

namespace {

/// Row of evaluation functionals: coefficient block of `component` at the
/// point toward `neighbor`, scaled by `sign`.
void add_evaluation(const CurveConfig& config, const GluingProblem& problem, const std::vector<std::size_t>& offsets,
                    std::size_t k, int neighbor, const Rational& sign, Vector& row) {
  int d = problem.degrees[k];
  if (d < 0) return;
  ProjectivePoint p = config.node_point(problem.components[k], neighbor);
  for (int j = 0; j <= d; ++j) {
    HomogeneousPoly mono = HomogeneousPoly::zero(d);
    mono.coeffs[static_cast<std::size_t>(j)] = 1;
    row[offsets[k] + static_cast<std::size_t>(j)] += sign * mono.evaluate(p);
  }
}

std::size_t position(const GluingProblem& problem, int c) {
  auto it = std::find(problem.components.begin(), problem.components.end(), c);
  if (it == problem.components.end()) throw InvalidInput("gluing constraint on a component outside the problem");
  return static_cast<std::size_t>(it - problem.components.begin());
}

}  // namespace

GluingSolution solve_gluing(const CurveConfig& config, const GluingProblem& problem) {
  GluingSolution sol;
  std::size_t unknowns = 0;
  for (int d : problem.degrees) {
    sol.offsets.push_back(unknowns);
    if (d >= 0) unknowns += static_cast<std::size_t>(d) + 1;
  }
  Matrix system(0, unknowns);
  for (const Node& node : problem.matched) {
    Vector row(unknowns);
    add_evaluation(config, problem, sol.offsets, position(problem, node.a), node.b, Rational(1), row);
    add_evaluation(config, problem, sol.offsets, position(problem, node.b), node.a, Rational(-1), row);
    system.append_row(row);
  }
  for (const auto& [c, toward] : problem.vanishing) {
    Vector row(unknowns);
    add_evaluation(config, problem, sol.offsets, position(problem, c), toward, Rational(1), row);
    system.append_row(row);
  }
  sol.equations = system.rows();
  sol.rank = rank(system);
  sol.kernel = kernel(system);
  return sol;
}

namespace {

GluingProblem bundle_problem(const CurveConfig& config, const LineBundle& bundle) {
  GluingProblem problem;
  problem.components = bundle.support();
  problem.degrees = bundle.degrees();
  for (const Node& e : subtree(config, bundle.support()).internal_edges) problem.matched.push_back(e);
  return problem;
}

}  // namespace

SectionSpace sections(const CurveConfig& config, const LineBundle& bundle) {
  GluingProblem problem = bundle_problem(config, bundle);
  GluingSolution sol = solve_gluing(config, problem);
  SectionSpace space;
  space.bundle = bundle;
  for (std::size_t k = 0; k < sol.dimension(); ++k) space.basis.push_back(sol.section(k, problem));
  Subtree t = subtree(config, bundle.support());
  space.nodes = t.internal_edges;
  for (const auto& [in, out] : t.boundary) space.nodes.push_back(Node::between(in, out));
  std::sort(space.nodes.begin(), space.nodes.end());
  for (const Node& node : space.nodes) {
    std::vector<Rational> row;
    for (const Section& s : space.basis) row.push_back(node_value(config, bundle, s, node));
    space.values.push_back(std::move(row));
  }
  return space;
}

int h0(const CurveConfig& config, const LineBundle& bundle) {
  return static_cast<int>(solve_gluing(config, bundle_problem(config, bundle)).dimension());
}

int h1(const CurveConfig& config, const LineBundle& bundle) {
  GluingSolution sol = solve_gluing(config, bundle_problem(config, bundle));
  int components_h1 = 0;
  for (int d : bundle.degrees()) components_h1 += std::max(0, -d - 1);
  return components_h1 + static_cast<int>(sol.equations - sol.rank);
}

int euler_characteristic(const LineBundle& bundle) {
  int chi = 0;
  for (int d : bundle.degrees()) chi += d + 1;
  // A connected support in a tree with k components has k-1 internal nodes.
  return chi - (static_cast<int>(bundle.support().size()) - 1);
}

Rational node_value(const CurveConfig& config, const LineBundle& bundle, const Section& s, Node node) {
  if (!config.adjacent(node.a, node.b)) throw InvalidInput("not a node: " + node.name());
  int on = bundle.contains(node.a) ? node.a : bundle.contains(node.b) ? node.b : 0;
  if (on == 0) throw InvalidInput("node " + node.name() + " is away from the support of " + bundle.name());
  const HomogeneousPoly& block = s.blocks.at(static_cast<std::size_t>(bundle.index_of(on)));
  if (block.degree < 0) return Rational{};
  return block.evaluate(config.node_point(on, node.other(on)));
}

std::vector<std::vector<int>> connected_subsets(const CurveConfig& config, std::span<const int> within) {
  std::vector<int> pool(within.begin(), within.end());
  std::sort(pool.begin(), pool.end());
  if (pool.size() > 20) throw InvalidInput("connected_subsets: too many components");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) subset.push_back(pool[i]);
    if (config.is_connected(subset)) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ade

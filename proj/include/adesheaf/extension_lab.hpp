// extension_lab.hpp
//
// Pure sheaves presented as extensions 0 -> F -> E -> G -> 0 with
// F = N_1 + ... + N_m and G = L_1 + ... + L_n line bundles on subtrees, no
// F-summand sharing a component with a G-summand. Two disjoint subtrees of a
// tree meet in at most one node, so each Ext^1(L_j, N_i) is zero or a single
// germ and the class is an m x n matrix epsilon of germ coordinates.
//
// With disjoint supports Hom(F, G) = Hom(G, F) = 0, so End(E) is the algebra
// of pairs (a, b) in End(F) x End(G) with a o epsilon = epsilon o b.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adesheaf/algebra.hpp"

namespace ade {

class ExtPresentation {
 public:
  ExtPresentation() = default;
  /// Throws InvalidInput if an F-summand and a G-summand share a component,
  /// or epsilon is nonzero at a pair with no connecting node.
  ExtPresentation(const CurveConfig& config, std::vector<LineBundle> f, std::vector<LineBundle> g, Matrix epsilon);

  const CurveConfig& config() const { return config_; }
  const std::vector<LineBundle>& f() const { return f_; }
  const std::vector<LineBundle>& g() const { return g_; }
  const Matrix& epsilon() const { return epsilon_; }
  /// Node joining supp N_i and supp L_j.
  const std::optional<Node>& node(std::size_t i, std::size_t j) const { return nodes_[i * g_.size() + j]; }
  int germ_count() const;

  /// Sub-presentation on the chosen rows and columns.
  ExtPresentation restrict(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  Cycle c1() const;
  std::size_t rank() const;

 private:
  CurveConfig config_;
  std::vector<LineBundle> f_;
  std::vector<LineBundle> g_;
  Matrix epsilon_;
  std::vector<std::optional<Node>> nodes_;
};

/// epsilon = 1 on every germ.
ExtPresentation universal_extension(const CurveConfig& config, std::vector<LineBundle> f, std::vector<LineBundle> g);

Cycle c1(const ExtPresentation& pres);
/// max over components of ceil(mult / Z'_i). Throws InvalidInput if the
/// support of pres is not inside the support of `reference`.
std::size_t rank(const ExtPresentation& pres, const Cycle& reference);

/// Germ scalars of End(F) and End(G) on epsilon, shared by the intertwiner
/// solve, the rigidity criterion and decomposition.
class PresentationActions {
 public:
  explicit PresentationActions(const ExtPresentation& pres);

  const ExtPresentation& presentation() const { return *pres_; }
  const SumEndomorphisms& end_f() const { return end_f_; }
  const SumEndomorphisms& end_g() const { return end_g_; }

  /// a o eps: post-composition by a in End(F).
  Matrix post(const Vector& a, const Matrix& eps) const;
  /// eps o b: pre-composition by b in End(G).
  Matrix pre(const Matrix& eps, const Vector& b) const;
  /// a o eps o b.
  Matrix transport(const Vector& a, const Matrix& eps, const Vector& b) const { return pre(post(a, eps), b); }

  /// Linear map (a, b) -> a o eps - eps o b into germ coordinates (one row per
  /// (i, j) with a node), columns ordered End(F) then End(G).
  Matrix commutator_map() const;

  /// Scalar of basis k of Hom(N_i1, N_i2) on the germ (i1, j).
  const Rational& post_scalar(std::size_t i2, std::size_t i1, std::size_t k, std::size_t j) const {
    return post_[i2 * end_f_.size() + i1][k][j];
  }
  /// Scalar of basis k of Hom(L_j1, L_j2) on the germ (i, j2).
  const Rational& pre_scalar(std::size_t j2, std::size_t j1, std::size_t k, std::size_t i) const {
    return pre_[j2 * end_g_.size() + j1][k][i];
  }

 private:
  const ExtPresentation* pres_;
  SumEndomorphisms end_f_;
  SumEndomorphisms end_g_;
  // post_[(i2*m + i1)][k][j]: basis k of Hom(N_i1, N_i2) on the germ (i1, j).
  std::vector<std::vector<Vector>> post_;
  // pre_[(j2*n + j1)][k][i]: basis k of Hom(L_j1, L_j2) on the germ (i, j2).
  std::vector<std::vector<Vector>> pre_;
};

struct EndAlgebra {
  /// Basis of intertwiner pairs, each an End(F) coordinate vector followed by
  /// an End(G) coordinate vector.
  std::vector<Vector> basis;
  Algebra algebra;
  std::size_t f_dimension = 0;  // length of the End(F) part

  std::size_t dimension() const { return basis.size(); }
  /// Embeds algebra coordinates back into End(F) x End(G).
  Vector pair(const Vector& coords) const;
};

EndAlgebra end_algebra(const ExtPresentation& pres);
bool is_indecomposable(const ExtPresentation& pres);

struct RigidityReport {
  int end_dimension = 0;
  int c1_square = 0;
  int hom1 = 0;  // 2 dim End + c1^2
  bool rigid = false;
  /// F and G rigid (hom1_X vanishing within each side).
  bool hypotheses = false;
  /// dim End F + dim End G - dim End E, compared with the germ count.
  int generated_dimension = 0;
  int ext_dimension = 0;
  std::optional<bool> criterion_b;
};

/// Throws InvariantViolation if the hypotheses hold and the two routes
/// disagree.
RigidityReport is_OX_rigid(const ExtPresentation& pres);

struct DecompositionPart {
  ExtPresentation presentation;
  std::vector<std::size_t> rows;  // indices into the original F list
  std::vector<std::size_t> cols;  // indices into the original G list
  int multiplicity = 1;
  std::string key;  // canonical serialization used for grouping
};

struct DecompositionReport {
  std::vector<DecompositionPart> parts;
  /// epsilon' = a o epsilon o b is block diagonal along the parts.
  Vector a;
  Vector b;
  Matrix normal_form;
  std::vector<std::string> steps;
};

DecompositionReport decompose(const ExtPresentation& pres);

/// Canonical serialization of a presentation up to row/column order and
/// germ rescaling along a spanning forest.
std::string canonical_key(const ExtPresentation& pres);

// ---------------------------------------------------------------- tables

/// Line bundles on connected subtrees of the stage path containing the
/// penultimate stage; the degree on stage c is b_c + #(later stages adjacent
/// to c inside the support), b_c in {a_c, a_c + 1}. `anchors[c-1]` = a_c.
/// The result is laid out as a table: column 0 has the last stage absent,
/// columns 1 and 2 have b_last = a_last and a_last + 1.
struct CandidateTable {
  std::vector<int> stages;
  std::vector<std::vector<LineBundle>> rows;  // rows[r][col]

  std::vector<LineBundle> flat() const;
  std::size_t size() const { return rows.size() * 3; }
  /// 1-based row and column, as printed.
  const LineBundle& at(std::size_t row, std::size_t col) const { return rows.at(row - 1).at(col - 1); }
};

CandidateTable summand_candidates(const CurveConfig& config, const std::vector<int>& stages,
                                  const std::vector<int>& anchors);

enum class ChainOrder { Outward, Inward };

/// Line bundles on subchains of `chain` (listed from the branch side outward)
/// containing chain[0], degrees b_c + #(later-stage neighbours in the
/// support) with b_c in {a_c, a_c + 1}; stages run along `order`.
std::vector<LineBundle> chain_candidates(const CurveConfig& config, const std::vector<int>& chain,
                                         const std::vector<int>& anchors, ChainOrder order);

/// Branch data for the D/E enumeration: F-side table stages and G-side chain.
struct BranchLayout {
  std::vector<int> f_stages;
  std::vector<int> chain;
  Node node;  // joins the F spine and chain[0]
};
BranchLayout branch_layout(const CurveConfig& config);

// ------------------------------------------------ single-node matrix problem

/// When every germ sits at one node x, End(E) is the preimage of
/// Lambda = {(M, N) : M eps = eps N} under the node-value maps of End(F) and
/// End(G), whose images are incidence algebras of the preorders below.
struct NodeProfile {
  std::vector<std::vector<bool>> f_order;  // f_order[i2][i1]: Hom(N_i1, N_i2) nonzero at x
  std::vector<std::vector<bool>> g_order;  // g_order[j2][j1]: Hom(L_j1, L_j2) nonzero at x
  int f_kernel = 0;                        // dim End F - #f_order
  int g_kernel = 0;
};

/// Throws Unsupported unless all nodes of `pres` coincide.
NodeProfile node_profile(const ExtPresentation& pres);

struct LambdaResult {
  int dimension = 0;
  bool local = false;  // Lambda / rad Lambda is one-dimensional
};
/// `eps` is a 0/1 pattern; `need_locality` skips the radical computation.
LambdaResult solve_lambda(const std::vector<std::vector<bool>>& f_order, const std::vector<std::vector<bool>>& g_order,
                          const std::vector<std::vector<int>>& eps, bool need_locality);

// ------------------------------------------------------------ enumeration

struct EnumerationBounds {
  int max_f = 4;
  int max_g = 3;
  std::vector<int> anchors;  // empty = all zero
};

struct RigidWitness {
  std::size_t rank = 0;
  std::vector<LineBundle> f;
  std::vector<LineBundle> g;
  std::vector<std::vector<int>> epsilon;
};

struct EnumerationResult {
  std::string config;
  std::size_t f_candidates = 0;
  std::size_t g_candidates = 0;
  std::size_t f_multisets = 0;
  std::size_t g_multisets = 0;
  std::size_t pattern_pairs = 0;
  std::size_t epsilons_solved = 0;
  unsigned long long presentations = 0;
  std::vector<unsigned long long> rigid_indecomposable_by_rank;  // index = rank
  std::size_t max_rigid_rank = 0;
  int min_hom1 = 0;
  bool sides_rigid = true;  // every rigid E found has rigid F and G
  std::vector<RigidWitness> witnesses;  // first found per rank
};

/// Bounded enumeration over F multisets from the branch table, G multisets
/// from the chain candidates, and full 0/1 epsilon. Uses the single-node
/// reduction; witnesses are re-checked with the full intertwiner solve.
EnumerationResult enumerate_presentations(const CurveConfig& config, const EnumerationBounds& bounds, int workers = 1);

}  // namespace ade

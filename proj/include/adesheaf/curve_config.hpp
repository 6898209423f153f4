// curve_config.hpp
//
// Dual graphs of the exceptional curves of ADE surface singularities, their
// intersection forms, cycles, and the fundamental cycle.
//
// Components are numbered C1..Cn. The adjacency is
//   A(n): C1-C2-...-Cn
//   D(n): C1-C3, C2-C3, C3-C4-...-Cn
//   E(n): C1-C2-C3, C3-C4, C3-C5-C6-...-Cn
// The E labeling is reconstructed, not read off a drawing: it is the only tree
// of E shape in which C2+C3+C4+C5 is a D4 star centred at C3 and C5..Cn is a
// chain.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adesheaf/rational.hpp"

namespace ade {

enum class AdeType { A, D, E };

struct AdeKind {
  AdeType type = AdeType::A;
  int n = 1;

  /// "A3", "D4", "E8".
  std::string name() const;
  /// Accepts "D4", "d4", "E6" etc. Throws InvalidInput on malformed or
  /// out-of-range symbols.
  static AdeKind parse(std::string_view symbol);

  friend bool operator==(const AdeKind&, const AdeKind&) = default;
};

/// An intersection point of two components, stored with a < b.
struct Node {
  int a = 0;
  int b = 0;

  static Node between(int x, int y);
  bool touches(int c) const { return a == c || b == c; }
  int other(int c) const { return c == a ? b : a; }
  std::string name() const;

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Homogeneous coordinates [x:y] on a component.
struct ProjectivePoint {
  Rational x;
  Rational y;
};

class CurveConfig {
 public:
  static CurveConfig build(AdeKind kind);
  static CurveConfig build(std::string_view symbol) { return build(AdeKind::parse(symbol)); }

  const AdeKind& kind() const { return kind_; }
  int size() const { return kind_.n; }
  std::vector<int> components() const;
  const std::vector<Node>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int c) const;
  bool adjacent(int i, int j) const;

  int self_intersection(int c) const;
  /// Ci.Cj of the intersection form.
  int pairing(int i, int j) const;
  std::vector<std::vector<int>> intersection_matrix() const;

  /// Point of component `component` where it meets `neighbor`. The
  /// neighbors of a component, in increasing identifier order, sit at
  /// [1:0], [0:1], [1:1].
  ProjectivePoint node_point(int component, int neighbor) const;

  bool has_component(int c) const { return c >= 1 && c <= kind_.n; }
  void check_component(int c) const;
  /// True when the (nonempty) set induces a connected subgraph.
  bool is_connected(std::span<const int> comps) const;

  friend bool operator==(const CurveConfig& a, const CurveConfig& b) { return a.kind_ == b.kind_; }

 private:
  AdeKind kind_;
  std::vector<Node> edges_;
  std::vector<std::vector<int>> neighbors_;  // index 0 unused
};

/// Integer multiplicities over the components of one configuration.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(int size) : mult_(static_cast<std::size_t>(size), 0) {}
  explicit Cycle(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {}

  /// Multiplicity one on every listed component.
  static Cycle reduced(int size, std::span<const int> comps);

  int size() const { return static_cast<int>(mult_.size()); }
  int operator[](int component) const { return mult_.at(static_cast<std::size_t>(component - 1)); }
  int& operator[](int component) { return mult_.at(static_cast<std::size_t>(component - 1)); }
  const std::vector<int>& multiplicities() const { return mult_; }

  std::vector<int> support() const;
  bool is_zero() const;
  /// Componentwise <=.
  bool leq(const Cycle& other) const;

  Cycle& operator+=(const Cycle& rhs);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator*(int k, Cycle z);
  friend bool operator==(const Cycle&, const Cycle&) = default;

  /// "C1+C2+2C3".
  std::string to_string() const;

 private:
  std::vector<int> mult_;
};

/// Bilinear extension of the intersection form. Throws InvalidInput when a
/// cycle does not live on `config`.
int intersection(const CurveConfig& config, const Cycle& z1, const Cycle& z2);

/// Minimal positive cycle Z with Z.Ci <= 0 for every component, computed by
/// starting at the reduced cycle and adding Ci while Z.Ci > 0.
Cycle fundamental_cycle(const CurveConfig& config);

/// Induced connected subgraph.
struct Subtree {
  std::vector<int> components;
  std::vector<Node> internal_edges;
  /// Edges leaving the subset, as (inside, outside) pairs.
  std::vector<std::pair<int, int>> boundary;
};

/// Throws InvalidInput on empty, unknown or disconnected component sets.
Subtree subtree(const CurveConfig& config, std::span<const int> comps);

/// True when component i of `small` mapping to image[i-1] of `big` is an
/// isomorphism of `small` onto the subgraph of `big` induced by the image.
bool is_induced_embedding(const CurveConfig& small, const CurveConfig& big, std::span<const int> image);

}  // namespace ade

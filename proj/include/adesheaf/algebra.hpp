// algebra.hpp
//
// Finite-dimensional unital associative algebras over Q given by structure
// constants, and the endomorphism algebra of a direct sum of line bundles.
#pragma once

#include <vector>

#include "adesheaf/hom_calculus.hpp"
#include "adesheaf/linalg.hpp"

namespace ade {

class Algebra {
 public:
  Algebra() = default;
  /// products[k][l] = coordinates of e_k * e_l.
  Algebra(std::vector<std::vector<Vector>> products, Vector unit);

  std::size_t dimension() const { return unit_.size(); }
  const Vector& unit() const { return unit_; }
  Vector basis_vector(std::size_t k) const;

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x*y.
  Matrix left_multiplication(const Vector& x) const;

  /// Kernel of the trace form tr(L_{xy}); in characteristic zero this is the
  /// Jacobson radical.
  Kernel radical() const;
  std::size_t semisimple_dimension() const { return dimension() - radical().dimension(); }

  bool is_idempotent(const Vector& e) const { return multiply(e, e) == e; }

 private:
  std::vector<std::vector<Vector>> products_;
  Vector unit_;
};

/// End(X_1 + ... + X_m) for line bundles X_p. An element is a matrix of
/// morphisms; entry (p, q) lies in Hom(X_q, X_p) and is stored as
/// coordinates in that HomSpace's basis.
class SumEndomorphisms {
 public:
  SumEndomorphisms() = default;
  SumEndomorphisms(const CurveConfig& config, std::vector<LineBundle> summands);

  std::size_t size() const { return summands_.size(); }
  const std::vector<LineBundle>& summands() const { return summands_; }
  std::size_t dimension() const { return dimension_; }

  const HomSpace& hom(std::size_t p, std::size_t q) const { return homs_[p * size() + q]; }
  std::size_t offset(std::size_t p, std::size_t q) const { return offsets_[p * size() + q]; }

  Vector identity() const;
  Vector multiply(const Vector& x, const Vector& y) const;
  HomElement entry(const Vector& x, std::size_t p, std::size_t q) const;

  /// Scalar (identical-bundle) entries, which span End modulo its radical.
  /// Returns the square scalar matrix of x on the given class of indices.
  Matrix scalar_block(const Vector& x, const std::vector<std::size_t>& cls) const;
  /// Element with the given scalar matrix on `cls` and zero elsewhere.
  Vector from_scalar_block(const Matrix& m, const std::vector<std::size_t>& cls) const;
  /// Indices grouped by identical summand, in first-occurrence order.
  std::vector<std::vector<std::size_t>> isotypic_classes() const;

  Algebra algebra() const;

 private:
  std::vector<LineBundle> summands_;
  std::vector<HomSpace> homs_;
  std::vector<std::size_t> offsets_;
  std::size_t dimension_ = 0;
  // products_[(p*m + r)*m + q][k][l] = coords in Hom(X_q, X_p) of basis k of
  // Hom(X_r, X_p) composed with basis l of Hom(X_q, X_r).
  std::vector<std::vector<std::vector<Vector>>> products_;
};

}  // namespace ade

// algebra.cpp
#include "adesheaf/algebra.hpp"

#include "adesheaf/errors.hpp"

namespace ade {

Algebra::Algebra(std::vector<std::vector<Vector>> products, Vector unit)
    : products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != unit_.size()) throw InvalidInput("structure constants do not match the unit");
}

Vector Algebra::basis_vector(std::size_t k) const {
  Vector v(dimension());
  v.at(k) = 1;
  return v;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dimension();
  Vector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (y[l].is_zero()) continue;
      Rational s = x[k] * y[l];
      const Vector& p = products_[k][l];
      for (std::size_t m = 0; m < n; ++m)
        if (!p[m].is_zero()) out[m] += s * p[m];
    }
  }
  return out;
}

Matrix Algebra::left_multiplication(const Vector& x) const {
  const std::size_t n = dimension();
  std::vector<Vector> cols;
  for (std::size_t l = 0; l < n; ++l) cols.push_back(multiply(x, basis_vector(l)));
  return Matrix::from_columns(cols, n);
}

Kernel Algebra::radical() const {
  const std::size_t n = dimension();
  Vector traces(n);
  for (std::size_t m = 0; m < n; ++m) {
    // tr(L_{e_m}) = sum_l (e_m e_l)_l
    for (std::size_t l = 0; l < n; ++l) traces[m] += products_[m][l][l];
  }
  Matrix form(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m)
        if (!products_[k][l][m].is_zero()) form(k, l) += products_[k][l][m] * traces[m];
  return kernel(form);
}

SumEndomorphisms::SumEndomorphisms(const CurveConfig& config, std::vector<LineBundle> summands)
    : summands_(std::move(summands)) {
  const std::size_t m = summands_.size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      homs_.push_back(hom0(config, summands_[q], summands_[p]));
      offsets_.push_back(dimension_);
      dimension_ += static_cast<std::size_t>(homs_.back().dimension());
    }
  products_.resize(m * m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t q = 0; q < m; ++q) {
        const HomSpace& left = hom(p, r);
        const HomSpace& right = hom(r, q);
        auto& table = products_[(p * m + r) * m + q];
        table.assign(left.basis().size(), {});
        for (std::size_t k = 0; k < left.basis().size(); ++k)
          for (std::size_t l = 0; l < right.basis().size(); ++l)
            table[k].push_back(hom(p, q).coordinates(compose(hom(p, q), left.basis()[k], right.basis()[l])));
      }
}

Vector SumEndomorphisms::identity() const {
  Vector x(dimension_);
  for (std::size_t p = 0; p < size(); ++p) {
    // Hom(X, X) is one-dimensional with the identity as its basis vector.
    if (hom(p, p).dimension() != 1) throw InvariantViolation("summand with non-scalar endomorphisms");
    x[offset(p, p)] = 1;
  }
  return x;
}

Vector SumEndomorphisms::multiply(const Vector& x, const Vector& y) const {
  const std::size_t m = size();
  Vector out(dimension_);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t dl = static_cast<std::size_t>(hom(p, r).dimension());
      if (dl == 0) continue;
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t dr = static_cast<std::size_t>(hom(r, q).dimension());
        const auto& table = products_[(p * m + r) * m + q];
        for (std::size_t k = 0; k < dl; ++k) {
          const Rational& xk = x[offset(p, r) + k];
          if (xk.is_zero()) continue;
          for (std::size_t l = 0; l < dr; ++l) {
            const Rational& yl = y[offset(r, q) + l];
            if (yl.is_zero()) continue;
            Rational s = xk * yl;
            const Vector& c = table[k][l];
            for (std::size_t t = 0; t < c.size(); ++t)
              if (!c[t].is_zero()) out[offset(p, q) + t] += s * c[t];
          }
        }
      }
    }
  return out;
}

HomElement SumEndomorphisms::entry(const Vector& x, std::size_t p, std::size_t q) const {
  const HomSpace& h = hom(p, q);
  Vector coords(x.begin() + static_cast<std::ptrdiff_t>(offset(p, q)),
                x.begin() + static_cast<std::ptrdiff_t>(offset(p, q) + static_cast<std::size_t>(h.dimension())));
  return h.element(coords);
}

std::vector<std::vector<std::size_t>> SumEndomorphisms::isotypic_classes() const {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(size(), false);
  for (std::size_t p = 0; p < size(); ++p) {
    if (seen[p]) continue;
    classes.push_back({});
    for (std::size_t q = p; q < size(); ++q)
      if (!seen[q] && summands_[q] == summands_[p]) {
        seen[q] = true;
        classes.back().push_back(q);
      }
  }
  return classes;
}

Matrix SumEndomorphisms::scalar_block(const Vector& x, const std::vector<std::size_t>& cls) const {
  Matrix m(cls.size(), cls.size());
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b) m(a, b) = x[offset(cls[a], cls[b])];
  return m;
}

Vector SumEndomorphisms::from_scalar_block(const Matrix& m, const std::vector<std::size_t>& cls) const {
  Vector x(dimension_);
  for (std::size_t a = 0; a < cls.size(); ++a)
    for (std::size_t b = 0; b < cls.size(); ++b) x[offset(cls[a], cls[b])] = m(a, b);
  return x;
}

Algebra SumEndomorphisms::algebra() const {
  std::vector<std::vector<Vector>> products(dimension_);
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < dimension_; ++k) {
    Vector e(dimension_);
    e[k] = 1;
    basis.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < dimension_; ++k)
    for (std::size_t l = 0; l < dimension_; ++l) products[k].push_back(multiply(basis[k], basis[l]));
  return Algebra(std::move(products), identity());
}

}  // namespace ade

// extension_lab.cpp
#include "adesheaf/extension_lab.hpp"

#include <algorithm>

#include "adesheaf/errors.hpp"

namespace ade {

ExtPresentation::ExtPresentation(const CurveConfig& config, std::vector<LineBundle> f, std::vector<LineBundle> g,
                                 Matrix epsilon)
    : config_(config), f_(std::move(f)), g_(std::move(g)), epsilon_(std::move(epsilon)) {
  if (epsilon_.rows() != f_.size() || epsilon_.cols() != g_.size()) {
    throw InvalidInput("extension matrix is " + std::to_string(epsilon_.rows()) + "x" +
                       std::to_string(epsilon_.cols()) + ", expected " + std::to_string(f_.size()) + "x" +
                       std::to_string(g_.size()));
  }
  for (std::size_t i = 0; i < f_.size(); ++i)
    for (std::size_t j = 0; j < g_.size(); ++j) {
      for (int c : f_[i].support())
        if (g_[j].contains(c)) {
          throw InvalidInput(f_[i].name() + " and " + g_[j].name() + " share C" + std::to_string(c) +
                             "; F-side and G-side supports must be disjoint");
        }
      std::optional<Node> joint;
      for (int c : f_[i].support())
        for (int nb : config_.neighbors(c))
          if (g_[j].contains(nb)) {
            if (joint) throw InvariantViolation("disjoint subtrees joined by two nodes");
            joint = Node::between(c, nb);
          }
      nodes_.push_back(joint);
      if (!joint && !epsilon_(i, j).is_zero()) {
        throw InvalidInput("nonzero extension entry between " + f_[i].name() + " and " + g_[j].name() +
                           ", which do not meet");
      }
    }
}

int ExtPresentation::germ_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const auto& n) { return n.has_value(); }));
}

ExtPresentation ExtPresentation::restrict(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  std::vector<LineBundle> f, g;
  for (auto i : rows) f.push_back(f_.at(i));
  for (auto j : cols) g.push_back(g_.at(j));
  Matrix eps(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) eps(a, b) = epsilon_(rows[a], cols[b]);
  return ExtPresentation(config_, std::move(f), std::move(g), std::move(eps));
}

Cycle ExtPresentation::c1() const {
  Cycle z(config_.size());
  for (const auto& l : f_) z += l.c1(config_.size());
  for (const auto& l : g_) z += l.c1(config_.size());
  return z;
}

std::size_t ExtPresentation::rank() const {
  return ade::rank(*this, Cycle::reduced(config_.size(), config_.components()));
}

ExtPresentation universal_extension(const CurveConfig& config, std::vector<LineBundle> f, std::vector<LineBundle> g) {
  ExtPresentation probe(config, f, g, Matrix(f.size(), g.size()));
  Matrix eps(f.size(), g.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (probe.node(i, j)) eps(i, j) = 1;
  return ExtPresentation(config, std::move(f), std::move(g), std::move(eps));
}

Cycle c1(const ExtPresentation& pres) { return pres.c1(); }

std::size_t rank(const ExtPresentation& pres, const Cycle& reference) {
  Cycle z = pres.c1();
  if (reference.size() != z.size()) throw InvalidInput("reference cycle lives on another configuration");
  std::size_t r = 0;
  for (int i = 1; i <= z.size(); ++i) {
    if (z[i] == 0) continue;
    if (reference[i] <= 0) {
      throw InvalidInput("support of the presentation meets C" + std::to_string(i) + ", outside the reference cycle");
    }
    r = std::max(r, static_cast<std::size_t>((z[i] + reference[i] - 1) / reference[i]));
  }
  return r;
}

PresentationActions::PresentationActions(const ExtPresentation& pres)
    : pres_(&pres), end_f_(pres.config(), pres.f()), end_g_(pres.config(), pres.g()) {
  const auto& cfg = pres.config();
  const std::size_t m = pres.f().size(), n = pres.g().size();
  post_.resize(m * m);
  for (std::size_t i2 = 0; i2 < m; ++i2)
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      const HomSpace& h = end_f_.hom(i2, i1);
      for (const auto& phi : h.basis()) {
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j) {
          if (!pres.node(i1, j)) continue;
          GermMap map = act_on_ext(cfg, h, phi, ext1_Z(cfg, pres.g()[j], pres.f()[i1]), Side::Post);
          if (map.matrix.rows() == 1) row[j] = map.matrix(0, 0);
        }
        post_[i2 * m + i1].push_back(std::move(row));
      }
    }
  pre_.resize(n * n);
  for (std::size_t j2 = 0; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const HomSpace& h = end_g_.hom(j2, j1);
      for (const auto& psi : h.basis()) {
        Vector row(m);
        for (std::size_t i = 0; i < m; ++i) {
          if (!pres.node(i, j2)) continue;
          GermMap map = act_on_ext(cfg, h, psi, ext1_Z(cfg, pres.g()[j2], pres.f()[i]), Side::Pre);
          if (map.matrix.rows() == 1) row[i] = map.matrix(0, 0);
        }
        pre_[j2 * n + j1].push_back(std::move(row));
      }
    }
}

Matrix PresentationActions::post(const Vector& a, const Matrix& eps) const {
  const std::size_t m = end_f_.size(), n = end_g_.size();
  Matrix out(m, n);
  for (std::size_t i2 = 0; i2 < m; ++i2)
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      const auto& table = post_[i2 * m + i1];
      const std::size_t off = end_f_.offset(i2, i1);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const Rational& c = a[off + k];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!table[k][j].is_zero() && !eps(i1, j).is_zero()) out(i2, j) += c * table[k][j] * eps(i1, j);
      }
    }
  return out;
}

Matrix PresentationActions::pre(const Matrix& eps, const Vector& b) const {
  const std::size_t m = end_f_.size(), n = end_g_.size();
  Matrix out(m, n);
  for (std::size_t j2 = 0; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      const auto& table = pre_[j2 * n + j1];
      const std::size_t off = end_g_.offset(j2, j1);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const Rational& c = b[off + k];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < m; ++i)
          if (!table[k][i].is_zero() && !eps(i, j2).is_zero()) out(i, j1) += c * table[k][i] * eps(i, j2);
      }
    }
  return out;
}

Matrix PresentationActions::commutator_map() const {
  const auto& pres = *pres_;
  const std::size_t m = end_f_.size(), n = end_g_.size();
  std::vector<std::pair<std::size_t, std::size_t>> germs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pres.node(i, j)) germs.emplace_back(i, j);
  const std::size_t df = end_f_.dimension(), dg = end_g_.dimension();
  Matrix map(germs.size(), df + dg);
  for (std::size_t r = 0; r < germs.size(); ++r) {
    auto [i2, j] = germs[r];
    for (std::size_t i1 = 0; i1 < m; ++i1) {
      const auto& table = post_[i2 * m + i1];
      for (std::size_t k = 0; k < table.size(); ++k)
        map(r, end_f_.offset(i2, i1) + k) += table[k][j] * pres.epsilon()(i1, j);
    }
    const std::size_t i = i2, j1 = j;
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      const auto& table = pre_[j2 * n + j1];
      for (std::size_t k = 0; k < table.size(); ++k)
        map(r, df + end_g_.offset(j2, j1) + k) -= table[k][i] * pres.epsilon()(i, j2);
    }
  }
  return map;
}

Vector EndAlgebra::pair(const Vector& coords) const {
  if (basis.empty()) return {};
  Vector out(basis.front().size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coords[k].is_zero()) continue;
    for (std::size_t t = 0; t < out.size(); ++t) out[t] += coords[k] * basis[k][t];
  }
  return out;
}

namespace {

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

EndAlgebra end_algebra(const ExtPresentation& pres) {
  PresentationActions act(pres);
  Kernel k = kernel(act.commutator_map());
  EndAlgebra end;
  end.basis = k.basis;
  end.f_dimension = act.end_f().dimension();
  const auto df = static_cast<std::ptrdiff_t>(end.f_dimension);
  auto split = [&](const Vector& v) {
    return std::pair{Vector(v.begin(), v.begin() + df), Vector(v.begin() + df, v.end())};
  };
  auto coords = [&](const Vector& v) {
    Vector c = k.coordinates(v);
    if (k.combine(c) != v) throw InvariantViolation("intertwiners are not closed under composition");
    return c;
  };
  std::vector<std::vector<Vector>> products(k.dimension());
  for (std::size_t x = 0; x < k.dimension(); ++x) {
    auto [ax, bx] = split(k.basis[x]);
    for (std::size_t y = 0; y < k.dimension(); ++y) {
      auto [ay, by] = split(k.basis[y]);
      products[x].push_back(coords(concat(act.end_f().multiply(ax, ay), act.end_g().multiply(bx, by))));
    }
  }
  Vector unit = coords(concat(act.end_f().identity(), act.end_g().identity()));
  end.algebra = Algebra(std::move(products), std::move(unit));
  return end;
}

bool is_indecomposable(const ExtPresentation& pres) {
  if (pres.f().empty() && pres.g().empty()) return false;
  return end_algebra(pres).algebra.semisimple_dimension() == 1;
}

RigidityReport is_OX_rigid(const ExtPresentation& pres) {
  const auto& cfg = pres.config();
  RigidityReport r;
  PresentationActions act(pres);
  Matrix comm = act.commutator_map();
  r.end_dimension = static_cast<int>(comm.cols() - rank(comm));
  Cycle z = pres.c1();
  r.c1_square = intersection(cfg, z, z);
  r.hom1 = 2 * r.end_dimension + r.c1_square;
  if (r.hom1 < 0) throw InvariantViolation("negative self-Ext^1 for a presentation");
  r.rigid = r.hom1 == 0;

  auto side_rigid = [&](const std::vector<LineBundle>& side) {
    for (const auto& x : side)
      for (const auto& y : side)
        if (hom1_X(cfg, x, y) != 0) return false;
    return true;
  };
  r.hypotheses = side_rigid(pres.f()) && side_rigid(pres.g());
  r.ext_dimension = pres.germ_count();
  r.generated_dimension = static_cast<int>(rank(comm));
  if (r.hypotheses) {
    r.criterion_b = r.generated_dimension == r.ext_dimension;
    if (*r.criterion_b != r.rigid) {
      throw InvariantViolation("rigidity routes disagree: hom1 = " + std::to_string(r.hom1) + " but the classes " +
                               "generate " + std::to_string(r.generated_dimension) + " of " +
                               std::to_string(r.ext_dimension) + " germ directions");
    }
  }
  return r;
}

}  // namespace ade

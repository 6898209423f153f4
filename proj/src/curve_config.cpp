// curve_config.cpp
#include "adesheaf/curve_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "adesheaf/errors.hpp"

namespace ade {
namespace {

constexpr int kMaxComponents = 64;

}  // namespace

std::string AdeKind::name() const {
  char letter = type == AdeType::A ? 'A' : type == AdeType::D ? 'D' : 'E';
  return std::string(1, letter) + std::to_string(n);
}

AdeKind AdeKind::parse(std::string_view symbol) {
  if (symbol.size() < 2) throw InvalidInput("bad ADE symbol '" + std::string(symbol) + "'");
  AdeKind kind;
  switch (std::toupper(static_cast<unsigned char>(symbol[0]))) {
    case 'A': kind.type = AdeType::A; break;
    case 'D': kind.type = AdeType::D; break;
    case 'E': kind.type = AdeType::E; break;
    default: throw InvalidInput("bad ADE symbol '" + std::string(symbol) + "'");
  }
  auto digits = symbol.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), kind.n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidInput("bad ADE symbol '" + std::string(symbol) + "'");
  }
  bool ok = false;
  switch (kind.type) {
    case AdeType::A: ok = kind.n >= 1; break;
    case AdeType::D: ok = kind.n >= 4; break;
    case AdeType::E: ok = kind.n >= 6 && kind.n <= 8; break;
  }
  if (!ok || kind.n > kMaxComponents) throw InvalidInput("ADE rank out of range in '" + std::string(symbol) + "'");
  return kind;
}

Node Node::between(int x, int y) {
  if (x == y) throw InvalidInput("a node joins two distinct components");
  return x < y ? Node{x, y} : Node{y, x};
}

std::string Node::name() const { return "C" + std::to_string(a) + "^C" + std::to_string(b); }

CurveConfig CurveConfig::build(AdeKind kind) {
  // Round-trip through the parser for range validation.
  kind = AdeKind::parse(kind.name());
  CurveConfig cfg;
  cfg.kind_ = kind;
  const int n = kind.n;
  auto add = [&](int x, int y) { cfg.edges_.push_back(Node::between(x, y)); };
  switch (kind.type) {
    case AdeType::A:
      for (int i = 1; i < n; ++i) add(i, i + 1);
      break;
    case AdeType::D:
      add(1, 3);
      add(2, 3);
      for (int i = 3; i < n; ++i) add(i, i + 1);
      break;
    case AdeType::E:
      add(1, 2);
      add(2, 3);
      add(3, 4);
      add(3, 5);
      for (int i = 5; i < n; ++i) add(i, i + 1);
      break;
  }
  std::sort(cfg.edges_.begin(), cfg.edges_.end());
  cfg.neighbors_.assign(static_cast<std::size_t>(n) + 1, {});
  for (const auto& e : cfg.edges_) {
    cfg.neighbors_[static_cast<std::size_t>(e.a)].push_back(e.b);
    cfg.neighbors_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& nb : cfg.neighbors_) std::sort(nb.begin(), nb.end());
  return cfg;
}

std::vector<int> CurveConfig::components() const {
  std::vector<int> out(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

void CurveConfig::check_component(int c) const {
  if (!has_component(c)) {
    throw InvalidInput("component C" + std::to_string(c) + " not in " + kind_.name());
  }
}

const std::vector<int>& CurveConfig::neighbors(int c) const {
  check_component(c);
  return neighbors_[static_cast<std::size_t>(c)];
}

bool CurveConfig::adjacent(int i, int j) const {
  const auto& nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

int CurveConfig::self_intersection(int c) const {
  check_component(c);
  return -2;
}

int CurveConfig::pairing(int i, int j) const {
  if (i == j) return self_intersection(i);
  check_component(j);
  return adjacent(i, j) ? 1 : 0;
}

std::vector<std::vector<int>> CurveConfig::intersection_matrix() const {
  const auto n = static_cast<std::size_t>(size());
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 1; i <= size(); ++i)
    for (int j = 1; j <= size(); ++j) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = pairing(i, j);
  return m;
}

ProjectivePoint CurveConfig::node_point(int component, int neighbor) const {
  const auto& nb = neighbors(component);
  auto it = std::find(nb.begin(), nb.end(), neighbor);
  if (it == nb.end()) {
    throw InvalidInput("C" + std::to_string(component) + " does not meet C" + std::to_string(neighbor));
  }
  switch (it - nb.begin()) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {1, 1};
    default: throw InvariantViolation("component with more than three nodes");
  }
}

bool CurveConfig::is_connected(std::span<const int> comps) const {
  if (comps.empty()) return false;
  std::set<int> members(comps.begin(), comps.end());
  for (int c : members) check_component(c);
  std::set<int> seen{*members.begin()};
  std::vector<int> stack{*members.begin()};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int nb : neighbors(c)) {
      if (members.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return seen.size() == members.size();
}

Cycle Cycle::reduced(int size, std::span<const int> comps) {
  Cycle z(size);
  for (int c : comps) z[c] = 1;
  return z;
}

std::vector<int> Cycle::support() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if ((*this)[i] != 0) out.push_back(i);
  return out;
}

bool Cycle::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 0; });
}

bool Cycle::leq(const Cycle& other) const {
  if (size() != other.size()) throw InvalidInput("cycles on different configurations");
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > other.mult_[i]) return false;
  return true;
}

Cycle& Cycle::operator+=(const Cycle& rhs) {
  if (size() != rhs.size()) throw InvalidInput("cycles on different configurations");
  for (std::size_t i = 0; i < mult_.size(); ++i) mult_[i] += rhs.mult_[i];
  return *this;
}

Cycle operator*(int k, Cycle z) {
  for (auto& m : z.mult_) m *= k;
  return z;
}

std::string Cycle::to_string() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    int m = (*this)[i];
    if (m == 0) continue;
    if (!out.empty() && m > 0) out += '+';
    if (m == -1) out += '-';
    else if (m != 1) out += std::to_string(m);
    out += "C" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int intersection(const CurveConfig& config, const Cycle& z1, const Cycle& z2) {
  if (z1.size() != config.size() || z2.size() != config.size()) {
    throw InvalidInput("cycle does not live on " + config.kind().name());
  }
  int total = 0;
  for (int i = 1; i <= config.size(); ++i) {
    if (z1[i] == 0) continue;
    total += z1[i] * z2[i] * config.self_intersection(i);
    for (int j : config.neighbors(i)) total += z1[i] * z2[j];
  }
  return total;
}

Cycle fundamental_cycle(const CurveConfig& config) {
  const int n = config.size();
  Cycle z = Cycle::reduced(n, config.components());
  Cycle unit(n);
  // The multiplicities are bounded by 6 (E8); anything far beyond means the
  // saturation loop is not converging.
  const int cap = 16 * n * n;
  for (int step = 0; step < cap; ++step) {
    bool changed = false;
    for (int i = 1; i <= n; ++i) {
      Cycle ci(n);
      ci[i] = 1;
      if (intersection(config, z, ci) > 0) {
        z[i] += 1;
        changed = true;
        break;
      }
    }
    if (!changed) return z;
  }
  throw InvariantViolation("fundamental cycle iteration did not terminate on " + config.kind().name());
}

Subtree subtree(const CurveConfig& config, std::span<const int> comps) {
  std::vector<int> sorted(comps.begin(), comps.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("repeated component in subtree");
  }
  if (!config.is_connected(sorted)) throw InvalidInput("component set is empty or disconnected");
  Subtree t;
  t.components = sorted;
  for (int c : sorted) {
    for (int nb : config.neighbors(c)) {
      if (std::binary_search(sorted.begin(), sorted.end(), nb)) {
        if (c < nb) t.internal_edges.push_back(Node{c, nb});
      } else {
        t.boundary.emplace_back(c, nb);
      }
    }
  }
  return t;
}

bool is_induced_embedding(const CurveConfig& small, const CurveConfig& big, std::span<const int> image) {
  if (static_cast<int>(image.size()) != small.size()) return false;
  std::set<int> distinct(image.begin(), image.end());
  if (static_cast<int>(distinct.size()) != small.size()) return false;
  for (int c : image)
    if (!big.has_component(c)) return false;
  for (int i = 1; i <= small.size(); ++i)
    for (int j = i + 1; j <= small.size(); ++j) {
      int bi = image[static_cast<std::size_t>(i - 1)];
      int bj = image[static_cast<std::size_t>(j - 1)];
      if (small.adjacent(i, j) != big.adjacent(bi, bj)) return false;
    }
  return true;
}

}  // namespace ade

#include "tanh_sinh.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

namespace pell::tanh_sinh {

namespace {

// Nodes stop once 1 - x < 2^(-kTailFactor * prec). An endpoint factor
// (1 - t)^(-1/p) leaves a term of size (1 - x)^(1 - 1/p), so this keeps the
// tail below one ulp for every p >= kTailFactor / (kTailFactor - 1).
constexpr double kTailFactor = 8.0;

double truncation_point(Precision prec) {
  const double s_cap = (kTailFactor * static_cast<double>(prec) + 2.0) * std::numbers::ln2 / 2.0;
  return std::asinh(2.0 * s_cap / std::numbers::pi);
}

Node make_node(long numerator, int level, Precision prec) {
  // Compute at a few extra bits, then round; weights feed every term.
  const Precision p = prec + 16;
  const Real u = ldexp(Real(numerator, p), -level);
  const Real half_pi = ldexp(pi(p), -1);
  const Real s = half_pi * sinh(u);
  const Real e2s = exp(ldexp(s, 1));
  const Real denom = e2s + 1;
  Node node;
  node.u = u.to_double();
  node.x = ((e2s - 1) / denom).rounded(prec);
  node.d = (2 / denom).rounded(prec);
  // cosh^2(s) = (e^{2s} + 1)^2 / (4 e^{2s})
  node.weight = (half_pi * cosh(u) * ldexp(e2s, 2) / (denom * denom)).rounded(prec);
  return node;
}

std::vector<Node> build_chunk(Precision prec, int level, std::size_t chunk) {
  const double cap = truncation_point(prec);
  std::vector<Node> nodes;
  nodes.reserve(kChunkSize);
  for (std::size_t i = chunk * kChunkSize; i < (chunk + 1) * kChunkSize; ++i) {
    const long numerator = level == 0 ? static_cast<long>(i) : 2 * static_cast<long>(i) + 1;
    if (std::ldexp(static_cast<double>(numerator), -level) > cap) break;
    nodes.push_back(make_node(numerator, level, prec));
  }
  return nodes;
}

using Key = std::tuple<Precision, int, std::size_t>;

struct Cache {
  std::mutex mutex;
  std::map<Key, std::shared_ptr<const std::vector<Node>>> chunks;
};

Cache& cache() {
  static Cache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const std::vector<Node>> node_chunk(Precision prec, int level, std::size_t chunk) {
  Cache& c = cache();
  const Key key{prec, level, chunk};
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.chunks.find(key); it != c.chunks.end()) return it->second;
  }
  // Built outside the lock; a concurrent builder produces identical nodes and
  // the first insertion wins.
  auto built = std::make_shared<const std::vector<Node>>(build_chunk(prec, level, chunk));
  std::lock_guard lock(c.mutex);
  return c.chunks.try_emplace(key, std::move(built)).first->second;
}

}  // namespace pell::tanh_sinh

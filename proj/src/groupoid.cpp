#include "wha/groupoid.hpp"

#include <string>

namespace wha {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Error::Kind::MalformedGroupoid, what);
}

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) s += ", ";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

void Groupoid::validate() const {
  const std::size_t nm = n_morphisms();
  if (target.size() != nm || inverse.size() != nm ||
      identity.size() != n_objects || compose.size() != nm) {
    malformed("inconsistent table sizes");
  }
  for (std::size_t x = 0; x < n_objects; ++x) {
    std::size_t e = identity[x];
    if (e >= nm || source[e] != x || target[e] != x) {
      malformed("identity of object " + std::to_string(x) + " is not a loop");
    }
  }
  for (std::size_t g = 0; g < nm; ++g) {
    if (compose[g].size() != nm) malformed("ragged composition table");
    if (source[g] >= n_objects || target[g] >= n_objects) {
      malformed("morphism " + std::to_string(g) + " has a bad endpoint");
    }
    for (std::size_t h = 0; h < nm; ++h) {
      std::ptrdiff_t gh = compose[g][h];
      if (composable(g, h)) {
        if (gh < 0 || static_cast<std::size_t>(gh) >= nm) {
          malformed("composable pair " + tuple_str({g, h}) + " undefined");
        }
        if (source[static_cast<std::size_t>(gh)] != source[h] ||
            target[static_cast<std::size_t>(gh)] != target[g]) {
          malformed("composite endpoints wrong at " + tuple_str({g, h}));
        }
      } else if (gh >= 0) {
        malformed("non-composable pair " + tuple_str({g, h}) + " defined");
      }
    }
  }
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t h = 0; h < nm; ++h) {
      if (!composable(g, h)) continue;
      std::size_t gh = static_cast<std::size_t>(compose[g][h]);
      for (std::size_t k = 0; k < nm; ++k) {
        if (!composable(h, k)) continue;
        std::size_t hk = static_cast<std::size_t>(compose[h][k]);
        if (compose[gh][k] != compose[g][hk]) {
          malformed("associativity fails at " + tuple_str({g, h, k}));
        }
      }
    }
  for (std::size_t g = 0; g < nm; ++g) {
    if (compose[identity[target[g]]][g] != static_cast<std::ptrdiff_t>(g) ||
        compose[g][identity[source[g]]] != static_cast<std::ptrdiff_t>(g)) {
      malformed("identity law fails at morphism " + std::to_string(g));
    }
    std::size_t gi = inverse[g];
    if (gi >= nm || source[gi] != target[g] || target[gi] != source[g] ||
        compose[g][gi] != static_cast<std::ptrdiff_t>(identity[target[g]]) ||
        compose[gi][g] != static_cast<std::ptrdiff_t>(identity[source[g]])) {
      malformed("inverse law fails at morphism " + std::to_string(g));
    }
  }
}

Groupoid cyclic_group(std::size_t n) {
  Groupoid g;
  g.n_objects = 1;
  g.identity = {0};
  g.source.assign(n, 0);
  g.target.assign(n, 0);
  g.inverse.resize(n);
  g.compose.assign(n, std::vector<std::ptrdiff_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.inverse[a] = (n - a) % n;
    for (std::size_t b = 0; b < n; ++b)
      g.compose[a][b] = static_cast<std::ptrdiff_t>((a + b) % n);
  }
  return g;
}

Groupoid discrete_groupoid(std::size_t k) {
  Groupoid g;
  g.n_objects = k;
  g.source.resize(k);
  g.target.resize(k);
  g.inverse.resize(k);
  g.identity.resize(k);
  g.compose.assign(k, std::vector<std::ptrdiff_t>(k, -1));
  for (std::size_t x = 0; x < k; ++x) {
    g.source[x] = g.target[x] = x;
    g.inverse[x] = x;
    g.identity[x] = x;
    g.compose[x][x] = static_cast<std::ptrdiff_t>(x);
  }
  return g;
}

Groupoid pair_groupoid(std::size_t k) {
  Groupoid g;
  g.n_objects = k;
  const std::size_t nm = k * k;
  auto idx = [k](std::size_t x, std::size_t y) { return x * k + y; };
  g.source.resize(nm);
  g.target.resize(nm);
  g.inverse.resize(nm);
  g.identity.resize(k);
  g.compose.assign(nm, std::vector<std::ptrdiff_t>(nm, -1));
  for (std::size_t x = 0; x < k; ++x) {
    g.identity[x] = idx(x, x);
    for (std::size_t y = 0; y < k; ++y) {
      g.source[idx(x, y)] = y;
      g.target[idx(x, y)] = x;
      g.inverse[idx(x, y)] = idx(y, x);
    }
  }
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        g.compose[idx(x, y)][idx(y, z)] =
            static_cast<std::ptrdiff_t>(idx(x, z));
  return g;
}

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, const Field& f) {
  g.validate();
  const std::size_t n = g.n_morphisms();

  AlgebraData alg{f, n, LinearMap(f, n, n * n), Vec(f, n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::ptrdiff_t ab = g.compose[a][b];
      if (ab >= 0)
        alg.mult.at(static_cast<std::size_t>(ab), a * n + b) = Scalar::one(f);
    }
  for (std::size_t x = 0; x < g.n_objects; ++x)
    alg.unit[g.identity[x]] = Scalar::one(f);

  CoalgebraData coalg{f, n, LinearMap(f, n * n, n), Vec(f, n)};
  for (std::size_t a = 0; a < n; ++a) {
    coalg.comult.at(a * n + a, a) = Scalar::one(f);
    coalg.counit[a] = Scalar::one(f);
  }

  WeakHopfAlgebra h;
  h.base = WeakBialgebra::build(std::move(alg), std::move(coalg));
  h.antipode = LinearMap(f, n, n);
  h.antipode_inv = LinearMap(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    h.antipode.at(g.inverse[a], a) = Scalar::one(f);
    h.antipode_inv.at(g.inverse[a], a) = Scalar::one(f);
  }
  return h;
}

}  // namespace wha

#pragma once

// Shared fixtures and independent oracles for the test suites.

#include "colfan/colored_fan.hpp"
#include "colfan/galois.hpp"
#include "colfan/lp.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace colfan::testing {

inline RatVec v(std::initializer_list<long> xs) { return from_ints(xs); }

inline std::vector<RatVec> vs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVec> out;
  for (auto r : rows) out.push_back(from_ints(r));
  return out;
}

inline RatMat mat(std::initializer_list<std::initializer_list<long>> rows) { return RatMat(vs(rows)); }

inline Cone gen(std::initializer_list<std::initializer_list<long>> rows, std::size_t n) {
  return Cone::from_generators(vs(rows), n);
}

/// Toric datum: V is all of Q^n, no colors.
inline SphericalDatum toric_datum(std::size_t n) { return SphericalDatum(n, Cone::whole_space(n), {}); }

/// Rank one: V = cone<(-1)>, two colors D+ and D- both placed at (1).
inline SphericalDatum rank_one_datum() {
  return SphericalDatum(1, gen({{-1}}, 1), {{"D+", v({1})}, {"D-", v({1})}});
}

inline ColoredCone colorless(Cone c) { return ColoredCone(std::move(c), {}); }

inline std::vector<ColoredCone> p1_maximal() {
  return {colorless(gen({{1}}, 1)), colorless(gen({{-1}}, 1))};
}

inline std::vector<ColoredCone> p2_maximal() {
  return {colorless(gen({{1, 0}, {0, 1}}, 2)), colorless(gen({{0, 1}, {-1, -1}}, 2)),
          colorless(gen({{-1, -1}, {1, 0}}, 2))};
}

inline std::vector<ColoredCone> p1xp1_maximal() {
  return {colorless(gen({{1, 0}, {0, 1}}, 2)), colorless(gen({{0, 1}, {-1, 0}}, 2)),
          colorless(gen({{-1, 0}, {0, -1}}, 2)), colorless(gen({{0, -1}, {1, 0}}, 2))};
}

inline GroupElement swap2() { return GroupElement{mat({{0, 1}, {1, 0}}), {}}; }

/// Fourier-Motzkin membership oracle: does v lie in the nonnegative span of
/// gens? Built directly from the generators, independent of the cone engine.
inline bool in_span_oracle(const std::vector<RatVec>& gens, const RatVec& point) {
  LPProblem lp;
  lp.num_vars = gens.size();
  for (std::size_t i = 0; i < point.size(); ++i) {
    RatVec row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) row[k] = gens[k][i];
    lp.add_equality(row, point[i]);
  }
  for (std::size_t k = 0; k < gens.size(); ++k) lp.add_inequality(unit_vec(gens.size(), k), 0);
  return fourier_motzkin(lp, 16);
}

inline RatVec random_int_vec(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  RatVec out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(d(rng));
  return out;
}

/// Random unimodular integer matrix: product of elementary operations and
/// signed permutations.
inline RatMat random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
  RatMat m = RatMat::identity(n);
  if (n < 2) {
    if (rng() % 2) m(0, 0) = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    RatMat e = RatMat::identity(n);
    e(i, j) = coef(rng);
    m = e * m;
  }
  if (rng() % 2)
    for (std::size_t j = 0; j < n; ++j) m(0, j) = -m(0, j);
  return m;
}

/// Random complete 2-d fan: k >= 3 rays sorted by angle whose consecutive
/// sectors are all strictly convex.
inline std::vector<RatVec> random_complete_2d_rays(std::mt19937& rng) {
  for (;;) {
    std::uniform_int_distribution<int> count(3, 7);
    const int k = count(rng);
    std::vector<RatVec> rays;
    for (int i = 0; i < k; ++i) {
      auto r = random_int_vec(rng, 2, -5, 5);
      if (is_zero(r)) continue;
      rays.push_back(primitive(r));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.size() < 3) continue;
    // Sort by angle using exact half-plane + cross-product comparison.
    auto half = [](const RatVec& a) { return a[1] > 0 || (a[1] == 0 && a[0] > 0) ? 0 : 1; };
    std::sort(rays.begin(), rays.end(), [&](const RatVec& a, const RatVec& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return a[0] * b[1] - a[1] * b[0] > 0;
    });
    bool ok = true;
    for (std::size_t i = 0; i < rays.size() && ok; ++i) {
      const auto& a = rays[i];
      const auto& b = rays[(i + 1) % rays.size()];
      // Consecutive rays must turn counter-clockwise by strictly less than pi.
      if (a[0] * b[1] - a[1] * b[0] <= 0) ok = false;
    }
    if (ok) return rays;
  }
}

inline std::vector<ColoredCone> sectors(const std::vector<RatVec>& rays) {
  std::vector<ColoredCone> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    out.push_back(colorless(Cone::from_generators({rays[i], rays[(i + 1) % rays.size()]}, 2)));
  return out;
}

/// The complete 3-d fan over a non-regular triangulation: an outer triangle
/// A1A2A3 and a shrunken inner copy B1B2B3 at height 1, joined by cyclically
/// twisted diagonals, closed below by a ray pointing down.
inline std::vector<ColoredCone> twisted_prism_fan() {
  const auto a1 = v({6, -3, 1}), a2 = v({-3, 6, 1}), a3 = v({-3, -3, 1});
  const auto b1 = v({2, -1, 1}), b2 = v({-1, 2, 1}), b3 = v({-1, -1, 1});
  const auto down = v({0, 0, -1});
  const std::vector<RatVec> a{a1, a2, a3}, b{b1, b2, b3};
  std::vector<ColoredCone> out;
  out.push_back(colorless(Cone::from_generators({b1, b2, b3}, 3)));
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    out.push_back(colorless(Cone::from_generators({a[i], a[j], b[j]}, 3)));
    out.push_back(colorless(Cone::from_generators({a[i], b[j], b[i]}, 3)));
    out.push_back(colorless(Cone::from_generators({a[i], a[j], down}, 3)));
  }
  return out;
}

}  // namespace colfan::testing

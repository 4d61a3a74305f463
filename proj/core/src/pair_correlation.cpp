/*
 * Copyright 2026 The fracpair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fracpair/pair_correlation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <unordered_map>

#include "fracpair/errors.hpp"
#include "fracpair/point_table.hpp"

namespace fracpair {

namespace {

constexpr std::size_t kChunks = 64;

Complex unit(double angle) { return std::polar(1.0, angle); }

bool is_rational_root(double alpha, int b) {
  return b >= 2 && std::abs(alpha * static_cast<double>(b) - 1.0) <= 1e-14;
}

int thread_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

template <class Task>
void run_chunks(std::size_t chunks, int threads, Task task) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || chunks <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) task(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, chunks); ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) task(c);
    });
  }
  for (auto& t : pool) t.join();
}

struct Enumerator {
  const CorrelationConfig& config;
  const PointTable& table;
  std::vector<GridPoint> steps;  // lattice vectors p (pruned only)
  bool brute = true;

  Enumerator(const CorrelationConfig& cfg, const PointTable& tab, double radius)
      : config(cfg), table(tab), brute(cfg.enumeration == Enumeration::brute_force) {
    if (!brute && tab.size() > 0) {
      const GridSpec lattice{cfg.grid.basis, Complex(0.0, 0.0)};
      steps = enumerate_disk_indexed(lattice, radius * (1.0 + 1e-9));
    }
  }

  // visit(n_index, m_index, out) for every ordered pair n != m the strategy
  // can reach; chunk outputs are concatenated in chunk order.
  template <class T, class Visit>
  std::vector<T> collect(Visit visit) const {
    const auto& pts = table.points();
    const std::size_t outer = brute ? pts.size() : steps.size();
    const std::size_t chunks = std::min(kChunks, std::max<std::size_t>(outer, 1));
    std::vector<std::vector<T>> parts(chunks);
    run_chunks(chunks, thread_count(config.threads), [&](std::size_t c) {
      const std::size_t lo = outer * c / chunks;
      const std::size_t hi = outer * (c + 1) / chunks;
      auto& out = parts[c];
      if (brute) {
        for (std::size_t i = lo; i < hi; ++i) {
          for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i != j) visit(i, j, out);
          }
        }
      } else {
        for (std::size_t s = lo; s < hi; ++s) {
          const auto& p = steps[s];
          for (std::size_t j = 0; j < pts.size(); ++j) {
            const std::int64_t i = table.find(pts[j].a + p.a, pts[j].b + p.b);
            if (i >= 0) visit(static_cast<std::size_t>(i), j, out);
          }
        }
      }
    });
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    std::vector<T> merged;
    merged.reserve(total);
    for (auto& part : parts) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
  }
};

std::vector<Complex> powers(const PointTable& table, double alpha, int level) {
  std::vector<Complex> out;
  out.reserve(table.size());
  for (const auto& p : table.points()) out.push_back(level_power(p.z, alpha, level));
  return out;
}

std::vector<double> thetas(const PointTable& table, BranchCut cut) {
  std::vector<double> out;
  out.reserve(table.size());
  for (const auto& p : table.points()) out.push_back(theta(p.z, cut));
  return out;
}

void append_rotations(std::vector<Complex>& out, const std::vector<Complex>& base, double alpha,
                      int k_lo, int k_hi) {
  for (int k = k_lo; k <= k_hi; ++k) {
    if (k == 0) {
      out.insert(out.end(), base.begin(), base.end());
      continue;
    }
    const Complex r = unit(2.0 * std::numbers::pi * alpha * static_cast<double>(k));
    for (const Complex& d : base) out.push_back(r * d);
  }
}

// Pruned enumeration with no admissible step p: skip building the point table.
bool no_candidates(const CorrelationConfig& config, double radius) {
  if (config.enumeration != Enumeration::pruned) return false;
  const GridSpec lattice{config.grid.basis, Complex(0.0, 0.0)};
  return enumerate_disk_indexed(lattice, radius * (1.0 + 1e-9)).empty();
}

std::int64_t pair_count(std::size_t points) {
  const auto p = static_cast<std::int64_t>(points);
  return p * (p - 1);
}

}  // namespace

void validate(const CorrelationConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  validate(config.grid);
  validate(config.scaling);
  if (config.n < 1) throw ValidationError("N must be >= 1");
  if (config.n_prime < 0) throw ValidationError("N' must be >= 0");
  if (config.n_second < 1) throw ValidationError("N'' must be >= 1");
  if (!(config.support_radius > 0.0)) throw ValidationError("support radius A must be > 0");
  if (config.enumeration == Enumeration::pruned) {
    if (!std::isfinite(config.support_radius)) {
      throw ValidationError("pruned enumeration requires a finite support radius");
    }
    if (!(config.safety >= 1.0) || !std::isfinite(config.safety)) {
      throw ValidationError("pruning safety factor must be >= 1");
    }
  }
  if (config.threads < 0) throw ValidationError("thread count must be >= 0");
  if (config.mode == MeasureMode::roots_intro) {
    if (!is_rational_root(config.alpha, config.b)) {
      throw ValidationError("roots mode requires alpha = 1/b for an integer b >= 2");
    }
    if (config.n_prime != 0 || config.n_second != config.b) {
      throw ValidationError("roots mode requires N' = 0 and N'' = b");
    }
    if (config.scaling.kind != ScalingRegime::Kind::power_law) {
      throw ValidationError("roots mode requires power-law scaling N^gamma");
    }
  }
}

ScalingValues scaling_values(const CorrelationConfig& config) {
  return phi_psi(config.scaling, config.alpha, config.n);
}

double prune_radius(const CorrelationConfig& config) {
  return prune_radius(config, config.support_radius);
}

double prune_radius(const CorrelationConfig& config, double support_radius) {
  const double alpha = config.alpha;
  const auto s = scaling_values(config);
  const double x = support_radius * std::pow(static_cast<double>(config.n), 1.0 - alpha) / s.phi;
  const double lipschitz = std::pow(2.0, 1.0 / alpha - 1.0) / alpha;
  const double c_alpha = alpha <= 0.5 ? 1.0 : 1.0 / std::sin(std::numbers::pi * (1.0 - alpha));
  return std::max(config.safety * lipschitz * x, c_alpha / alpha * x);
}

WeightedPointCloud level_difference_cloud(const CorrelationConfig& config, int level) {
  validate(config);
  const auto s = scaling_values(config);
  WeightedPointCloud cloud;
  cloud.weight = 1.0 / (static_cast<double>(config.n_prime + config.n_second) * s.psi);
  if (no_candidates(config, prune_radius(config))) return cloud;

  const PointTable table(config.grid, static_cast<double>(config.n));
  const Enumerator en(config, table, prune_radius(config));
  const auto w = powers(table, config.alpha, level);
  const double a2 = config.support_radius * config.support_radius;
  const double phi = s.phi;
  cloud.points = en.collect<Complex>([&](std::size_t i, std::size_t j, std::vector<Complex>& out) {
    const Complex d = phi * (w[i] - w[j]);
    if (std::norm(d) <= a2) out.push_back(d);
  });
  if (en.brute) cloud.total_raw_pairs = pair_count(table.size());
  return cloud;
}

WeightedPointCloud build_level_measure(const CorrelationConfig& config) {
  validate(config);
  if (config.mode == MeasureMode::roots_intro) {
    throw ValidationError("build_level_measure called with roots mode");
  }
  const auto base = level_difference_cloud(config, 0);
  const int levels = config.n_prime + config.n_second;
  WeightedPointCloud cloud;
  cloud.weight = base.weight;
  cloud.points.reserve(base.points.size() * static_cast<std::size_t>(levels));
  append_rotations(cloud.points, base.points, config.alpha, -config.n_prime, config.n_second - 1);
  if (base.total_raw_pairs) cloud.total_raw_pairs = *base.total_raw_pairs * levels;
  return cloud;
}

WeightedPointCloud build_full_measure(const CorrelationConfig& config) {
  auto cloud = build_level_measure(config);
  const int cross_levels = config.n_prime + config.n_second - 1;
  if (cross_levels <= 0 || no_candidates(config, prune_radius(config))) return cloud;

  const auto s = scaling_values(config);
  const PointTable table(config.grid, static_cast<double>(config.n));
  const Enumerator en(config, table, prune_radius(config));
  const auto w0 = powers(table, config.alpha, 0);
  const auto w1 = powers(table, config.alpha, 1);
  const auto th = thetas(table, BranchCut::positive_real);
  const auto& pts = table.points();
  const double a2 = config.support_radius * config.support_radius;
  const double phi = s.phi;

  const auto cross = en.collect<Complex>([&](std::size_t i, std::size_t j, std::vector<Complex>& out) {
    if (same_direction(pts[i].z, pts[j].z)) return;
    const Complex d = th[i] < th[j] ? phi * (w1[i] - w0[j]) : phi * (w0[i] - w1[j]);
    if (std::norm(d) <= a2) out.push_back(d);
  });
  append_rotations(cloud.points, cross, config.alpha, -config.n_prime, config.n_second - 2);

  if (cloud.total_raw_pairs) {
    std::int64_t off_diagonal = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i != j && !same_direction(pts[i].z, pts[j].z)) ++off_diagonal;
      }
    }
    *cloud.total_raw_pairs += off_diagonal * cross_levels;
  }
  return cloud;
}

WeightedPointCloud build_roots_measure(const CorrelationConfig& config) {
  validate(config);
  if (config.mode != MeasureMode::roots_intro) {
    throw ValidationError("build_roots_measure requires roots mode");
  }
  const auto s = scaling_values(config);
  const int b = config.b;
  const double alpha = config.alpha;
  const double gamma = config.scaling.value;
  const auto nd = static_cast<double>(config.n);

  WeightedPointCloud cloud;
  cloud.weight = alpha / std::pow(nd, 2.0 * (2.0 - alpha - gamma));
  const double reference = 1.0 / (static_cast<double>(b) * s.psi);
  if (std::abs(cloud.weight - reference) > 1e-12 * reference) {
    throw ValidationError("roots weight disagrees with 1/(b psi(N))");
  }

  if (no_candidates(config, prune_radius(config))) return cloud;
  const PointTable table(config.grid, nd);
  const Enumerator en(config, table, prune_radius(config));
  std::vector<std::vector<Complex>> shifted;
  for (int j = 0; j < b; ++j) shifted.push_back(powers(table, alpha, j));
  const auto& w0 = shifted[0];
  const double a2 = config.support_radius * config.support_radius;
  const double phi = s.phi;

  // v - u over all root pairs is omega^i (n^[a,s] - m^[a,0]), omega = e^(2 pi i a).
  const auto base = en.collect<Complex>([&](std::size_t i, std::size_t j, std::vector<Complex>& out) {
    for (int shift = 0; shift < b; ++shift) {
      const Complex d = phi * (shifted[static_cast<std::size_t>(shift)][i] - w0[j]);
      if (std::norm(d) <= a2) out.push_back(d);
    }
  });
  cloud.points.reserve(base.size() * static_cast<std::size_t>(b));
  append_rotations(cloud.points, base, alpha, 0, b - 1);
  if (en.brute) cloud.total_raw_pairs = pair_count(table.size()) * b * b;
  return cloud;
}

WeightedPointCloud build_measure(const CorrelationConfig& config) {
  switch (config.mode) {
    case MeasureMode::level_separated:
      return build_level_measure(config);
    case MeasureMode::full_riemann:
      return build_full_measure(config);
    case MeasureMode::roots_intro:
      return build_roots_measure(config);
  }
  throw ValidationError("unknown measure mode");
}

bool same_direction(Complex n, Complex m) {
  const double cross = n.real() * m.imag() - n.imag() * m.real();
  const double dot = n.real() * m.real() + n.imag() * m.imag();
  return dot > 0.0 && std::abs(cross) <= 1e-14 * std::abs(n) * std::abs(m);
}

PlusMinusDecomposition decompose_pm(const CorrelationConfig& config) {
  validate(config);
  const auto s = scaling_values(config);
  PlusMinusDecomposition out;
  const double weight = 1.0 / (static_cast<double>(config.n_prime + config.n_second) * s.psi);
  out.plus.weight = out.minus.weight = out.diagonal.weight = weight;
  if (no_candidates(config, prune_radius(config))) return out;

  const PointTable table(config.grid, static_cast<double>(config.n));
  const Enumerator en(config, table, prune_radius(config));
  const auto w0 = powers(table, config.alpha, 0);
  const auto th = thetas(table, config.branch_cut);
  const auto& pts = table.points();
  const double a2 = config.support_radius * config.support_radius;
  const double phi = s.phi;
  const double alpha = config.alpha;

  struct Tagged {
    Complex d;
    int side;
  };
  const auto tagged = en.collect<Tagged>([&](std::size_t i, std::size_t j, std::vector<Tagged>& out) {
    const Complex n = pts[i].z;
    const Complex m = pts[j].z;
    int side = 0;
    if (!same_direction(n, m) && th[i] != th[j]) side = th[i] > th[j] ? 1 : -1;
    const int l = level_of(ratio_branch(n, m, config.branch_cut));
    const Complex d = phi * w0[j] * (level_power(n / m, alpha, l) - 1.0);
    if (std::norm(d) <= a2) out.push_back({d, side});
  });

  for (const auto& t : tagged) {
    auto& target = t.side > 0 ? out.plus : (t.side < 0 ? out.minus : out.diagonal);
    target.points.push_back(t.d);
  }
  return out;
}

std::int64_t cross_level_count(const CorrelationConfig& config, double support_radius,
                               int level) {
  validate(config);
  if (!(support_radius > 0.0)) throw ValidationError("support radius must be > 0");
  const auto s = scaling_values(config);
  if (no_candidates(config, prune_radius(config, support_radius))) return 0;
  const PointTable table(config.grid, static_cast<double>(config.n));
  const Enumerator en(config, table, prune_radius(config, support_radius));
  const auto lower = powers(table, config.alpha, level);
  const auto upper = powers(table, config.alpha, level + 1);
  const auto th = thetas(table, BranchCut::positive_real);
  const double a2 = support_radius * support_radius;
  const double phi = s.phi;

  const auto hits = en.collect<char>([&](std::size_t i, std::size_t j, std::vector<char>& out) {
    if (!(th[i] < th[j])) return;
    const Complex d = phi * (upper[i] - lower[j]);
    if (std::norm(d) <= a2) out.push_back(1);
  });
  return static_cast<std::int64_t>(hits.size());
}

namespace {

struct CellHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& c) const {
    return std::hash<std::int64_t>()(c.first * 1000003 + c.second);
  }
};

}  // namespace

MultisetMatch match_multisets(std::span<const Complex> a, std::span<const Complex> b,
                              double tolerance) {
  MultisetMatch result;
  if (a.size() != b.size()) {
    result.unmatched = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  }
  const double cell = std::max(1e-6, 2.0 * tolerance);
  auto key = [cell](Complex z) {
    return std::pair<std::int64_t, std::int64_t>(static_cast<std::int64_t>(std::floor(z.real() / cell)),
                                                 static_cast<std::int64_t>(std::floor(z.imag() / cell)));
  };
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>, CellHash> buckets;
  for (std::size_t i = 0; i < b.size(); ++i) buckets[key(b[i])].push_back(i);
  std::vector<char> used(b.size(), 0);

  for (const Complex& z : a) {
    const auto [kx, ky] = key(z);
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = buckets.find({kx + dx, ky + dy});
        if (it == buckets.end()) continue;
        for (std::size_t idx : it->second) {
          if (used[idx]) continue;
          const double d = std::abs(z - b[idx]);
          if (d < best_d) {
            best_d = d;
            best = idx;
          }
        }
      }
    }
    if (best == b.size() || best_d > tolerance) {
      ++result.unmatched;
      continue;
    }
    used[best] = 1;
    result.max_distance = std::max(result.max_distance, best_d);
  }
  result.equal = result.unmatched == 0 && a.size() == b.size();
  return result;
}

bool measures_match(const WeightedPointCloud& a, const WeightedPointCloud& b, double tolerance) {
  const double scale = std::max(std::abs(a.weight), std::abs(b.weight));
  if (std::abs(a.weight - b.weight) > 1e-12 * scale) return false;
  return match_multisets(a.points, b.points, tolerance).equal;
}

}  // namespace fracpair

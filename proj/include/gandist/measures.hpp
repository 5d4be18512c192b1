#pragma once

#include <fstream>
#include <map>
#include <numeric>
#include <utility>

#include <json.hpp>

#include "gandist/core.hpp"

namespace gandist {

/// Finitely supported probability measure on the open unit cube.
/// Atoms are deduplicated (weights of equal atoms are summed) and weights are
/// renormalized to sum to one. Immutable after construction.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Point> atoms, std::vector<double> weights) {
    if (atoms.empty()) throw std::invalid_argument("measure: empty atom list");
    if (atoms.size() != weights.size())
      throw std::invalid_argument("measure: atoms/weights length mismatch");
    dim_ = static_cast<int>(atoms.front().size());
    if (dim_ < 1) throw std::invalid_argument("measure: dimension must be >= 1");

    double total = 0.0;
    std::map<Point, size_t> seen;  // first-occurrence order preserved below
    for (size_t i = 0; i < atoms.size(); ++i) {
      if (static_cast<int>(atoms[i].size()) != dim_)
        throw std::invalid_argument("measure: dimension mismatch among atoms");
      if (!inside_cube(atoms[i]))
        throw std::invalid_argument(
            "measure: atom outside the safe box [1e-9, 1-1e-9]^d");
      if (weights[i] < 0.0)
        throw std::invalid_argument("measure: negative weight");
      total += weights[i];
      auto it = seen.find(atoms[i]);
      if (it == seen.end()) {
        seen.emplace(atoms[i], atoms_.size());
        atoms_.push_back(std::move(atoms[i]));
        weights_.push_back(weights[i]);
      } else {
        weights_[it->second] += weights[i];
      }
    }
    if (!(total > 0.0))
      throw std::invalid_argument("measure: weights must have positive sum");
    for (double& w : weights_) w /= total;

    // drop zero-weight atoms so every surviving weight is > 0
    std::vector<Point> a;
    std::vector<double> w;
    for (size_t i = 0; i < atoms_.size(); ++i) {
      if (weights_[i] > 0.0) {
        a.push_back(std::move(atoms_[i]));
        w.push_back(weights_[i]);
      }
    }
    atoms_ = std::move(a);
    weights_ = std::move(w);
    if (atoms_.empty())
      throw std::invalid_argument("measure: all weights are zero");
  }

  int dim() const { return dim_; }
  size_t size() const { return atoms_.size(); }
  const std::vector<Point>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  const Point& atom(size_t i) const { return atoms_[i]; }
  double weight(size_t i) const { return weights_[i]; }

  double weight_sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
  }

 private:
  std::vector<Point> atoms_;
  std::vector<double> weights_;
  int dim_ = 0;
};

inline DiscreteMeasure new_discrete(std::vector<Point> atoms,
                                    std::vector<double> weights) {
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

/// Empirical measure: weight 1/n per sample, duplicates merged with multiplicity.
inline DiscreteMeasure empirical(const std::vector<Point>& samples) {
  if (samples.empty()) throw std::invalid_argument("empirical: no samples");
  return DiscreteMeasure(samples,
                         std::vector<double>(samples.size(), 1.0 / samples.size()));
}

/// n i.i.d. draws by inverse CDF on the categorical weights; deterministic in seed.
inline std::vector<Point> sample(const DiscreteMeasure& m, uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  std::vector<double> cdf(m.size());
  double acc = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    acc += m.weight(i);
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double u = rng.uniform01();
    const size_t idx =
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    out.push_back(m.atom(std::min(idx, m.size() - 1)));
  }
  return out;
}

/// Image measure under a map Z -> X. Outputs are clamped onto the safe box,
/// weights carried over, duplicate images merged.
template <class MapFn>
DiscreteMeasure pushforward(MapFn&& generator, const DiscreteMeasure& latent) {
  std::vector<Point> images;
  images.reserve(latent.size());
  int out_dim = -1;
  for (size_t i = 0; i < latent.size(); ++i) {
    Point y = clamp_to_cube(generator(latent.atom(i)));
    if (out_dim < 0) out_dim = static_cast<int>(y.size());
    if (static_cast<int>(y.size()) != out_dim)
      throw std::invalid_argument("pushforward: generator output dimension mismatch");
    images.push_back(std::move(y));
  }
  return DiscreteMeasure(std::move(images),
                         std::vector<double>(latent.weights()));
}

/// Deterministic tensor-grid discretization of Unif(0,1)^d: per-axis midpoints
/// (2i+1)/(2k), equal weights. Used as a latent grid and as a W1 reference.
inline DiscreteMeasure uniform_grid_measure(int d, int points_per_axis) {
  if (d < 1 || points_per_axis < 1)
    throw std::invalid_argument("uniform_grid_measure: bad parameters");
  const int k = points_per_axis;
  size_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<size_t>(k);
  std::vector<Point> atoms;
  atoms.reserve(total);
  std::vector<int> idx(d, 0);
  for (size_t r = 0; r < total; ++r) {
    Point p(d);
    for (int a = 0; a < d; ++a) p[a] = (2.0 * idx[a] + 1.0) / (2.0 * k);
    atoms.push_back(std::move(p));
    for (int a = d - 1; a >= 0; --a) {
      if (++idx[a] < k) break;
      idx[a] = 0;
    }
  }
  return DiscreteMeasure(std::move(atoms),
                         std::vector<double>(total, 1.0 / total));
}

/// n i.i.d. uniform draws from the cube (clamped onto the safe box).
inline std::vector<Point> sample_uniform_cube(int d, uint64_t seed, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("sample_uniform_cube: bad parameters");
  Rng rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    Point p(d);
    for (int a = 0; a < d; ++a) p[a] = clamp_to_cube_coord(rng.uniform01());
    out.push_back(std::move(p));
  }
  return out;
}

// ---- JSON measure format: {"dim": d, "atoms": [[...]], "weights": [...]} ----

inline nlohmann::json measure_to_json(const DiscreteMeasure& m) {
  nlohmann::json j;
  j["dim"] = m.dim();
  j["atoms"] = m.atoms();
  j["weights"] = m.weights();
  return j;
}

/// Parses the measure JSON. Unless `renormalize` is set, a weight sum deviating
/// from 1 by more than 1e-9 is rejected before the usual renormalization.
inline DiscreteMeasure measure_from_json(const nlohmann::json& j,
                                         bool renormalize = false) {
  if (!j.contains("dim") || !j.contains("atoms") || !j.contains("weights"))
    throw std::invalid_argument("measure json: need dim, atoms, weights");
  const int dim = j.at("dim").get<int>();
  auto atoms = j.at("atoms").get<std::vector<Point>>();
  auto weights = j.at("weights").get<std::vector<double>>();
  for (const auto& a : atoms)
    if (static_cast<int>(a.size()) != dim)
      throw std::invalid_argument("measure json: atom dimension != dim");
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!renormalize && std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument(
        "measure json: weight sum deviates from 1 by more than 1e-9 "
        "(pass --renormalize to accept)");
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

inline DiscreteMeasure load_measure(const std::string& path,
                                    bool renormalize = false) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure file: " + path);
  nlohmann::json j;
  in >> j;
  return measure_from_json(j, renormalize);
}

inline void save_measure(const DiscreteMeasure& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write measure file: " + path);
  out << measure_to_json(m).dump(2) << "\n";
}

}  // namespace gandist

#include <cyclet/oscillator.hpp>

#include <algorithm>

namespace cyclet {

double oscillator_energy(double mass, double omega, const QuantumNumbers& q) {
  if (!(mass > 0.0) || !(omega > 0.0))
    throw DomainError("oscillator_energy requires m > 0 and omega > 0");
  q.validate();
  const int n = q.particles;
  double sum = 0.0;
  for (int i = 1; i < n; ++i) {
    double s = mode_sine(i, n);
    sum += 2.0 * s * (2.0 * q.radial[i - 1] + q.orbital[i - 1] + 0.5 * q.dimension);
  }
  return omega * sum;
}

double ground_state_energy(double mass, double omega, int particles, int dimension) {
  if (!(mass > 0.0) || !(omega > 0.0))
    throw DomainError("ground_state_energy requires m > 0 and omega > 0");
  if (particles < 2) throw DomainError("ground_state_energy requires N >= 2");
  if (dimension < 1) throw DomainError("ground_state_energy requires D >= 1");
  return omega * dimension / std::tan(EIGEN_PI / (2.0 * particles));
}

namespace {

// number of (n, l) pairs with 2n + l = v; with the angular flag each pair
// carries its (2l + 1) degeneracy, summing to (v+1)(v+2)/2
long long mode_splittings(int v, bool angular) {
  if (!angular) return v / 2 + 1;
  return static_cast<long long>(v + 1) * (v + 2) / 2;
}

struct Candidate {
  double q_shift = 0.0;        // q above the ground value
  long long multiplicity = 1;
  std::vector<int> w;          // quanta per mode group
};

}  // namespace

std::vector<Level> enumerate_levels(int particles, int dimension, int count,
                                    bool angular_weight) {
  if (particles < 2) throw DomainError("enumerate_levels requires N >= 2");
  if (dimension < 1) throw DomainError("enumerate_levels requires D >= 1");
  if (count < 1) throw DomainError("enumerate_levels requires K >= 1");
  if (angular_weight && dimension != 3)
    throw DomainError("angular multiplicity weighting is defined for D = 3 only");

  const int n = particles;
  // Modes i and N-i share sin(i pi/N); enumerate occupations per group.
  const int groups = n / 2;
  std::vector<double> sine(groups + 1, 0.0);
  for (int g = 1; g <= groups; ++g) sine[g] = mode_sine(g, n);

  double base = 0.0;  // ground value D * sum_i sin(i pi/N)
  for (int i = 1; i < n; ++i) base += mode_sine(i, n);
  base *= dimension;

  const double min_step = 2.0 * sine[1];  // smallest q increment per quantum
  const double merge_tol = 1e-9;

  // multiplicity of w quanta within one group
  auto group_multiplicity = [&](int g, int w) -> long long {
    if (g == n - g) return mode_splittings(w, angular_weight);
    long long m = 0;
    for (int v = 0; v <= w; ++v)
      m += mode_splittings(v, angular_weight) * mode_splittings(w - v, angular_weight);
    return m;
  };

  for (int cap = 0; cap <= 512; ++cap) {
    std::vector<Candidate> cands;
    std::vector<int> w(static_cast<std::size_t>(groups), 0);

    // depth-first over group occupations with total budget `cap`
    auto recurse = [&](auto&& self, int g, int budget, double q_shift,
                       long long mult) -> void {
      if (g > groups) {
        cands.push_back({q_shift, mult, w});
        return;
      }
      for (int wg = 0; wg <= budget; ++wg) {
        w[static_cast<std::size_t>(g - 1)] = wg;
        self(self, g + 1, budget - wg, q_shift + 2.0 * sine[g] * wg,
             mult * group_multiplicity(g, wg));
      }
      w[static_cast<std::size_t>(g - 1)] = 0;
    };
    recurse(recurse, 1, cap, 0.0, 1);

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      if (a.q_shift != b.q_shift) return a.q_shift < b.q_shift;
      return a.w < b.w;
    });

    std::vector<Level> levels;
    for (const Candidate& c : cands) {
      if (!levels.empty() && c.q_shift + base - levels.back().q <= merge_tol) {
        levels.back().multiplicity += c.multiplicity;
        continue;
      }
      Level lvl;
      lvl.q = base + c.q_shift;
      lvl.multiplicity = c.multiplicity;
      lvl.radial.assign(static_cast<std::size_t>(n - 1), 0);
      lvl.orbital.assign(static_cast<std::size_t>(n - 1), 0);
      for (int g = 1; g <= groups; ++g)
        lvl.orbital[static_cast<std::size_t>(g - 1)] = c.w[static_cast<std::size_t>(g - 1)];
      levels.push_back(std::move(lvl));
    }

    // Every unseen occupation has q >= base + min_step * (cap + 1), so the
    // first `count` levels are final once they sit strictly below that.
    if (static_cast<int>(levels.size()) >= count &&
        levels[static_cast<std::size_t>(count - 1)].q <
            base + min_step * (cap + 1) - merge_tol) {
      levels.resize(static_cast<std::size_t>(count));
      return levels;
    }
  }
  throw ConvergenceError("enumerate_levels failed to prove completeness");
}

}  // namespace cyclet

#include "darkstate/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "darkstate/dynamics.hpp"
#include "darkstate/quadrature.hpp"
#include "darkstate/sweep.hpp"

namespace darkstate {

double pdf_unnormalized(double v, const VelocityDistribution& dist) {
  const double u = (v - dist.v0) / dist.dv;
  return std::exp(-u * u);
}

double normalization_A(const VelocityDistribution& dist) {
  if (dist.dv <= 0)
    throw std::invalid_argument("velocity distribution: dv must be > 0");
  return 0.5 * std::sqrt(M_PI) * dist.dv * (1.0 + std::erf(dist.v0 / dist.dv));
}

namespace {

std::size_t crossing_count(double v, double z0, const PulseShape& pulse,
                           const PhysicalParams&) {
  if (v <= 0) return 0;
  return find_node_crossings(Trajectory::constant(v, z0), pulse, 0.0,
                             2.0 * pulse.T0)
      .size();
}

}  // namespace

std::vector<double> segment_boundaries(double z0, const PulseShape& pulse,
                                       const PhysicalParams& p, double v_lo,
                                       double v_hi) {
  std::vector<double> bounds;
  if (v_hi <= v_lo) return bounds;
  std::size_t count_lo = crossing_count(std::max(v_lo, 0.0), z0, pulse, p);
  const std::size_t count_hi = crossing_count(v_hi, z0, pulse, p);
  double lo = v_lo;
  for (std::size_t c = count_lo; c < count_hi; ++c) {
    // Smallest v in (lo, v_hi] whose count exceeds c.
    double a = lo, b = v_hi;
    for (int i = 0; i < 100 && (b - a) > 1e-13; ++i) {
      const double m = 0.5 * (a + b);
      if (crossing_count(m, z0, pulse, p) > c) {
        b = m;
      } else {
        a = m;
      }
    }
    bounds.push_back(0.5 * (a + b));
    lo = b;
  }
  return bounds;
}

SurvivalTable SurvivalTable::build(double z0, const PulseShape& pulse,
                                   const PhysicalParams& p, double v_lo,
                                   double v_hi, double interp_tol,
                                   double ode_rtol, unsigned jobs) {
  if (v_hi <= v_lo) throw std::invalid_argument("survival table: empty range");
  v_lo = std::max(v_lo, 0.0);

  auto p_ode = [&](double v) {
    if (v <= 0) return 1.0;
    return integrate(Trajectory::constant(v, z0), pulse, p, 0.0,
                     2.0 * pulse.T0, ode_rtol)
        .p_dark;
  };

  // Seed knots: range ends, crossing-count boundaries, and a uniform fill.
  std::vector<double> knots{v_lo, v_hi};
  for (double b : segment_boundaries(z0, pulse, p, v_lo, v_hi))
    knots.push_back(b);
  const int fill = 32;
  for (int i = 1; i < fill; ++i)
    knots.push_back(v_lo + (v_hi - v_lo) * i / fill);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [](double a, double b) { return b - a < 1e-12; }),
              knots.end());

  std::map<double, double> table;
  {
    std::vector<double> ps(knots.size());
    parallel_for(knots.size(), jobs,
                 [&](std::size_t i) { ps[i] = p_ode(knots[i]); });
    for (std::size_t i = 0; i < knots.size(); ++i) table[knots[i]] = ps[i];
  }

  // Local refinement: test each interval's midpoint against the linear
  // estimate; only violating intervals are split and re-queued.
  const double min_step = 1e-5;
  std::vector<std::pair<double, double>> queue;
  for (auto it = table.begin(); std::next(it) != table.end(); ++it)
    queue.emplace_back(it->first, std::next(it)->first);

  for (int round = 0; round < 24 && !queue.empty(); ++round) {
    std::vector<double> mids(queue.size());
    std::vector<double> ps(queue.size());
    for (std::size_t i = 0; i < queue.size(); ++i)
      mids[i] = 0.5 * (queue[i].first + queue[i].second);
    parallel_for(mids.size(), jobs,
                 [&](std::size_t i) { ps[i] = p_ode(mids[i]); });

    std::vector<std::pair<double, double>> next_queue;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const double est =
          0.5 * (table.at(queue[i].first) + table.at(queue[i].second));
      if (std::abs(ps[i] - est) > 0.5 * interp_tol) {
        table[mids[i]] = ps[i];
        if (mids[i] - queue[i].first > 2.0 * min_step)
          next_queue.emplace_back(queue[i].first, mids[i]);
        if (queue[i].second - mids[i] > 2.0 * min_step)
          next_queue.emplace_back(mids[i], queue[i].second);
      }
    }
    queue = std::move(next_queue);
  }

  SurvivalTable out;
  out.vs_.reserve(table.size());
  out.ps_.reserve(table.size());
  for (const auto& [v, pv] : table) {
    out.vs_.push_back(v);
    out.ps_.push_back(pv);
  }
  return out;
}

double SurvivalTable::operator()(double v) const {
  if (vs_.empty()) throw std::logic_error("survival table: empty");
  if (v <= vs_.front()) return ps_.front();
  if (v >= vs_.back()) return ps_.back();
  const auto it = std::upper_bound(vs_.begin(), vs_.end(), v);
  const std::size_t i = static_cast<std::size_t>(it - vs_.begin());
  const double w = (v - vs_[i - 1]) / (vs_[i] - vs_[i - 1]);
  return ps_[i - 1] * (1.0 - w) + ps_[i] * w;
}

bool SurvivalTable::covers(double lo, double hi) const {
  return !vs_.empty() && vs_.front() <= lo + 1e-12 && vs_.back() >= hi - 1e-12;
}

double ensemble_survival(const VelocityDistribution& dist,
                         const PulseShape& pulse, const PhysicalParams& p,
                         double z0, SurvivalMode mode,
                         const SurvivalTable* table, int gl_points) {
  const double a_norm = normalization_A(dist);
  const double lo = std::max(0.0, dist.v0 - 8.0 * dist.dv);
  const double hi = dist.v0 + 8.0 * dist.dv;

  SurvivalTable local;
  if (mode == SurvivalMode::numeric) {
    if (table == nullptr || !table->covers(lo, hi)) {
      local = SurvivalTable::build(z0, pulse, p, lo, hi);
      table = &local;
    }
  }

  auto survival = [&](double v) {
    if (v <= 0) return 1.0;
    if (mode == SurvivalMode::numeric) return (*table)(v);
    return predict(Trajectory::constant(v, z0), pulse, p, 0.0, 2.0 * pulse.T0)
        .p_total;
  };
  auto integrand = [&](double v) {
    return pdf_unnormalized(v, dist) * survival(v);
  };

  std::vector<double> edges{lo, hi};
  for (double b : segment_boundaries(z0, pulse, p, lo, hi))
    edges.insert(std::prev(edges.end()), b);
  std::sort(edges.begin(), edges.end());

  double b_total = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    b_total += integrate_gl(integrand, edges[i], edges[i + 1], gl_points);
  return b_total / a_norm;
}

}  // namespace darkstate

#include "reachavoid/matching.hpp"

#include <algorithm>
#include <numeric>

#include "reachavoid/errors.hpp"

namespace reachavoid {

std::vector<Coalition> execution_coalitions(std::size_t num_pursuers) {
  std::vector<Coalition> out;
  for (std::size_t i = 0; i < num_pursuers; ++i) out.emplace_back(1u << i);
  for (std::size_t i = 0; i < num_pursuers; ++i) {
    for (std::size_t k = i + 1; k < num_pursuers; ++k) out.emplace_back((1u << i) | (1u << k));
  }
  return out;
}

std::size_t pair_block(std::size_t i, std::size_t k, std::size_t num_pursuers) {
  if (!(i < k && k < num_pursuers)) throw DomainError("pair indices must satisfy i < k < N_p");
  // Pairs starting with 0..i-1 come first: sum of (Np-1-a) for a < i.
  const std::size_t before = i * (2 * num_pursuers - i - 1) / 2;
  return num_pursuers + before + (k - i - 1);
}

std::size_t num_variables(std::size_t num_pursuers, std::size_t num_evaders) {
  return num_evaders * num_pursuers * (num_pursuers + 1) / 2;
}

std::size_t PriorInfoVector::singleton_index(std::size_t i, std::size_t evader) const {
  return i * num_evaders + evader;
}

std::size_t PriorInfoVector::pair_index(std::size_t i, std::size_t k, std::size_t evader) const {
  return pair_block(i, k, num_pursuers) * num_evaders + evader;
}

PriorInfoVector prior_info(const Scenario& scenario, double tol_band) {
  PriorInfoVector r;
  r.num_pursuers = scenario.num_pursuers();
  r.num_evaders = scenario.num_evaders();
  r.bits.reserve(num_variables(r.num_pursuers, r.num_evaders));
  for (const Coalition& c : execution_coalitions(r.num_pursuers)) {
    const BarrierCurve curve = build_barrier(c, scenario);
    for (const Point& e : scenario.evaders) {
      if (!scenario.domain.contains(e, Side::Play)) {
        throw DomainError("evader is outside the play region");
      }
      r.bits.push_back(classify(e, curve, tol_band) == RegionLabel::PWR ? 1 : 0);
    }
  }
  return r;
}

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b) {
  BinaryMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (!a.at(i, j)) continue;
      for (std::size_t p = 0; p < b.rows; ++p) {
        for (std::size_t q = 0; q < b.cols; ++q) out.at(i * b.rows + p, j * b.cols + q) = b.at(p, q);
      }
    }
  }
  return out;
}

BinaryMatrix ones(std::size_t rows, std::size_t cols) {
  BinaryMatrix m(rows, cols);
  std::fill(m.data.begin(), m.data.end(), 1);
  return m;
}

BinaryMatrix identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BinaryMatrix build_a3(std::size_t num_pursuers, std::size_t num_evaders) {
  if (num_pursuers == 0 || num_evaders == 0) throw DomainError("N_p and N_e must be positive");
  const long np = static_cast<long>(num_pursuers);
  const BinaryMatrix singles = kron(identity(num_pursuers), ones(1, num_evaders));
  if (num_pursuers < 2) return singles;

  // Indices below are 1-based as in the pair enumeration; all comparisons
  // are doubled so the half-integer terms stay exact.
  const long num_pairs = np * (np - 1) / 2;
  BinaryMatrix pairs(num_pursuers, static_cast<std::size_t>(num_pairs));
  for (long i = 1; i <= np; ++i) {
    for (long j = 1; j <= num_pairs; ++j) {
      bool tag = false;
      for (long k = 1; k <= i - 1; ++k) {
        if (2 * j == 2 * (i - k) + (k - 1) * (2 * np - k)) {
          tag = true;
          break;
        }
      }
      if (2 * j >= (i - 1) * (2 * np - i) + 2 && 2 * j <= i * (2 * np - i - 1)) tag = true;
      pairs.at(i - 1, j - 1) = tag ? 1 : 0;
    }
  }
  const BinaryMatrix expanded = kron(pairs, ones(1, num_evaders));

  BinaryMatrix out(num_pursuers, singles.cols + expanded.cols);
  for (std::size_t r = 0; r < num_pursuers; ++r) {
    for (std::size_t c = 0; c < singles.cols; ++c) out.at(r, c) = singles.at(r, c);
    for (std::size_t c = 0; c < expanded.cols; ++c) out.at(r, singles.cols + c) = expanded.at(r, c);
  }
  return out;
}

IlpInstance build_ilp(const PriorInfoVector& prior, std::size_t num_pursuers,
                      std::size_t num_evaders) {
  const std::size_t nv = num_variables(num_pursuers, num_evaders);
  if (prior.num_pursuers != num_pursuers || prior.num_evaders != num_evaders ||
      prior.bits.size() != nv) {
    throw DomainError("prior information vector does not match (N_p, N_e)");
  }
  IlpInstance ilp;
  ilp.num_pursuers = num_pursuers;
  ilp.num_evaders = num_evaders;
  ilp.c.assign(nv, 1);
  ilp.a1 = identity(nv);
  ilp.b1.assign(prior.bits.begin(), prior.bits.end());
  ilp.a2 = kron(ones(1, nv / num_evaders), identity(num_evaders));
  ilp.b2.assign(num_evaders, 1);
  ilp.a3 = build_a3(num_pursuers, num_evaders);
  ilp.b3.assign(num_pursuers, 1);
  return ilp;
}

namespace {

bool rows_satisfied(const BinaryMatrix& a, const std::vector<int>& b,
                    std::span<const std::uint8_t> z) {
  for (std::size_t r = 0; r < a.rows; ++r) {
    int lhs = 0;
    for (std::size_t c = 0; c < a.cols; ++c) lhs += a.at(r, c) * z[c];
    if (lhs > b[r]) return false;
  }
  return true;
}

// Depth-first search over variables in a fixed order, branching z = 1 first.
class BranchAndBound {
 public:
  BranchAndBound(const IlpInstance& ilp, std::span<const std::size_t> order)
      : ilp_(ilp), order_(order.begin(), order.end()) {
    const std::size_t nv = ilp.num_vars();
    evader_of_.resize(nv);
    members_of_.resize(nv);
    singleton_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      evader_of_[v] = static_cast<int>(v % ilp.num_evaders);
      for (std::size_t p = 0; p < ilp.num_pursuers; ++p) {
        if (ilp.a3.at(p, v)) members_of_[v].push_back(static_cast<int>(p));
      }
      singleton_[v] = members_of_[v].size() == 1;
    }
    // A1 = I, so b1 alone decides which variables may be set.
    allowed_.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) allowed_[v] = ilp.b1[v] > 0 && ilp.a1.at(v, v);
  }

  AssignmentSolution run() {
    const std::size_t nv = ilp_.num_vars();
    z_.assign(nv, 0);
    evader_used_.assign(ilp_.num_evaders, 0);
    pursuer_used_.assign(ilp_.num_pursuers, 0);
    best_z_ = z_;
    best_q_ = 0;
    best_s_ = 0;
    search(0, 0, 0);
    return decode_assignment(best_z_, ilp_.num_pursuers, ilp_.num_evaders);
  }

 private:
  bool can_set(std::size_t v) const {
    if (!allowed_[v] || evader_used_[evader_of_[v]]) return false;
    for (int p : members_of_[v]) {
      if (pursuer_used_[p]) return false;
    }
    return true;
  }

  int upper_bound_gain(std::size_t pos) const {
    std::vector<std::uint8_t> evader_open(ilp_.num_evaders, 0);
    for (std::size_t t = pos; t < order_.size(); ++t) {
      if (can_set(order_[t])) evader_open[evader_of_[order_[t]]] = 1;
    }
    const int evaders = static_cast<int>(std::count(evader_open.begin(), evader_open.end(), 1));
    const int pursuers =
        static_cast<int>(std::count(pursuer_used_.begin(), pursuer_used_.end(), 0));
    return std::min(evaders, pursuers);
  }

  void search(std::size_t pos, int q, int s) {
    if (q > best_q_ || (q == best_q_ && s > best_s_)) {
      best_q_ = q;
      best_s_ = s;
      best_z_ = z_;
    }
    if (pos == order_.size()) return;
    const int gain = upper_bound_gain(pos);
    const int q_ub = q + gain;
    const int s_ub = s + gain;
    if (q_ub < best_q_ || (q_ub == best_q_ && s_ub <= best_s_)) return;

    const std::size_t v = order_[pos];
    if (can_set(v)) {
      z_[v] = 1;
      evader_used_[evader_of_[v]] = 1;
      for (int p : members_of_[v]) pursuer_used_[p] = 1;
      search(pos + 1, q + 1, s + (singleton_[v] ? 1 : 0));
      for (int p : members_of_[v]) pursuer_used_[p] = 0;
      evader_used_[evader_of_[v]] = 0;
      z_[v] = 0;
    }
    search(pos + 1, q, s);
  }

  const IlpInstance& ilp_;
  std::vector<std::size_t> order_;
  std::vector<int> evader_of_;
  std::vector<std::vector<int>> members_of_;
  std::vector<bool> singleton_;
  std::vector<bool> allowed_;

  std::vector<std::uint8_t> z_;
  std::vector<std::uint8_t> evader_used_;
  std::vector<std::uint8_t> pursuer_used_;
  std::vector<std::uint8_t> best_z_;
  int best_q_ = 0;
  int best_s_ = 0;
};

}  // namespace

bool is_feasible(const IlpInstance& ilp, std::span<const std::uint8_t> z) {
  if (z.size() != ilp.num_vars()) return false;
  for (std::uint8_t v : z) {
    if (v > 1) return false;
  }
  return rows_satisfied(ilp.a1, ilp.b1, z) && rows_satisfied(ilp.a2, ilp.b2, z) &&
         rows_satisfied(ilp.a3, ilp.b3, z);
}

AssignmentSolution decode_assignment(std::span<const std::uint8_t> z, std::size_t num_pursuers,
                                     std::size_t num_evaders) {
  if (z.size() != num_variables(num_pursuers, num_evaders)) {
    throw DomainError("decision vector has the wrong length");
  }
  AssignmentSolution out;
  out.z_star.assign(z.begin(), z.end());
  const auto coalitions = execution_coalitions(num_pursuers);
  for (std::size_t b = 0; b < coalitions.size(); ++b) {
    for (std::size_t j = 0; j < num_evaders; ++j) {
      if (!z[b * num_evaders + j]) continue;
      const auto& m = coalitions[b].members();
      if (m.size() == 1) {
        out.pairs_one.push_back({m[0], static_cast<int>(j)});
      } else {
        out.pairs_two.push_back({m[0], m[1], static_cast<int>(j)});
      }
    }
  }
  out.q = static_cast<int>(out.pairs_one.size() + out.pairs_two.size());
  return out;
}

AssignmentSolution solve_ilp(const IlpInstance& ilp) {
  std::vector<std::size_t> order(ilp.num_vars());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return solve_ilp(ilp, order);
}

AssignmentSolution solve_ilp(const IlpInstance& ilp, std::span<const std::size_t> order) {
  std::vector<std::size_t> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != i) throw DomainError("variable order is not a permutation");
  }
  if (check.size() != ilp.num_vars()) throw DomainError("variable order has the wrong length");
  AssignmentSolution sol = BranchAndBound(ilp, order).run();
  if (!is_feasible(ilp, sol.z_star)) throw InvariantBreach("solver returned an infeasible vector");
  return sol;
}

Coalition degeneration_witness(const Scenario& scenario, const Coalition& coalition,
                               std::size_t evader_index, double tol_band) {
  if (coalition.size() < 3) throw DomainError("degeneration needs a coalition of three or more");
  if (evader_index >= scenario.num_evaders()) throw DomainError("evader index out of range");
  const Point e = scenario.evaders[evader_index];
  if (classify(e, coalition, scenario, tol_band) != RegionLabel::PWR) {
    throw DomainError("evader is not captured by the full coalition");
  }
  const auto& m = coalition.members();
  std::vector<Coalition> pairs;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      pairs.emplace_back((1u << m[a]) | (1u << m[b]));
    }
  }
  for (const Coalition& c : pairs) {
    if (classify(e, c, scenario, tol_band) == RegionLabel::PWR) return c;
  }
  for (const Coalition& c : pairs) {
    std::vector<Point> pos;
    for (int i : c.members()) pos.push_back(scenario.pursuers[i]);
    if (oracle_classify(e, pos, scenario.alpha, scenario.target_length(), tol_band) ==
        RegionLabel::PWR) {
      return c;
    }
  }
  throw VerificationFailure("no two-pursuer subcoalition captures the evader");
}

}  // namespace reachavoid

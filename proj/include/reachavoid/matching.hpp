#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "reachavoid/barrier.hpp"
#include "reachavoid/scenario.hpp"
#include "reachavoid/winning_region.hpp"

namespace reachavoid {

// Coalitions of one or two pursuers, in variable-block order: singletons
// {0}..{Np-1}, then pairs (0,1), (0,2), ..., (Np-2, Np-1).
std::vector<Coalition> execution_coalitions(std::size_t num_pursuers);

// Zero-based block of pair (i, k), i < k, among all execution coalitions.
std::size_t pair_block(std::size_t i, std::size_t k, std::size_t num_pursuers);

// Capture-guarantee bits, one block of num_evaders entries per execution
// coalition.
struct PriorInfoVector {
  std::size_t num_pursuers = 0;
  std::size_t num_evaders = 0;
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  std::size_t singleton_index(std::size_t i, std::size_t evader) const;
  std::size_t pair_index(std::size_t i, std::size_t k, std::size_t evader) const;
};

std::size_t num_variables(std::size_t num_pursuers, std::size_t num_evaders);

// Bit is 1 exactly when the evader is PWR for the execution coalition.
PriorInfoVector prior_info(const Scenario& scenario, double tol_band = kDefaultTolBand);

struct BinaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> data;

  BinaryMatrix() = default;
  BinaryMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint8_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint8_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  bool operator==(const BinaryMatrix&) const = default;
};

BinaryMatrix kron(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix ones(std::size_t rows, std::size_t cols);
BinaryMatrix identity(std::size_t n);

// Pursuer-uniqueness constraint matrix, row i marking every execution
// coalition that contains pursuer i.
BinaryMatrix build_a3(std::size_t num_pursuers, std::size_t num_evaders);

// maximize c'z  s.t.  A1 z <= b1, A2 z <= b2, A3 z <= b3, z binary.
struct IlpInstance {
  std::size_t num_pursuers = 0;
  std::size_t num_evaders = 0;
  std::vector<int> c;
  BinaryMatrix a1, a2, a3;
  std::vector<int> b1, b2, b3;

  std::size_t num_vars() const { return c.size(); }
};

IlpInstance build_ilp(const PriorInfoVector& prior, std::size_t num_pursuers,
                      std::size_t num_evaders);

bool is_feasible(const IlpInstance& ilp, std::span<const std::uint8_t> z);

struct AssignmentSolution {
  int q = 0;
  std::vector<std::uint8_t> z_star;
  // Zero-based (pursuer, evader) and (pursuer, pursuer, evader).
  std::vector<std::array<int, 2>> pairs_one;
  std::vector<std::array<int, 3>> pairs_two;
};

AssignmentSolution decode_assignment(std::span<const std::uint8_t> z, std::size_t num_pursuers,
                                     std::size_t num_evaders);

// Exact depth-first branch and bound. Among optima it prefers more
// singleton matches, then the smallest list of selected variable indices.
AssignmentSolution solve_ilp(const IlpInstance& ilp);

// Same search with variables visited in `order` (a permutation of
// 0..N_v-1). Useful to check that q does not depend on the visit order.
AssignmentSolution solve_ilp(const IlpInstance& ilp, std::span<const std::size_t> order);

// A two-pursuer subcoalition of `coalition` that still captures the evader.
// Throws VerificationFailure when no pair qualifies.
Coalition degeneration_witness(const Scenario& scenario, const Coalition& coalition,
                               std::size_t evader_index, double tol_band = kDefaultTolBand);

}  // namespace reachavoid

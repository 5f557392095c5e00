#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "cofmat/framework.hpp"
#include "cofmat/graph.hpp"
#include "cofmat/matroid.hpp"

namespace cofmat {

/// Deterministic per-trial generator: the same (seed, trial) always yields
/// the same stream.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// num/den with num uniform in [-max_num, max_num] and den in [1, max_den].
Rational random_rational(std::mt19937_64& rng, long max_num = 60, long max_den = 12);
Rational random_nonzero_rational(std::mt19937_64& rng, long max_num = 60, long max_den = 12);
Point random_rational_point(std::mt19937_64& rng);

/// Random combination of the kernel vectors of C(G,p) with small integer weights.
Motion random_motion_of(const Framework& f, std::mt19937_64& rng);

/// Scans the edges of K_n in random order and keeps each one that leaves the
/// set independent, stopping at `target` edges (or when K_n is exhausted).
Graph random_independent_graph(const GenericMatroid& m, std::size_t n, std::size_t target, std::mt19937_64& rng);

enum class Operation { zero_extension, one_extension, x_replacement, vertex_split, v_replacement, double_v };

inline constexpr std::array<Operation, 6> kAllOperations{Operation::zero_extension, Operation::one_extension,
                                                         Operation::x_replacement,  Operation::vertex_split,
                                                         Operation::v_replacement,  Operation::double_v};

std::string to_string(Operation op);

/// An independent graph and the result of one operation applied to it.
/// For V-replacement the closure hypothesis holds; for double V-replacement
/// `before` is H + e1 + e2 and H + e1' + e2' is independent as well.
struct OpTrial {
  Operation op;
  Graph before;
  Graph after;
};

/// Samples a valid instance of `op` on 5..9 vertices. Needs m.n() >= 10.
/// Throws std::runtime_error if no valid instance turns up within the
/// attempt budget.
OpTrial random_op_trial(Operation op, const GenericMatroid& m, std::mt19937_64& rng);

}  // namespace cofmat

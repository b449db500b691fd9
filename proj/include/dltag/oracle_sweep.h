#pragma once

// Exhaustive agreement check between the closed-form frontier answers and
// the brute-force oracle over every small valid tree.
//
// sweep_serial is the reference; sweep_parallel splits the tree list across
// OpenMP threads and must return the identical report.

#include <cstddef>
#include <string>
#include <vector>

#include "dltag/tree.h"

namespace dltag {

struct SweepConfig {
  std::size_t max_terminals = 7;
  std::size_t max_sites = 2;
};

struct Counterexample {
  std::size_t tree_index = 0;
  std::string tree;      // bracket notation
  std::string check;     // "adjoin/leaf-probe", "adjoin/site-probe", "substitution"
  std::string expected;  // oracle answer
  std::string actual;    // frontier answer

  bool operator==(const Counterexample&) const = default;
};

struct SweepReport {
  std::size_t trees = 0;
  std::size_t trees_with_sites = 0;
  std::size_t checks = 0;
  std::vector<Counterexample> counterexamples;

  bool operator==(const SweepReport&) const = default;
};

// Auxiliary probes the sweep adjoins: R(*, p) and R(*, R(p, ↓1)).
TreeTemplate leaf_probe();
TreeTemplate site_probe();

// Runs all checks on one tree; returns its counterexamples.
std::vector<Counterexample> check_tree(const DiscourseTree& tree,
                                       std::size_t index);

SweepReport sweep_serial(const SweepConfig& config);
// threads == 0 uses the OpenMP default.
SweepReport sweep_parallel(const SweepConfig& config, int threads = 0);

}  // namespace dltag

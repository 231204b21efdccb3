#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grr/autgraph.hpp"
#include "grr/scenario.hpp"

namespace grr {

enum class Mode { graph, digraph };

std::string to_string(Mode m);
Mode parse_mode(const std::string& s);

struct CensusCounts {
  /// DRRs in digraph mode, GRRs in graph mode.
  long long regular = 0;
  long long normal = 0;
  long long non_regular = 0;

  CensusCounts& operator+=(const CensusCounts& o);
  bool operator==(const CensusCounts&) const = default;
};

struct CensusRecord {
  std::string group;
  int order = 0;
  Mode mode = Mode::graph;
  /// "exhaustive" or "sample"
  std::string method;
  BigInt total;
  CensusCounts counts;
  /// Sampled runs only.
  std::optional<std::uint64_t> seed;
  std::uint64_t sample_offset = 0;
  double elapsed_ms = 0;

  double estimate() const;
  /// 95% normal-approximation half-width; 0 for exhaustive runs.
  double half_width() const;
};

struct SetClass {
  bool regular = false;
  bool normal = false;
};

/// Classifies one connection set. In graph mode S must be inverse-closed.
SetClass classify_set(const GroupTable& g, Mask s);

/// Every connection set (inverse-closed ones in graph mode), split into
/// fixed contiguous chunks processed by `jobs` threads and merged in order.
/// Caps: c(R) <= 20 in graph mode, r <= 16 in digraph mode.
CensusRecord exhaustive_census(const GroupTable& g, Mode mode, int jobs = 1);

/// Stateless 64-bit hash of (seed, index); one word drives one sample.
std::uint64_t sample_word(std::uint64_t seed, std::uint64_t index);

/// Samples with global indices [offset, offset + samples); each atom (graph)
/// or element (digraph) is included on one fair bit of the sample word.
CensusRecord monte_carlo_census(const GroupTable& g, Mode mode, std::uint64_t samples, std::uint64_t seed,
                                int jobs = 1, std::uint64_t offset = 0);

/// Combines two sampled records over disjoint index ranges of one seed.
CensusRecord merge_samples(const CensusRecord& a, const CensusRecord& b);

struct UnlabeledCensus {
  long long labeled_total = 0;
  long long labeled_grr = 0;
  long long iso_classes = 0;
  long long grr_classes = 0;
  long long group_automorphisms = 0;
  double ratio = 0;  // grr_classes / iso_classes
};

/// Buckets all Cayley graphs of R by canonical form, r <= 10. Checks
/// iso_classes - grr_classes <= labeled non-GRRs and
/// grr_classes * |Aut(R)| >= labeled GRRs.
UnlabeledCensus unlabeled_census(const GroupTable& g);

enum class Strategy { full, aut, graph_aut };
Strategy parse_strategy(const std::string& s);

/// Transitive proper overgroups of the regular representation, r <= 24
/// (graph-aut additionally needs c(R) <= 20). Duplicates are removed by
/// group equality.
std::vector<OvergroupScenario> build_scenarios(const GroupTable& g, Strategy strategy);

}  // namespace grr

#include "dyncolor/partition.hpp"

#include <algorithm>
#include <bit>

#include "dyncolor/rng.hpp"

namespace dyncolor {

int choose_k(int alpha_estimate, std::size_t n) {
  if (alpha_estimate < 1) throw DomainError("alpha_estimate must be >= 1");
  if (n < 2) throw DomainError("n must be >= 2");
  const int log2n = std::bit_width(n - 1);  // ceil(log2 n) for n >= 2
  return std::max(1, (alpha_estimate + log2n - 1) / log2n);
}

PartitionedColorer::PartitionedColorer(std::size_t n, int k,
                                       std::uint64_t seed,
                                       const OrientationStrategy& strategy,
                                       PolicyKind policy, int threshold_mult,
                                       int palette_mult)
    : k_(k),
      seed_(seed),
      palette_mult_(palette_mult),
      global_(n),
      // The global store only tracks the edge set; the coloring contract
      // lives in the part instances, so it gets the cheap maintainer
      // regardless of the configured strategy.
      global_policy_(std::make_unique<AmortizedFlipPolicy>()) {
  if (k_ < 1) throw DomainError("part count must be >= 1");
  parts_.reserve(k_);
  for (int p = 0; p < k_; ++p) {
    RecursionPolicy rp = policy == PolicyKind::Deterministic
                             ? RecursionPolicy::deterministic()
                             : RecursionPolicy::randomized(
                                   derive_seed(seed_, static_cast<std::uint64_t>(p)));
    parts_.push_back(std::make_unique<Part>(n, strategy, rp, threshold_mult,
                                            palette_mult));
  }
}

int PartitionedColorer::part_of(NodeId v) const {
  if (k_ == 1) return 0;
  return static_cast<int>(mix64(seed_ ^ mix64(v)) % static_cast<std::uint64_t>(k_));
}

int PartitionedColorer::range_width() const {
  int cap = 2;
  for (const auto& part : parts_) cap = std::max(cap, part->graph.d_cap());
  return palette_mult_ * cap;
}

std::vector<Arc> PartitionedColorer::insert_edge(NodeId u, NodeId v) {
  std::vector<Arc> flips = global_.insert_edge(u, v, *global_policy_);
  const int pu = part_of(u);
  if (pu == part_of(v))
    parts_[pu]->graph.insert_edge(u, v, *parts_[pu]->policy);
  return flips;
}

void PartitionedColorer::delete_edge(NodeId u, NodeId v) {
  global_.delete_edge(u, v, *global_policy_);
  const int pu = part_of(u);
  if (pu == part_of(v))
    parts_[pu]->graph.delete_edge(u, v, *parts_[pu]->policy);
}

PartitionedColorer::GlobalQuery PartitionedColorer::query_color_global(
    NodeId u) {
  GlobalQuery out;
  out.part = part_of(u);
  Part& part = *parts_[out.part];
  out.report = part.colorer.query_color(part.graph, u);
  out.global_color = out.part * range_width() + out.report.color;
  return out;
}

}  // namespace dyncolor

#pragma once

#include <vector>

#include "trasa/topology.hpp"
#include "trasa/tree.hpp"
#include "trasa/types.hpp"

namespace trasa {

/// Symmetric, irreflexive "may not share a slot" relation over all nodes.
///
/// Two distinct nodes conflict when their hop distance p satisfies 1 <= p <= h,
/// measured in the full graph (kAllLinks) or over tree edges only (kTreeOnly).
/// Nodes sharing a parent always conflict as well: the parent has a single
/// receiver. For h >= 2 siblings are already 2 hops apart, so this only adds
/// pairs when h == 1.
class ConflictMap {
 public:
  ConflictMap(std::size_t n, InterferenceVariant variant, unsigned h);

  std::size_t size() const { return n_; }
  InterferenceVariant variant() const { return variant_; }
  unsigned h() const { return h_; }

  bool conflicts(NodeId u, NodeId v) const { return bits_[u * n_ + v] != 0; }
  void set(NodeId u, NodeId v);

  std::size_t pair_count() const;

 private:
  std::size_t n_;
  InterferenceVariant variant_;
  unsigned h_;
  std::vector<unsigned char> bits_;
};

ConflictMap build_conflict_map(const NetworkGraph& graph, const SpanningTree& tree,
                               InterferenceVariant variant, unsigned h);

}  // namespace trasa

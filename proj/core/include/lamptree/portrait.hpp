#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamptree/mealy.hpp"

namespace lamptree {

// Depth-D portrait of a tree automorphism: one local permutation of the
// alphabet for every node of depth < D.  Determines the action on all words
// of length <= D.  Nodes at each level are indexed in lexicographic order of
// the word (alphabet order), i.e. base-|A| digits read left to right.
class Portrait {
public:
  Portrait(std::vector<std::string> alphabet, int depth);

  static Portrait identity(std::vector<std::string> alphabet, int depth);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  int depth() const { return depth_; }

  // Local permutation at a node, image of symbol a at that node.
  int local(int level, std::size_t node, int a) const;
  void set_local(int level, std::size_t node, const std::vector<uint8_t>& perm);
  std::vector<uint8_t> local_perm(int level, std::size_t node) const;

  // Image of a word of length <= depth.  errc::word_too_long past the depth.
  std::vector<int> apply(const std::vector<int>& word) const;

  Portrait compose(const Portrait& other) const;  // this first, then other
  Portrait inverse() const;
  // Portrait of the action below node u (depth shrinks by |u|).
  Portrait cone(const std::vector<int>& u) const;
  // Binary alphabets only: conjugate by the letterwise 0/1 swap.
  Portrait mirror() const;  // errc::non_binary_alphabet

  bool is_level_identity(int n) const;  // fixes all words of length <= n; n <= depth
  bool operator==(const Portrait& o) const;

  // One line per node in length-then-lex order: "<word> <image of each
  // symbol>"; the root's empty word prints as "-".
  std::string serialize() const;

private:
  std::size_t nodes_at(int level) const { return level_offsets_[static_cast<std::size_t>(level) + 1] -
                                                 level_offsets_[static_cast<std::size_t>(level)]; }
  std::size_t node_base(int level) const { return level_offsets_[static_cast<std::size_t>(level)]; }
  std::vector<std::string> alphabet_;
  int depth_;
  std::vector<std::size_t> level_offsets_;  // cumulative node counts per level
  std::vector<uint8_t> perms_;              // flattened locals, |A| entries per node
};

// Portrait of the composite action of a state word, to the given depth.
Portrait portrait_of(const MealyMachine& m, const StateWord& w, int depth);

// Distance information readable from two portraits of common depth D:
// either the first level whose locals differ (distance exactly 2^-(level+1)),
// or agreement everywhere, which only certifies distance <= 2^-D.
struct PortraitDistance {
  bool determinate = false;
  int level = 0;  // differing level when determinate, otherwise D
  double value() const;
  std::string to_string() const;
};

PortraitDistance depth_distance(const Portrait& a, const Portrait& b);

}  // namespace lamptree

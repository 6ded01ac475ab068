#pragma once

// Corelations X -> Y: partitions of the disjoint union X + Y. Index k < |X|
// names input k; index |X| + k names output k.

#include <cstddef>
#include <string>
#include <vector>

namespace cbox {

class Corelation {
 public:
  using Block = std::vector<std::size_t>;

  Corelation() = default;
  /// Canonicalizes the blocks; throws InvalidPartition unless they are
  /// nonempty, disjoint and cover 0..left+right-1.
  Corelation(std::size_t left, std::size_t right, std::vector<Block> blocks);

  std::size_t left_size() const noexcept { return left_; }
  std::size_t right_size() const noexcept { return right_; }
  /// Sorted members per block, blocks ordered by least member.
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// block_of()[k] is the index of the block containing element k.
  std::vector<std::size_t> block_of() const;

  friend bool operator==(const Corelation&, const Corelation&) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::vector<Block> blocks_;
};

/// The corelation of the cospan X -i-> N <-o- Y: elements with equal image
/// share a block; apex points outside the joint image are forgotten.
Corelation corel_from_cospan(const std::vector<std::size_t>& in, const std::vector<std::size_t>& out);

/// The corelation of a function f: X -> Y, seen as the cospan X -f-> Y <-id- Y.
Corelation corel_from_function(const std::vector<std::size_t>& f, std::size_t codomain_size);

Corelation identity_corelation(std::size_t n);
/// b ∘ a. Throws SizeMismatch when a's right side differs from b's left.
Corelation compose_corelations(const Corelation& a, const Corelation& b);
Corelation tensor_corelations(const Corelation& a, const Corelation& b);
Corelation dagger_corelation(const Corelation& a);

/// X + X -> ∅, pairing element k with element n + k.
Corelation cap_corelation(std::size_t n);
/// ∅ -> X + X, the dagger of the cap.
Corelation cup_corelation(std::size_t n);

/// `corel 3 -> 2 : {x0 x1 y0} {x2} {y1}`
std::string to_string(const Corelation& a);

}  // namespace cbox

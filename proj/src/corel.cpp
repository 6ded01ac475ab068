#include "cbox/corel.hpp"

#include <algorithm>
#include <map>

#include "cbox/errors.hpp"
#include "cbox/union_find.hpp"

namespace cbox {

Corelation::Corelation(std::size_t left, std::size_t right, std::vector<Block> blocks)
    : left_(left), right_(right), blocks_(std::move(blocks)) {
  const std::size_t total = left_ + right_;
  std::vector<bool> seen(total, false);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidPartition("corelation blocks must be nonempty");
    std::sort(b.begin(), b.end());
    for (auto k : b) {
      if (k >= total) throw InvalidPartition("block member out of range");
      if (seen[k]) throw InvalidPartition("blocks must be disjoint");
      seen[k] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidPartition("blocks must cover X + Y");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

std::vector<std::size_t> Corelation::block_of() const {
  std::vector<std::size_t> out(left_ + right_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (auto k : blocks_[b]) out[k] = b;
  }
  return out;
}

Corelation corel_from_cospan(const std::vector<std::size_t>& in, const std::vector<std::size_t>& out) {
  std::map<std::size_t, Corelation::Block> by_image;
  for (std::size_t k = 0; k < in.size(); ++k) by_image[in[k]].push_back(k);
  for (std::size_t k = 0; k < out.size(); ++k) by_image[out[k]].push_back(in.size() + k);
  std::vector<Corelation::Block> blocks;
  for (auto& [node, block] : by_image) blocks.push_back(std::move(block));
  return Corelation(in.size(), out.size(), std::move(blocks));
}

Corelation corel_from_function(const std::vector<std::size_t>& f, std::size_t codomain_size) {
  std::vector<std::size_t> id(codomain_size);
  for (std::size_t k = 0; k < codomain_size; ++k) id[k] = k;
  for (auto v : f) {
    if (v >= codomain_size) throw SizeMismatch("function value outside its codomain");
  }
  return corel_from_cospan(f, id);
}

Corelation identity_corelation(std::size_t n) {
  std::vector<Corelation::Block> blocks;
  for (std::size_t k = 0; k < n; ++k) blocks.push_back({k, n + k});
  return Corelation(n, n, std::move(blocks));
}

Corelation compose_corelations(const Corelation& a, const Corelation& b) {
  if (a.right_size() != b.left_size()) {
    throw SizeMismatch("cannot compose corelations: " + std::to_string(a.right_size()) +
                       " outputs vs " + std::to_string(b.left_size()) + " inputs");
  }
  const std::size_t nx = a.left_size(), ny = a.right_size(), nz = b.right_size();
  // Indices: X at 0, Y at nx, Z at nx + ny; b's own indices shift by nx.
  UnionFind uf(nx + ny + nz);
  for (const auto& block : a.blocks()) {
    for (auto k : block) uf.unite(block.front(), k);
  }
  for (const auto& block : b.blocks()) {
    for (auto k : block) uf.unite(nx + block.front(), nx + k);
  }
  std::map<std::size_t, Corelation::Block> by_root;
  for (std::size_t k = 0; k < nx; ++k) by_root[uf.find(k)].push_back(k);
  for (std::size_t k = 0; k < nz; ++k) by_root[uf.find(nx + ny + k)].push_back(nx + k);
  std::vector<Corelation::Block> blocks;
  for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
  return Corelation(nx, nz, std::move(blocks));
}

Corelation tensor_corelations(const Corelation& a, const Corelation& b) {
  const std::size_t ax = a.left_size(), ay = a.right_size();
  const std::size_t bx = b.left_size();
  // X = X_a + X_b and Y = Y_a + Y_b.
  auto shift_a = [&](std::size_t k) { return k < ax ? k : k + bx; };
  auto shift_b = [&](std::size_t k) { return k < bx ? ax + k : ax + bx + ay + (k - bx); };
  std::vector<Corelation::Block> blocks;
  for (const auto& block : a.blocks()) {
    Corelation::Block nb;
    for (auto k : block) nb.push_back(shift_a(k));
    blocks.push_back(std::move(nb));
  }
  for (const auto& block : b.blocks()) {
    Corelation::Block nb;
    for (auto k : block) nb.push_back(shift_b(k));
    blocks.push_back(std::move(nb));
  }
  return Corelation(ax + bx, ay + b.right_size(), std::move(blocks));
}

Corelation dagger_corelation(const Corelation& a) {
  const std::size_t nx = a.left_size(), ny = a.right_size();
  std::vector<Corelation::Block> blocks;
  for (const auto& block : a.blocks()) {
    Corelation::Block nb;
    for (auto k : block) nb.push_back(k < nx ? ny + k : k - nx);
    blocks.push_back(std::move(nb));
  }
  return Corelation(ny, nx, std::move(blocks));
}

Corelation cap_corelation(std::size_t n) {
  std::vector<Corelation::Block> blocks;
  for (std::size_t k = 0; k < n; ++k) blocks.push_back({k, n + k});
  return Corelation(2 * n, 0, std::move(blocks));
}

Corelation cup_corelation(std::size_t n) { return dagger_corelation(cap_corelation(n)); }

std::string to_string(const Corelation& a) {
  std::string out = "corel " + std::to_string(a.left_size()) + " -> " + std::to_string(a.right_size()) + " :";
  for (const auto& block : a.blocks()) {
    out += " {";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j) out += " ";
      const auto k = block[j];
      out += k < a.left_size() ? "x" + std::to_string(k) : "y" + std::to_string(k - a.left_size());
    }
    out += "}";
  }
  return out;
}

}  // namespace cbox

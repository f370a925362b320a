#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prunesched/common.hpp"

namespace prunesched {

// Mixed-radix packing of a DP state vector into one 64-bit key.
// coords[i] lies in [0, extent[i]); key = sum coords[i] * stride[i].
class StateGeometry {
 public:
  static StateGeometry from_extents(std::vector<std::int64_t> extents) {
    StateGeometry geometry;
    geometry.extents_ = std::move(extents);
    geometry.strides_.resize(geometry.extents_.size());
    __int128 cells = 1;
    for (std::size_t i = 0; i < geometry.extents_.size(); ++i) {
      if (geometry.extents_[i] < 1) throw InternalError("state extent must be positive");
      geometry.strides_[i] = static_cast<std::uint64_t>(cells);
      cells *= geometry.extents_[i];
      if (cells > (__int128(1) << 62))
        throw ValidationError("DP state space exceeds the 64-bit key range");
    }
    geometry.cells_ = static_cast<std::uint64_t>(cells);
    return geometry;
  }

  int dims() const { return static_cast<int>(extents_.size()); }
  std::uint64_t cells() const { return cells_; }
  std::int64_t extent(int i) const { return extents_[static_cast<std::size_t>(i)]; }
  std::uint64_t stride(int i) const { return strides_[static_cast<std::size_t>(i)]; }

  std::uint64_t pack(const std::int64_t* coords) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < extents_.size(); ++i)
      key += static_cast<std::uint64_t>(coords[i]) * strides_[i];
    return key;
  }

  void unpack(std::uint64_t key, std::int64_t* coords) const {
    for (std::size_t i = 0; i < extents_.size(); ++i) {
      coords[i] = static_cast<std::int64_t>(key % static_cast<std::uint64_t>(extents_[i]));
      key /= static_cast<std::uint64_t>(extents_[i]);
    }
  }

 private:
  std::vector<std::int64_t> extents_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t cells_ = 1;
};

// One DP layer: a sparse associative table from packed state keys to the
// best (value, choice) pair seen so far. Merging keeps the minimum value,
// breaking ties by the smaller choice (machines in index order, discard
// last), so the result is independent of insertion order.
//
// Two backings with identical semantics: a direct-address array with epoch
// stamps plus an occupied list for small state boxes, and a hash map
// otherwise. Only reachable states are ever stored, iterated, or counted.
class LayerMap {
 public:
  enum class Backend { Dense, Hash };

  // Direct addressing is worth two ~50 MB arrays at most.
  static constexpr std::uint64_t kDenseCellLimit = 3u << 20;

  static Backend pick_backend(std::uint64_t cells) {
    return cells <= kDenseCellLimit ? Backend::Dense : Backend::Hash;
  }

  LayerMap(std::uint64_t cells, Backend backend) : backend_(backend) {
    if (backend_ == Backend::Dense) {
      values_.resize(cells);
      choices_.resize(cells);
      stamps_.assign(cells, 0);
    }
  }

  void reset() {
    if (backend_ == Backend::Dense) {
      ++epoch_;
      occupied_.clear();
      if (epoch_ == 0) {  // stamp wrap-around: invalidate everything
        std::fill(stamps_.begin(), stamps_.end(), 0);
        epoch_ = 1;
      }
    } else {
      map_.clear();
    }
  }

  void merge(std::uint64_t key, Value value, std::uint8_t choice) {
    if (backend_ == Backend::Dense) {
      if (stamps_[key] != epoch_) {
        stamps_[key] = epoch_;
        values_[key] = value;
        choices_[key] = choice;
        occupied_.push_back(key);
      } else if (value < values_[key] || (value == values_[key] && choice < choices_[key])) {
        values_[key] = value;
        choices_[key] = choice;
      }
    } else {
      auto [it, inserted] = map_.try_emplace(key, Entry{value, choice});
      if (!inserted &&
          (value < it->second.value ||
           (value == it->second.value && choice < it->second.choice))) {
        it->second = Entry{value, choice};
      }
    }
  }

  std::size_t size() const {
    return backend_ == Backend::Dense ? occupied_.size() : map_.size();
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (backend_ == Backend::Dense) {
      for (const std::uint64_t key : occupied_) fn(key, values_[key], choices_[key]);
    } else {
      for (const auto& [key, entry] : map_) fn(key, entry.value, entry.choice);
    }
  }

  // Per-layer parent links for schedule reconstruction, sorted by key.
  std::vector<std::pair<std::uint64_t, std::uint8_t>> sorted_choices() const {
    std::vector<std::pair<std::uint64_t, std::uint8_t>> out;
    out.reserve(size());
    for_each([&out](std::uint64_t key, Value, std::uint8_t choice) {
      out.emplace_back(key, choice);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Entry {
    Value value;
    std::uint8_t choice;
  };

  struct KeyHash {
    std::size_t operator()(std::uint64_t x) const {
      x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
      x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
      return static_cast<std::size_t>(x ^ (x >> 31));
    }
  };

  Backend backend_;
  std::vector<Value> values_;
  std::vector<std::uint8_t> choices_;
  std::vector<std::uint32_t> stamps_;
  std::vector<std::uint64_t> occupied_;
  std::uint32_t epoch_ = 1;
  std::unordered_map<std::uint64_t, Entry, KeyHash> map_;
};

}  // namespace prunesched

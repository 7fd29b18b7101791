#include "qindlab/schemes/permutation.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qindlab/common/error.hpp"

namespace qindlab::schemes {

namespace {

constexpr int kTableBits = 16;
constexpr std::size_t kTableCacheSize = 64;

void check_block_bits(int block_bits) {
  if (block_bits < 1 || block_bits > kMaxWordBits) {
    throw InvalidArgument("block width " + std::to_string(block_bits) + " out of range");
  }
}

struct Tables {
  std::vector<Word> forward;
  std::vector<Word> inverse;
};

class IdealFamily final : public PermutationFamily {
 public:
  explicit IdealFamily(int block_bits) : block_bits_(block_bits) { check_block_bits(block_bits); }

  std::string name() const override { return "ideal"; }
  int block_bits() const override { return block_bits_; }
  Key gen(Rng& rng) const override { return rng.next(); }

  Word forward(Key key, Word block) const override {
    check(block);
    if (block_bits_ <= kTableBits) return tables(key)->forward[block];
    return lazy(key, block, true);
  }

  Word inverse(Key key, Word block) const override {
    check(block);
    if (block_bits_ <= kTableBits) return tables(key)->inverse[block];
    return lazy(key, block, false);
  }

 private:
  struct LazyState {
    explicit LazyState(Key key) : rng(derive_seed(key, 0x1a2b)) {}
    Rng rng;
    std::unordered_map<Word, Word> forward;
    std::unordered_map<Word, Word> inverse;
  };

  void check(Word block) const {
    if (block > low_mask(block_bits_)) throw InvalidArgument("block wider than permutation domain");
  }

  std::shared_ptr<const Tables> tables(Key key) const {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    auto t = std::make_shared<Tables>();
    const Word dim = dimension_of(block_bits_);
    t->forward.resize(dim);
    std::iota(t->forward.begin(), t->forward.end(), Word{0});
    Rng rng(derive_seed(key, static_cast<std::uint64_t>(block_bits_)));
    for (Word i = dim - 1; i > 0; --i) std::swap(t->forward[i], t->forward[rng.below(i + 1)]);
    t->inverse.resize(dim);
    for (Word i = 0; i < dim; ++i) t->inverse[t->forward[i]] = i;
    if (order_.size() >= kTableCacheSize) {
      cache_.erase(order_.front());
      order_.pop_front();
    }
    order_.push_back(key);
    cache_.emplace(key, t);
    return t;
  }

  Word lazy(Key key, Word block, bool forward_direction) const {
    std::lock_guard lock(mutex_);
    auto& state = lazy_.try_emplace(key, key).first->second;
    auto& known = forward_direction ? state.forward : state.inverse;
    auto& other = forward_direction ? state.inverse : state.forward;
    if (auto it = known.find(block); it != known.end()) return it->second;
    Word image = 0;
    do {
      image = state.rng.bits(block_bits_);
    } while (other.count(image) != 0);
    known.emplace(block, image);
    other.emplace(image, block);
    return image;
  }

  int block_bits_;
  mutable std::mutex mutex_;
  mutable std::map<Key, std::shared_ptr<const Tables>> cache_;
  mutable std::deque<Key> order_;
  mutable std::map<Key, LazyState> lazy_;
};

Word default_round(Key key, int round, Word half) {
  return splitmix64(splitmix64(key ^ (static_cast<Word>(round) << 32)) ^ half);
}

class FeistelFamily final : public PermutationFamily {
 public:
  FeistelFamily(int block_bits, int rounds, RoundFunction f)
      : block_bits_(block_bits), half_(block_bits / 2), rounds_(rounds), f_(std::move(f)) {
    check_block_bits(block_bits);
    if (block_bits % 2 != 0) throw InvalidArgument("Feistel block width must be even");
    if (rounds < 4) throw InvalidArgument("Feistel network needs at least 4 rounds");
  }

  std::string name() const override { return "feistel"; }
  int block_bits() const override { return block_bits_; }
  Key gen(Rng& rng) const override { return rng.bits(16); }

  Word forward(Key key, Word block) const override {
    Word l = block >> half_;
    Word r = block & low_mask(half_);
    for (int i = 0; i < rounds_; ++i) {
      const Word next = l ^ (f_(key, i, r) & low_mask(half_));
      l = r;
      r = next;
    }
    return concat(l, r, half_);
  }

  Word inverse(Key key, Word block) const override {
    Word l = block >> half_;
    Word r = block & low_mask(half_);
    for (int i = rounds_ - 1; i >= 0; --i) {
      const Word prev = r ^ (f_(key, i, l) & low_mask(half_));
      r = l;
      l = prev;
    }
    return concat(l, r, half_);
  }

 private:
  int block_bits_;
  int half_;
  int rounds_;
  RoundFunction f_;
};

class IdentityFamily final : public PermutationFamily {
 public:
  explicit IdentityFamily(int block_bits) : block_bits_(block_bits) { check_block_bits(block_bits); }

  std::string name() const override { return "identity"; }
  int block_bits() const override { return block_bits_; }
  Key gen(Rng&) const override { return 0; }
  Word forward(Key, Word block) const override { return block; }
  Word inverse(Key, Word block) const override { return block; }

 private:
  int block_bits_;
};

}  // namespace

FamilyPtr ideal_prp_family(int block_bits) { return std::make_shared<IdealFamily>(block_bits); }

FamilyPtr feistel_prp_family(int block_bits, int rounds) {
  return feistel_prp_family(block_bits, rounds, default_round);
}

FamilyPtr feistel_prp_family(int block_bits, int rounds, RoundFunction round_function) {
  return std::make_shared<FeistelFamily>(block_bits, rounds, std::move(round_function));
}

FamilyPtr identity_family(int block_bits) { return std::make_shared<IdentityFamily>(block_bits); }

}  // namespace qindlab::schemes

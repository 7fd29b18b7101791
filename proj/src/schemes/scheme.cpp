#include "qindlab/schemes/scheme.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qindlab/common/error.hpp"

namespace qindlab::schemes {

namespace {

void check_width(int bits, const char* what, int min_bits = 1) {
  if (bits < min_bits || bits > kMaxWordBits) {
    throw InvalidArgument(std::string(what) + " width " + std::to_string(bits) + " out of range");
  }
}

class PrfScheme final : public ClassicalScheme {
 public:
  PrfScheme(int m, int tau, Prf prf, int pad) : m_(m), tau_(tau), pad_(pad), prf_(std::move(prf)) {
    check_width(m, "message");
    check_width(tau, "randomness");
    if (pad < 0) throw InvalidArgument("negative core padding");
    check_width(tau + m + pad, "ciphertext");
    if (prf_.input_bits != tau || prf_.output_bits != m) {
      throw InvalidArgument("PRF must map tau bits to m bits");
    }
  }

  std::string name() const override { return pad_ == 0 ? "prf" : "prf-padded"; }
  int message_bits() const override { return m_; }
  int randomness_bits() const override { return tau_; }
  int ciphertext_bits() const override { return tau_ + m_ + pad_; }

  Key gen(Rng& rng) const override { return rng.bits(prf_.key_bits); }

  Word enc(Key key, Word r, Word x) const override {
    return concat(r & low_mask(tau_), core(key, r, x), m_ + pad_);
  }

  Word dec(Key key, Word y) const override {
    const Word r = y >> (m_ + pad_);
    return core_inverse(key, r, y & low_mask(m_ + pad_));
  }

  bool has_core() const override { return true; }
  int core_bits() const override { return m_ + pad_; }

  Word core(Key key, Word r, Word x) const override {
    return ((prf_.eval(key, r & low_mask(tau_)) ^ x) & low_mask(m_)) << pad_;
  }

  Word core_inverse(Key key, Word r, Word z) const override {
    return ((z >> pad_) ^ prf_.eval(key, r & low_mask(tau_))) & low_mask(m_);
  }

  bool has_type2_completion() const override { return true; }

  // (x, a_r || a_p) -> (a_r xor r) || (F(a_r xor r) xor x) || a_p
  Word type2_completion(Key key, Word r, Word x, Word ancilla) const override {
    const Word shifted_r = (ancilla >> pad_) ^ (r & low_mask(tau_));
    const Word body = concat(shifted_r, prf_.eval(key, shifted_r) ^ x, m_);
    return concat(body, ancilla, pad_);
  }

 private:
  int m_;
  int tau_;
  int pad_;
  Prf prf_;
};

class PrpScheme final : public ClassicalScheme {
 public:
  PrpScheme(int m, int tau, FamilyPtr family) : m_(m), tau_(tau), family_(std::move(family)) {
    check_width(m, "message");
    check_width(tau, "randomness", 0);
    if (!family_) throw InvalidArgument("missing permutation family");
    if (family_->block_bits() != m + tau) {
      throw InvalidArgument("permutation block width " + std::to_string(family_->block_bits()) +
                            " differs from m + tau = " + std::to_string(m + tau));
    }
  }

  std::string name() const override { return "prp"; }
  int message_bits() const override { return m_; }
  int randomness_bits() const override { return tau_; }
  int ciphertext_bits() const override { return m_ + tau_; }

  Key gen(Rng& rng) const override { return family_->gen(rng); }

  Word enc(Key key, Word r, Word x) const override {
    return family_->forward(key, concat(x & low_mask(m_), r, tau_));
  }

  Word dec(Key key, Word y) const override { return family_->inverse(key, y) >> tau_; }

  // Only the randomness-free instance splits as (r, f) with r empty.
  bool has_core() const override { return tau_ == 0; }
  int core_bits() const override {
    if (!has_core()) throw NoCoreDecomposition(name());
    return m_;
  }
  Word core(Key key, Word r, Word x) const override {
    if (!has_core()) throw NoCoreDecomposition(name());
    return enc(key, r, x);
  }
  Word core_inverse(Key key, Word, Word z) const override {
    if (!has_core()) throw NoCoreDecomposition(name());
    return dec(key, z);
  }

  bool has_type2_completion() const override { return true; }

  // (x, a) -> pi_k(x || (a xor r))
  Word type2_completion(Key key, Word r, Word x, Word ancilla) const override {
    return family_->forward(key, concat(x, ancilla ^ r, tau_));
  }

  const FamilyPtr& family() const { return family_; }

 private:
  int m_;
  int tau_;
  FamilyPtr family_;
};

class BlockScheme final : public ClassicalScheme {
 public:
  BlockScheme(SchemePtr base, int mu) : base_(std::move(base)), mu_(mu) {
    if (!base_) throw InvalidArgument("missing base scheme");
    if (mu < 1) throw InvalidArgument("block count must be at least 1");
    check_width(mu * base_->ciphertext_bits(), "ciphertext");
  }

  std::string name() const override { return "block"; }
  int message_bits() const override { return mu_ * base_->message_bits(); }
  int randomness_bits() const override { return mu_ * base_->randomness_bits(); }
  int ciphertext_bits() const override { return mu_ * base_->ciphertext_bits(); }
  int block_count() const override { return mu_; }

  Key gen(Rng& rng) const override { return base_->gen(rng); }

  Word enc(Key key, Word r, Word x) const override {
    const int m = base_->message_bits();
    const int tau = base_->randomness_bits();
    const int l = base_->ciphertext_bits();
    const auto blocks = split_message(x, message_bits(), m);
    Word y = 0;
    for (int i = 0; i < mu_; ++i) {
      const Word ri = tau == 0 ? 0 : (r >> (tau * (mu_ - 1 - i))) & low_mask(tau);
      y = concat(y, base_->enc(key, ri, blocks[static_cast<std::size_t>(i)]), l);
    }
    return y;
  }

  Word dec(Key key, Word y) const override {
    const int m = base_->message_bits();
    const int l = base_->ciphertext_bits();
    Word x = 0;
    for (int i = 0; i < mu_; ++i) {
      const Word yi = (y >> (l * (mu_ - 1 - i))) & low_mask(l);
      x = concat(x, base_->dec(key, yi), m);
    }
    return x;
  }

  bool has_type2_completion() const override { return base_->has_type2_completion(); }

  // Block i takes x_i from the message register and a_i from the ancilla
  // register, each with block 1 most significant.
  Word type2_completion(Key key, Word r, Word x, Word ancilla) const override {
    const int m = base_->message_bits();
    const int a = base_->ancilla_bits();
    const int tau = base_->randomness_bits();
    const int l = base_->ciphertext_bits();
    Word y = 0;
    for (int i = 0; i < mu_; ++i) {
      const int shift = mu_ - 1 - i;
      const Word xi = (x >> (m * shift)) & low_mask(m);
      const Word ai = a == 0 ? 0 : (ancilla >> (a * shift)) & low_mask(a);
      const Word ri = tau == 0 ? 0 : (r >> (tau * shift)) & low_mask(tau);
      y = concat(y, base_->type2_completion(key, ri, xi, ai), l);
    }
    return y;
  }

 private:
  SchemePtr base_;
  int mu_;
};

Word hash_prf(Key key, Word r, int output_bits) {
  return splitmix64(derive_seed(key, r)) & low_mask(output_bits);
}

}  // namespace

int ClassicalScheme::core_bits() const { throw NoCoreDecomposition(name()); }

Word ClassicalScheme::core(Key, Word, Word) const { throw NoCoreDecomposition(name()); }

Word ClassicalScheme::core_inverse(Key, Word, Word) const { throw NoCoreDecomposition(name()); }

Word ClassicalScheme::type2_completion(Key, Word, Word, Word) const {
  throw NotApplicable("scheme " + name() + " declares no type-2 completion");
}

Prf zero_prf(int input_bits, int output_bits) {
  return {"zero", input_bits, output_bits, 8, [](Key, Word) { return Word{0}; }};
}

Prf feistel_prf(int input_bits, int output_bits) {
  int width = std::max(input_bits, output_bits);
  width += width % 2;
  const auto perm = feistel_prp_family(width, 4);
  return {"feistel", input_bits, output_bits, 16,
          [perm, input_bits, output_bits, width](Key key, Word r) {
            const Word block = (r & low_mask(input_bits)) << (width - input_bits);
            return leading_bits(perm->forward(key, block), width, output_bits);
          }};
}

Prf random_function_prf(int input_bits, int output_bits) {
  return {"random", input_bits, output_bits, 16,
          [output_bits](Key key, Word r) { return hash_prf(key, r, output_bits); }};
}

SchemePtr prf_scheme(int m, int tau, Prf prf, int core_padding_bits) {
  return std::make_shared<PrfScheme>(m, tau, std::move(prf), core_padding_bits);
}

SchemePtr prp_scheme(int m, int tau, FamilyPtr family) {
  return std::make_shared<PrpScheme>(m, tau, std::move(family));
}

SchemePtr block_scheme(SchemePtr base, int mu) {
  if (base && base->name() != "prp") throw InvalidArgument("block mode wraps a prp scheme");
  return std::make_shared<BlockScheme>(std::move(base), mu);
}

CoreFunction core_function(const SchemePtr& scheme) {
  if (!scheme->has_core()) throw NoCoreDecomposition(scheme->name());
  return {scheme->core_bits(),
          [scheme](Key k, Word r, Word x) { return scheme->core(k, r, x); },
          [scheme](Key k, Word r, Word z) { return scheme->core_inverse(k, r, z); }};
}

bool is_quasi_length_preserving(const SchemePtr& scheme) {
  return core_function(scheme).bits == scheme->message_bits();
}

std::vector<Word> split_message(Word x, int total_bits, int m) {
  if (m < 1 || total_bits < m || total_bits % m != 0) {
    throw InvalidArgument("message length " + std::to_string(total_bits) +
                          " is not a multiple of the block size " + std::to_string(m));
  }
  const int count = total_bits / m;
  std::vector<Word> blocks(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    blocks[static_cast<std::size_t>(i)] = (x >> (m * (count - 1 - i))) & low_mask(m);
  }
  return blocks;
}

}  // namespace qindlab::schemes

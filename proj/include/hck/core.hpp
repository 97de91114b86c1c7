#pragma once

// Core utilities shared by every hck module: error taxonomy and a small
// dynamic bitset used for point sets of finite spaces.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hck {

// Error classes map onto distinct CLI exit codes (input 4, validation 2,
// certificate 3).
enum class errc { input, validation, certificate, internal };

class Error : public std::runtime_error {
public:
  Error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, errc kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

// Dynamic bitset over a fixed universe size. Finite spaces are small, but
// user-supplied ones need not fit in one machine word.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  Bitset operator-(const Bitset& o) const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // Members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }
  int first() const {
    for (int i = 0; i < n_; ++i)
      if (test(i)) return i;
    return -1;
  }

  static Bitset full(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace hck

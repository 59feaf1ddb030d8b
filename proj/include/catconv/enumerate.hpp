#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "catconv/path.hpp"

namespace catconv {

struct EnumerationCaps {
  std::size_t max_length = 24;     // free enumeration, 2^L paths
  std::size_t max_parameter = 12;  // balanced and Dyck enumeration
};

/// Single-pass input range over a generator exposing `std::optional<T> next()`.
/// Not copyable across consumers: partition work by index, not by sharing a stream.
template <typename Generator>
class Stream {
 public:
  using value_type = typename Generator::value_type;

  explicit Stream(Generator gen) : gen_(std::move(gen)) {}

  std::optional<value_type> next() { return gen_.next(); }

  class iterator {
   public:
    using value_type = Stream::value_type;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Stream* s) : s_(s) { ++*this; }

    const value_type& operator*() const { return *s_->current_; }
    const value_type* operator->() const { return &*s_->current_; }
    iterator& operator++() {
      s_->current_ = s_->gen_.next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.exhausted(); }

   private:
    bool exhausted() const { return !s_->current_; }

    Stream* s_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  Generator gen_;
  std::optional<value_type> current_;
};

namespace detail {

class FreePathGenerator {
 public:
  using value_type = Path;
  explicit FreePathGenerator(std::size_t length) : length_(length), end_(std::uint64_t{1} << length) {}
  std::optional<Path> next();

 private:
  std::size_t length_;
  std::uint64_t next_ = 0;
  std::uint64_t end_;
};

class BalancedGenerator {
 public:
  using value_type = BalancedPath;
  explicit BalancedGenerator(std::size_t n);
  std::optional<BalancedPath> next();

 private:
  std::vector<Step> steps_;
  bool done_ = false;
};

class DyckGenerator {
 public:
  using value_type = DyckPath;
  explicit DyckGenerator(std::size_t n);
  std::optional<DyckPath> next();

 private:
  bool advance();

  std::size_t n_;
  std::vector<Step> steps_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace detail

using PathStream = Stream<detail::FreePathGenerator>;
using BalancedStream = Stream<detail::BalancedGenerator>;
using DyckStream = Stream<detail::DyckGenerator>;

/// All 2^length paths, lexicographic with U < D. Throws CapExceeded.
PathStream enumerate_paths(std::size_t length, const EnumerationCaps& caps = {});
/// All binom(2n, n) balanced n-paths in lexicographic order, generated directly.
BalancedStream enumerate_balanced(std::size_t n, const EnumerationCaps& caps = {});
/// All C_n Dyck n-paths in lexicographic order, generated via the prefix condition.
DyckStream enumerate_dyck(std::size_t n, const EnumerationCaps& caps = {});

template <typename S>
std::vector<typename S::value_type> collect(S&& stream) {
  std::vector<typename S::value_type> out;
  for (auto&& v : stream) out.push_back(v);
  return out;
}

}  // namespace catconv

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bisetkit {

/** Subset of the element indices 0..n-1 of a group. */
class ElementSet
{
public:
  ElementSet() = default;

  explicit ElementSet(std::size_t n)
  : _n(n), _words((n + 63) / 64, 0)
  {}

  std::size_t universe() const { return _n; }

  void insert(int i) { _words[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void erase(int i) { _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  bool contains(int i) const
  { return (_words[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : _words)
      c += std::popcount(w);
    return c;
  }

  bool is_subset_of(ElementSet const &o) const
  {
    for (std::size_t i = 0; i < _words.size(); ++i)
      if (_words[i] & ~o._words[i])
        return false;
    return true;
  }

  ElementSet operator&(ElementSet const &o) const
  {
    ElementSet r(_n);
    for (std::size_t i = 0; i < _words.size(); ++i)
      r._words[i] = _words[i] & o._words[i];
    return r;
  }

  ElementSet operator|(ElementSet const &o) const
  {
    ElementSet r(_n);
    for (std::size_t i = 0; i < _words.size(); ++i)
      r._words[i] = _words[i] | o._words[i];
    return r;
  }

  std::vector<int> elements() const
  {
    std::vector<int> res;
    for (std::size_t w = 0; w < _words.size(); ++w) {
      auto bits = _words[w];
      while (bits) {
        int b = std::countr_zero(bits);
        res.push_back(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return res;
  }

  bool operator==(ElementSet const &o) const
  { return _n == o._n && _words == o._words; }

  bool operator!=(ElementSet const &o) const
  { return !(*this == o); }

  std::size_t hash() const
  {
    std::size_t h = _n;
    for (auto w : _words)
      h = h * 0x9e3779b97f4a7c15ULL + w + (h >> 17);
    return h;
  }

private:
  std::size_t _n = 0;
  std::vector<std::uint64_t> _words;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

} // namespace bisetkit

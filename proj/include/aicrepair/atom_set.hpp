#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace aicrepair {

struct Atom {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(Atom, Atom) = default;
};

// Set of atom ids as a bitset. Trailing zero words are never stored, so
// equality is plain word comparison whatever universe the sets came from.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms) {
    for (Atom a : atoms) insert(a);
  }

  // {0, ..., n-1}
  static AtomSet first(std::size_t n);
  // Atoms whose bit is set in mask, mask bit i <-> atoms[i].
  static AtomSet from_mask(std::uint64_t mask, const std::vector<Atom>& atoms);

  bool contains(Atom a) const {
    std::size_t w = a.id / 64;
    return w < words_.size() && ((words_[w] >> (a.id % 64)) & 1u);
  }
  void insert(Atom a);
  void erase(Atom a);

  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  bool intersects(const AtomSet& o) const;
  bool is_subset_of(const AtomSet& o) const;

  AtomSet& operator|=(const AtomSet& o);
  AtomSet& operator&=(const AtomSet& o);
  AtomSet& operator-=(const AtomSet& o);
  AtomSet& operator^=(const AtomSet& o);

  friend AtomSet operator|(AtomSet a, const AtomSet& b) { return a |= b; }
  friend AtomSet operator&(AtomSet a, const AtomSet& b) { return a &= b; }
  friend AtomSet operator-(AtomSet a, const AtomSet& b) { return a -= b; }
  friend AtomSet operator^(AtomSet a, const AtomSet& b) { return a ^= b; }
  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.words_ == b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(Atom{static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits))});
      }
    }
  }
  std::vector<Atom> atoms() const;

 private:
  void trim();
  boost::container::small_vector<std::uint64_t, 2> words_;
};

// Lexicographic comparison of the ascending element sequences.
bool lex_less(const AtomSet& a, const AtomSet& b);

}  // namespace aicrepair

#include "aicrepair/atom_set.hpp"

#include <algorithm>

namespace aicrepair {

AtomSet AtomSet::first(std::size_t n) {
  AtomSet s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

AtomSet AtomSet::from_mask(std::uint64_t mask, const std::vector<Atom>& atoms) {
  AtomSet s;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) s.insert(atoms[i]);
  return s;
}

void AtomSet::insert(Atom a) {
  std::size_t w = a.id / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (a.id % 64);
}

void AtomSet::erase(Atom a) {
  std::size_t w = a.id / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (a.id % 64));
  trim();
}

std::size_t AtomSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool AtomSet::intersects(const AtomSet& o) const {
  std::size_t n = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool AtomSet::is_subset_of(const AtomSet& o) const {
  if (words_.size() > o.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

AtomSet& AtomSet::operator|=(const AtomSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& o) {
  if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  trim();
  return *this;
}

AtomSet& AtomSet::operator-=(const AtomSet& o) {
  std::size_t n = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
  trim();
  return *this;
}

AtomSet& AtomSet::operator^=(const AtomSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

std::vector<Atom> AtomSet::atoms() const {
  std::vector<Atom> out;
  for_each([&](Atom a) { out.push_back(a); });
  return out;
}

void AtomSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool lex_less(const AtomSet& a, const AtomSet& b) {
  auto x = a.atoms();
  auto y = b.atoms();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace aicrepair

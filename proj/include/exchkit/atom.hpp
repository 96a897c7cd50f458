#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exchkit {

/// A point of a finite state space, identified by its index in an Alphabet.
/// The ordering of atoms is the alphabet ordering, which makes tuple
/// enumeration and report output canonical.
struct Atom {
  std::uint32_t id = 0;
  auto operator<=>(const Atom&) const = default;
};

using Tuple = std::vector<Atom>;

/// Finite ordered set of distinct symbols. Atom ids index into it.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(Atom a) const;
  std::optional<Atom> find(std::string_view symbol) const;
  Atom at(std::string_view symbol) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> symbols_;
};

/// All length-k tuples over atoms {0..alphabet_size-1}, lexicographic.
std::vector<Tuple> all_tuples(std::size_t alphabet_size, std::size_t k);

} // namespace exchkit

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hopoly {

/// Element of the weight lattice P in fundamental-weight coordinates:
/// coords[i] = (alpha_{i+1}^vee, lambda).
struct Weight {
  std::vector<long> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  explicit Weight(std::vector<long> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<long> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  long operator[](std::size_t i) const { return coords[i]; }
  long& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const;
  bool is_dominant() const;

  /// this += factor * other
  Weight& add_scaled(const Weight& other, long factor);
  Weight& operator+=(const Weight& other) { return add_scaled(other, 1); }
  Weight& operator-=(const Weight& other) { return add_scaled(other, -1); }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

/// Comma-separated coordinates without spaces, e.g. "1,0,-2".
std::string to_string(const Weight& w);

/// Inverse of to_string. Throws ParseError.
Weight parse_weight(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace hopoly

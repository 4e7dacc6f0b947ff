#include "hopoly/weight.hpp"

#include <algorithm>
#include <charconv>

#include "hopoly/error.hpp"

namespace hopoly {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

Weight& Weight::add_scaled(const Weight& other, long factor) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += factor * other.coords[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::string to_string(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  if (text.empty()) throw ParseError("empty weight");
  Weight w;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    long value = 0;
    const char* begin = item.data();
    const char* end = item.data() + item.size();
    if (!item.empty() && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (item.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("bad weight coordinate '" + std::string(item) + "' in '" + std::string(text) + "'");
    }
    w.coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << to_string(w) << ')'; }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.size();
  for (long c : w.coords) {
    h ^= std::hash<long>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace hopoly

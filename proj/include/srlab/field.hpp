#pragma once

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>

namespace srlab {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field{0}; }

  static Field prime(std::uint32_t p) {
    if (p < 2 || p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
    }
    return Field{p};
  }

  /// Accepts "Q", "GF(p)" or a bare prime "p".
  static Field parse(const std::string& text) {
    if (text == "Q" || text == "QQ") return rationals();
    static const std::regex gf(R"(GF\((\d+)\)|(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, gf)) {
      const std::string digits = m[1].matched ? m[1].str() : m[2].str();
      if (digits.size() > 10) throw std::invalid_argument("field characteristic too large: " + text);
      return prime(static_cast<std::uint32_t>(std::stoull(digits)));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected Q or GF(p))");
  }

  bool is_rational() const { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  std::string tag() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}

  static bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

}  // namespace srlab

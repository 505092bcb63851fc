#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codemark {

/// The binary message w = (w_1, ..., w_n). Always at least one bit long.
class WatermarkBits {
 public:
  explicit WatermarkBits(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  static WatermarkBits parse(std::string_view text);
  static WatermarkBits zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t k) const { return bits_[k] != 0; }
  const std::vector<std::uint8_t>& values() const { return bits_; }

  /// "1001"
  std::string str() const;
  /// "(1, 0, 0, 1)"
  std::string tuple() const;

  bool operator==(const WatermarkBits&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace codemark

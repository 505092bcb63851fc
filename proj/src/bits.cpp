#include "codemark/bits.hpp"

#include <string>

#include "codemark/errors.hpp"

namespace codemark {

WatermarkBits::WatermarkBits(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgument("watermark must have at least one bit");
  for (auto& b : bits_) b = b ? 1 : 0;
}

WatermarkBits WatermarkBits::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("watermark bits must be '0' or '1', got '" + std::string(text) + "'");
    }
    bits.push_back(c == '1');
  }
  return WatermarkBits(std::move(bits));
}

WatermarkBits WatermarkBits::zeros(std::size_t n) {
  return WatermarkBits(std::vector<std::uint8_t>(n, 0));
}

std::string WatermarkBits::str() const {
  std::string out;
  for (auto b : bits_) out += b ? '1' : '0';
  return out;
}

std::string WatermarkBits::tuple() const {
  std::string out = "(";
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (k) out += ", ";
    out += bits_[k] ? '1' : '0';
  }
  return out + ")";
}

}  // namespace codemark

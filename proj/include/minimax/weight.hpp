#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace minimax {

namespace detail {
// Counts Weight comparisons; min/max over Weights reduce to one compare each.
inline thread_local std::uint64_t weight_ops = 0;
}  // namespace detail

inline std::uint64_t weight_op_count() { return detail::weight_ops; }
inline void reset_weight_op_count() { detail::weight_ops = 0; }

// Totally ordered value domain: BOTTOM < any finite decimal < TOP.
// Finite values are exact decimals (mantissa * 10^-exponent); the algebra is
// (min,max) and never creates new values, so exact comparison is sound.
class Weight {
 public:
  Weight() : kind_(Kind::Bottom), mant_(0), exp_(0) {}

  static Weight bottom() { return Weight(); }
  static Weight top() {
    Weight w;
    w.kind_ = Kind::Top;
    return w;
  }
  static Weight finite(std::int64_t mantissa, int exponent = 0) {
    if (exponent < 0 || exponent > kMaxExponent)
      throw std::invalid_argument("weight exponent out of range");
    Weight w;
    w.kind_ = Kind::Finite;
    w.mant_ = mantissa;
    w.exp_ = exponent;
    w.canonicalize();
    return w;
  }

  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  // -1 / 0 / +1; every call counts as one min/max-equivalent operation.
  int compare(const Weight& o) const {
    ++detail::weight_ops;
    if (kind_ != o.kind_) return kind_ < o.kind_ ? -1 : 1;
    if (kind_ != Kind::Finite) return 0;
    __int128 a = mant_;
    __int128 b = o.mant_;
    if (exp_ < o.exp_)
      a *= pow10(o.exp_ - exp_);
    else if (o.exp_ < exp_)
      b *= pow10(exp_ - o.exp_);
    if (a < b) return -1;
    return a > b ? 1 : 0;
  }

  bool operator==(const Weight& o) const { return compare(o) == 0; }
  bool operator!=(const Weight& o) const { return compare(o) != 0; }
  bool operator<(const Weight& o) const { return compare(o) < 0; }
  bool operator<=(const Weight& o) const { return compare(o) <= 0; }
  bool operator>(const Weight& o) const { return compare(o) > 0; }
  bool operator>=(const Weight& o) const { return compare(o) >= 0; }

  static const Weight& min_of(const Weight& a, const Weight& b) {
    return b.compare(a) < 0 ? b : a;
  }
  static const Weight& max_of(const Weight& a, const Weight& b) {
    return b.compare(a) > 0 ? b : a;
  }

  // Canonical decimal text: "-inf", "+inf", or e.g. "3", "-0.25".
  std::string to_string() const {
    if (kind_ == Kind::Bottom) return "-inf";
    if (kind_ == Kind::Top) return "+inf";
    std::string digits = std::to_string(mant_ < 0 ? -mant_ : mant_);
    std::string out = mant_ < 0 ? "-" : "";
    if (exp_ == 0) {
      out += digits;
    } else {
      while (static_cast<int>(digits.size()) <= exp_) digits.insert(0, "0");
      out += digits.substr(0, digits.size() - exp_);
      out += '.';
      out += digits.substr(digits.size() - exp_);
    }
    return out;
  }

  // Accepts "-inf", "+inf", "inf", or a signed decimal with at most 18 digits.
  static std::optional<Weight> parse(std::string_view s) {
    if (s == "-inf") return bottom();
    if (s == "+inf" || s == "inf") return top();
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    std::int64_t mant = 0;
    int exponent = 0;
    int digits = 0;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c == '.') {
        if (seen_dot) return std::nullopt;
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') return std::nullopt;
      if (++digits > 18) return std::nullopt;
      mant = mant * 10 + (c - '0');
      if (seen_dot) ++exponent;
    }
    if (digits == 0) return std::nullopt;
    return finite(neg ? -mant : mant, exponent);
  }

 private:
  enum class Kind : unsigned char { Bottom, Finite, Top };
  static constexpr int kMaxExponent = 18;

  static __int128 pow10(int e) {
    __int128 r = 1;
    while (e-- > 0) r *= 10;
    return r;
  }

  void canonicalize() {
    while (exp_ > 0 && mant_ % 10 == 0) {
      mant_ /= 10;
      --exp_;
    }
    if (mant_ == 0) exp_ = 0;
  }

  Kind kind_;
  std::int64_t mant_;
  int exp_;
};

}  // namespace minimax

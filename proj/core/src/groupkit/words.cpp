#include <cctype>

#include "cremona/groupkit/group.hpp"

namespace cremona {

namespace {

using Factors = std::vector<std::pair<std::string, long>>;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Factors parse() {
    Factors f = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unbalanced ')'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError("word parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Factors sequence() {
    Factors out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return out;
      Factors f = factor();
      out.insert(out.end(), f.begin(), f.end());
    }
  }

  Factors factor() {
    Factors base;
    if (text_[pos_] == '(') {
      ++pos_;
      base = sequence();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else {
      base.emplace_back(symbol(), 1);
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      return power(base, exponent());
    }
    return base;
  }

  std::string symbol() {
    const auto lead = static_cast<unsigned char>(text_[pos_]);
    if (std::isdigit(lead) || lead == '^' || lead == '-') fail("expected a generator symbol");
    std::size_t len = 1;
    if (lead >= 0xF0) {
      len = 4;
    } else if (lead >= 0xE0) {
      len = 3;
    } else if (lead >= 0xC0) {
      len = 2;
    }
    if (pos_ + len > text_.size()) fail("truncated UTF-8 symbol");
    std::string s(text_.substr(pos_, len));
    pos_ += len;
    return s;
  }

  long exponent() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return negative ? -e : e;
  }

  static Factors power(const Factors& base, long e) {
    if (base.size() == 1) return {{base.front().first, base.front().second * e}};
    Factors out;
    if (e >= 0) {
      for (long k = 0; k < e; ++k) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    Factors inv;
    for (auto it = base.rbegin(); it != base.rend(); ++it) inv.emplace_back(it->first, -it->second);
    for (long k = 0; k < -e; ++k) out.insert(out.end(), inv.begin(), inv.end());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::pair<std::string, long>> parse_word(std::string_view word) { return WordParser(word).parse(); }

}  // namespace cremona

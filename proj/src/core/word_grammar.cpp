#include "core/word_grammar.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>

namespace sepflux {

namespace {

class Parser {
 public:
  Parser(const SurfaceSpec& base, std::string_view text) : base_(base), text_(text) {}

  MappingWord parse() {
    auto word = identity_word(base_);
    parse_term(word);
    skip_ws();
    while (!at_end()) {
      expect('*');
      parse_term(word);
      skip_ws();
    }
    return word;
  }

 private:
  [[noreturn]] void error(const std::string& expected) const {
    std::ostringstream msg;
    msg << "word parse error at column " << pos_ + 1 << ": expected " << expected;
    if (pos_ < text_.size()) {
      msg << ", found '" << text_[pos_] << "'";
    } else {
      msg << ", found end of input";
    }
    fail(Status::parse_error, msg.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      error(std::string("'") + c + "'");
    }
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string parse_id() {
    skip_ws();
    std::string id;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) {
      id += text_[pos_++];
    }
    if (id.empty()) {
      error("an identifier");
    }
    return id;
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      any = true;
    }
    if (!any) {
      pos_ = start;
      error("an integer");
    }
    return negative ? -value : value;
  }

  // An arm may be named or given as a 1-based basis index; names win.
  std::string resolve_arm(const std::string& id, std::size_t at) {
    if (base_.is_arm(id)) {
      return id;
    }
    const bool numeric = !id.empty() &&
                         std::all_of(id.begin(), id.end(), [](char c) {
                           return std::isdigit(static_cast<unsigned char>(c));
                         });
    if (numeric) {
      const auto index = std::stoll(id);
      if (index >= 1 && index <= base_.arm_count()) {
        return base_.arm_ids[static_cast<std::size_t>(index - 1)];
      }
    }
    std::ostringstream msg;
    msg << "word parse error at column " << at + 1 << ": unknown arm '" << id << "'";
    fail(Status::parse_error, msg.str());
  }

  void parse_term(MappingWord& word) {
    skip_ws();
    const char head = peek();
    std::optional<Generator> gen;
    if (head == '1') {
      ++pos_;
    } else if (head == 'S') {
      ++pos_;
      expect('(');
      skip_ws();
      const auto from_at = pos_;
      const auto from = parse_id();
      expect(',');
      skip_ws();
      const auto to_at = pos_;
      const auto to = parse_id();
      expect(')');
      const auto from_arm = resolve_arm(from, from_at);
      const auto to_arm = resolve_arm(to, to_at);
      if (from_arm == to_arm) {
        std::ostringstream msg;
        msg << "word parse error at column " << from_at + 1 << ": shift endpoints must differ";
        fail(Status::parse_error, msg.str());
      }
      gen = ShiftGen{from_arm, to_arm};
    } else if (head == 'T') {
      ++pos_;
      expect('(');
      expect('P');
      expect('=');
      expect('{');
      std::vector<std::pair<std::string, std::size_t>> arms;
      if (peek() != '}') {
        while (true) {
          skip_ws();
          arms.emplace_back(parse_id(), pos_);
          if (!accept(',')) {
            break;
          }
        }
      }
      expect('}');
      expect(';');
      expect('l');
      expect('=');
      std::vector<std::int64_t> levels;
      if (peek() != ';') {
        while (true) {
          levels.push_back(parse_int());
          if (!accept(',')) {
            break;
          }
        }
      }
      expect(';');
      expect('h');
      expect('=');
      const auto handles = parse_int();
      const auto close_at = pos_;
      expect(')');
      if (levels.size() != arms.size()) {
        std::ostringstream msg;
        msg << "word parse error at column " << close_at + 1
            << ": twist lists " << arms.size() << " arm(s) but " << levels.size()
            << " level(s)";
        fail(Status::parse_error, msg.str());
      }
      std::vector<std::pair<std::string, std::int64_t>> arm_levels;
      for (std::size_t i = 0; i < arms.size(); ++i) {
        arm_levels.emplace_back(resolve_arm(arms[i].first, arms[i].second), levels[i]);
      }
      try {
        gen = make_shadow(base_, std::move(arm_levels), handles);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "word parse error at column " << close_at + 1 << ": " << e.what();
        fail(Status::parse_error, msg.str());
      }
    } else {
      error("'S', 'T' or '1'");
    }

    std::int64_t exponent = 1;
    if (accept('^')) {
      exponent = parse_int();
    }
    if (gen && exponent != 0) {
      append_letter(word, std::move(*gen), exponent);
    }
  }

  const SurfaceSpec& base_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_generator(std::ostream& out, const Generator& gen) {
  if (const auto* shift = std::get_if<ShiftGen>(&gen)) {
    out << "S(" << shift->from_end << ',' << shift->to_end << ')';
    return;
  }
  const auto& twist = std::get<CurveShadow>(gen);
  out << "T(P={";
  for (std::size_t i = 0; i < twist.arm_side.size(); ++i) {
    if (i > 0) out << ',';
    out << twist.arm_side[i];
  }
  out << "}; l=";
  for (std::size_t i = 0; i < twist.levels.size(); ++i) {
    if (i > 0) out << ',';
    out << twist.levels[i];
  }
  out << "; h=" << twist.core_handles << ')';
}

}  // namespace

MappingWord parse_word(const SurfaceSpec& base, std::string_view text) {
  validate(base);
  return Parser(base, text).parse();
}

std::string print_word(const MappingWord& word) {
  if (word.letters.empty()) {
    return "1";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i > 0) {
      out << '*';
    }
    print_generator(out, word.letters[i].gen);
    if (word.letters[i].exponent != 1) {
      out << '^' << word.letters[i].exponent;
    }
  }
  return out.str();
}

}  // namespace sepflux

#include "vdl/js/lexer.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "vdl/js/unicode.hpp"

namespace vdl::js {

namespace {

std::string located(const std::string& what, const SourceSpan& s) {
  std::ostringstream os;
  os << s.start_line << ':' << s.start_col << ": " << what;
  return os.str();
}

constexpr std::array kKeywords = {
    "var",    "let",   "const",  "function", "if",   "else",  "while",   "do",
    "for",    "switch", "case",  "default",  "return", "break", "continue", "new",
    "typeof", "true",  "false",  "null",     "debugger",
};

// Longest spellings first so maximal munch falls out of a linear scan.
constexpr std::array<std::string_view, 33> kPuncts = {
    "===", "!==", "==", "!=", "<=", ">=", "&&", "||", "+=", "-=", "*=",
    "/=",  "%=",  "{",  "}",  "(",  ")",  "[",  "]",  ";",  ",",  ".",
    "?",   ":",   "=",  "<",  ">",  "+",  "-",  "*",  "/",  "%",  "!",
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
}
bool ident_part(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class Lexer {
 public:
  Lexer(std::string_view src, int file_id) : src_(src), file_id_(file_id) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      std::string trivia = skip_trivia();
      Token t = next();
      t.trivia = std::move(trivia);
      bool end = t.kind == TokenKind::End;
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  bool at_end() const { return pos_ >= src_.size(); }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan here() const { return {file_id_, line_, col_, line_, col_}; }

  [[noreturn]] void fail(const std::string& msg, SourceSpan at) const {
    throw LexError(msg, at);
  }

  std::string skip_trivia() {
    std::size_t begin = pos_;
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start = here();
        advance();
        advance();
        for (;;) {
          if (at_end()) fail("unterminated comment", start);
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            break;
          }
          advance();
        }
      } else {
        break;
      }
    }
    return std::string(src_.substr(begin, pos_ - begin));
  }

  Token next() {
    Token t;
    t.span = here();
    if (at_end()) {
      t.kind = TokenKind::End;
      return t;
    }
    char c = peek();
    if (ident_start(c)) {
      std::size_t begin = pos_;
      while (!at_end() && ident_part(peek())) advance();
      t.text = std::string(src_.substr(begin, pos_ - begin));
      t.kind = is_keyword(t.text) ? TokenKind::Keyword : TokenKind::Identifier;
    } else if (digit(c) || (c == '.' && digit(peek(1)))) {
      lex_number(t);
    } else if (c == '"' || c == '\'') {
      lex_string(t);
    } else {
      if ((c == '+' && peek(1) == '+') || (c == '-' && peek(1) == '-'))
        fail(std::string("unsupported operator '") + c + c + "'", t.span);
      bool matched = false;
      for (auto p : kPuncts) {
        if (src_.substr(pos_, p.size()) == p) {
          for (std::size_t i = 0; i < p.size(); ++i) advance();
          t.kind = TokenKind::Punct;
          t.text = std::string(p);
          matched = true;
          break;
        }
      }
      if (!matched) {
        std::ostringstream os;
        os << "illegal character";
        if (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f) os << " '" << c << "'";
        fail(os.str(), t.span);
      }
    }
    t.span.end_line = line_;
    t.span.end_col = col_;
    return t;
  }

  void lex_number(Token& t) {
    std::size_t begin = pos_;
    t.kind = TokenKind::Number;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance();
      advance();
      double v = 0;
      int n = 0;
      while (!at_end() && hex_value(peek()) >= 0) {
        v = v * 16 + hex_value(peek());
        advance();
        ++n;
      }
      if (n == 0) fail("malformed hex literal", t.span);
      t.number = v;
    } else {
      while (digit(peek())) advance();
      if (peek() == '.') {
        advance();
        while (digit(peek())) advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t save = pos_;
        int save_col = col_;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        if (!digit(peek())) {
          pos_ = save;
          col_ = save_col;
          fail("malformed exponent", t.span);
        }
        while (digit(peek())) advance();
      }
      std::string spelled(src_.substr(begin, pos_ - begin));
      double v = 0;
      auto res = std::from_chars(spelled.data(), spelled.data() + spelled.size(), v);
      if (res.ec != std::errc() && res.ec != std::errc::result_out_of_range)
        fail("malformed number", t.span);
      t.number = v;
    }
    if (ident_start(peek())) fail("identifier starts immediately after numeric literal", here());
    t.text = std::string(src_.substr(begin, pos_ - begin));
  }

  void lex_string(Token& t) {
    char quote = peek();
    SourceSpan start = t.span;
    advance();
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') fail("unterminated string", start);
      char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c != '\\') {
        value.push_back(c);
        advance();
        continue;
      }
      SourceSpan esc = here();
      advance();
      if (at_end()) fail("unterminated string", start);
      char e = peek();
      advance();
      switch (e) {
        case 'n': value.push_back('\n'); break;
        case 't': value.push_back('\t'); break;
        case 'r': value.push_back('\r'); break;
        case 'b': value.push_back('\b'); break;
        case 'f': value.push_back('\f'); break;
        case 'v': value.push_back('\v'); break;
        case '0':
          if (digit(peek())) fail("octal escapes are not supported", esc);
          value.push_back('\0');
          break;
        case '"':
        case '\'':
        case '\\':
          value.push_back(e);
          break;
        case 'x': {
          int h1 = hex_value(peek());
          int h2 = hex_value(peek(1));
          if (h1 < 0 || h2 < 0) fail("malformed \\x escape", esc);
          advance();
          advance();
          append_code_point(value, static_cast<char32_t>(h1 * 16 + h2));
          break;
        }
        case 'u': {
          char32_t unit = 0;
          for (int i = 0; i < 4; ++i) {
            int h = hex_value(peek());
            if (h < 0) fail("malformed \\u escape", esc);
            unit = unit * 16 + static_cast<char32_t>(h);
            advance();
          }
          append_unit(value, unit);
          break;
        }
        case '\n':
          fail("line continuation is not supported", esc);
        default:
          value.push_back(e);
          break;
      }
    }
    t.kind = TokenKind::String;
    t.text = std::move(value);
  }

  // Joins a low surrogate onto a preceding high surrogate already emitted.
  static void append_unit(std::string& value, char32_t unit) {
    if (unit >= 0xDC00 && unit <= 0xDFFF && value.size() >= 3) {
      auto b0 = static_cast<unsigned char>(value[value.size() - 3]);
      auto b1 = static_cast<unsigned char>(value[value.size() - 2]);
      auto b2 = static_cast<unsigned char>(value[value.size() - 1]);
      if (b0 == 0xED && b1 >= 0xA0 && b1 <= 0xAF) {
        char32_t hi = ((b0 & 0x0F) << 12) | ((b1 & 0x3F) << 6) | (b2 & 0x3F);
        value.resize(value.size() - 3);
        append_code_point(value, 0x10000 + ((hi - 0xD800) << 10) + (unit - 0xDC00));
        return;
      }
    }
    append_code_point(value, unit);
  }

  std::string_view src_;
  int file_id_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

SourceError::SourceError(const std::string& what, SourceSpan span)
    : std::runtime_error(located(what, span)), span_(span), message_(what) {}

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (word == k) return true;
  return false;
}

bool is_identifier_name(std::string_view word) {
  if (word.empty() || !ident_start(word[0])) return false;
  for (char c : word)
    if (!ident_part(c)) return false;
  return true;
}

std::vector<Token> tokenize(std::string_view source, int file_id) {
  return Lexer(source, file_id).run();
}

}  // namespace vdl::js

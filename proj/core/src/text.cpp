#include "msqkit/text.hpp"

#include <cctype>

namespace msqkit {

namespace {

inline bool is_space(unsigned char c) { return std::isspace(c) != 0; }

// Decodes one UTF-8 code point starting at i; advances i past it.
// Invalid sequences are consumed one byte at a time and reported as the
// byte value itself.
unsigned decode_utf8(std::string_view s, std::size_t& i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) {
    ++i;
    return c;
  }
  int extra = 0;
  unsigned cp = 0;
  if ((c & 0xE0) == 0xC0) {
    extra = 1;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    extra = 2;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    extra = 3;
    cp = c & 0x07;
  } else {
    ++i;
    return c;
  }
  if (i + static_cast<std::size_t>(extra) >= s.size()) {
    ++i;  // truncated sequence
    return c;
  }
  for (int k = 1; k <= extra; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) {
      ++i;
      return c;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += 1 + extra;
  return cp;
}

}  // namespace

std::string normalize_apostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    unsigned cp = decode_utf8(text, i);
    if (cp == 0x2018 || cp == 0x2019) {
      out.push_back('\'');
    } else {
      out.append(text.substr(start, i - start));
    }
  }
  return out;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view trim(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && is_space(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(text[e - 1]))) --e;
  return text.substr(b, e - b);
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_run = false;
  for (char c : text) {
    if (is_space(static_cast<unsigned char>(c))) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out.push_back(' ');
    in_run = false;
    out.push_back(c);
  }
  return out;
}

bool ends_with_question_mark(std::string_view text) {
  std::string_view t = trim(text);
  return !t.empty() && t.back() == '?';
}

std::size_t codepoint_count(std::string_view text) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    decode_utf8(text, i);
    ++n;
  }
  return n;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::string norm = to_lower(normalize_apostrophes(text));
  std::vector<std::string> tokens;
  std::string cur;
  std::size_t i = 0;
  while (i < norm.size()) {
    std::size_t start = i;
    unsigned cp = decode_utf8(norm, i);
    bool token_char = (cp >= 'a' && cp <= 'z') || (cp >= '0' && cp <= '9') ||
                      cp == '\'' || (cp >= 0x80 && cp < 0x2000);
    if (token_char) {
      cur.append(norm.substr(start, i - start));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t start, std::size_t length) {
  std::string out;
  for (std::size_t i = start; i < start + length && i < tokens.size(); ++i) {
    if (i > start) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace msqkit

#include "hopflift/expr.hpp"

namespace hopflift::expr {

std::vector<Token> tokenize(std::string_view text, std::size_t line, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    std::size_t col = column_offset + i + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
              text[j] == '\'')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '@': k = Tok::At; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    out.push_back({k, std::string(1, ch), col});
    ++i;
  }
  out.push_back({Tok::End, "<end of line>", column_offset + text.size() + 1});
  return out;
}

void Cursor::expect(Tok k, const char* what) {
  if (!at(k)) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
  take();
}

void Cursor::fail(const std::string& msg) const { throw ParseError(msg, line_, peek().column); }

}  // namespace hopflift::expr

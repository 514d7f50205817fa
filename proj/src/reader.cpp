#include "reader.hpp"

#include <cctype>

#include "error.hpp"

namespace specforge {

namespace {

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
         c == ')' || c == '\'' || c == ';';
}

struct Scanner {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char take() {
    char c = text[pos++];
    if (c == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    return c;
  }

  void skip_blank() {
    while (!at_end()) {
      char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == ';') {
        while (!at_end() && peek() != '\n') take();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
};

SExpr atom_of_token(Scanner& sc, const std::string& token, int line, int col) {
  if (BigInt::looks_like_int(token)) return SExpr::integer(BigInt::parse(token));
  // A token that starts numerically but is not a pure integer is rejected
  // rather than silently read as a symbol.
  char c0 = token[0];
  size_t digit_at = (c0 == '+' || c0 == '-') && token.size() > 1 ? 1 : 0;
  if (std::isdigit(static_cast<unsigned char>(token[digit_at])))
    throw ParseError(line, col, "illegal atom: " + token);
  if (token.find('.') != std::string::npos)
    throw ParseError(line, col, "illegal atom: " + token);
  std::string up;
  up.reserve(token.size());
  for (char c : token) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return SExpr::symbol(up);
}

SExpr read_datum(Scanner& sc);

// Called after '(' was consumed.
SExpr read_list_rest(Scanner& sc) {
  std::vector<SExpr> elems;
  for (;;) {
    sc.skip_blank();
    if (sc.at_end()) sc.fail("unbalanced parentheses: expected )");
    if (sc.peek() == ')') {
      sc.take();
      SExpr r = SExpr::nil();
      for (size_t i = elems.size(); i-- > 0;) r = SExpr::cons(elems[i], r);
      return r;
    }
    // A lone dot introduces the tail of a dotted pair.
    if (sc.peek() == '.' &&
        (sc.pos + 1 >= sc.text.size() || is_delim(sc.text[sc.pos + 1]))) {
      if (elems.empty()) sc.fail("bad dotted syntax: no element before .");
      sc.take();
      SExpr tail = read_datum(sc);
      sc.skip_blank();
      if (sc.at_end() || sc.peek() != ')')
        sc.fail("bad dotted syntax: expected ) after dotted tail");
      sc.take();
      SExpr r = tail;
      for (size_t i = elems.size(); i-- > 0;) r = SExpr::cons(elems[i], r);
      return r;
    }
    elems.push_back(read_datum(sc));
  }
}

SExpr read_datum(Scanner& sc) {
  sc.skip_blank();
  if (sc.at_end()) sc.fail("unexpected end of input");
  int line = sc.line, col = sc.col;
  char c = sc.peek();
  if (c == '(') {
    sc.take();
    return read_list_rest(sc);
  }
  if (c == ')') sc.fail("unbalanced parentheses: unexpected )");
  if (c == '\'') {
    sc.take();
    SExpr quoted = read_datum(sc);
    return SExpr::list({SExpr::symbol("QUOTE"), quoted});
  }
  std::string token;
  while (!sc.at_end() && !is_delim(sc.peek())) token += sc.take();
  if (token.empty()) sc.fail("unexpected character");
  if (token == ".") sc.fail("bad dotted syntax: dot outside a list");
  return atom_of_token(sc, token, line, col);
}

}  // namespace

std::vector<ReadForm> read_all_pos(std::string_view text) {
  Scanner sc{text};
  std::vector<ReadForm> out;
  for (;;) {
    sc.skip_blank();
    if (sc.at_end()) break;
    ReadForm rf;
    rf.line = sc.line;
    rf.col = sc.col;
    rf.form = read_datum(sc);
    out.push_back(std::move(rf));
  }
  return out;
}

std::vector<SExpr> read_all(std::string_view text) {
  std::vector<SExpr> out;
  for (auto& rf : read_all_pos(text)) out.push_back(std::move(rf.form));
  return out;
}

SExpr read_one(std::string_view text) {
  auto forms = read_all(text);
  if (forms.size() != 1)
    throw ParseError(1, 1, "expected exactly one s-expression");
  return forms[0];
}

bool input_complete(std::string_view text) {
  int depth = 0;
  bool comment = false;
  for (char c : text) {
    if (comment) {
      if (c == '\n') comment = false;
      continue;
    }
    if (c == ';') comment = true;
    else if (c == '(') depth++;
    else if (c == ')') depth--;
  }
  return depth <= 0;
}

}  // namespace specforge

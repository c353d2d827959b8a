#include "mbstar/rational.hpp"

#include <cctype>

#include "mbstar/errors.hpp"

namespace mbstar {

Rat parse_rational(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  auto bad = [&](const char* what) {
    return InvalidInputError(std::string("bad rational '") + std::string(text) + "': " + what);
  };
  if (body.empty()) throw bad("empty");

  std::size_t i = 0;
  bool seen_slash = false;
  if (body[i] == '-' || body[i] == '+') ++i;
  if (i == body.size()) throw bad("missing digits");
  for (; i < body.size(); ++i) {
    char c = body[i];
    if (std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c == '/' && !seen_slash && i + 1 < body.size()) {
      seen_slash = true;
      continue;
    }
    throw bad("expected digits or a single '/'");
  }

  Rat r(std::string(body), 10);
  if (r.get_den() == 0) throw bad("zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace mbstar

#pragma once

#include "gnp/affine_weyl.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnp {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline Coweight parse_coweight(const std::string& s, std::size_t n) {
  std::vector<Int> c;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != item.size()) throw ParseError("bad coweight entry '" + item + "'");
    c.push_back(v);
  }
  if (c.size() != n)
    throw ParseError("coweight has " + std::to_string(c.size()) + " entries, expected " + std::to_string(n));
  return Coweight(c);
}

}  // namespace detail

// Element syntax:
//   "e"                         identity
//   "w: s1 s2 ; mu: 1,0,-1"     (s1 s2) eps^(1,0,-1); either part may be omitted
//   "t[1,0,-1] s1 s2"           same element
//   "s0 s1 s2"                  product of simple affine reflections (s0_k for the k-th component)
// In rank one "s" abbreviates s1.
inline AffineElement parse_element(const AffineWeyl& aw, const std::string& text) {
  const auto& d = aw.datum();
  const std::size_t n = d.lattice_rank();
  auto token_element = [&](const std::string& tok) -> AffineElement {
    if (tok == "e") return aw.identity();
    if (tok == "s" && d.rank() == 1) return aw.simple_reflection(0);
    for (int k = 0; k < aw.num_simple_affine(); ++k)
      if (tok == aw.simple_name(k)) return aw.simple_reflection(k);
    if (tok.size() > 3 && tok.rfind("t[", 0) == 0 && tok.back() == ']')
      return aw.translation(detail::parse_coweight(tok.substr(2, tok.size() - 3), n));
    throw ParseError("unknown generator '" + tok + "'");
  };
  auto product = [&](const std::string& s) {
    AffineElement x = aw.identity();
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) x = aw.multiply(x, token_element(tok));
    return x;
  };
  auto finite_part = [&](const AffineElement& x) {
    if (!x.mu.is_zero()) throw ParseError("w: expects finite simple reflections only");
    return x.w;
  };

  std::string s = detail::trim(text);
  if (s.empty()) throw ParseError("empty element expression");
  if (s.find("w:") != std::string::npos || s.find("mu:") != std::string::npos) {
    WeylElement w = d.weyl().identity();
    Coweight mu(n);
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
      part = detail::trim(part);
      if (part.rfind("w:", 0) == 0)
        w = finite_part(product(part.substr(2)));
      else if (part.rfind("mu:", 0) == 0)
        mu = detail::parse_coweight(part.substr(3), n);
      else if (!part.empty())
        throw ParseError("expected 'w:' or 'mu:' in '" + part + "'");
    }
    return aw.make(w, mu);
  }
  if (s.rfind("t[", 0) == 0) {
    auto close = s.find(']');
    if (close == std::string::npos) throw ParseError("unterminated 't['");
    Coweight mu = detail::parse_coweight(s.substr(2, close - 2), n);
    auto rest = product(s.substr(close + 1));
    return aw.multiply(rest, aw.translation(mu));
  }
  return product(s);
}

}  // namespace gnp

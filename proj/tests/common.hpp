#pragma once

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <string>

namespace testing_util {

using namespace gnp;

inline Rational q(Int p, Int d = 1) { return Rational(p, d); }

inline RatCoweight rv(std::initializer_list<Rational> xs) { return RatCoweight(std::vector<Rational>(xs)); }
inline Coweight cw(std::initializer_list<Int> xs) { return Coweight(std::vector<Int>(xs)); }

inline std::string data(const std::string& name) { return std::string(GNP_DATA) + "/" + name; }
inline DatumPtr load(const std::string& name) { return make_datum(load_config(data(name))); }

constexpr const char* kA1 = R"({"components":["A1"],"lattice":"sc"})";
constexpr const char* kA1Adjoint = R"({"components":["A1"],"lattice":"adjoint"})";
constexpr const char* kGL2 = R"({"components":["A1"],"lattice":"gl"})";
constexpr const char* kGL3 = R"({"components":["A2"],"lattice":"gl"})";
constexpr const char* kA2 = R"({"components":["A2"],"lattice":"sc"})";
constexpr const char* kA2Adjoint = R"({"components":["A2"],"lattice":"adjoint"})";
constexpr const char* kA2Flip = R"({"components":["A2"],"lattice":"sc","frobenius":{"perm":[2,1]}})";
constexpr const char* kA2AdjointFlip = R"({"components":["A2"],"lattice":"adjoint","frobenius":{"perm":[2,1]}})";
constexpr const char* kA1A1Swap = R"({"components":["A1","A1"],"lattice":"sc","frobenius":{"perm":[2,1]}})";
constexpr const char* kB2 = R"({"components":["B2"],"lattice":"sc"})";
constexpr const char* kC2 = R"({"components":["C2"],"lattice":"sc"})";
constexpr const char* kG2 = R"({"components":["G2"],"lattice":"sc"})";
constexpr const char* kA3 = R"({"components":["A3"],"lattice":"sc"})";

inline std::vector<const char*> small_data() {
  return {kA1, kA1Adjoint, kGL2, kGL3, kA2, kA2Adjoint, kA2Flip, kA2AdjointFlip, kA1A1Swap, kB2, kC2, kG2};
}

// every lattice vector with entries in [-b, b]
inline std::vector<Coweight> box(std::size_t n, Int b) {
  std::vector<Coweight> out;
  Coweight c(n);
  for (auto& x : c) x = -b;
  while (true) {
    out.push_back(c);
    std::size_t k = 0;
    while (k < n && c[k] == b) c[k++] = -b;
    if (k == n) break;
    ++c[k];
  }
  return out;
}

}  // namespace testing_util

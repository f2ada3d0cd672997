#pragma once

#include <string>
#include <vector>

#include "conlap/complex.hpp"
#include "conlap/linalg.hpp"
#include "oracles.hpp"

namespace support {

// Complexes in the tests use integer labels.
inline oracle::Set ints(const conlap::Simplex& x) {
  oracle::Set s;
  for (const auto& l : x.vertices()) s.push_back(std::stoi(l));
  return s;
}

inline std::vector<oracle::Set> sets(const conlap::SimplicialComplex& c) {
  std::vector<oracle::Set> out;
  for (const auto& x : c.simplices()) out.push_back(ints(x));
  return out;
}

inline conlap::IntMatrix to_int(const oracle::Matrix& m) {
  conlap::IntMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].get_num();
  }
  return out;
}

inline oracle::Matrix to_rational(const conlap::IntMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline std::vector<std::vector<long>> to_long(const conlap::IntMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

inline conlap::SimplicialComplex gen(const std::vector<std::vector<std::string>>& sets) {
  return conlap::generate_complex(sets);
}

}  // namespace support

#pragma once

// Fixture data shared by the unit and acceptance tests: two small exactly
// solvable reference instances with known solutions, one per equation kind.

#include <string>
#include <vector>

#include "quatdec/io.hpp"
#include "quatdec/matrix.hpp"

namespace quatdec::testing {

inline QMatrix qm(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r > 0 ? rows[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < c; ++t) m(s, t) = parse_quaternion(rows[s][t]);
  return m;
}

// j-Hermitian instance of B X B^j* + C Y C^j* + D Z D^j* = A with a known
// j-Hermitian solution (X, Y, Z).
namespace herm_instance {

inline QMatrix A() {
  return qm({{"-1+5i-20k", "-25-2i-17j-5k"}, {"-25-2i+17j-5k", "-9-18i-14k"}});
}
inline QMatrix B() {
  return qm({{"i+j+k", "1", "1+i+j-k"}, {"-1-j+k", "i", "-1+i+j+k"}});
}
inline QMatrix C() {
  return qm({{"1", "2i+j", "-1+k"}, {"i+k", "1+i+j-k", "0"}});
}
inline QMatrix D() {
  return qm({{"j+2k", "i+k", "j"}, {"-2j+k", "-1-j", "k"}});
}
inline QMatrix X() {
  return qm({{"1", "i+k", "0"}, {"i+k", "1+i", "1-k"}, {"0", "1-k", "0"}});
}
inline QMatrix Y() {
  return qm({{"0", "1+i", "k"}, {"1+i", "i", "2k"}, {"k", "2k", "1"}});
}
inline QMatrix Z() {
  return qm({{"i", "i-k", "k"}, {"i-k", "i", "1"}, {"k", "1", "1"}});
}
inline constexpr EtaAxis eta = EtaAxis::J;

}  // namespace herm_instance

// i-Hermitian instance of B X C + (B X C)^i* + D Y D^i* = A with a known
// solution; C is stored in the p2 x m orientation.
namespace mixed_instance {

inline QMatrix A() {
  return qm({{"-16-6j+34k", "9+17i-31j-3k"}, {"9-17i-31j-3k", "-30+12j-16k"}});
}
inline QMatrix B() {
  return qm({{"1+j", "i+k", "1+2i+j", "-1-k"}, {"i-j", "-1-k", "-2+i-j", "-i+k"}});
}
inline QMatrix C() {
  return qm({{"i+j", "-2+k"},
             {"1+2j", "2i+2k"},
             {"-i+j+k", "2-j+k"},
             {"j", "k"}});
}
inline QMatrix D() {
  return qm({{"i+j", "1+3i", "1+k"}, {"-1+k", "-3+i", "i-j"}});
}
inline QMatrix X() {
  return qm({{"2+i+k", "1+i+j", "1", "i+k"},
             {"-1+k", "-i+k", "j", "1"},
             {"1+i+j+k", "1", "1+j", "1+i+k"},
             {"i+j+2k", "1-i+k", "1+2j", "2+i+k"}});
}
inline QMatrix Y() {
  return qm({{"1+j", "1+i", "j"}, {"1-i", "k", "i"}, {"j", "-i", "j"}});
}
inline constexpr EtaAxis eta = EtaAxis::I;

}  // namespace mixed_instance

}  // namespace quatdec::testing

#include "octic/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "octic/errors.hpp"

namespace octic {

Perm Perm::from_cycles(const std::string& text) {
  Perm p;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw OcticError("bad cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      char c = text[i];
      if (c >= '1' && c <= '8') {
        cycle.push_back(c - '0');
      } else if (c != ' ' && c != ',') {
        throw OcticError("bad cycle notation: " + text);
      }
      ++i;
    }
    if (i == text.size()) throw OcticError("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      p.one_line[static_cast<size_t>(from - 1)] = static_cast<uint8_t>(to);
    }
    skip_ws();
  }
  // validate bijection
  std::array<bool, 8> seen{};
  for (uint8_t v : p.one_line) {
    if (v < 1 || v > 8 || seen[static_cast<size_t>(v - 1)])
      throw OcticError("cycle notation is not a permutation: " + text);
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 1; i <= 8; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  for (int i = 1; i <= 8; ++i)
    inv.one_line[static_cast<size_t>((*this)(i) - 1)] = static_cast<uint8_t>(i);
  return inv;
}

Perm Perm::then(const Perm& b) const {
  Perm out;
  for (int i = 1; i <= 8; ++i)
    out.one_line[static_cast<size_t>(i - 1)] = b((*this)(i));
  return out;
}

int Perm::order() const {
  int result = 1;
  std::array<bool, 8> seen{};
  for (int i = 1; i <= 8; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int len = 0;
    int j = i;
    do {
      seen[static_cast<size_t>(j - 1)] = true;
      j = (*this)(j);
      ++len;
    } while (j != i);
    result = std::lcm(result, len);
  }
  return result;
}

uint8_t Perm::apply_mask(uint8_t mask) const {
  uint8_t out = 0;
  for (int i = 0; i < 8; ++i)
    if (mask & (1u << i)) out |= static_cast<uint8_t>(1u << (one_line[static_cast<size_t>(i)] - 1));
  return out;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::array<bool, 8> seen{};
  bool any = false;
  for (int i = 1; i <= 8; ++i) {
    if (seen[static_cast<size_t>(i - 1)] || (*this)(i) == i) {
      seen[static_cast<size_t>(i - 1)] = true;
      continue;
    }
    os << '(';
    int j = i;
    do {
      seen[static_cast<size_t>(j - 1)] = true;
      os << j;
      j = (*this)(j);
    } while (j != i);
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

const std::vector<Perm>& all_s8() {
  static const std::vector<Perm> perms = [] {
    std::vector<Perm> out;
    out.reserve(40320);
    Perm p;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
    return out;
  }();
  return perms;
}

}  // namespace octic

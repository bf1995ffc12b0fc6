#include "cosetgeom/permutation.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "cosetgeom/errors.hpp"

namespace cosetgeom {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected point", i);
      }
      std::size_t start = i;
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1'000'000) throw ParseError("point too large", start);
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based", start);
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      skip();
      if (i < text.size() && text[i] == ',') ++i;
    }
    cycles.push_back(std::move(cycle));
    skip();
  }
  for (const auto& c : cycles) {
    for (auto x : c) degree = std::max<std::size_t>(degree, x + 1);
  }
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) {
        throw ParseError("point " + std::to_string(c[k] + 1) + " repeated in cycles", 0);
      }
      used[c[k]] = true;
      p.images_[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += "(";
    std::uint32_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += ", ";
      out += std::to_string(y + 1);
      first = false;
      y = images_[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool Permutation::is_identity() const noexcept {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::uint32_t Permutation::first_moved() const noexcept {
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return static_cast<std::uint32_t>(images_.size());
}

bool Permutation::is_even() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = x;
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  Permutation result(images_.size());
  while (e) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x) r.images_[x] = b.images_[a.images_[x]];
  return r;
}

Permutation conjugate(const Permutation& b, const Permutation& a) {
  return a.inverse() * b * a;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cosetgeom

#include "grouplab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace grouplab {

CycleType::CycleType(std::map<unsigned, unsigned> parts) : parts_(std::move(parts)) {
  for (auto [len, mult] : parts_) {
    if (len == 0 || mult == 0) throw Error("cycle type parts must be positive");
    n_ += len * mult;
  }
}

bool CycleType::is_even() const {
  unsigned transpositions = 0;
  for (auto [len, mult] : parts_) transpositions += (len - 1) * mult;
  return transpositions % 2 == 0;
}

uint64_t CycleType::element_order() const {
  uint64_t l = 1;
  for (auto [len, mult] : parts_) l = std::lcm(l, static_cast<uint64_t>(len));
  return l;
}

std::string CycleType::to_string() const {
  std::string out = "[";
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    for (unsigned i = 0; i < it->second; ++i) {
      if (!first) out += ',';
      out += std::to_string(it->first);
      first = false;
    }
  }
  out += ']';
  return out;
}

Perm Perm::identity(unsigned degree) {
  std::vector<uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<uint16_t>(i + 1);
  return Perm(std::move(img));
}

Perm::Perm(std::vector<uint16_t> images) : images_(std::move(images)) {
  const unsigned n = degree();
  std::vector<bool> seen(n, false);
  for (uint16_t v : images_) {
    if (v < 1 || v > n) throw PointOutOfRange("image out of range in permutation");
    if (seen[v - 1]) throw PointRepeated("image sequence is not a bijection");
    seen[v - 1] = true;
  }
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

unsigned Perm::smallest_moved_point() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return i + 1;
  return 0;
}

unsigned Perm::moved_points() const {
  unsigned c = 0;
  for (unsigned i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) ++c;
  return c;
}

Perm Perm::inverse() const {
  std::vector<uint16_t> img(degree());
  for (unsigned i = 0; i < degree(); ++i) img[images_[i] - 1] = static_cast<uint16_t>(i + 1);
  return Perm(std::move(img));
}

uint64_t Perm::order() const { return cycle_type().element_order(); }

CycleType Perm::cycle_type() const {
  std::map<unsigned, unsigned> parts;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    do {
      seen[j] = true;
      ++len;
      j = images_[j] - 1;
    } while (j != i);
    ++parts[len];
  }
  return CycleType(parts);
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("compose: degrees differ");
  const auto& ia = a.images();
  const auto& ib = b.images();
  std::vector<uint16_t> img(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) img[i] = ib[ia[i] - 1];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& x, const Perm& g) {
  // g^-1 * x * g, computed directly: i -> g(x(g^-1(i)))
  if (x.degree() != g.degree()) throw DegreeMismatch("conjugate: degrees differ");
  const auto& ix = x.images();
  const auto& ig = g.images();
  std::vector<uint16_t> img(x.degree());
  for (unsigned i = 0; i < x.degree(); ++i) img[ig[i] - 1] = ig[ix[i] - 1];
  return Perm(std::move(img));
}

Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Perm power(const Perm& p, int64_t k) {
  Perm base = k < 0 ? p.inverse() : p;
  uint64_t e = k < 0 ? static_cast<uint64_t>(-k) : static_cast<uint64_t>(k);
  Perm acc = Perm::identity(p.degree());
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

namespace {

std::vector<std::vector<unsigned>> lex_cycles(std::string_view text, unsigned degree) {
  std::vector<std::vector<unsigned>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw MalformedCycle("empty permutation string");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw MalformedCycle("expected '('");
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw MalformedCycle("expected point number");
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 65535) throw PointOutOfRange("point too large");
        ++i;
      }
      if (v < 1 || v > degree) throw PointOutOfRange("point outside 1..degree");
      cyc.push_back(v);
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws();
        if (i < text.size() && text[i] == ')')
          throw MalformedCycle("trailing separator in cycle");
      }
    }
    if (i == text.size()) throw MalformedCycle("unbalanced parentheses");
    ++i;  // consume ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Perm parse_perm(std::string_view text, unsigned degree) {
  auto cycles = lex_cycles(text, degree);
  std::vector<bool> used(degree, false);
  std::vector<uint16_t> img(degree);
  for (unsigned i = 0; i < degree; ++i) img[i] = static_cast<uint16_t>(i + 1);
  // cycles are required to be disjoint, so applying them in any order gives
  // the same product
  for (const auto& cyc : cycles) {
    for (unsigned v : cyc) {
      if (used[v - 1]) throw PointRepeated("point occurs twice");
      used[v - 1] = true;
    }
    if (cyc.size() < 2) continue;  // singleton cycle is a fixed point
    for (size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = static_cast<uint16_t>(cyc[(k + 1) % cyc.size()]);
  }
  return Perm(std::move(img));
}

std::string format_perm(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.images()[i] == i + 1) {
      seen[i] = true;
      continue;
    }
    out += '(';
    unsigned j = i;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      seen[j] = true;
      j = p.images()[j] - 1;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

size_t PermHash::operator()(const Perm& p) const {
  size_t h = 1469598103934665603ull;  // FNV-1a
  for (uint16_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace grouplab

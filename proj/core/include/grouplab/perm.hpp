#ifndef GROUPLAB_PERM_HPP
#define GROUPLAB_PERM_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grouplab/errors.hpp"

namespace grouplab {

/// Multiset of cycle lengths of a permutation, fixed points included as
/// length-1 parts.  parts() maps length -> multiplicity.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::map<unsigned, unsigned> parts);

  unsigned n() const { return n_; }
  const std::map<unsigned, unsigned>& parts() const { return parts_; }

  bool is_even() const;
  uint64_t element_order() const;  // lcm of lengths
  std::string to_string() const;   // "[5,3,1,1]" with lengths descending

  bool operator==(const CycleType&) const = default;

 private:
  std::map<unsigned, unsigned> parts_;
  unsigned n_ = 0;
};

/// A permutation of {1..n}.  Stored as the image sequence: images()[i] is the
/// image of point i+1.  Immutable after construction.
class Perm {
 public:
  Perm() = default;  // degree 0
  static Perm identity(unsigned degree);
  explicit Perm(std::vector<uint16_t> images);  // 1-based images, validated

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned image(unsigned point) const { return images_[point - 1]; }
  const std::vector<uint16_t>& images() const { return images_; }

  bool is_identity() const;
  unsigned smallest_moved_point() const;  // 0 when identity
  unsigned moved_points() const;

  Perm inverse() const;
  uint64_t order() const;
  CycleType cycle_type() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;  // lexicographic on images

 private:
  std::vector<uint16_t> images_;
};

/// compose(a, b): apply a first, then b.  This is the group product used
/// throughout; conjugation is conjugate(x, g) = g^-1 * x * g.
Perm compose(const Perm& a, const Perm& b);
Perm conjugate(const Perm& x, const Perm& g);
Perm commutator(const Perm& a, const Perm& b);  // a^-1 b^-1 a b
Perm power(const Perm& p, int64_t k);

/// Cycle-notation parsing.  Grammar:
///   perm := "()" | cycle+ ; cycle := "(" int ((","|" ") int)* ")"
/// Cycles must be disjoint; points are 1-based and bounded by degree.
Perm parse_perm(std::string_view text, unsigned degree);

/// Canonical cycle string: each cycle starts at its smallest point, cycles
/// ordered by smallest moved point, fixed points omitted, identity is "()".
std::string format_perm(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace grouplab

#endif

#ifndef GROUPLAB_PERM_GROUP_HPP
#define GROUPLAB_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "grouplab/perm.hpp"

namespace grouplab {

/// Base and strong generating set for a permutation group, built with the
/// deterministic Schreier-Sims algorithm.  Base points are chosen as the
/// smallest moved point at each level.  Orders and membership are exact.
class StabilizerChain {
 public:
  struct Level {
    unsigned base_point;                  // 1-based
    std::vector<Perm> gens;               // strong generators fixing earlier base points
    std::vector<int32_t> transversal_at;  // point-1 -> index into transversal, or -1
    std::vector<Perm> transversal;        // transversal[j] maps base_point to orbit[j]
    std::vector<unsigned> orbit;          // in discovery order; orbit[0] == base_point
  };

  StabilizerChain(unsigned degree, const std::vector<Perm>& gens);

  unsigned degree() const { return degree_; }
  uint64_t order() const;
  bool contains(const Perm& p) const;
  Perm sift(const Perm& p) const;  // residue; identity iff member

  /// Adds an element to the generated group.  Returns true if the group grew.
  bool extend(const Perm& p);

  const std::vector<Level>& levels() const { return levels_; }
  std::vector<unsigned> base() const;

  /// Strong generators that fix the first `level` base points.  level 0 gives
  /// a generating set for the whole group.
  std::vector<Perm> stabilizer_generators(size_t level) const;

  /// All group elements, sorted lexicographically by image sequence.
  /// Throws CapExceeded when order() > cap.
  std::vector<Perm> elements(uint64_t cap) const;

 private:
  void insert(Perm p, size_t level);
  void rebuild_orbit(size_t level);
  void close_level(size_t level);

  unsigned degree_;
  std::vector<Level> levels_;
};

/// A group generated by permutations of a common degree.  The stabilizer
/// chain is built once, on first use, under a single-writer guard; all
/// other state is immutable, so values can be shared freely.
class PermGroup {
 public:
  PermGroup(unsigned degree, std::vector<Perm> generators);
  PermGroup(unsigned degree, std::vector<Perm> generators, StabilizerChain chain);

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const StabilizerChain& chain() const;

  uint64_t order() const { return chain().order(); }
  bool contains(const Perm& p) const;

  /// Throws CapExceeded(order) when the group is larger than cap.
  std::vector<Perm> elements(uint64_t cap) const;

  std::vector<unsigned> orbit_of(unsigned point) const;  // sorted
  bool is_transitive() const;
  bool is_abelian() const;

  Perm identity() const { return Perm::identity(degree_); }

 private:
  struct ChainBox {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  unsigned degree_;
  std::vector<Perm> generators_;
  std::shared_ptr<ChainBox> box_;
};

/// Incrementally builds a chain from candidate generators, keeping only the
/// ones that enlarge the group.  Returns the reduced generating set.
std::vector<Perm> reduce_generators(unsigned degree, const std::vector<Perm>& candidates,
                                    StabilizerChain* out_chain = nullptr);

}  // namespace grouplab

#endif

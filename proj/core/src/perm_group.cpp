#include "grouplab/perm_group.hpp"

#include <algorithm>
#include <set>

namespace grouplab {

StabilizerChain::StabilizerChain(unsigned degree, const std::vector<Perm>& gens)
    : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
    insert(g, 0);
  }
}

uint64_t StabilizerChain::order() const {
  uint64_t o = 1;
  for (const auto& lvl : levels_) o *= lvl.orbit.size();
  return o;
}

Perm StabilizerChain::sift(const Perm& p) const {
  Perm h = p;
  for (const auto& lvl : levels_) {
    unsigned delta = h.image(lvl.base_point);
    int32_t t = lvl.transversal_at[delta - 1];
    if (t < 0) return h;
    h = compose(h, lvl.transversal[static_cast<size_t>(t)].inverse());
  }
  return h;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatch("contains: degree mismatch");
  return sift(p).is_identity();
}

bool StabilizerChain::extend(const Perm& p) {
  if (p.degree() != degree_) throw DegreeMismatch("extend: degree mismatch");
  if (contains(p)) return false;
  insert(p, 0);
  return true;
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> b;
  b.reserve(levels_.size());
  for (const auto& lvl : levels_) b.push_back(lvl.base_point);
  return b;
}

std::vector<Perm> StabilizerChain::stabilizer_generators(size_t level) const {
  std::vector<Perm> out;
  for (size_t i = level; i < levels_.size(); ++i)
    for (const auto& g : levels_[i].gens) out.push_back(g);
  if (out.empty()) out.push_back(Perm::identity(degree_));
  return out;
}

void StabilizerChain::insert(Perm p, size_t level) {
  // Sift as deep as possible, then lodge the residue as a strong generator.
  size_t i = level;
  while (i < levels_.size()) {
    if (p.is_identity()) return;
    const Level& lvl = levels_[i];
    unsigned delta = p.image(lvl.base_point);
    int32_t t = lvl.transversal_at[delta - 1];
    if (t < 0) break;
    p = compose(p, lvl.transversal[static_cast<size_t>(t)].inverse());
    ++i;
  }
  if (p.is_identity()) return;
  if (i == levels_.size()) {
    Level lvl;
    lvl.base_point = p.smallest_moved_point();
    lvl.transversal_at.assign(degree_, -1);
    lvl.transversal_at[lvl.base_point - 1] = 0;
    lvl.transversal.push_back(Perm::identity(degree_));
    lvl.orbit.push_back(lvl.base_point);
    levels_.push_back(std::move(lvl));
  }
  levels_[i].gens.push_back(std::move(p));
  rebuild_orbit(i);
  close_level(i);
}

void StabilizerChain::rebuild_orbit(size_t level) {
  Level& lvl = levels_[level];
  lvl.transversal_at.assign(degree_, -1);
  lvl.transversal.clear();
  lvl.orbit.clear();
  lvl.transversal_at[lvl.base_point - 1] = 0;
  lvl.transversal.push_back(Perm::identity(degree_));
  lvl.orbit.push_back(lvl.base_point);
  for (size_t head = 0; head < lvl.orbit.size(); ++head) {
    unsigned pt = lvl.orbit[head];
    const Perm& u = lvl.transversal[head];
    for (const auto& s : lvl.gens) {
      unsigned img = s.image(pt);
      if (lvl.transversal_at[img - 1] < 0) {
        lvl.transversal_at[img - 1] = static_cast<int32_t>(lvl.transversal.size());
        lvl.transversal.push_back(compose(u, s));
        lvl.orbit.push_back(img);
      }
    }
  }
}

void StabilizerChain::close_level(size_t level) {
  // Verify Schreier's condition: every Schreier generator of this level must
  // be a member of the deeper chain.  Any residue is lodged recursively,
  // which can only enlarge deeper levels, so one pass over the current
  // orbit x generator table suffices per call.
  Level& lvl = levels_[level];
  for (size_t j = 0; j < lvl.orbit.size(); ++j) {
    for (size_t s = 0; s < lvl.gens.size(); ++s) {
      const Perm& u = lvl.transversal[j];
      unsigned img = lvl.gens[s].image(lvl.orbit[j]);
      const Perm& v = lvl.transversal[static_cast<size_t>(lvl.transversal_at[img - 1])];
      Perm schreier = compose(compose(u, lvl.gens[s]), v.inverse());
      insert(std::move(schreier), level + 1);
    }
  }
}

std::vector<Perm> StabilizerChain::elements(uint64_t cap) const {
  uint64_t ord = order();
  if (ord > cap)
    throw CapExceeded(ord, "group order " + std::to_string(ord) + " exceeds cap " +
                               std::to_string(cap));
  std::vector<Perm> out;
  out.reserve(static_cast<size_t>(ord));
  out.push_back(Perm::identity(degree_));
  // Every element factors uniquely as t_deep * ... * t_0 with t_i in the
  // level-i transversal; build products from the deepest level outward.
  for (size_t i = levels_.size(); i-- > 0;) {
    const Level& lvl = levels_[i];
    std::vector<Perm> next;
    next.reserve(out.size() * lvl.transversal.size());
    for (const auto& h : out)
      for (const auto& t : lvl.transversal) next.push_back(compose(h, t));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)), box_(std::make_shared<ChainBox>()) {
  if (generators_.empty()) throw Error("PermGroup requires at least one generator");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators, StabilizerChain chain)
    : PermGroup(degree, std::move(generators)) {
  box_->chain = std::make_unique<StabilizerChain>(std::move(chain));
  std::call_once(box_->once, [] {});
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(box_->once, [this] {
    if (!box_->chain) box_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *box_->chain;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw DegreeMismatch("contains: degree mismatch");
  return chain().contains(p);
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const { return chain().elements(cap); }

std::vector<unsigned> PermGroup::orbit_of(unsigned point) const {
  if (point < 1 || point > degree_) throw PointOutOfRange("orbit: point outside 1..degree");
  std::vector<bool> in(degree_, false);
  std::vector<unsigned> queue{point};
  in[point - 1] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators_) {
      unsigned img = g.image(queue[head]);
      if (!in[img - 1]) {
        in[img - 1] = true;
        queue.push_back(img);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermGroup::is_transitive() const {
  return orbit_of(1).size() == degree_;
}

bool PermGroup::is_abelian() const {
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (compose(generators_[i], generators_[j]) != compose(generators_[j], generators_[i]))
        return false;
  return true;
}

std::vector<Perm> reduce_generators(unsigned degree, const std::vector<Perm>& candidates,
                                    StabilizerChain* out_chain) {
  StabilizerChain chain(degree, {});
  std::vector<Perm> kept;
  for (const auto& c : candidates)
    if (chain.extend(c)) kept.push_back(c);
  if (kept.empty()) kept.push_back(Perm::identity(degree));
  if (out_chain) *out_chain = std::move(chain);
  return kept;
}

}  // namespace grouplab

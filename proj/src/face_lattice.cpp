#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "skelsum/polytope.hpp"

namespace skelsum {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::size_t> to_indices(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

}  // namespace

// Walks the lattice downward one dimension at a time: the facets of a face G
// are the inclusion-maximal sets G & F over facets F of P not containing G.
std::vector<Face> faces_of_dim(const Polytope& p, int k) {
  const int top = p.intrinsic_dim();
  if (k < 0 || k > top) {
    throw std::invalid_argument("face dimension " + std::to_string(k) + " outside [0, " +
                                std::to_string(top) + "]");
  }
  const std::size_t n = p.num_vertices();
  Bits all(n);
  all.set();
  std::set<Bits> level{all};

  std::vector<Bits> facets;
  facets.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    Bits b(n);
    for (auto v : f.vertices) {
      b.set(v);
    }
    facets.push_back(std::move(b));
  }

  for (int j = top; j > k; --j) {
    std::set<Bits> next;
    for (const auto& g : level) {
      std::vector<Bits> candidates;
      for (const auto& f : facets) {
        Bits c = g & f;
        if (c != g && c.any()) {
          candidates.push_back(std::move(c));
        }
      }
      std::sort(candidates.begin(), candidates.end(),
                [](const Bits& a, const Bits& b) { return a.count() > b.count(); });
      std::vector<Bits> maximal;
      for (auto& c : candidates) {
        const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                           [&](const Bits& m) { return c.is_subset_of(m); });
        if (!dominated) {
          maximal.push_back(std::move(c));
        }
      }
      next.insert(maximal.begin(), maximal.end());
    }
    level = std::move(next);
  }

  std::vector<Face> out;
  out.reserve(level.size());
  for (const auto& b : level) {
    out.push_back(Face{to_indices(b), k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skelsum

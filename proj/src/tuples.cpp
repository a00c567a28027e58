#include <algorithm>
#include <map>
#include <stdexcept>

#include "skelsum/search.hpp"

namespace skelsum {

int DecompositionProblem::search_dim(std::size_t i) const {
  return std::min(dims.at(i), polytope.intrinsic_dim());
}

DecompositionProblem balanced_problem(Polytope polytope, Point target, std::vector<int> dims) {
  const auto n = static_cast<long>(dims.size());
  if (n == 0) {
    throw std::invalid_argument("problem needs at least one point");
  }
  std::vector<Rational> weights(dims.size(), Rational(1, n));
  return DecompositionProblem{std::move(polytope), std::move(target), std::move(dims),
                              std::move(weights)};
}

void validate(const DecompositionProblem& problem) {
  if (problem.dims.empty()) {
    throw std::invalid_argument("problem needs at least one point");
  }
  if (problem.dims.size() != problem.weights.size()) {
    throw std::invalid_argument("dims and weights differ in length");
  }
  if (problem.target.dim() != problem.polytope.ambient_dim()) {
    throw std::invalid_argument("target dimension differs from the polytope's ambient dimension");
  }
  for (int k : problem.dims) {
    if (k < 0) {
      throw std::invalid_argument("negative face dimension " + std::to_string(k));
    }
  }
  Rational total;
  for (const auto& w : problem.weights) {
    if (w.sign() < 0) {
      throw std::invalid_argument("negative weight " + w.str());
    }
    total += w;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("weights sum to " + total.str() + ", expected 1");
  }
  if (!contains(problem.polytope, problem.target)) {
    throw PreconditionError("target " + problem.target.str() + " lies outside the polytope");
  }
}

FaceTupleStream::FaceTupleStream(std::vector<std::size_t> list_sizes,
                                 std::vector<std::size_t> groups)
    : sizes_(std::move(list_sizes)), groups_(std::move(groups)) {
  if (sizes_.size() != groups_.size()) {
    throw std::invalid_argument("tuple stream: sizes and groups differ in length");
  }
  previous_in_group_.resize(sizes_.size());
  std::map<std::size_t, std::size_t> last;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (auto it = last.find(groups_[i]); it != last.end()) {
      if (sizes_[it->second] != sizes_[i]) {
        throw std::invalid_argument("tuple stream: grouped positions need equal list sizes");
      }
      previous_in_group_[i] = it->second;
    }
    last[groups_[i]] = i;
  }
  exhausted_ = sizes_.empty() || std::any_of(sizes_.begin(), sizes_.end(),
                                             [](std::size_t s) { return s == 0; });
}

std::size_t FaceTupleStream::lower_bound(std::size_t pos) const {
  return previous_in_group_[pos] ? current_[*previous_in_group_[pos]] : 0;
}

std::optional<std::vector<std::size_t>> FaceTupleStream::next() {
  if (exhausted_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    current_.assign(sizes_.size(), 0);
    return current_;
  }
  for (std::size_t p = sizes_.size(); p-- > 0;) {
    if (current_[p] + 1 < sizes_[p]) {
      ++current_[p];
      for (std::size_t q = p + 1; q < sizes_.size(); ++q) {
        current_[q] = lower_bound(q);
      }
      return current_;
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

std::size_t FaceTupleStream::count() const {
  if (sizes_.empty()) {
    return 0;
  }
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_group;  // group -> (size, members)
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    auto& entry = by_group[groups_[i]];
    entry.first = sizes_[i];
    ++entry.second;
  }
  // Multisets of size g from L items: C(L + g - 1, g).
  mpz_class total = 1;
  for (const auto& [group, entry] : by_group) {
    const auto [size, members] = entry;
    if (size == 0) {
      return 0;
    }
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), size + members - 1, members);
    total *= c;
  }
  return static_cast<std::size_t>(total.get_ui());
}

FaceTuples enumerate_face_tuples(const DecompositionProblem& problem) {
  std::map<int, std::vector<Face>> by_dim;
  std::vector<std::vector<Face>> lists;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const int k = problem.search_dim(i);
    auto it = by_dim.find(k);
    if (it == by_dim.end()) {
      it = by_dim.emplace(k, faces_of_dim(problem.polytope, k)).first;
    }
    lists.push_back(it->second);
    sizes.push_back(it->second.size());
  }
  std::vector<std::size_t> groups(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) {
    groups[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (problem.search_dim(j) == problem.search_dim(i) && problem.weights[j] == problem.weights[i]) {
        groups[i] = groups[j];
        break;
      }
    }
  }
  return FaceTuples{std::move(lists), FaceTupleStream(std::move(sizes), std::move(groups))};
}

}  // namespace skelsum

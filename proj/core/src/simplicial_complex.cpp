#include "hodge/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

namespace {

std::string show(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

}  // namespace

std::pair<Simplex, int> sort_with_sign(Simplex s) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < s.size(); ++i) {
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == s[i]) return {s, 0};
  }
  return {s, sign};
}

SimplicialComplex SimplicialComplex::build(std::vector<std::vector<Simplex>> simplices) {
  while (!simplices.empty() && simplices.back().empty()) simplices.pop_back();
  if (simplices.empty()) throw Error(ErrorCode::InvalidArgument, "complex has no simplices");

  std::vector<std::map<Simplex, std::size_t>> lookup(simplices.size());
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    for (const auto& s : simplices[j]) {
      if (s.size() != j + 1) {
        throw Error(ErrorCode::InvalidArgument,
                    show(s) + " listed among " + std::to_string(j) + "-simplices");
      }
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1] >= s[i]) throw Error(ErrorCode::OrientationError, show(s) + " is not strictly increasing");
      }
      if (s.front() < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex in " + show(s));
      if (!lookup[j].emplace(s, lookup[j].size()).second) {
        throw Error(ErrorCode::DuplicateSimplex, show(s));
      }
    }
  }

  std::vector<std::size_t> dims;
  std::vector<Incidence> d;
  for (std::size_t j = 0; j < simplices.size(); ++j) dims.push_back(simplices[j].size());
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    const std::size_t rows = j + 1 < simplices.size() ? simplices[j + 1].size() : 0;
    Incidence m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dims[j]));
    std::vector<Eigen::Triplet<int>> trips;
    if (rows > 0) {
      for (std::size_t r = 0; r < rows; ++r) {
        const Simplex& s = simplices[j + 1][r];
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          auto it = lookup[j].find(face);
          if (it == lookup[j].end()) {
            throw Error(ErrorCode::MissingFace, show(face) + " (face of " + show(s) + ")");
          }
          trips.emplace_back(static_cast<int>(r), static_cast<int>(it->second), i % 2 == 0 ? 1 : -1);
        }
      }
    }
    m.setFromTriplets(trips.begin(), trips.end());
    d.push_back(std::move(m));
  }

  SimplicialComplex k;
  static_cast<CochainComplex&>(k) = CochainComplex(std::move(dims), std::move(d));
  k.simplices_ = std::move(simplices);
  k.lookup_ = std::move(lookup);
  return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
  std::vector<std::set<Simplex>> sets;
  for (const auto& f : facets) {
    auto [s, sign] = sort_with_sign(f);
    if (sign == 0 || s.empty()) throw Error(ErrorCode::InvalidArgument, "degenerate facet " + show(f));
    const std::size_t k = s.size();
    if (sets.size() < k) sets.resize(k);
    // all nonempty subsets
    for (unsigned mask = 1; mask < (1U << k); ++mask) {
      Simplex sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1U << i)) sub.push_back(s[i]);
      }
      sets[sub.size() - 1].insert(sub);
    }
  }
  std::vector<std::vector<Simplex>> lists;
  for (auto& st : sets) lists.emplace_back(st.begin(), st.end());
  return build(std::move(lists));
}

const std::vector<Simplex>& SimplicialComplex::simplices(int j) const {
  if (j < 0 || j > top_dim()) {
    throw Error(ErrorCode::DegreeOutOfRange, "no " + std::to_string(j) + "-simplices");
  }
  return simplices_[static_cast<std::size_t>(j)];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& table = lookup_[s.size() - 1];
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw Error(ErrorCode::MissingFace, show(s) + " not in complex");
  return *i;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  if (simplices_.empty()) return out;
  for (const auto& v : simplices_[0]) out.push_back(v[0]);
  return out;
}

}  // namespace hodge

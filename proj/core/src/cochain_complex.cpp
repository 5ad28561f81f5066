#include "hodge/cochain_complex.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "hodge/error.hpp"

namespace hodge {

namespace {

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

using SparseRow = std::vector<std::pair<int, std::uint64_t>>;

std::uint64_t to_mod(int v) {
  const long long r = static_cast<long long>(v) % static_cast<long long>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(kPrime) : r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kPrime;
  while (exp > 0) {
    if (exp & 1U) result = result * base % kPrime;
    base = base * base % kPrime;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

// row <- row - factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const SparseRow& pivot, std::uint64_t factor) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      const std::uint64_t v = (kPrime - factor * pivot[j].second % kPrime) % kPrime;
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      const std::uint64_t v = (row[i].second + kPrime - factor * pivot[j].second % kPrime) % kPrime;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t integer_rank(const Incidence& m) {
  // Eliminate along the shorter side.
  const bool by_rows = m.rows() <= m.cols();
  const Eigen::Index lines = by_rows ? m.rows() : m.cols();
  std::vector<SparseRow> rows(static_cast<std::size_t>(lines));
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (Incidence::InnerIterator it(m, k); it; ++it) {
      if (it.value() == 0) continue;
      const auto line = static_cast<std::size_t>(by_rows ? it.row() : it.col());
      const int other = static_cast<int>(by_rows ? it.col() : it.row());
      rows[line].emplace_back(other, to_mod(it.value()));
    }
  }
  std::unordered_map<int, SparseRow> pivots;
  std::size_t rank = 0;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
      const int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const std::uint64_t inv = inverse(row.front().second);
        for (auto& entry : row) entry.second = entry.second * inv % kPrime;
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      row = axpy(row, it->second, row.front().second);
    }
  }
  return rank;
}

struct CochainComplex::RankCache {
  std::mutex mutex;
  std::vector<std::optional<std::size_t>> values;
};

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<Incidence> coboundaries)
    : dims_(std::move(dims)), d_(std::move(coboundaries)), ranks_(std::make_shared<RankCache>()) {
  if (d_.size() != dims_.size()) {
    throw Error(ErrorCode::InvalidArgument, "one coboundary per degree is required");
  }
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    const auto rows = p + 1 < dims_.size() ? dims_[p + 1] : 0;
    if (static_cast<std::size_t>(d_[p].rows()) != rows ||
        static_cast<std::size_t>(d_[p].cols()) != dims_[p]) {
      throw Error(ErrorCode::InvalidArgument,
                  "coboundary d_" + std::to_string(p) + " has the wrong shape");
    }
  }
  for (std::size_t p = 0; p + 1 < d_.size(); ++p) {
    const Incidence dd = d_[p + 1] * d_[p];
    for (Eigen::Index k = 0; k < dd.outerSize(); ++k) {
      for (Incidence::InnerIterator it(dd, k); it; ++it) {
        if (it.value() != 0) {
          throw Error(ErrorCode::OrientationError,
                      "d_" + std::to_string(p + 1) + " d_" + std::to_string(p) + " != 0");
        }
      }
    }
  }
  ranks_->values.resize(dims_.size());
}

std::size_t CochainComplex::dim(int p) const noexcept {
  if (p < 0 || p > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(p)];
}

const Incidence& CochainComplex::coboundary(int p) const {
  if (p < 0 || p > top_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "no coboundary in degree " + std::to_string(p));
  }
  return d_[static_cast<std::size_t>(p)];
}

std::size_t CochainComplex::rank(int p) const {
  if (p < 0 || p > top_degree() || !ranks_) return 0;
  std::lock_guard<std::mutex> lock(ranks_->mutex);
  auto& slot = ranks_->values[static_cast<std::size_t>(p)];
  if (!slot) slot = integer_rank(d_[static_cast<std::size_t>(p)]);
  return *slot;
}

int CochainComplex::betti(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return static_cast<int>(dim(p)) - static_cast<int>(rank(p)) - static_cast<int>(rank(p - 1));
}

std::vector<int> CochainComplex::betti_numbers() const {
  std::vector<int> out;
  for (int p = 0; p <= top_degree(); ++p) out.push_back(betti(p));
  return out;
}

}  // namespace hodge

#include "reflekt/linalg.hpp"

#include <algorithm>

namespace reflekt {

void append_key(const Mat& m, std::string& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j).append_key(out);
}

std::string matrix_key(const Mat& m) {
  std::string k;
  k.reserve(static_cast<std::size_t>(m.size()) * 40);
  append_key(m, k);
  return k;
}

std::string to_string(const Mat& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) s += ", ";
      s += m(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

Mat parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = CycNum::parse(rows[i][j]);
  }
  return m;
}

Mat diag(const std::vector<CycNum>& entries) {
  const int n = static_cast<int>(entries.size());
  Mat m = zeros<CycNum>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

Mat from_rows(const std::vector<std::vector<CycNum>>& rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.at(0).size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SparseVec scaled(const SparseVec& x, const CycNum& a) {
  SparseVec out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (auto& [i, v] : x) out.emplace_back(i, v * a);
  return out;
}

SparseVec axpy(const SparseVec& y, const CycNum& a, const SparseVec& x) {
  if (a.is_zero()) return y;
  SparseVec out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      CycNum s = y[i].second + a * x[j].second;
      if (!s.is_zero()) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec SparseEchelon::reduce(const SparseVec& v) const {
  // Rows are fully reduced, so the multiplier for each pivot column is the
  // entry of v itself.
  std::vector<std::pair<int, CycNum>> terms(v.begin(), v.end());
  for (auto& [col, val] : v) {
    auto it = pivot_row_.find(col);
    if (it == pivot_row_.end()) continue;
    for (auto& [c, x] : rows_[it->second]) terms.emplace_back(c, -(val * x));
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    CycNum s = terms[i].second;
    for (++j; j < terms.size() && terms[j].first == terms[i].first; ++j) s += terms[j].second;
    if (!s.is_zero()) out.emplace_back(terms[i].first, std::move(s));
    i = j;
  }
  return out;
}

bool SparseEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const int lead = r.front().first;
  if (!r.front().second.is_one()) r = scaled(r, r.front().second.inverse());
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), lead,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == row.end() || it->first != lead) continue;
    CycNum f = -it->second;
    row = axpy(row, f, r);
  }
  pivot_row_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<SparseVec> SparseEchelon::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (auto& [col, idx] : pivot_row_) out.push_back(rows_[idx]);
  return out;
}

std::vector<SparseVec> SparseEchelon::nullspace() const {
  std::vector<bool> is_piv(ncols_, false);
  for (auto& [col, idx] : pivot_row_) is_piv[col] = true;
  // column f of the RREF as a map pivot -> entry
  std::vector<SparseVec> by_col(ncols_);
  for (auto& [p, idx] : pivot_row_)
    for (auto& [c, x] : rows_[idx])
      if (!is_piv[c]) by_col[c].emplace_back(p, x);
  SparseEchelon canon(ncols_);
  for (int f = 0; f < ncols_; ++f) {
    if (is_piv[f]) continue;
    SparseVec v;
    for (auto& [p, x] : by_col[f]) v.emplace_back(p, -x);
    v.emplace_back(f, CycNum(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    canon.insert(v);
  }
  return canon.rows();
}

std::optional<std::vector<CycNum>> SparseEchelon::coordinates(const SparseVec& v) const {
  if (!reduce(v).empty()) return std::nullopt;
  std::vector<CycNum> coords;
  coords.reserve(pivot_row_.size());
  for (auto& [col, idx] : pivot_row_) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    coords.push_back(it != v.end() && it->first == col ? it->second : CycNum(0));
  }
  return coords;
}

}  // namespace reflekt

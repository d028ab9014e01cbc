#include "wdec/echelon.hpp"

#include <algorithm>
#include <limits>

#include "wdec/error.hpp"

namespace wdec {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

Vec SparseRow::dense(std::size_t cols) const {
  Vec v(cols);
  for (std::size_t t = 0; t < idx.size(); ++t) v[idx[t]] = val[t];
  return v;
}

SparseRow SparseRow::from_dense(const Vec& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) {
      r.idx.push_back(i);
      r.val.push_back(v[i]);
    }
  }
  return r;
}

RowEchelon::RowEchelon(std::size_t cols)
    : cols_(cols), row_at_(cols, npos), work_(cols), last_pivot_(cols) {}

std::size_t RowEchelon::sweep(std::size_t from) {
  Rational f;
  std::size_t first = cols_;
  for (std::size_t c = from; c < cols_; ++c) {
    if (sgn(work_[c]) == 0) continue;
    std::size_t r = row_at_[c];
    if (r == npos) {
      if (first == cols_) first = c;
      continue;
    }
    f = work_[c];
    const SparseRow& row = rows_[r];
    for (std::size_t t = 0; t < row.idx.size(); ++t) {
      work_[row.idx[t]] -= f * row.val[t];
    }
  }
  return first;
}

SparseRow RowEchelon::harvest(std::size_t from) {
  SparseRow out;
  for (std::size_t c = from; c < cols_; ++c) {
    if (sgn(work_[c]) != 0) {
      out.idx.push_back(c);
      out.val.push_back(work_[c]);
      work_[c] = 0;
    }
  }
  return out;
}

bool RowEchelon::insert(const Vec& v) {
  if (v.size() != cols_) {
    throw Error(ErrorKind::input, "RowEchelon::insert: length mismatch");
  }
  return insert(SparseRow::from_dense(v));
}

bool RowEchelon::insert(const SparseRow& v) {
  last_pivot_ = cols_;
  if (v.empty()) return false;
  std::size_t from = v.idx.front();
  for (std::size_t t = 0; t < v.idx.size(); ++t) {
    if (v.idx[t] >= cols_) throw Error(ErrorKind::input, "RowEchelon::insert: column out of range");
    work_[v.idx[t]] = v.val[t];
  }
  std::size_t lead = sweep(from);
  SparseRow row = harvest(from);
  if (lead == cols_) return false;
  Rational inv = 1 / row.val.front();
  for (auto& x : row.val) x *= inv;
  row_at_[lead] = rows_.size();
  rows_.push_back(std::move(row));
  last_pivot_ = lead;
  return true;
}

Vec RowEchelon::reduce(const Vec& v) {
  if (v.size() != cols_) {
    throw Error(ErrorKind::input, "RowEchelon::reduce: length mismatch");
  }
  for (std::size_t c = 0; c < cols_; ++c) work_[c] = v[c];
  sweep(0);
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(work_[c]) != 0) {
      out[c] = work_[c];
      work_[c] = 0;
    }
  }
  return out;
}

bool RowEchelon::contains(const Vec& v) { return is_zero(reduce(v)); }

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p;
  p.reserve(rows_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_at_[c] != npos) p.push_back(c);
  }
  return p;
}

std::vector<SparseRow> RowEchelon::canonical_sparse_rows() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<SparseRow> reduced(piv.size());
  // pivot column -> position in `piv`
  std::vector<std::size_t> slot(cols_, npos);
  for (std::size_t s = 0; s < piv.size(); ++s) slot[piv[s]] = s;

  Vec acc(cols_);
  Rational f;
  for (std::size_t s = piv.size(); s-- > 0;) {
    const SparseRow& row = rows_[row_at_[piv[s]]];
    for (std::size_t t = 0; t < row.idx.size(); ++t) acc[row.idx[t]] = row.val[t];
    for (std::size_t c = piv[s] + 1; c < cols_; ++c) {
      if (slot[c] == npos || sgn(acc[c]) == 0) continue;
      f = acc[c];
      const SparseRow& lower = reduced[slot[c]];
      for (std::size_t t = 0; t < lower.idx.size(); ++t) {
        acc[lower.idx[t]] -= f * lower.val[t];
      }
    }
    SparseRow out;
    for (std::size_t c = piv[s]; c < cols_; ++c) {
      if (sgn(acc[c]) != 0) {
        out.idx.push_back(c);
        out.val.push_back(acc[c]);
        acc[c] = 0;
      }
    }
    reduced[s] = std::move(out);
  }
  return reduced;
}

std::vector<Vec> RowEchelon::canonical_rows() const {
  std::vector<Vec> out;
  for (const auto& r : canonical_sparse_rows()) out.push_back(r.dense(cols_));
  return out;
}

}  // namespace wdec

#pragma once

#include <vector>

#include "dp4/binary_form.hpp"

namespace dp4 {

/// Bihomogeneous form in (s,t;u,v). Row j holds the coefficient of
/// u^(n-j) v^j, a binary form in (s,t) of degree m + j*twist. With
/// twist = 0 this is an ordinary form of bidegree (m,n); a nonzero twist
/// describes sections on a Hirzebruch surface, where the coefficient
/// degrees drift linearly in j. Rows whose nominal degree is negative are
/// zero and stored as the zero constant.
class BiForm {
 public:
  BiForm() = default;
  BiForm(int m, int n, int twist = 0) : m_(m), n_(n), twist_(twist) {
    if (n < 0) throw input_error("negative (u,v)-degree");
    rows_.clear();
    for (int j = 0; j <= n; ++j) rows_.emplace_back(std::max(row_degree(j), 0));
  }
  BiForm(int m, int n, int twist, std::vector<BinaryForm> rows) : BiForm(m, n, twist) {
    if (rows.size() != static_cast<std::size_t>(n) + 1) throw input_error("biform needs n+1 rows");
    for (int j = 0; j <= n; ++j) set_row(j, rows[static_cast<std::size_t>(j)]);
  }

  int m() const { return m_; }
  int n() const { return n_; }
  int twist() const { return twist_; }
  /// Nominal (s,t)-degree of row j.
  int row_degree(int j) const { return m_ + j * twist_; }
  const BinaryForm& row(int j) const { return rows_[static_cast<std::size_t>(j)]; }
  const std::vector<BinaryForm>& rows() const { return rows_; }

  void set_row(int j, const BinaryForm& f) {
    const int d = row_degree(j);
    if (d < 0) {
      if (!f.is_zero()) throw input_error("nonzero row of negative degree");
      rows_[static_cast<std::size_t>(j)] = BinaryForm(0);
      return;
    }
    if (f.degree() != d) {
      if (f.is_zero()) {
        rows_[static_cast<std::size_t>(j)] = BinaryForm(d);
        return;
      }
      throw input_error("biform row has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(d));
    }
    rows_[static_cast<std::size_t>(j)] = f;
  }

  bool is_zero() const {
    for (const auto& r : rows_)
      if (!r.is_zero()) return false;
    return true;
  }

  /// The binary form in (u,v) obtained by fixing (s,t).
  BinaryForm fiber(const Rational& s, const Rational& t) const {
    BinaryForm f(n_);
    for (int j = 0; j <= n_; ++j)
      if (row_degree(j) >= 0) f[j] = evaluate(row(j), s, t);
    return f;
  }

  friend BiForm operator*(const BiForm& a, const BiForm& b) {
    if (a.twist_ != b.twist_) throw input_error("multiplying biforms with different twists");
    BiForm r(a.m_ + b.m_, a.n_ + b.n_, a.twist_);
    for (int i = 0; i <= a.n_; ++i)
      for (int j = 0; j <= b.n_; ++j) {
        if (a.row(i).is_zero() || b.row(j).is_zero()) continue;
        r.rows_[static_cast<std::size_t>(i + j)] = r.row(i + j) + a.row(i) * b.row(j);
      }
    return r;
  }
  friend bool operator==(const BiForm& a, const BiForm& b) {
    if (a.n_ != b.n_) return false;
    for (int j = 0; j <= a.n_; ++j) {
      if (a.row(j).is_zero() && b.row(j).is_zero()) continue;
      if (!(a.row(j) == b.row(j))) return false;
    }
    return true;
  }

 private:
  int m_ = 0, n_ = 0, twist_ = 0;
  std::vector<BinaryForm> rows_{BinaryForm(0)};
};

/// Biform with n inferred from the number of rows.
inline BiForm biform_from_rows(int m, int twist, std::vector<BinaryForm> rows) {
  const int n = static_cast<int>(rows.size()) - 1;
  return BiForm(m, n, twist, std::move(rows));
}

}  // namespace dp4

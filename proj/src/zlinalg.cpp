#include "heiscurve/zlinalg.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace heis {

namespace {
std::atomic<bool> g_snf_verify{false};
}

void set_snf_verify(bool on) { g_snf_verify = on; }
bool snf_verify_enabled() { return g_snf_verify; }

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
  IntMatrix r(rows_, o.cols_);
  Int tmp;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        tmp = aik * o.at(k, j);
        r.at(i, j) += tmp;
      }
    }
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < cols_; ++j)
      os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < torsion.size(); ++i)
    os << torsion[i].get_str() << (i + 1 < torsion.size() ? "," : "");
  os << "] free_rank=" << free_rank;
  return os.str();
}

namespace {

// Elementary operations applied to A are mirrored into U/V; the mirrors
// into uinv/vinv are the inverse operations, so U*uinv = V*vinv = I is
// maintained throughout.
struct SnfWork {
  IntMatrix a, u, v, vinv;
  bool transforms;

  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (transforms) u.swap_rows(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (transforms) {
      v.swap_cols(i, j);
      vinv.swap_rows(i, j);
    }
  }
  void row_add(std::size_t i, std::size_t j, const Int& k) {
    a.add_row(i, j, k);
    if (transforms) u.add_row(i, j, k);
  }
  void col_add(std::size_t i, std::size_t j, const Int& k) {
    a.add_col(i, j, k);
    if (transforms) {
      v.add_col(i, j, k);
      vinv.add_row(j, i, -k);  // inverse of the column operation
    }
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    if (transforms) u.negate_row(i);
  }
  void col_negate(std::size_t i) {
    a.negate_col(i);
    if (transforms) {
      v.negate_col(i);
      vinv.negate_row(i);
    }
  }
};

// Locate a nonzero entry of minimal absolute value in the trailing block.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pr,
                std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& e = a.at(i, j);
      if (e == 0) continue;
      Int ab = abs(e);
      if (!found || ab < best) {
        found = true;
        best = ab;
        pr = i;
        pc = j;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& a0, bool want_transforms) {
  const std::size_t m = a0.rows(), n = a0.cols();
  SnfWork w{a0,
            want_transforms ? IntMatrix::identity(m) : IntMatrix(),
            want_transforms ? IntMatrix::identity(n) : IntMatrix(),
            want_transforms ? IntMatrix::identity(n) : IntMatrix(),
            want_transforms};

  const std::size_t k = std::min(m, n);
  Int q, r;
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pr, pc;
    if (!find_pivot(w.a, t, pr, pc)) break;
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    for (;;) {
      // clear column t below/above the pivot
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.a.at(i, t) == 0) continue;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.a.at(i, t).get_mpz_t(),
                    w.a.at(t, t).get_mpz_t());
        w.row_add(i, t, -q);
        if (w.a.at(i, t) != 0) dirty = true;  // remainder left; smaller pivot
      }
      if (dirty) {  // a smaller entry appeared in column t
        std::size_t br = t;
        for (std::size_t i = t; i < m; ++i)
          if (w.a.at(i, t) != 0 &&
              (w.a.at(br, t) == 0 || abs(w.a.at(i, t)) < abs(w.a.at(br, t))))
            br = i;
        w.row_swap(t, br);
        continue;
      }
      bool cdirty = false;
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.a.at(t, j) == 0) continue;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.a.at(t, j).get_mpz_t(),
                    w.a.at(t, t).get_mpz_t());
        w.col_add(j, t, -q);
        if (w.a.at(t, j) != 0) cdirty = true;
      }
      if (cdirty) {
        std::size_t bc = t;
        for (std::size_t j = t; j < n; ++j)
          if (w.a.at(t, j) != 0 &&
              (w.a.at(t, bc) == 0 || abs(w.a.at(t, j)) < abs(w.a.at(t, bc))))
            bc = j;
        w.col_swap(t, bc);
        continue;
      }
      break;  // row t and column t are clear outside the pivot
    }
    if (w.a.at(t, t) < 0) w.row_negate(t);
  }

  // enforce the divisibility chain d_t | d_{t+1}
  for (std::size_t t = 0; t + 1 < k; ++t) {
    if (w.a.at(t, t) == 0) continue;
    for (std::size_t s = t + 1; s < k; ++s) {
      if (w.a.at(s, s) % w.a.at(t, t) == 0) continue;
      // fold d_s into position (t,t): gcd there, lcm at (s,s)
      w.col_add(t, s, 1);
      for (;;) {
        // one round of two-entry column elimination in rows t, s
        if (w.a.at(s, t) != 0) {
          if (w.a.at(t, t) == 0 || (w.a.at(s, t) != 0 &&
                                    abs(w.a.at(s, t)) < abs(w.a.at(t, t))))
            w.row_swap(t, s);
          mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.a.at(s, t).get_mpz_t(),
                      w.a.at(t, t).get_mpz_t());
          w.row_add(s, t, -q);
          if (w.a.at(s, t) != 0) continue;
        }
        if (w.a.at(t, s) != 0) {
          mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.a.at(t, s).get_mpz_t(),
                      w.a.at(t, t).get_mpz_t());
          w.col_add(s, t, -q);
          if (w.a.at(t, s) != 0) {
            w.col_swap(t, s);
            continue;
          }
        }
        break;
      }
      if (w.a.at(t, t) < 0) w.row_negate(t);
      if (w.a.at(s, s) < 0) w.row_negate(s);
    }
  }

  SnfResult res;
  res.d = std::move(w.a);
  res.u = std::move(w.u);
  res.v = std::move(w.v);
  res.vinv = std::move(w.vinv);
  for (std::size_t t = 0; t < k; ++t)
    if (res.d.at(t, t) != 0) ++res.rank;

  if (g_snf_verify && want_transforms) {
    if (!(res.u * a0 * res.v == res.d))
      throw std::logic_error("snf verification failed: U*A*V != D");
    if (!(res.v * res.vinv == IntMatrix::identity(n)))
      throw std::logic_error("snf verification failed: V*Vinv != I");
    for (std::size_t t = 0; t + 1 < k; ++t)
      if (res.d.at(t, t) != 0 && res.d.at(t + 1, t + 1) != 0 &&
          res.d.at(t + 1, t + 1) % res.d.at(t, t) != 0)
        throw std::logic_error("snf verification failed: divisibility chain");
  }
  return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult s = snf(a);
  const std::size_t n = a.cols();
  IntMatrix k(n, n - s.rank);
  for (std::size_t j = s.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k.at(i, j - s.rank) = s.v.at(i, j);
  return k;
}

AbelianInvariants quotient_invariants(const IntMatrix& sub,
                                      std::size_t ambient_rank) {
  if (sub.rows() != ambient_rank && !(sub.rows() == 0 && sub.cols() == 0))
    throw std::invalid_argument("quotient_invariants: row count != ambient");
  AbelianInvariants inv;
  if (sub.cols() == 0) {
    inv.free_rank = ambient_rank;
    return inv;
  }
  SnfResult s = snf(sub, false);
  inv.free_rank = ambient_rank - s.rank;
  for (std::size_t t = 0; t < s.rank; ++t) {
    Int d = abs(s.d.at(t, t));
    if (d >= 2) inv.torsion.push_back(d);
  }
  return inv;
}

IntMatrix hnf(const IntMatrix& a0) {
  IntMatrix a = a0;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t col = 0;
  Int q, r;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    // find a column with nonzero entry in this row, gcd-combine the rest
    std::size_t p = col;
    while (p < n && a.at(row, p) == 0) ++p;
    if (p == n) continue;
    a.swap_cols(col, p);
    for (std::size_t j = col + 1; j < n; ++j) {
      while (a.at(row, j) != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.at(row, j).get_mpz_t(),
                    a.at(row, col).get_mpz_t());
        a.add_col(j, col, -q);
        if (a.at(row, j) != 0) a.swap_cols(col, j);
      }
    }
    if (a.at(row, col) < 0) a.negate_col(col);
    // reduce pivots of earlier columns against this one
    for (std::size_t j = 0; j < col; ++j) {
      mpz_fdiv_q(q.get_mpz_t(), a.at(row, j).get_mpz_t(),
                 a.at(row, col).get_mpz_t());
      a.add_col(j, col, -q);
    }
    ++col;
  }
  IntMatrix h(m, col);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < col; ++j) h.at(i, j) = a.at(i, j);
  return h;
}

IntMatrix solve_columns(const IntMatrix& basis, const IntMatrix& rhs) {
  if (basis.rows() != rhs.rows())
    throw std::invalid_argument("solve_columns: row mismatch");
  SnfResult s = snf(basis);
  // basis = U^{-1} D V^{-1}; basis*X = rhs  <=>  D (V^{-1} X) = U rhs
  IntMatrix urhs = s.u * rhs;
  const std::size_t n = basis.cols();
  IntMatrix y(n, rhs.cols());
  for (std::size_t i = 0; i < urhs.rows(); ++i)
    for (std::size_t j = 0; j < urhs.cols(); ++j) {
      if (i < n && i < s.rank) {
        Int& d = s.d.at(i, i);
        if (urhs.at(i, j) % d != 0)
          throw std::domain_error("solve_columns: no integral solution");
        y.at(i, j) = urhs.at(i, j) / d;
      } else if (urhs.at(i, j) != 0) {
        throw std::domain_error("solve_columns: rhs outside column span");
      }
    }
  return s.v * y;
}

Int bareiss_det(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = t / prev;  // exact by Bareiss
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank_q(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a.at(p, col) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(row, p);
    for (std::size_t i = row + 1; i < m; ++i)
      for (std::size_t j = col + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(row, col) - a.at(i, col) * a.at(row, j);
        a.at(i, j) = t / prev;
      }
    for (std::size_t i = row + 1; i < m; ++i) a.at(i, col) = 0;
    prev = a.at(row, col);
    ++row;
  }
  return row;
}

}  // namespace heis

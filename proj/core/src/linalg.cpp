#include "finsite/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "finsite/errors.hpp"

namespace finsite {

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::column(std::span<Scalar const> entries) {
    Matrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      m(i, 0) = entries[i];
    }
    return m;
  }

  std::vector<Scalar> Matrix::column_vector(std::size_t j) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      v[i] = (*this)(i, j);
    }
    return v;
  }

  std::vector<Scalar> Matrix::row_vector(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar const& s) { return s == 0; });
  }

  namespace linalg {

    namespace {
      // Residue matrices for the F_p fast path.
      using Residues = std::vector<std::uint64_t>;

      Residues to_residues(Field const& k, Matrix const& a) {
        Residues r(a.rows() * a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
          for (std::size_t j = 0; j < a.cols(); ++j) {
            r[i * a.cols() + j] = k.residue(k.reduce(a(i, j)));
          }
        }
        return r;
      }

      Matrix from_residues(Residues const& r, std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = r[i * cols + j];
          }
        }
        return m;
      }

      std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
        std::uint64_t result = 1, e = p - 2;
        while (e > 0) {
          if (e & 1) {
            result = result * a % p;
          }
          a = a * a % p;
          e >>= 1;
        }
        return result;
      }

      Echelon row_reduce_mod_p(Field const& k, Matrix const& a) {
        std::uint64_t const p = k.characteristic();
        std::size_t const rows = a.rows(), cols = a.cols();
        Residues m = to_residues(k, a);
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
          std::size_t piv = r;
          while (piv < rows && m[piv * cols + c] == 0) {
            ++piv;
          }
          if (piv == rows) {
            continue;
          }
          if (piv != r) {
            std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                             m.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                             m.begin() + static_cast<std::ptrdiff_t>(r * cols));
          }
          std::uint64_t const iv = inv_mod(m[r * cols + c], p);
          for (std::size_t j = c; j < cols; ++j) {
            m[r * cols + j] = m[r * cols + j] * iv % p;
          }
          for (std::size_t i = 0; i < rows; ++i) {
            std::uint64_t const f = m[i * cols + c];
            if (i == r || f == 0) {
              continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
              m[i * cols + j] = (m[i * cols + j] + (p - f) * m[r * cols + j]) % p;
            }
          }
          pivots.push_back(c);
          ++r;
        }
        return {from_residues(m, rows, cols), std::move(pivots)};
      }

      Echelon row_reduce_rational(Matrix m) {
        std::size_t const rows = m.rows(), cols = m.cols();
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
          std::size_t piv = r;
          while (piv < rows && m(piv, c) == 0) {
            ++piv;
          }
          if (piv == rows) {
            continue;
          }
          if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) {
              std::swap(m(piv, j), m(r, j));
            }
          }
          Scalar const iv = 1 / m(r, c);
          for (std::size_t j = c; j < cols; ++j) {
            m(r, j) *= iv;
          }
          for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) {
              continue;
            }
            Scalar const f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
              m(i, j) -= f * m(r, j);
            }
          }
          pivots.push_back(c);
          ++r;
        }
        return {std::move(m), std::move(pivots)};
      }

      void require(bool ok, char const* what) {
        if (!ok) {
          throw PreconditionError(std::string("matrix dimension mismatch in ") + what);
        }
      }
    }  // namespace

    Matrix multiply(Field const& k, Matrix const& a, Matrix const& b) {
      require(a.cols() == b.rows(), "multiply");
      std::size_t const n = a.rows(), m = a.cols(), q = b.cols();
      if (k.is_finite()) {
        std::uint64_t const p = k.characteristic();
        Residues ra = to_residues(k, a), rb = to_residues(k, b), rc(n * q, 0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t l = 0; l < m; ++l) {
            std::uint64_t const x = ra[i * m + l];
            if (x == 0) {
              continue;
            }
            for (std::size_t j = 0; j < q; ++j) {
              rc[i * q + j] = (rc[i * q + j] + x * rb[l * q + j]) % p;
            }
          }
        }
        return from_residues(rc, n, q);
      }
      Matrix c(n, q);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < m; ++l) {
          if (a(i, l) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < q; ++j) {
            c(i, j) += a(i, l) * b(l, j);
          }
        }
      }
      return c;
    }

    Matrix add(Field const& k, Matrix const& a, Matrix const& b) {
      require(a.rows() == b.rows() && a.cols() == b.cols(), "add");
      Matrix c(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = k.add(a(i, j), b(i, j));
        }
      }
      return c;
    }

    Matrix subtract(Field const& k, Matrix const& a, Matrix const& b) {
      require(a.rows() == b.rows() && a.cols() == b.cols(), "subtract");
      Matrix c(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = k.sub(a(i, j), b(i, j));
        }
      }
      return c;
    }

    Matrix scale(Field const& k, Scalar const& s, Matrix const& a) {
      Matrix c(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = k.mul(s, a(i, j));
        }
      }
      return c;
    }

    std::vector<Scalar> apply(Field const& k, Matrix const& a, std::span<Scalar const> v) {
      require(a.cols() == v.size(), "apply");
      std::vector<Scalar> out(a.rows(), Scalar(0));
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          if (a(i, j) != 0 && v[j] != 0) {
            out[i] = k.add(out[i], k.mul(a(i, j), v[j]));
          }
        }
      }
      return out;
    }

    Matrix direct_sum(Matrix const& a, Matrix const& b) {
      Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = a(i, j);
        }
      }
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(a.rows() + i, a.cols() + j) = b(i, j);
        }
      }
      return c;
    }

    Matrix hconcat(Matrix const& a, Matrix const& b) {
      require(a.rows() == b.rows(), "hconcat");
      Matrix c(a.rows(), a.cols() + b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = a(i, j);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, a.cols() + j) = b(i, j);
        }
      }
      return c;
    }

    Matrix vconcat(Matrix const& a, Matrix const& b) {
      require(a.cols() == b.cols(), "vconcat");
      return hconcat(a.transpose(), b.transpose()).transpose();
    }

    Echelon row_reduce(Field const& k, Matrix a) {
      if (k.is_finite()) {
        return row_reduce_mod_p(k, a);
      }
      return row_reduce_rational(std::move(a));
    }

    std::size_t rank(Field const& k, Matrix const& a) {
      return row_reduce(k, a).pivots.size();
    }

    Matrix nullspace(Field const& k, Matrix const& a) {
      Echelon e = row_reduce(k, a);
      std::size_t const n = a.cols();
      std::vector<bool> is_pivot(n, false);
      for (auto c : e.pivots) {
        is_pivot[c] = true;
      }
      std::vector<std::size_t> free;
      for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
          free.push_back(c);
        }
      }
      Matrix basis(n, free.size());
      for (std::size_t j = 0; j < free.size(); ++j) {
        basis(free[j], j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
          basis(e.pivots[r], j) = k.neg(e.reduced(r, free[j]));
        }
      }
      return basis;
    }

    Matrix column_basis(Field const& k, Matrix const& a) {
      Echelon e = row_reduce(k, a.transpose());
      Matrix basis(a.rows(), e.pivots.size());
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
          basis(i, r) = e.reduced(r, i);
        }
      }
      return basis;
    }

    std::optional<Matrix> inverse(Field const& k, Matrix const& a) {
      if (a.rows() != a.cols()) {
        return std::nullopt;
      }
      std::size_t const n = a.rows();
      Echelon e = row_reduce(k, hconcat(a, Matrix::identity(n)));
      if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        return std::nullopt;
      }
      Matrix inv(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          inv(i, j) = e.reduced(i, n + j);
        }
      }
      return inv;
    }

    bool is_invertible(Field const& k, Matrix const& a) {
      return a.rows() == a.cols() && rank(k, a) == a.rows();
    }

    std::optional<Matrix> solve(Field const& k, Matrix const& a, Matrix const& b) {
      require(a.rows() == b.rows(), "solve");
      std::size_t const n = a.cols();
      Echelon e = row_reduce(k, hconcat(a, b));
      Matrix x(n, b.cols());
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) {
          return std::nullopt;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          x(e.pivots[r], j) = e.reduced(r, n + j);
        }
      }
      return x;
    }

  }  // namespace linalg

  Subspace::Subspace(Field field, Matrix basis)
      : field_(field), ambient_(basis.rows()), basis_(std::move(basis)) {
    // Choose rows of the basis forming an invertible square block; the
    // inverse of that block, scattered back, is a left inverse.
    linalg::Echelon e = linalg::row_reduce(field_, basis_.transpose());
    if (e.pivots.size() != basis_.cols()) {
      throw InvalidData("subspace basis is not linearly independent");
    }
    std::size_t const d = basis_.cols();
    Matrix square(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t j = 0; j < d; ++j) {
        square(r, j) = basis_(e.pivots[r], j);
      }
    }
    Matrix inv = *linalg::inverse(field_, square);
    left_inverse_ = Matrix(d, ambient_);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t r = 0; r < d; ++r) {
        left_inverse_(i, e.pivots[r]) = inv(i, r);
      }
    }
  }

  std::vector<Scalar> Subspace::coordinates(std::span<Scalar const> v) const {
    std::vector<Scalar> c = linalg::apply(field_, left_inverse_, v);
    std::vector<Scalar> back = linalg::apply(field_, basis_, c);
    if (!std::equal(back.begin(), back.end(), v.begin(), v.end())) {
      throw InvalidData("vector does not lie in the subspace");
    }
    return c;
  }

  Matrix Subspace::coordinates(Matrix const& m) const {
    Matrix out(dim(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::vector<Scalar> col = m.column_vector(j);
      std::vector<Scalar> c = coordinates(col);
      for (std::size_t i = 0; i < c.size(); ++i) {
        out(i, j) = c[i];
      }
    }
    return out;
  }

  bool Subspace::contains(std::span<Scalar const> v) const {
    std::vector<Scalar> c = linalg::apply(field_, left_inverse_, v);
    std::vector<Scalar> back = linalg::apply(field_, basis_, c);
    return std::equal(back.begin(), back.end(), v.begin(), v.end());
  }

  IntertwinerSystem::IntertwinerSystem(Field field, std::vector<Shape> blocks)
      : field_(field), blocks_(std::move(blocks)) {
    for (auto const& b : blocks_) {
      offsets_.push_back(unknowns_);
      unknowns_ += b.rows * b.cols;
    }
  }

  void IntertwinerSystem::add(std::size_t left, Matrix const& l, Matrix const& r, std::size_t right) {
    Shape const& a = blocks_.at(left);
    Shape const& b = blocks_.at(right);
    // X_a is a.rows x a.cols, L is a.cols x b.cols; R is a.rows x b.rows.
    if (l.rows() != a.cols || l.cols() != b.cols || r.rows() != a.rows || r.cols() != b.rows) {
      throw PreconditionError("intertwiner equation has mismatched shapes");
    }
    for (std::size_t i = 0; i < a.rows; ++i) {
      for (std::size_t c = 0; c < b.cols; ++c) {
        std::vector<Scalar> row(unknowns_, Scalar(0));
        for (std::size_t j = 0; j < a.cols; ++j) {
          Scalar& slot = row[offsets_[left] + i * a.cols + j];
          slot = field_.add(slot, l(j, c));
        }
        for (std::size_t m = 0; m < b.rows; ++m) {
          Scalar& slot = row[offsets_[right] + m * b.cols + c];
          slot = field_.sub(slot, r(i, m));
        }
        if (std::any_of(row.begin(), row.end(), [](Scalar const& s) { return s != 0; })) {
          rows_.push_back(std::move(row));
        }
      }
    }
  }

  std::vector<std::vector<Matrix>> IntertwinerSystem::solve() const {
    Matrix system(rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < unknowns_; ++j) {
        system(i, j) = rows_[i][j];
      }
    }
    Matrix null = linalg::nullspace(field_, system);
    std::vector<std::vector<Matrix>> solutions;
    for (std::size_t s = 0; s < null.cols(); ++s) {
      std::vector<Matrix> blocks;
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        Matrix x(blocks_[b].rows, blocks_[b].cols);
        for (std::size_t i = 0; i < x.rows(); ++i) {
          for (std::size_t j = 0; j < x.cols(); ++j) {
            x(i, j) = null(offsets_[b] + i * x.cols() + j, s);
          }
        }
        blocks.push_back(std::move(x));
      }
      solutions.push_back(std::move(blocks));
    }
    return solutions;
  }

  IntertwinerSystem::Search IntertwinerSystem::find_invertible(std::uint64_t seed) const {
    Search result;
    for (auto const& b : blocks_) {
      if (b.rows != b.cols) {
        result.exhaustive = true;
        return result;
      }
    }
    std::vector<std::vector<Matrix>> basis = solve();
    auto all_invertible = [&](std::vector<Matrix> const& blocks) {
      return std::all_of(blocks.begin(), blocks.end(),
                         [&](Matrix const& m) { return linalg::is_invertible(field_, m); });
    };
    auto combine = [&](std::vector<Scalar> const& coeffs) {
      std::vector<Matrix> out;
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        Matrix x(blocks_[b].rows, blocks_[b].cols);
        for (std::size_t s = 0; s < basis.size(); ++s) {
          if (coeffs[s] != 0) {
            x = linalg::add(field_, x, linalg::scale(field_, coeffs[s], basis[s][b]));
          }
        }
        out.push_back(std::move(x));
      }
      return out;
    };

    if (unknowns_ == 0) {
      // Every block is 0x0: the empty family is an isomorphism.
      std::vector<Matrix> empty;
      for (auto const& b : blocks_) {
        empty.emplace_back(b.rows, b.cols);
      }
      result.witness = std::move(empty);
      result.exhaustive = true;
      return result;
    }
    for (auto const& candidate : basis) {
      if (all_invertible(candidate)) {
        result.witness = candidate;
        return result;
      }
    }
    std::size_t const m = basis.size();
    if (m == 0) {
      result.exhaustive = true;
      return result;
    }
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Scalar> coeffs(m);
      for (auto& c : coeffs) {
        if (field_.is_finite()) {
          c = field_.from_int(static_cast<std::int64_t>(rng() % field_.characteristic()));
        } else {
          c = Scalar(static_cast<std::int64_t>(rng() % 7) - 3);
        }
      }
      auto candidate = combine(coeffs);
      if (all_invertible(candidate)) {
        result.witness = std::move(candidate);
        return result;
      }
    }
    if (field_.is_finite()) {
      std::uint64_t const p = field_.characteristic();
      double const total = std::pow(static_cast<double>(p), static_cast<double>(m));
      if (total <= 65536.0) {
        std::vector<std::uint64_t> digits(m, 0);
        while (true) {
          std::size_t i = 0;
          while (i < m && ++digits[i] == p) {
            digits[i++] = 0;
          }
          if (i == m) {
            break;
          }
          std::vector<Scalar> coeffs(m);
          for (std::size_t s = 0; s < m; ++s) {
            coeffs[s] = Scalar(digits[s]);
          }
          auto candidate = combine(coeffs);
          if (all_invertible(candidate)) {
            result.witness = std::move(candidate);
            return result;
          }
        }
        result.exhaustive = true;
      }
    }
    return result;
  }

}  // namespace finsite

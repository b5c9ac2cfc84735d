#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "finsite/field.hpp"

namespace finsite {

  //! Dense row-major matrix of exact scalars. A Matrix does not know its
  //! field; every arithmetic routine takes the Field explicitly.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);
    //! Column vector.
    static Matrix column(std::span<Scalar const> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Scalar const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> column_vector(std::size_t j) const;
    std::vector<Scalar> row_vector(std::size_t i) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
  };

  namespace linalg {

    Matrix multiply(Field const& k, Matrix const& a, Matrix const& b);
    Matrix add(Field const& k, Matrix const& a, Matrix const& b);
    Matrix subtract(Field const& k, Matrix const& a, Matrix const& b);
    Matrix scale(Field const& k, Scalar const& s, Matrix const& a);
    std::vector<Scalar> apply(Field const& k, Matrix const& a, std::span<Scalar const> v);
    //! Block matrix with a and b placed on the diagonal.
    Matrix direct_sum(Matrix const& a, Matrix const& b);
    //! Columns of a followed by the columns of b (equal row counts).
    Matrix hconcat(Matrix const& a, Matrix const& b);
    Matrix vconcat(Matrix const& a, Matrix const& b);

    //! Reduced row echelon form together with its pivot columns.
    struct Echelon {
      Matrix reduced;
      std::vector<std::size_t> pivots;
    };

    Echelon row_reduce(Field const& k, Matrix a);
    std::size_t rank(Field const& k, Matrix const& a);
    //! Basis of {v : a v = 0} as the columns of the result. The basis is the
    //! canonical one read off the RREF: the vector for the j-th free column
    //! has a 1 there and 0 in every other free column.
    Matrix nullspace(Field const& k, Matrix const& a);
    //! Canonical basis of the column space (rows of RREF(a^T), transposed).
    Matrix column_basis(Field const& k, Matrix const& a);
    std::optional<Matrix> inverse(Field const& k, Matrix const& a);
    bool is_invertible(Field const& k, Matrix const& a);
    //! Some X with a X = b, if one exists.
    std::optional<Matrix> solve(Field const& k, Matrix const& a, Matrix const& b);

  }  // namespace linalg

  //! A subspace of k^n given by an independent spanning set, with a cached
  //! left inverse so coordinates of members can be read off directly.
  class Subspace {
   public:
    Subspace() = default;
    //! basis columns must be linearly independent.
    Subspace(Field field, Matrix basis);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    Matrix const& basis() const noexcept { return basis_; }
    //! Coordinates c with basis * c == v; throws InvalidData when v is not
    //! in the subspace.
    std::vector<Scalar> coordinates(std::span<Scalar const> v) const;
    //! Applies coordinates() to every column of m.
    Matrix coordinates(Matrix const& m) const;
    bool contains(std::span<Scalar const> v) const;

   private:
    Field field_;
    std::size_t ambient_ = 0;
    Matrix basis_;
    Matrix left_inverse_;
  };

  //! Systems of linear "intertwiner" equations X_a * L = R * X_b between
  //! unknown matrix blocks; used to search for natural isomorphisms and
  //! module isomorphisms.
  class IntertwinerSystem {
   public:
    struct Shape {
      std::size_t rows;
      std::size_t cols;
    };

    IntertwinerSystem(Field field, std::vector<Shape> blocks);

    //! Adds X_left * l == r * X_right.
    void add(std::size_t left, Matrix const& l, Matrix const& r, std::size_t right);

    std::vector<Shape> const& blocks() const noexcept { return blocks_; }

    //! Basis of the solution space, each solution given blockwise.
    std::vector<std::vector<Matrix>> solve() const;

    //! Outcome of a search for a solution all of whose blocks are invertible.
    struct Search {
      std::optional<std::vector<Matrix>> witness;
      //! True when the absence of a witness is a proof (every combination
      //! of the solution basis was tried).
      bool exhaustive = false;
    };

    //! Tries basis elements, then pseudo-random combinations, then (over a
    //! small finite field) every combination of the solution basis.
    Search find_invertible(std::uint64_t seed = 0x5eed) const;

   private:
    Field field_;
    std::vector<Shape> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t unknowns_ = 0;
    std::vector<std::vector<Scalar>> rows_;
  };

}  // namespace finsite

#include "finsite/algebra.hpp"

#include <algorithm>
#include <map>

#include "finsite/errors.hpp"

namespace finsite {

  namespace {

    void add_term(Field const& k, std::vector<FiniteDimAlgebra::Term>& terms, std::size_t idx, Scalar const& c) {
      for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it->first == idx) {
          it->second = k.add(it->second, c);
          if (it->second == 0) {
            terms.erase(it);
          }
          return;
        }
      }
      if (c != 0) {
        terms.emplace_back(idx, c);
      }
    }

  }  // namespace

  FiniteDimAlgebra::FiniteDimAlgebra(Field field, std::vector<std::string> basis,
                                     std::vector<std::vector<Term>> products, std::vector<Scalar> unit)
      : field_(field), basis_(std::move(basis)), products_(std::move(products)), unit_(std::move(unit)) {
    std::size_t const n = basis_.size();
    if (products_.size() != n * n || unit_.size() != n) {
      throw InvalidData("algebra tables do not match the basis size " + std::to_string(n));
    }
    for (auto& terms : products_) {
      std::vector<Term> clean;
      for (auto const& [idx, c] : terms) {
        if (idx >= n) {
          throw InvalidData("structure constant refers to basis index " + std::to_string(idx));
        }
        add_term(field_, clean, idx, field_.reduce(c));
      }
      std::sort(clean.begin(), clean.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      terms = std::move(clean);
    }
    for (auto& u : unit_) {
      u = field_.reduce(u);
    }
  }

  FiniteDimAlgebra FiniteDimAlgebra::ground(Field const& k) {
    return FiniteDimAlgebra(k, {"1"}, {{{0, Scalar(1)}}}, {Scalar(1)});
  }

  FiniteDimAlgebra FiniteDimAlgebra::product_of_fields(Field const& k, std::size_t n) {
    std::vector<std::string> basis;
    std::vector<std::vector<Term>> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back("e" + std::to_string(i + 1));
      products[i * n + i] = {{i, Scalar(1)}};
    }
    return FiniteDimAlgebra(k, std::move(basis), std::move(products), std::vector<Scalar>(n, Scalar(1)));
  }

  FiniteDimAlgebra FiniteDimAlgebra::truncated_polynomial(Field const& k, std::size_t n) {
    std::vector<std::string> basis;
    std::vector<std::vector<Term>> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        if (i + j < n) {
          products[i * n + j] = {{i + j, Scalar(1)}};
        }
      }
    }
    std::vector<Scalar> unit(n, Scalar(0));
    if (n > 0) {
      unit[0] = 1;
    }
    return FiniteDimAlgebra(k, std::move(basis), std::move(products), std::move(unit));
  }

  FiniteDimAlgebra FiniteDimAlgebra::matrix_algebra(Field const& k, std::size_t n) {
    std::size_t const d = n * n;
    std::vector<std::string> basis;
    std::vector<std::vector<Term>> products(d * d);
    std::vector<Scalar> unit(d, Scalar(0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        basis.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
        for (std::size_t c = 0; c < n; ++c) {
          // E_ab E_bc = E_ac
          products[(a * n + b) * d + (b * n + c)] = {{a * n + c, Scalar(1)}};
        }
      }
      unit[a * n + a] = 1;
    }
    return FiniteDimAlgebra(k, std::move(basis), std::move(products), std::move(unit));
  }

  FiniteDimAlgebra FiniteDimAlgebra::from_dense(Field const& k, std::vector<std::string> basis,
                                                std::vector<std::vector<std::vector<Scalar>>> const& c,
                                                std::vector<Scalar> unit) {
    std::size_t const n = basis.size();
    std::vector<std::vector<Term>> products(n * n);
    if (c.size() != n) {
      throw InvalidData("structure constant table has the wrong size");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].size() != n) {
        throw InvalidData("structure constant table has the wrong size");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (c[i][j].size() != n) {
          throw InvalidData("structure constant table has the wrong size");
        }
        for (std::size_t l = 0; l < n; ++l) {
          if (c[i][j][l] != 0) {
            products[i * n + j].emplace_back(l, c[i][j][l]);
          }
        }
      }
    }
    return FiniteDimAlgebra(k, std::move(basis), std::move(products), std::move(unit));
  }

  Scalar FiniteDimAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (auto const& [idx, c] : product(i, j)) {
      if (idx == k) {
        return c;
      }
    }
    return Scalar(0);
  }

  std::vector<std::vector<std::vector<Scalar>>> FiniteDimAlgebra::dense() const {
    std::size_t const n = dim();
    std::vector<std::vector<std::vector<Scalar>>> c(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (auto const& [idx, v] : product(i, j)) {
          c[i][j][idx] = v;
        }
      }
    }
    return c;
  }

  std::vector<Scalar> FiniteDimAlgebra::multiply(std::span<Scalar const> a, std::span<Scalar const> b) const {
    std::size_t const n = dim();
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) {
          continue;
        }
        auto ab = field_.mul(a[i], b[j]);
        for (auto const& [idx, c] : product(i, j)) {
          out[idx] = field_.add(out[idx], field_.mul(ab, c));
        }
      }
    }
    return out;
  }

  Matrix FiniteDimAlgebra::left(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      for (auto const& [idx, c] : product(i, j)) {
        m(idx, j) = c;
      }
    }
    return m;
  }

  Matrix FiniteDimAlgebra::right(std::size_t j) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      for (auto const& [idx, c] : product(i, j)) {
        m(idx, i) = c;
      }
    }
    return m;
  }

  std::vector<Scalar> FiniteDimAlgebra::basis_vector(std::size_t i) const {
    std::vector<Scalar> v(dim());
    v.at(i) = 1;
    return v;
  }

  AlgebraReport verify_algebra(FiniteDimAlgebra const& a) {
    AlgebraReport report;
    std::size_t const n = a.dim();
    auto const& k = a.field();
    auto const& names = a.basis();
    // (b_i b_j) b_l against b_i (b_j b_l), expanded through the sparse table.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          std::map<std::size_t, Scalar> lhs;
          std::map<std::size_t, Scalar> rhs;
          for (auto const& [p, c] : a.product(i, j)) {
            for (auto const& [q, d] : a.product(p, l)) {
              lhs[q] = k.add(lhs[q], k.mul(c, d));
            }
          }
          for (auto const& [p, c] : a.product(j, l)) {
            for (auto const& [q, d] : a.product(i, p)) {
              rhs[q] = k.add(rhs[q], k.mul(c, d));
            }
          }
          std::erase_if(lhs, [](auto const& e) { return e.second == 0; });
          std::erase_if(rhs, [](auto const& e) { return e.second == 0; });
          if (lhs != rhs) {
            report.violations.push_back("associativity fails on (" + names[i] + "," + names[j] + "," + names[l]
                                        + ")");
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto b = a.basis_vector(i);
      if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) {
        report.violations.push_back("unit does not act as identity on " + names[i]);
      }
    }
    return report;
  }

  bool is_algebra_homomorphism(FiniteDimAlgebra const& a, FiniteDimAlgebra const& b, Matrix const& m) {
    auto const& k = a.field();
    if (m.rows() != b.dim() || m.cols() != a.dim()) {
      return false;
    }
    if (linalg::apply(k, m, a.unit()) != b.unit()) {
      return false;
    }
    std::vector<std::vector<Scalar>> images;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      images.push_back(m.column_vector(i));
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::vector<Scalar> ab(a.dim());
        for (auto const& [idx, c] : a.product(i, j)) {
          ab[idx] = c;
        }
        if (linalg::apply(k, m, ab) != b.multiply(images[i], images[j])) {
          return false;
        }
      }
    }
    return true;
  }

  AlgebraPresheaf::AlgebraPresheaf(FiniteCategory cat, std::vector<FiniteDimAlgebra> algebras,
                                   std::vector<Matrix> maps)
      : algebras_(std::move(algebras)) {
    if (algebras_.size() != cat.object_count()) {
      throw InvalidData("algebra presheaf needs an algebra for every object");
    }
    Field k = algebras_.empty() ? Field() : algebras_.front().field();
    std::vector<std::size_t> dims;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto const& a = algebras_[x];
      if (!(a.field() == k)) {
        throw InvalidData("algebras over different fields");
      }
      auto report = verify_algebra(a);
      if (!report.ok()) {
        throw InvalidData("algebra at " + cat.object_name(x) + ": " + report.violations.front());
      }
      dims.push_back(a.dim());
    }
    underlying_ = LinearPresheaf(cat, k, std::move(dims), std::move(maps));
    auto const& c = underlying_.category();
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      if (!is_algebra_homomorphism(algebras_[c.cod(f)], algebras_[c.dom(f)], underlying_.map(f))) {
        throw InvalidData("map for " + c.morphism_name(f) + " is not a unital algebra homomorphism");
      }
    }
  }

  AlgebraPresheaf AlgebraPresheaf::constant(FiniteCategory const& cat, FiniteDimAlgebra const& a) {
    return AlgebraPresheaf(cat, std::vector<FiniteDimAlgebra>(cat.object_count(), a),
                           std::vector<Matrix>(cat.morphism_count(), Matrix::identity(a.dim())));
  }

  FiniteDimAlgebra named_algebra(Field const& k, std::string_view name) {
    if (name == "k") {
      return FiniteDimAlgebra::ground(k);
    }
    if (name == "kxk") {
      return FiniteDimAlgebra::product_of_fields(k, 2);
    }
    if (name == "k[t]/t2") {
      return FiniteDimAlgebra::truncated_polynomial(k, 2);
    }
    if (name == "k[t]/t3") {
      return FiniteDimAlgebra::truncated_polynomial(k, 3);
    }
    if (name == "M2") {
      return FiniteDimAlgebra::matrix_algebra(k, 2);
    }
    throw InvalidData("unknown algebra '" + std::string(name) + "' (expected k, kxk, k[t]/t2, k[t]/t3 or M2)");
  }

}  // namespace finsite

#pragma once

// Small rings and modules shared by the unit and acceptance tests.

#include <map>
#include <string>
#include <vector>

#include "finsite/finsite.hpp"

namespace fixtures {

  using namespace finsite;

  //! On chain3: R(x) = k, R(y) = R(z) = k[t]/t^2, R(g) = id, R(f) and
  //! R(gf) the augmentation k[t]/t^2 -> k.
  inline AlgebraPresheaf chain3_dual_numbers(Field const& k) {
    auto c = chain_poset(3);
    auto a = FiniteDimAlgebra::ground(k);
    auto b = FiniteDimAlgebra::truncated_polynomial(k, 2);
    std::vector<FiniteDimAlgebra> algs{a, b, b};
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      auto dx = algs[c.dom(f)].dim();
      auto dy = algs[c.cod(f)].dim();
      Matrix m(dx, dy);
      if (dx == dy) {
        m = Matrix::identity(dx);
      } else {
        m(0, 0) = 1;
      }
      maps.push_back(m);
    }
    return AlgebraPresheaf(c, algs, maps);
  }

  //! On the involution category: R(x) = k x k with h swapping the factors,
  //! R(y) = k, and f, g the diagonal k -> k x k.
  inline AlgebraPresheaf involution_swap(Field const& k) {
    auto c = example_involution();
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      auto const& n = c.morphism_name(f);
      if (n == "1x") {
        maps.push_back(Matrix::identity(2));
      } else if (n == "h") {
        Matrix m(2, 2);
        m(0, 1) = 1;
        m(1, 0) = 1;
        maps.push_back(m);
      } else if (n == "1y") {
        maps.push_back(Matrix::identity(1));
      } else {
        Matrix m(2, 1);
        m(0, 0) = 1;
        m(1, 0) = 1;
        maps.push_back(m);
      }
    }
    return AlgebraPresheaf(c, {FiniteDimAlgebra::product_of_fields(k, 2), FiniteDimAlgebra::ground(k)}, maps);
  }

  //! C2 acting on k x k by swapping coordinates.
  inline AlgebraPresheaf c2_swap(Field const& k) {
    auto c = group_category(FiniteGroup::cyclic(2));
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      if (c.is_identity(f)) {
        maps.push_back(Matrix::identity(2));
      } else {
        Matrix m(2, 2);
        m(0, 1) = 1;
        m(1, 0) = 1;
        maps.push_back(m);
      }
    }
    return AlgebraPresheaf(c, {FiniteDimAlgebra::product_of_fields(k, 2)}, maps);
  }

  inline SetPresheaf set_presheaf(FiniteCategory const& c, std::vector<std::vector<std::string>> elements,
                                  std::map<std::string, std::vector<std::size_t>> const& named) {
    std::vector<std::vector<std::size_t>> maps(c.morphism_count());
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      if (auto it = named.find(c.morphism_name(f)); it != named.end()) {
        maps[f] = it->second;
      } else {
        maps[f].resize(elements[c.cod(f)].size());
        for (std::size_t i = 0; i < maps[f].size(); ++i) {
          maps[f][i] = i;
        }
      }
    }
    return SetPresheaf(c, std::move(elements), std::move(maps));
  }

  inline Sieve sieve_of(FiniteCategory const& c, std::string const& target, std::vector<std::string> const& names) {
    std::vector<MorphismIndex> ms;
    for (auto const& n : names) {
      ms.push_back(c.morphism_at(n));
    }
    return make_sieve(c, c.object_at(target), ms);
  }

}  // namespace fixtures

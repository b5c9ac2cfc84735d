#include "finsite/transport.hpp"

#include <algorithm>

#include "finsite/errors.hpp"

namespace finsite {

  AlgebraPresheaf restrict(AlgebraPresheaf const& r, FullSubcategory const& d) {
    if (!(r.category() == d.parent())) {
      throw PreconditionError("algebra presheaf does not live on the parent of " + d.label());
    }
    auto const& sub = d.category();
    std::vector<FiniteDimAlgebra> algebras;
    for (ObjectIndex x = 0; x < sub.object_count(); ++x) {
      algebras.push_back(r.algebra(d.to_parent_object(x)));
    }
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < sub.morphism_count(); ++f) {
      maps.push_back(r.map(d.to_parent_morphism(f)));
    }
    return AlgebraPresheaf(sub, std::move(algebras), std::move(maps));
  }

  ModulePresheaf restrict(ModulePresheaf const& m, FullSubcategory const& d) {
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex x = 0; x < d.size(); ++x) {
      action.push_back(m.actions().at(d.to_parent_object(x)));
    }
    return ModulePresheaf(restrict(m.ring(), d), restrict(m.underlying(), d), std::move(action));
  }

  ModulePresheaf right_kan_extend(ModulePresheaf const& m, AlgebraPresheaf const& r, FullSubcategory const& d) {
    auto const& cat = d.parent();
    auto const& k = m.field();
    if (!(r.category() == cat)) {
      throw PreconditionError("algebra presheaf does not live on the parent of " + d.label());
    }
    auto rk = right_kan_extend(m.underlying(), d);
    std::vector<std::vector<Matrix>> action(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto fam = kan_families(m.underlying(), d, x);
      Subspace space(k, fam.basis);
      auto const& rx = r.algebra(x);
      for (std::size_t i = 0; i < rx.dim(); ++i) {
        // (m s)_h = m_h R(h)(s), slot by slot.
        Matrix moved(fam.ambient, fam.basis.cols());
        for (std::size_t t = 0; t < fam.members.size(); ++t) {
          MorphismIndex h = fam.members[t];
          ObjectIndex w = *d.from_parent_object(cat.dom(h));
          auto s = r.map(h).column_vector(i);
          Matrix a = m.act(w, s);
          for (std::size_t c = 0; c < fam.basis.cols(); ++c) {
            for (std::size_t row = 0; row < a.rows(); ++row) {
              Scalar acc = 0;
              for (std::size_t q = 0; q < a.cols(); ++q) {
                acc = k.add(acc, k.mul(a(row, q), fam.basis(fam.offsets[t] + q, c)));
              }
              moved(fam.offsets[t] + row, c) = acc;
            }
          }
        }
        action[x].push_back(space.coordinates(moved));
      }
    }
    return ModulePresheaf(r, std::move(rk), std::move(action));
  }

  namespace {

    void require_sheaf(LinearPresheaf const& p, GrothendieckTopology const& j, std::string const& what) {
      auto check = check_sheaf(p, j);
      if (!check.sheaf) {
        auto const& cat = p.category();
        throw PreconditionError(what + " is not a sheaf: covering sieve " + format_sieve(cat, *check.failing) + " on "
                                + cat.object_name(check.failing->target()) + " fails");
      }
    }

  }  // namespace

  AlgebraModule transport_to_subcategory(ModulePresheaf const& m, FullSubcategory const& d) {
    auto j = subcategory_topology(d);
    require_sheaf(m.ring().underlying(), j, "structure presheaf");
    require_sheaf(m.underlying(), j, "module");
    auto sub = restrict(m, d);
    return theta(sub, SkewCategoryAlgebra(sub.ring()));
  }

  ModulePresheaf transport_from_subcategory(AlgebraModule const& n, AlgebraPresheaf const& r,
                                            FullSubcategory const& d) {
    SkewCategoryAlgebra a(restrict(r, d));
    return right_kan_extend(omega(n, a), r, d);
  }

  TransportReport verify_transport_roundtrip(ModulePresheaf const& m, AlgebraModule const& n,
                                             FullSubcategory const& d) {
    TransportReport report;
    auto const& k = m.field();
    auto there = transport_from_subcategory(transport_to_subcategory(m, d), m.ring(), d);
    auto back = transport_to_subcategory(transport_from_subcategory(n, m.ring(), d), d);
    auto f = find_isomorphism(m, there);
    auto b = find_isomorphism(n, back);
    if (!f || !b) {
      return report;
    }
    report.forward = *f;
    for (auto const& c : f->components) {
      report.forward_inverse.components.push_back(*linalg::inverse(k, c));
    }
    report.backward = *b;
    report.backward_inverse = *linalg::inverse(k, *b);
    bool inverse_pairs = true;
    for (std::size_t x = 0; x < f->components.size(); ++x) {
      inverse_pairs = inverse_pairs
                      && linalg::multiply(k, report.forward_inverse.components[x], f->components[x])
                             == Matrix::identity(m.dim(x));
    }
    inverse_pairs = inverse_pairs && linalg::multiply(k, report.backward_inverse, *b) == Matrix::identity(n.dim());
    report.ok = inverse_pairs && is_isomorphism(there, m, report.forward_inverse)
                && is_isomorphism(back, n, report.backward_inverse);
    return report;
  }

  BlockDecomposition block_decomposition_dense(AlgebraPresheaf const& r) {
    auto const& cat = r.category();
    if (!is_ei(cat)) {
      throw PreconditionError("block decomposition needs an EI category");
    }
    IsoClassPoset poset(cat);
    BlockDecomposition out;
    for (std::size_t c = 0; c < poset.class_count(); ++c) {
      if (!poset.is_minimal_class(c)) {
        continue;
      }
      ObjectIndex y = poset.classes()[c].front();
      FullSubcategory sub(cat, {y});
      SkewCategoryAlgebra a(restrict(r, sub));
      out.total_dim += a.dim();
      out.blocks.push_back({y, std::move(sub), std::move(a)});
    }
    return out;
  }

  std::vector<AlgebraModule> transport_to_blocks(ModulePresheaf const& m, BlockDecomposition const& blocks) {
    std::vector<AlgebraModule> out;
    for (auto const& b : blocks.blocks) {
      out.push_back(theta(restrict(m, b.subcategory), b.algebra));
    }
    return out;
  }

}  // namespace finsite

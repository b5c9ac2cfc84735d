#include "finsite/module.hpp"

#include "finsite/errors.hpp"

namespace finsite {

  namespace {

    Matrix combine(Field const& k, std::vector<Matrix> const& mats, std::span<Scalar const> coeffs, std::size_t n) {
      Matrix out(n, n);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) {
          out = linalg::add(k, out, linalg::scale(k, coeffs[i], mats[i]));
        }
      }
      return out;
    }

    // A(b_i b_j) = A(b_j) A(b_i) and A(1) = 1 for a right action.
    std::optional<std::string> check_right_action(FiniteDimAlgebra const& a, std::vector<Matrix> const& act,
                                                  std::size_t n) {
      auto const& k = a.field();
      if (act.size() != a.dim()) {
        return "expected " + std::to_string(a.dim()) + " action matrices";
      }
      for (auto const& m : act) {
        if (m.rows() != n || m.cols() != n) {
          return std::string("action matrix has the wrong shape");
        }
      }
      if (combine(k, act, a.unit(), n) != Matrix::identity(n)) {
        return std::string("unit does not act as the identity");
      }
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Matrix lhs(n, n);
          for (auto const& [idx, c] : a.product(i, j)) {
            lhs = linalg::add(k, lhs, linalg::scale(k, c, act[idx]));
          }
          if (lhs != linalg::multiply(k, act[j], act[i])) {
            return "action is not a right action on (" + a.basis()[i] + "," + a.basis()[j] + ")";
          }
        }
      }
      return std::nullopt;
    }

    void require_ring(ModulePresheaf const& m, SkewCategoryAlgebra const& a) {
      auto const& r = m.ring();
      auto const& s = a.coefficients();
      bool same = r.category() == s.category() && r.field() == s.field();
      for (ObjectIndex x = 0; same && x < r.category().object_count(); ++x) {
        same = r.algebra(x) == s.algebra(x);
      }
      for (MorphismIndex f = 0; same && f < r.category().morphism_count(); ++f) {
        same = r.map(f) == s.map(f);
      }
      if (!same) {
        throw PreconditionError("module and skew category algebra use different coefficient presheaves");
      }
    }

    void require_algebra(AlgebraModule const& n, SkewCategoryAlgebra const& a) {
      if (!(n.algebra() == a.algebra())) {
        throw PreconditionError("module is not over this skew category algebra");
      }
    }

  }  // namespace

  ModulePresheaf::ModulePresheaf(AlgebraPresheaf r, LinearPresheaf m, std::vector<std::vector<Matrix>> action)
      : r_(std::move(r)), m_(std::move(m)), action_(std::move(action)) {
    auto const& cat = m_.category();
    auto const& k = m_.field();
    if (!(cat == r_.category()) || !(k == r_.field())) {
      throw InvalidData("module and algebra presheaf live on different categories or fields");
    }
    if (action_.size() != cat.object_count()) {
      throw InvalidData("module needs an action for every object");
    }
    for (auto& row : action_) {
      for (auto& a : row) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
          for (std::size_t j = 0; j < a.cols(); ++j) {
            a(i, j) = k.reduce(a(i, j));
          }
        }
      }
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      if (auto err = check_right_action(r_.algebra(x), action_[x], m_.dim(x))) {
        throw InvalidData("module at " + cat.object_name(x) + ": " + *err);
      }
    }
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      ObjectIndex x = cat.dom(f);
      ObjectIndex y = cat.cod(f);
      for (std::size_t i = 0; i < r_.algebra(y).dim(); ++i) {
        auto lhs = linalg::multiply(k, m_.map(f), action_[y][i]);
        auto rhs = linalg::multiply(k, act(x, r_.map(f).column_vector(i)), m_.map(f));
        if (lhs != rhs) {
          throw InvalidData("module map for " + cat.morphism_name(f) + " is not compatible with the ring action");
        }
      }
    }
  }

  Matrix ModulePresheaf::act(ObjectIndex x, std::span<Scalar const> s) const {
    return combine(field(), action_.at(x), s, dim(x));
  }

  AlgebraModule::AlgebraModule(FiniteDimAlgebra algebra, std::size_t dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    auto const& k = algebra_.field();
    for (auto& a : action_) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          a(i, j) = k.reduce(a(i, j));
        }
      }
    }
    if (auto err = check_right_action(algebra_, action_, dim_)) {
      throw InvalidData("module: " + *err);
    }
  }

  Matrix AlgebraModule::act(std::span<Scalar const> a) const {
    return combine(field(), action_, a, dim_);
  }

  ModulePresheaf zero_module(AlgebraPresheaf const& r) {
    auto const& cat = r.category();
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      action.emplace_back(r.algebra(x).dim(), Matrix(0, 0));
    }
    return ModulePresheaf(r, zero_presheaf(cat, r.field()), std::move(action));
  }

  ModulePresheaf regular_module(AlgebraPresheaf const& r) {
    auto const& cat = r.category();
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto const& a = r.algebra(x);
      std::vector<Matrix> row;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        row.push_back(a.right(i));
      }
      action.push_back(std::move(row));
    }
    return ModulePresheaf(r, r.underlying(), std::move(action));
  }

  AlgebraModule regular_module(FiniteDimAlgebra const& a) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      action.push_back(a.right(i));
    }
    return AlgebraModule(a, a.dim(), std::move(action));
  }

  ModulePresheaf direct_sum(ModulePresheaf const& a, ModulePresheaf const& b) {
    auto const& cat = a.category();
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      dims.push_back(a.dim(x) + b.dim(x));
      std::vector<Matrix> row;
      for (std::size_t i = 0; i < a.ring().algebra(x).dim(); ++i) {
        row.push_back(linalg::direct_sum(a.action(x, i), b.action(x, i)));
      }
      action.push_back(std::move(row));
    }
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      maps.push_back(linalg::direct_sum(a.map(f), b.map(f)));
    }
    return ModulePresheaf(a.ring(), LinearPresheaf(cat, a.field(), std::move(dims), std::move(maps)),
                          std::move(action));
  }

  AlgebraModule direct_sum(AlgebraModule const& a, AlgebraModule const& b) {
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
      action.push_back(linalg::direct_sum(a.action(i), b.action(i)));
    }
    return AlgebraModule(a.algebra(), a.dim() + b.dim(), std::move(action));
  }

  bool is_homomorphism(ModulePresheaf const& a, ModulePresheaf const& b, ModuleMorphism const& phi) {
    auto const& cat = a.category();
    auto const& k = a.field();
    if (phi.components.size() != cat.object_count()) {
      return false;
    }
    if (!is_natural(a.underlying(), b.underlying(), LinearNatTrans{phi.components})) {
      return false;
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (std::size_t i = 0; i < a.ring().algebra(x).dim(); ++i) {
        if (linalg::multiply(k, phi.components[x], a.action(x, i))
            != linalg::multiply(k, b.action(x, i), phi.components[x])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_isomorphism(ModulePresheaf const& a, ModulePresheaf const& b, ModuleMorphism const& phi) {
    if (!is_homomorphism(a, b, phi)) {
      return false;
    }
    for (auto const& c : phi.components) {
      if (!linalg::is_invertible(a.field(), c)) {
        return false;
      }
    }
    return true;
  }

  bool is_homomorphism(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x) {
    auto const& k = a.field();
    if (x.rows() != b.dim() || x.cols() != a.dim() || a.algebra().dim() != b.algebra().dim()) {
      return false;
    }
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
      if (linalg::multiply(k, x, a.action(i)) != linalg::multiply(k, b.action(i), x)) {
        return false;
      }
    }
    return true;
  }

  bool is_isomorphism(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x) {
    return is_homomorphism(a, b, x) && linalg::is_invertible(a.field(), x);
  }

  std::optional<ModuleMorphism> find_isomorphism(ModulePresheaf const& a, ModulePresheaf const& b) {
    auto const& cat = a.category();
    if (!(cat == b.category()) || a.underlying().dims() != b.underlying().dims()) {
      return std::nullopt;
    }
    std::vector<IntertwinerSystem::Shape> shapes;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      shapes.push_back({a.dim(x), a.dim(x)});
    }
    IntertwinerSystem sys(a.field(), shapes);
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      if (!cat.is_identity(f)) {
        sys.add(cat.dom(f), a.map(f), b.map(f), cat.cod(f));
      }
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (std::size_t i = 0; i < a.ring().algebra(x).dim(); ++i) {
        sys.add(x, a.action(x, i), b.action(x, i), x);
      }
    }
    auto found = sys.find_invertible();
    if (!found.witness) {
      return std::nullopt;
    }
    ModuleMorphism phi{*found.witness};
    if (!is_isomorphism(a, b, phi)) {
      throw Error("internal: module isomorphism search produced an invalid witness");
    }
    return phi;
  }

  std::optional<Matrix> find_isomorphism(AlgebraModule const& a, AlgebraModule const& b) {
    if (a.dim() != b.dim() || !(a.algebra() == b.algebra())) {
      return std::nullopt;
    }
    IntertwinerSystem sys(a.field(), {{a.dim(), a.dim()}});
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
      sys.add(0, a.action(i), b.action(i), 0);
    }
    auto found = sys.find_invertible();
    if (!found.witness) {
      return std::nullopt;
    }
    auto x = found.witness->front();
    if (!is_isomorphism(a, b, x)) {
      throw Error("internal: module isomorphism search produced an invalid witness");
    }
    return x;
  }

  std::vector<std::size_t> theta_offsets(ModulePresheaf const& m) {
    std::vector<std::size_t> out;
    std::size_t total = 0;
    for (ObjectIndex x = 0; x < m.category().object_count(); ++x) {
      out.push_back(total);
      total += m.dim(x);
    }
    return out;
  }

  AlgebraModule theta(ModulePresheaf const& m, SkewCategoryAlgebra const& a) {
    require_ring(m, a);
    auto const& cat = m.category();
    auto const& k = m.field();
    auto off = theta_offsets(m);
    std::size_t const n = m.underlying().total_dim();
    std::vector<Matrix> action;
    for (std::size_t b = 0; b < a.dim(); ++b) {
      auto [f, i] = a.element(b);
      ObjectIndex x = cat.dom(f);
      ObjectIndex y = cat.cod(f);
      Matrix block = linalg::multiply(k, m.action(x, i), m.map(f));
      Matrix full(n, n);
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < block.cols(); ++c) {
          full(off[x] + r, off[y] + c) = block(r, c);
        }
      }
      action.push_back(std::move(full));
    }
    return AlgebraModule(a.algebra(), n, std::move(action));
  }

  Matrix theta(ModuleMorphism const& phi) {
    Matrix out;
    for (auto const& c : phi.components) {
      out = linalg::direct_sum(out, c);
    }
    return out;
  }

  Matrix omega_basis(AlgebraModule const& n, SkewCategoryAlgebra const& a, ObjectIndex y) {
    require_algebra(n, a);
    return linalg::column_basis(n.field(), n.act(a.object_idempotent(y)));
  }

  ModulePresheaf omega(AlgebraModule const& n, SkewCategoryAlgebra const& a) {
    require_algebra(n, a);
    auto const& r = a.coefficients();
    auto const& cat = a.category();
    auto const& k = n.field();
    std::vector<Matrix> bases;
    std::vector<Subspace> spaces;
    std::vector<std::size_t> dims;
    for (ObjectIndex y = 0; y < cat.object_count(); ++y) {
      bases.push_back(omega_basis(n, a, y));
      spaces.emplace_back(k, bases.back());
      dims.push_back(bases.back().cols());
    }
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      ObjectIndex x = cat.dom(f);
      ObjectIndex y = cat.cod(f);
      auto rho = n.act(a.embed(f, r.algebra(x).unit()));
      maps.push_back(spaces[x].coordinates(linalg::multiply(k, rho, bases[y])));
    }
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex y = 0; y < cat.object_count(); ++y) {
      std::vector<Matrix> row;
      auto const& ry = r.algebra(y);
      for (std::size_t i = 0; i < ry.dim(); ++i) {
        auto rho = n.act(a.embed(cat.identity(y), ry.basis_vector(i)));
        row.push_back(spaces[y].coordinates(linalg::multiply(k, rho, bases[y])));
      }
      action.push_back(std::move(row));
    }
    return ModulePresheaf(r, LinearPresheaf(cat, k, std::move(dims), std::move(maps)), std::move(action));
  }

  ModuleMorphism omega(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x, SkewCategoryAlgebra const& s) {
    ModuleMorphism out;
    auto const& k = a.field();
    for (ObjectIndex y = 0; y < s.category().object_count(); ++y) {
      Subspace target(k, omega_basis(b, s, y));
      out.components.push_back(target.coordinates(linalg::multiply(k, x, omega_basis(a, s, y))));
    }
    return out;
  }

  ModuleMorphism omega_theta_unit(ModulePresheaf const& m, SkewCategoryAlgebra const& a) {
    auto n = theta(m, a);
    auto off = theta_offsets(m);
    auto const& k = m.field();
    ModuleMorphism out;
    for (ObjectIndex y = 0; y < m.category().object_count(); ++y) {
      Matrix incl(n.dim(), m.dim(y));
      for (std::size_t i = 0; i < m.dim(y); ++i) {
        incl(off[y] + i, i) = 1;
      }
      out.components.push_back(Subspace(k, omega_basis(n, a, y)).coordinates(incl));
    }
    return out;
  }

  Matrix theta_omega_counit(AlgebraModule const& n, SkewCategoryAlgebra const& a) {
    Matrix out(n.dim(), 0);
    for (ObjectIndex y = 0; y < a.category().object_count(); ++y) {
      out = linalg::hconcat(out, omega_basis(n, a, y));
    }
    return out;
  }

  RoundTripReport verify_equivalence_roundtrip(ModulePresheaf const& m, AlgebraModule const& n,
                                               SkewCategoryAlgebra const& a) {
    RoundTripReport report;
    auto const& k = a.field();
    auto ot = omega(theta(m, a), a);
    report.omega_theta_witness = omega_theta_unit(m, a);
    if (is_isomorphism(m, ot, report.omega_theta_witness)) {
      for (auto const& c : report.omega_theta_witness.components) {
        report.omega_theta_inverse.components.push_back(*linalg::inverse(k, c));
      }
      report.omega_theta = is_isomorphism(ot, m, report.omega_theta_inverse);
    }
    auto to = theta(omega(n, a), a);
    report.theta_omega_witness = theta_omega_counit(n, a);
    if (is_isomorphism(to, n, report.theta_omega_witness)) {
      report.theta_omega_inverse = *linalg::inverse(k, report.theta_omega_witness);
      report.theta_omega = is_isomorphism(n, to, report.theta_omega_inverse);
    }
    return report;
  }

}  // namespace finsite

#pragma once

#include "finsite/presheaf.hpp"

namespace finsite {

  //! Sheafification for the dense topology on a finite EI category via
  //! fixed points: F^a(x) is the product over minimal classes [y] below x and
  //! over the Aut(y)-orbits of Hom(y, x) of F(y)^{H}, H the stabilizer of the
  //! orbit representative. Throws PreconditionError on non-EI input.
  SetPresheaf sheafify_ei_dense(SetPresheaf const& f);
  LinearPresheaf sheafify_ei_dense(LinearPresheaf const& f);
  Presheaf sheafify_ei_dense(Presheaf const& f);

}  // namespace finsite
